#include "masolve/analysis/fd_hessian.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "masolve/core/errors.hpp"

namespace masolve::analysis {

namespace {

Vec shifted(const Vec& x, int axis, double delta) {
    Vec y = x;
    y[axis] += delta;
    return y;
}

Vec shifted2(const Vec& x, int a, double da, int b, double db) {
    Vec y = x;
    y[a] += da;
    y[b] += db;
    return y;
}

}  // namespace

std::array<double, kMaxDim * kMaxDim> fd_hessian(const ScalarField& f, const Vec& x, double h,
                                                 int order) {
    const int n = x.n;
    std::array<double, kMaxDim * kMaxDim> H{};
    const double f0 = f(x);
    if (order == 2) {
        for (int i = 0; i < n; ++i) {
            H[i * n + i] = (f(shifted(x, i, h)) - 2.0 * f0 + f(shifted(x, i, -h))) / (h * h);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double v = (f(shifted2(x, i, h, j, h)) - f(shifted2(x, i, h, j, -h)) -
                                  f(shifted2(x, i, -h, j, h)) + f(shifted2(x, i, -h, j, -h))) /
                                 (4.0 * h * h);
                H[i * n + j] = H[j * n + i] = v;
            }
        }
        return H;
    }
    if (order != 4) throw ParameterError("fd_hessian: order must be 2 or 4");
    for (int i = 0; i < n; ++i) {
        H[i * n + i] = (-f(shifted(x, i, 2.0 * h)) + 16.0 * f(shifted(x, i, h)) - 30.0 * f0 +
                        16.0 * f(shifted(x, i, -h)) - f(shifted(x, i, -2.0 * h))) /
                       (12.0 * h * h);
    }
    // 4th-order mixed derivative: composition of two 4-point first-difference
    // stencils, weights (-1, 8, -8, 1)/(12h) at offsets (2h, h, -h, -2h).
    const double w[4] = {-1.0, 8.0, -8.0, 1.0};
    const double o[4] = {2.0, 1.0, -1.0, -2.0};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    s += w[a] * w[b] * f(shifted2(x, i, o[a] * h, j, o[b] * h));
                }
            }
            const double v = s / (144.0 * h * h);
            H[i * n + j] = H[j * n + i] = v;
        }
    }
    return H;
}

double symmetric_det(const std::array<double, kMaxDim * kMaxDim>& m, int n) {
    Eigen::Matrix4d M = Eigen::Matrix4d::Identity();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = m[i * n + j];
    }
    return M.topLeftCorner(n, n).determinant();
}

double symmetric_min_eigenvalue(const std::array<double, kMaxDim * kMaxDim>& m, int n) {
    Eigen::MatrixXd M(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = m[i * n + j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    return es.eigenvalues().minCoeff();
}

double fd_hessian_det(const ScalarField& f, const Vec& x, double h) {
    return symmetric_det(fd_hessian(f, x, h, 2), x.n);
}

double fd_hessian_det(const ScalarField& f, const Vec& x, double h,
                      const geom::ConvexDomain& domain) {
    if (!domain.contains(x) || geom::dist_to_boundary(domain, x) < h * x.n) {
        throw GeometryError("fd_hessian_det: stencil ball of radius h*n escapes the domain");
    }
    return fd_hessian_det(f, x, h);
}

double fd_hessian_min_eigenvalue(const ScalarField& f, const Vec& x, double h, int order) {
    return symmetric_min_eigenvalue(fd_hessian(f, x, h, order), x.n);
}

}  // namespace masolve::analysis
