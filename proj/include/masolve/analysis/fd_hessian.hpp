#pragma once

#include <array>
#include <functional>

#include "masolve/core/types.hpp"
#include "masolve/geometry/convex_domain.hpp"

namespace masolve::analysis {

using ScalarField = std::function<double(const Vec&)>;

/// Central second-difference Hessian (order 2) or the 4th-order variant
/// (order 4, composed 4-point first-difference stencils). Row-major n x n in
/// a flat array of length n*n.
std::array<double, kMaxDim * kMaxDim> fd_hessian(const ScalarField& f, const Vec& x, double h,
                                                 int order = 2);

/// Determinant of the central second-difference Hessian. When a domain is
/// supplied, requires the ball of radius h*n around x to be inside it and
/// throws GeometryError otherwise.
double fd_hessian_det(const ScalarField& f, const Vec& x, double h);
double fd_hessian_det(const ScalarField& f, const Vec& x, double h,
                      const geom::ConvexDomain& domain);

/// Smallest eigenvalue of the FD Hessian. The convexity witnesses use
/// order 4: second-order central differences cannot certify eigenvalue signs
/// at the tolerances involved.
double fd_hessian_min_eigenvalue(const ScalarField& f, const Vec& x, double h, int order = 4);

double symmetric_det(const std::array<double, kMaxDim * kMaxDim>& m, int n);
double symmetric_min_eigenvalue(const std::array<double, kMaxDim * kMaxDim>& m, int n);

}  // namespace masolve::analysis
