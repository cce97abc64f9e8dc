#include "masolve/geometry/polygon.hpp"

#include <algorithm>
#include <cmath>

namespace masolve::geom {

double polygon_area(const Polygon& p) {
    const int m = static_cast<int>(p.size());
    if (m < 3) return 0.0;
    double a2 = 0.0;
    for (int i = 0; i < m; ++i) {
        const Vec& u = p[i];
        const Vec& v = p[(i + 1) % m];
        a2 += u[0] * v[1] - u[1] * v[0];
    }
    return 0.5 * a2;
}

Vec polygon_centroid(const Polygon& p) {
    const int m = static_cast<int>(p.size());
    Vec c(0.0, 0.0);
    if (m == 0) return c;
    if (m < 3 || std::fabs(polygon_area(p)) < 1e-300) {
        for (const auto& v : p) c += v;
        return (1.0 / m) * c;
    }
    double a2 = 0.0;
    for (int i = 0; i < m; ++i) {
        const Vec& u = p[i];
        const Vec& v = p[(i + 1) % m];
        const double w = u[0] * v[1] - u[1] * v[0];
        a2 += w;
        c += w * (u + v);
    }
    return (1.0 / (3.0 * a2)) * c;
}

Polygon clip_halfplane(const Polygon& p, const Vec& a, double b) {
    Polygon out;
    const int m = static_cast<int>(p.size());
    if (m == 0) return out;
    out.reserve(p.size() + 1);
    for (int i = 0; i < m; ++i) {
        const Vec& cur = p[i];
        const Vec& nxt = p[(i + 1) % m];
        const double fc = dot(a, cur) - b;
        const double fn = dot(a, nxt) - b;
        if (fc <= 0.0) out.push_back(cur);
        if ((fc < 0.0 && fn > 0.0) || (fc > 0.0 && fn < 0.0)) {
            const double t = fc / (fc - fn);
            out.push_back(cur + t * (nxt - cur));
        }
    }
    return out;
}

Polygon halfplane_intersection(const std::vector<Vec>& normals, const std::vector<double>& offsets,
                               double bound) {
    Polygon p = {Vec(-bound, -bound), Vec(bound, -bound), Vec(bound, bound), Vec(-bound, bound)};
    for (std::size_t i = 0; i < normals.size() && !p.empty(); ++i) {
        p = clip_halfplane(p, normals[i], offsets[i]);
    }
    return p;
}

bool touches_bound(const Polygon& p, double bound, double tol) {
    for (const auto& v : p) {
        if (std::fabs(std::fabs(v[0]) - bound) < tol || std::fabs(std::fabs(v[1]) - bound) < tol) {
            return true;
        }
    }
    return false;
}

Polygon convex_hull(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec& a, const Vec& b) { return a[0] == b[0] && a[1] == b[1]; }),
              pts.end());
    const int n = static_cast<int>(pts.size());
    if (n < 3) return pts;
    auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Vec> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    const int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace masolve::geom
