#include "masolve/geometry/convex_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace masolve::geom {

namespace {

double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

std::string to_string(DomainKind k) {
    switch (k) {
        case DomainKind::polygon: return "polygon";
        case DomainKind::box: return "box";
        case DomainKind::ball: return "ball";
        case DomainKind::bowl: return "bowl";
    }
    return "?";
}

DomainKind domain_kind_from_string(const std::string& s) {
    if (s == "polygon") return DomainKind::polygon;
    if (s == "box") return DomainKind::box;
    if (s == "ball" || s == "disk") return DomainKind::ball;
    if (s == "bowl") return DomainKind::bowl;
    throw ValidationError("unknown domain kind: " + s);
}

void ConvexDomain::set_flat_facet(std::optional<int> id) {
    if (!id) return;
    if (*id < 0 || *id >= static_cast<int>(facets_.size())) {
        throw ValidationError("flat_facet_id out of range");
    }
    if (!facets_[*id].flat) {
        throw ValidationError("flat_facet_id refers to a curved facet");
    }
    flat_facet_ = id;
}

ConvexDomain ConvexDomain::polygon(std::vector<Vec> v, std::optional<int> flat_facet) {
    ConvexDomain d;
    d.kind_ = DomainKind::polygon;
    d.dim_ = 2;
    const int m = static_cast<int>(v.size());
    if (m < 3) throw ValidationError("polygon needs at least 3 vertices");
    double scale = 0.0;
    for (const auto& p : v) scale = std::max({scale, std::fabs(p[0]), std::fabs(p[1])});
    double area2 = 0.0;
    for (int i = 0; i < m; ++i) area2 += cross2(v[i], v[(i + 1) % m]);
    if (area2 <= 0.0) throw ValidationError("polygon vertices must be CCW with positive area");
    for (int i = 0; i < m; ++i) {
        const Vec e1 = v[(i + 1) % m] - v[i];
        const Vec e2 = v[(i + 2) % m] - v[(i + 1) % m];
        if (cross2(e1, e2) <= 1e-14 * scale * scale) {
            throw ValidationError("polygon must be strictly convex (no collinear edges)");
        }
    }
    d.vertices_ = std::move(v);
    for (int i = 0; i < m; ++i) {
        const Vec a = d.vertices_[i], b = d.vertices_[(i + 1) % m];
        Vec e = b - a;
        const double len = norm(e);
        Facet f;
        f.inward_normal = Vec(-e[1] / len, e[0] / len);
        f.offset = dot(f.inward_normal, a);
        d.facets_.push_back(f);
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            d.diameter_ = std::max(d.diameter_, norm(d.vertices_[i] - d.vertices_[j]));
        }
    }
    d.set_flat_facet(flat_facet);
    return d;
}

ConvexDomain ConvexDomain::box(const Vec& lo, const Vec& hi, std::optional<int> flat_facet) {
    ConvexDomain d;
    d.kind_ = DomainKind::box;
    d.dim_ = lo.n;
    if (lo.n != hi.n || lo.n < 2 || lo.n > kMaxDim) throw ValidationError("box: bad dimension");
    for (int i = 0; i < lo.n; ++i) {
        if (!(lo[i] < hi[i])) throw ValidationError("box: lo must be strictly below hi");
    }
    d.lo_ = lo;
    d.hi_ = hi;
    d.diameter_ = norm(hi - lo);
    for (int k = 0; k < d.dim_; ++k) {
        Facet flo;  // {x_k = lo_k}, inward +e_k
        flo.inward_normal = Vec::zero(d.dim_);
        flo.inward_normal[k] = 1.0;
        flo.offset = lo[k];
        d.facets_.push_back(flo);
        Facet fhi;  // {x_k = hi_k}, inward -e_k
        fhi.inward_normal = Vec::zero(d.dim_);
        fhi.inward_normal[k] = -1.0;
        fhi.offset = -hi[k];
        d.facets_.push_back(fhi);
    }
    d.set_flat_facet(flat_facet);
    return d;
}

ConvexDomain ConvexDomain::ball(const Vec& center, double radius) {
    ConvexDomain d;
    d.kind_ = DomainKind::ball;
    d.dim_ = center.n;
    if (d.dim_ < 2 || d.dim_ > 3) throw ValidationError("ball: dimension must be 2 or 3");
    if (!(radius > 0.0)) throw ValidationError("ball: radius must be positive");
    d.center_ = center;
    d.radius_ = radius;
    d.diameter_ = 2.0 * radius;
    Facet sphere;
    sphere.flat = false;
    sphere.inward_normal = Vec::zero(d.dim_);
    d.facets_.push_back(sphere);
    return d;
}

ConvexDomain ConvexDomain::bowl(int dim, double radial_scale, double shape_exponent) {
    ConvexDomain d;
    d.kind_ = DomainKind::bowl;
    d.dim_ = dim;
    if (dim < 2 || dim > kMaxDim) throw ValidationError("bowl: dimension out of range");
    if (!(radial_scale > 0.0) || !(shape_exponent > 0.0)) {
        throw ValidationError("bowl: radial scale and shape exponent must be positive");
    }
    d.bowl_t_ = radial_scale;
    d.bowl_s_ = shape_exponent;
    d.convex_ = (shape_exponent <= 1.0);

    Facet bottom;  // {x_n = 0}, the flat part of the boundary
    bottom.inward_normal = Vec::zero(dim);
    bottom.inward_normal[dim - 1] = 1.0;
    bottom.offset = 0.0;
    d.facets_.push_back(bottom);
    Facet graph;
    graph.flat = false;
    graph.inward_normal = Vec::zero(dim);
    d.facets_.push_back(graph);
    d.flat_facet_ = 0;

    const double t = radial_scale;
    double diam = 2.0 * t;
    for (int i = 0; i <= 256; ++i) {
        const double rho = t * i / 256.0;
        const double z = d.bowl_profile(rho);
        diam = std::max(diam, std::sqrt((rho + t) * (rho + t) + z * z));
    }
    d.diameter_ = diam;
    return d;
}

double ConvexDomain::bowl_profile(double r) const {
    const double q = bowl_t_ * bowl_t_ - r * r;
    return q <= 0.0 ? 0.0 : std::pow(q, bowl_s_);
}

bool ConvexDomain::contains(const Vec& x, double tol) const {
    if (x.n != dim_) return false;
    const double slack = tol * std::max(1.0, diameter_);
    switch (kind_) {
        case DomainKind::polygon:
        case DomainKind::box: {
            for (const auto& f : facets_) {
                if (dot(f.inward_normal, x) - f.offset < -slack) return false;
            }
            return true;
        }
        case DomainKind::ball:
            return norm(x - center_) <= radius_ + slack;
        case DomainKind::bowl: {
            const double r = radial(x);
            const double z = x[dim_ - 1];
            if (r > bowl_t_ + slack || z < -slack) return false;
            return z <= bowl_profile(std::min(r, bowl_t_)) + slack;
        }
    }
    return false;
}

bool ConvexDomain::strictly_inside(const Vec& x, double margin) const {
    if (!contains(x)) return false;
    return dist_to_boundary(*this, x) > margin;
}

namespace {

/// Distance from (r, z) to the curve {(rho, (t^2-rho^2)^s) : rho in [0, t]}.
/// Dense scan over the parameter followed by Newton on the squared-distance
/// derivative with a bisection fallback; tolerance 1e-12 on the parameter.
double dist_to_bowl_graph(double r, double z, double t, double s) {
    const auto profile = [&](double rho) {
        const double q = t * t - rho * rho;
        return q <= 0.0 ? 0.0 : std::pow(q, s);
    };
    const auto dprofile = [&](double rho) {
        const double q = t * t - rho * rho;
        if (q <= 0.0) return s >= 1.0 ? 0.0 : -std::numeric_limits<double>::infinity();
        return -2.0 * s * rho * std::pow(q, s - 1.0);
    };
    const auto sqdist = [&](double rho) {
        const double dz = profile(rho) - z;
        return (rho - r) * (rho - r) + dz * dz;
    };
    // derivative of squared distance / 2
    const auto g = [&](double rho) {
        return (rho - r) + (profile(rho) - z) * dprofile(rho);
    };

    const int kScan = 256;
    double best_rho = 0.0, best = sqdist(0.0);
    for (int i = 1; i <= kScan; ++i) {
        const double rho = t * i / kScan;
        const double d2 = sqdist(rho);
        if (d2 < best) {
            best = d2;
            best_rho = rho;
        }
    }
    // refine in the bracketing interval around the scan minimum
    double a = std::max(0.0, best_rho - t / kScan);
    double b = std::min(t, best_rho + t / kScan);
    double ga = g(a), gb = g(b);
    if (std::isfinite(ga) && std::isfinite(gb) && ga < 0.0 && gb > 0.0) {
        double rho = best_rho;
        for (int it = 0; it < 100 && b - a > 1e-12 * std::max(1.0, t); ++it) {
            const double grho = g(rho);
            bool newton_ok = false;
            const double h = 1e-7 * std::max(1.0, t);
            if (rho - h > a && rho + h < b) {
                const double dg = (g(rho + h) - g(rho - h)) / (2.0 * h);
                if (std::isfinite(dg) && dg > 0.0) {
                    const double cand = rho - grho / dg;
                    if (cand > a && cand < b) {
                        rho = cand;
                        newton_ok = true;
                    }
                }
            }
            if (grho > 0.0) {
                b = std::min(b, rho);
            } else {
                a = std::max(a, rho);
            }
            if (!newton_ok) rho = 0.5 * (a + b);
            best = std::min(best, sqdist(rho));
        }
        best = std::min(best, std::min(sqdist(a), sqdist(b)));
    }
    return std::sqrt(best);
}

}  // namespace

double dist_to_boundary(const ConvexDomain& d, const Vec& x) {
    if (!d.contains(x, 1e-12)) {
        throw DomainMembershipError("dist_to_boundary: point " + masolve::to_string(x) +
                                    " lies outside the domain");
    }
    switch (d.kind_) {
        case DomainKind::polygon:
        case DomainKind::box: {
            // Interior point of an intersection of halfspaces: the distance to
            // the boundary equals the minimum distance to the supporting
            // hyperplanes.
            double best = std::numeric_limits<double>::infinity();
            for (const auto& f : d.facets_) {
                best = std::min(best, dot(f.inward_normal, x) - f.offset);
            }
            return std::max(0.0, best);
        }
        case DomainKind::ball:
            return std::max(0.0, d.radius_ - norm(x - d.center_));
        case DomainKind::bowl: {
            const double r = radial(x);
            const double z = x[d.dim_ - 1];
            const double d_graph = dist_to_bowl_graph(r, z, d.bowl_t_, d.bowl_s_);
            return std::max(0.0, std::min(z, d_graph));
        }
    }
    return 0.0;
}

Vec ConvexDomain::facet_anchor(int facet_id) const {
    if (facet_id < 0 || facet_id >= static_cast<int>(facets_.size())) {
        throw GeometryError("facet_anchor: no such facet");
    }
    switch (kind_) {
        case DomainKind::polygon: {
            const int m = static_cast<int>(vertices_.size());
            return 0.5 * (vertices_[facet_id] + vertices_[(facet_id + 1) % m]);
        }
        case DomainKind::box: {
            Vec c = 0.5 * (lo_ + hi_);
            const int axis = facet_id / 2;
            c[axis] = (facet_id % 2 == 0) ? lo_[axis] : hi_[axis];
            return c;
        }
        case DomainKind::ball:
            throw GeometryError("facet_anchor: ball boundary has no flat facet");
        case DomainKind::bowl: {
            if (facet_id != 0) throw GeometryError("facet_anchor: bowl graph facet is curved");
            return Vec::zero(dim_);
        }
    }
    throw GeometryError("facet_anchor: unreachable");
}

Vec ConvexDomain::facet_inward_normal(int facet_id) const {
    if (facet_id < 0 || facet_id >= static_cast<int>(facets_.size())) {
        throw GeometryError("facet_inward_normal: no such facet");
    }
    const Facet& f = facets_[facet_id];
    if (!f.flat) throw GeometryError("facet_inward_normal: facet is curved");
    return f.inward_normal;
}

double ConvexDomain::facet_inradius(int facet_id) const {
    switch (kind_) {
        case DomainKind::polygon: {
            const int m = static_cast<int>(vertices_.size());
            return 0.5 * norm(vertices_[(facet_id + 1) % m] - vertices_[facet_id]);
        }
        case DomainKind::box: {
            const int axis = facet_id / 2;
            double best = std::numeric_limits<double>::infinity();
            for (int k = 0; k < dim_; ++k) {
                if (k == axis) continue;
                best = std::min(best, 0.5 * (hi_[k] - lo_[k]));
            }
            return best;
        }
        case DomainKind::ball:
            throw GeometryError("facet_inradius: ball has no flat facet");
        case DomainKind::bowl:
            if (facet_id != 0) throw GeometryError("facet_inradius: bowl graph facet is curved");
            return bowl_t_;
    }
    throw GeometryError("facet_inradius: unreachable");
}

std::vector<Vec> NormalProbe::points() const {
    std::vector<Vec> pts;
    pts.reserve(distances.size());
    for (double dj : distances) pts.push_back(anchor + dj * normal);
    return pts;
}

NormalProbe make_normal_probe(const ConvexDomain& d, int facet_id, int levels, double d0,
                              std::optional<Vec> anchor, double max_inradius_fraction) {
    if (levels < 0) throw GeometryError("normal_probe: levels must be >= 0");
    if (!(d0 > 0.0)) throw GeometryError("normal_probe: d0 must be positive");
    const double inr = d.facet_inradius(facet_id);
    if (d0 > max_inradius_fraction * inr + 1e-15) {
        throw GeometryError("normal_probe: d0 exceeds the allowed fraction of the facet inradius");
    }
    NormalProbe p;
    p.facet_id = facet_id;
    p.anchor = anchor.value_or(d.facet_anchor(facet_id));
    p.normal = d.facet_inward_normal(facet_id);
    double dj = d0;
    for (int j = 0; j <= levels; ++j, dj *= 0.5) {
        const Vec x = p.anchor + dj * p.normal;
        if (!d.contains(x, 0.0) || !(dist_to_boundary(d, x) > 0.0)) {
            throw GeometryError("normal_probe: probe point escapes the domain at level j=" +
                                std::to_string(j));
        }
        p.distances.push_back(dj);
    }
    return p;
}

}  // namespace masolve::geom
