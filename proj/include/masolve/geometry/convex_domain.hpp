#pragma once

#include <optional>
#include <string>
#include <vector>

#include "masolve/core/errors.hpp"
#include "masolve/core/types.hpp"

namespace masolve::geom {

enum class DomainKind { polygon, box, ball, bowl };

std::string to_string(DomainKind k);
DomainKind domain_kind_from_string(const std::string& s);

/// One boundary facet. Flat facets carry their supporting hyperplane
/// {x : dot(normal, x) = offset} with the inward normal; curved facets
/// (sphere, bowl graph) are descriptive only.
struct Facet {
    Vec inward_normal;
    double offset = 0.0;
    bool flat = true;
};

/// Bounded domain in R^n, n in {2,3,4}:
///  - polygon: convex CCW polygon (2D),
///  - box: axis-aligned box,
///  - ball: disk/ball,
///  - bowl: {(x', x_n) : |x'| < t, 0 < x_n < (t^2 - |x'|^2)^s}.
///
/// Polygons, boxes and balls are always convex. A bowl is convex iff its
/// shape exponent s <= 1; the supersolution constructions require s > 1
/// domains, which are accepted and flagged via convex() == false.
class ConvexDomain {
  public:
    static ConvexDomain polygon(std::vector<Vec> ccw_vertices,
                                std::optional<int> flat_facet = std::nullopt);
    static ConvexDomain box(const Vec& lo, const Vec& hi,
                            std::optional<int> flat_facet = std::nullopt);
    static ConvexDomain ball(const Vec& center, double radius);
    static ConvexDomain bowl(int dim, double radial_scale, double shape_exponent);

    int dim() const { return dim_; }
    DomainKind kind() const { return kind_; }
    bool convex() const { return convex_; }
    double diameter() const { return diameter_; }

    bool contains(const Vec& x, double tol = 1e-12) const;
    bool strictly_inside(const Vec& x, double margin = 0.0) const;

    const std::vector<Facet>& facets() const { return facets_; }
    std::optional<int> flat_facet_id() const { return flat_facet_; }

    /// Point in the relative interior of the facet (midpoint/center).
    Vec facet_anchor(int facet_id) const;
    Vec facet_inward_normal(int facet_id) const;
    /// Inradius of the facet as an (n-1)-dimensional set.
    double facet_inradius(int facet_id) const;

    // polygon access
    const std::vector<Vec>& vertices() const { return vertices_; }
    // box access
    const Vec& lo() const { return lo_; }
    const Vec& hi() const { return hi_; }
    // ball access
    const Vec& center() const { return center_; }
    double radius() const { return radius_; }
    // bowl access: profile(r) = (t^2 - r^2)^s for r <= t
    double bowl_radial_scale() const { return bowl_t_; }
    double bowl_shape_exponent() const { return bowl_s_; }
    double bowl_profile(double r) const;

    friend double dist_to_boundary(const ConvexDomain& d, const Vec& x);

  private:
    ConvexDomain() = default;
    void set_flat_facet(std::optional<int> id);

    DomainKind kind_ = DomainKind::box;
    int dim_ = 2;
    bool convex_ = true;
    double diameter_ = 0.0;
    std::optional<int> flat_facet_;
    std::vector<Facet> facets_;

    std::vector<Vec> vertices_;  // polygon
    Vec lo_, hi_;                // box
    Vec center_;                 // ball
    double radius_ = 0.0;        // ball
    double bowl_t_ = 1.0, bowl_s_ = 1.0;
};

/// Exact Euclidean distance from x to the boundary. Throws
/// DomainMembershipError when x lies outside the closure.
double dist_to_boundary(const ConvexDomain& d, const Vec& x);

/// Dyadic probe ladder along a facet's inward normal:
/// points anchor + d_j * nu with d_j = d0 * 2^{-j}, j = 0..levels.
struct NormalProbe {
    int facet_id = 0;
    Vec anchor;
    Vec normal;
    std::vector<double> distances;

    std::vector<Vec> points() const;
};

/// Builds a probe; every point must land strictly inside the domain, else
/// GeometryError naming the offending level. d0 must not exceed
/// max_inradius_fraction times the facet inradius.
NormalProbe make_normal_probe(const ConvexDomain& d, int facet_id, int levels, double d0,
                              std::optional<Vec> anchor = std::nullopt,
                              double max_inradius_fraction = 1.0);

}  // namespace masolve::geom
