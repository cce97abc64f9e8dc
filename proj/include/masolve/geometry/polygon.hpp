#pragma once

#include <vector>

#include "masolve/core/types.hpp"

namespace masolve::geom {

/// Convex polygon as a CCW vertex loop (possibly empty or degenerate).
using Polygon = std::vector<Vec>;

double polygon_area(const Polygon& p);
Vec polygon_centroid(const Polygon& p);

/// Clips p against the halfplane {x : dot(a, x) <= b} (Sutherland-Hodgman).
Polygon clip_halfplane(const Polygon& p, const Vec& a, double b);

/// Intersection of halfplanes {dot(a_i, x) <= b_i} with the square
/// [-bound, bound]^2 as the starting cell. The result touching the bounding
/// square means the true intersection is unbounded in that direction.
Polygon halfplane_intersection(const std::vector<Vec>& normals, const std::vector<double>& offsets,
                               double bound);

/// True if some vertex lies on the bounding square used by
/// halfplane_intersection (within tol), i.e. the cell was truncated.
bool touches_bound(const Polygon& p, double bound, double tol);

/// Convex hull of 2D points, CCW (Andrew monotone chain).
Polygon convex_hull(std::vector<Vec> pts);

}  // namespace masolve::geom
