#pragma once

#include <cstddef>
#include <vector>

#include "masolve/core/types.hpp"
#include "masolve/geometry/polygon.hpp"

namespace masolve::geom {

/// Piecewise-linear convex function in 2D given by node samples: the function
/// is the lower convex envelope of the points (x_i, v_i). Used as the exact
/// brute-force oracle for discrete Monge-Ampere masses.
struct PlConvexFunction {
    std::vector<Vec> nodes;
    std::vector<double> values;
};

struct SubgradientCell {
    Polygon polygon;      // cell in gradient space (empty if node is hidden)
    bool bounded = true;  // false for nodes in convex position (infinite cone)
};

struct SubgradientOptions {
    /// Hard cap on node count: cells are computed by all-pairs halfplane
    /// intersection, O(N^2 log N) overall.
    std::size_t brute_force_limit = 512;
    /// Slack used when testing lower-hull membership of a node.
    double hull_tolerance = 1e-9;
};

/// Subdifferential cell of node i: {p : v_j >= v_i + p.(x_j - x_i) for all j},
/// clipped to a large box; bounded == false when the true cell is an
/// unbounded cone (node in convex position).
SubgradientCell subgradient_cell(const PlConvexFunction& f, std::size_t i,
                                 const SubgradientOptions& opts = {});

/// Monge-Ampere mass of the node subset E: the Lebesgue measure of the union
/// of subdifferentials over E. Cells of distinct nodes overlap in measure
/// zero, so the mass is additive over disjoint E. Nodes in convex position
/// carry unbounded cones; they contribute zero here (their mass is infinite
/// in the measure-theoretic sense and is never matched by the solver).
///
/// Throws ConvexityError if some node of the input lies strictly above the
/// lower convex hull of the samples, and ParameterError past the brute-force
/// node limit.
double subgradient_measure(const PlConvexFunction& f, const std::vector<std::size_t>& E,
                           const SubgradientOptions& opts = {});

/// Verifies that every node value lies on the lower convex hull.
bool is_discretely_convex(const PlConvexFunction& f, const SubgradientOptions& opts = {});

}  // namespace masolve::geom
