#include "masolve/geometry/pl_convex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "masolve/core/errors.hpp"

namespace masolve::geom {

namespace {

double slope_bound(const PlConvexFunction& f) {
    double s = 1.0;
    const std::size_t n = f.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = norm(f.nodes[j] - f.nodes[i]);
            if (dx > 0.0) s = std::max(s, std::fabs(f.values[j] - f.values[i]) / dx);
        }
    }
    return s;
}

void check_input(const PlConvexFunction& f, const SubgradientOptions& opts) {
    if (f.nodes.size() != f.values.size()) {
        throw ParameterError("subgradient: nodes/values size mismatch");
    }
    if (f.nodes.size() > opts.brute_force_limit) {
        throw ParameterError("subgradient: node count " + std::to_string(f.nodes.size()) +
                             " exceeds brute-force limit " +
                             std::to_string(opts.brute_force_limit));
    }
}

SubgradientCell cell_impl(const PlConvexFunction& f, std::size_t i, double bound, double slack) {
    std::vector<Vec> normals;
    std::vector<double> offsets;
    normals.reserve(f.nodes.size());
    offsets.reserve(f.nodes.size());
    for (std::size_t j = 0; j < f.nodes.size(); ++j) {
        if (j == i) continue;
        const Vec dx = f.nodes[j] - f.nodes[i];
        if (norm2(dx) == 0.0) {
            // duplicate site: constraint 0 <= dv, only relevant if it empties the cell
            if (f.values[j] - f.values[i] < -slack) {
                return {Polygon{}, true};
            }
            continue;
        }
        normals.push_back(dx);
        offsets.push_back(f.values[j] - f.values[i] + slack);
    }
    SubgradientCell cell;
    cell.polygon = halfplane_intersection(normals, offsets, bound);
    cell.bounded = !touches_bound(cell.polygon, bound, 1e-9 * bound);
    return cell;
}

}  // namespace

SubgradientCell subgradient_cell(const PlConvexFunction& f, std::size_t i,
                                 const SubgradientOptions& opts) {
    check_input(f, opts);
    const double bound = 4.0 * slope_bound(f) + 1.0;
    return cell_impl(f, i, bound, 0.0);
}

bool is_discretely_convex(const PlConvexFunction& f, const SubgradientOptions& opts) {
    check_input(f, opts);
    const double bound = 4.0 * slope_bound(f) + 1.0;
    double scale = 1.0;
    for (double v : f.values) scale = std::max(scale, std::fabs(v));
    const double slack = opts.hull_tolerance * scale;
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
        // node on lower hull <=> a supporting slope exists <=> slack-relaxed
        // cell nonempty
        if (cell_impl(f, i, bound, slack).polygon.empty()) return false;
    }
    return true;
}

double subgradient_measure(const PlConvexFunction& f, const std::vector<std::size_t>& E,
                           const SubgradientOptions& opts) {
    check_input(f, opts);
    if (!is_discretely_convex(f, opts)) {
        throw ConvexityError(
            "subgradient_measure: input is not convex (a node lies above the lower hull)");
    }
    const double bound = 4.0 * slope_bound(f) + 1.0;
    double mass = 0.0;
    for (std::size_t i : E) {
        if (i >= f.nodes.size()) throw ParameterError("subgradient_measure: node index range");
        const SubgradientCell cell = cell_impl(f, i, bound, 0.0);
        if (cell.bounded) mass += polygon_area(cell.polygon);
    }
    return mass;
}

}  // namespace masolve::geom
