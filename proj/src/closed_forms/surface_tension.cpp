#include "masolve/closed_forms/surface_tension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "masolve/closed_forms/lobachevsky.hpp"
#include "masolve/core/errors.hpp"

namespace masolve::cf {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kClosureSlack = 1e-14;
}  // namespace

bool SurfaceTensionT::inside(double x1, double x2) {
    return x1 > 0.0 && x2 > 0.0 && x1 + x2 < 1.0;
}

bool SurfaceTensionT::inside_closure(double x1, double x2) {
    return x1 >= -kClosureSlack && x2 >= -kClosureSlack && x1 + x2 <= 1.0 + kClosureSlack;
}

double SurfaceTensionT::value(double x1, double x2, bool boundary_limit) {
    if (inside(x1, x2)) {
        return -(lobachevsky(kPi * x1) + lobachevsky(kPi * x2) +
                 lobachevsky(kPi * (1.0 - x1 - x2))) /
               (kPi * kPi);
    }
    if (boundary_limit && inside_closure(x1, x2)) return 0.0;
    throw DomainMembershipError("surface_tension: point (" + std::to_string(x1) + ", " +
                                std::to_string(x2) + ") is not in the open triangle T");
}

std::array<double, 2> SurfaceTensionT::gradient(double x1, double x2) {
    if (!inside(x1, x2)) {
        throw DomainMembershipError("surface_tension gradient: point not in T interior");
    }
    const double s12 = std::sin(kPi * (x1 + x2));
    return {std::log(std::sin(kPi * x1) / s12) / kPi,
            std::log(std::sin(kPi * x2) / s12) / kPi};
}

double SurfaceTensionT::dist_to_boundary(double x1, double x2) {
    if (!inside_closure(x1, x2)) {
        throw DomainMembershipError("surface_tension: point outside closed triangle");
    }
    const double d_hyp = (1.0 - x1 - x2) / std::numbers::sqrt2;
    return std::max(0.0, std::min({x1, x2, d_hyp}));
}

}  // namespace masolve::cf
