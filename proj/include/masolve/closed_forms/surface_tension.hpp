#pragma once

#include <array>

namespace masolve::cf {

/// Surface tension of the lozenge tiling model: the convex solution of
/// det D^2 sigma = 1 on the open triangle T with vertices (0,0), (1,0), (0,1)
/// and sigma = 0 on the boundary. Closed form:
///
///   sigma(x) = -(1/pi^2) (L(pi x1) + L(pi x2) + L(pi (1 - x1 - x2)))
///
/// with L the Lobachevsky function, and gradient
///
///   D sigma = (1/pi) (log(sin(pi x1)/sin(pi(x1+x2))),
///                     log(sin(pi x2)/sin(pi(x1+x2)))).
///
/// The gradient blows up like log(dist) toward the boundary.
class SurfaceTensionT {
  public:
    /// Strict interior membership of T.
    static bool inside(double x1, double x2);
    /// Membership of the closed triangle (tiny roundoff slack).
    static bool inside_closure(double x1, double x2);

    /// Value at x in T°. With boundary_limit set, points of the closed
    /// boundary return the limit value 0; points outside the closure always
    /// throw DomainMembershipError.
    static double value(double x1, double x2, bool boundary_limit = false);

    /// Gradient at x strictly inside T°; throws on or outside the boundary.
    static std::array<double, 2> gradient(double x1, double x2);

    /// Hessian determinant: identically 1 on T° (the defining equation).
    static double hessian_det(double, double) { return 1.0; }

    /// Euclidean distance to the boundary of T (x must be in the closure).
    static double dist_to_boundary(double x1, double x2);
};

}  // namespace masolve::cf
