#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "masolve/core/types.hpp"
#include "masolve/geometry/convex_domain.hpp"

namespace masolve::cf {

/// Explicit barrier/witness constructions, each bundling value, gradient and
/// closed-form Hessian determinant on its natural domain, plus a sampled
/// verifier of its defining inequality. Writing x = (x', x_n), r = |x'|:
///
///  pn_witness         w = x_n - x_n^a (1-r^2)^b,  a = 2/(n+p), b = 1-a,
///                     on {r < 1, 0 < x_n < 1-r^2}; integrable Hessian
///                     determinant but w fails C^alpha for every alpha > a.
///  neg_power_super    w = [x_n - x_n^a (1-r^2)^b]/2, a = 2/(n+p), b = n/(n+p),
///                     on {r < 1, 0 < x_n < (1-r^2)^{n/(n+p-2)}}; satisfies
///                     det D^2 w <= |w|^{-p}; non-convex when p < 2.
///  pos_power_super    v = x_n + x_n^alpha (r^2 - t^2), alpha = (2+gamma)/n,
///                     on {r < t, 0 < x_n < (t^2-r^2)^{1/(1-alpha)}}; satisfies
///                     det D^2 v <= m x_n^gamma / 4 for t <= 2^{-n/2} sqrt(m).
///  holder_sub         w = x_n + x_n^alpha (r^2 - K), K = (2 diam^2 + M + 1)/(alpha(1-alpha));
///                     convex, det D^2 w >= (M+1) x_n^{n alpha - 2}.
///  log_lipschitz_sub  v = (M + 2 D^2) x_n log(x_n / D) + x_n (r^2 - D^2);
///                     convex, det D^2 v >= 2 M dist^{n-2}.
///  abreu_comparison   v_alpha = x_n^alpha (r^2 - C_alpha), C_alpha = (1+2D^2)/(alpha(1-alpha))
///                     for alpha in [2/n, 1); the alpha = 1 member is the
///                     log-Lipschitz function with M = 1; convex, and
///                     det D^2 v_alpha >= dist^{n alpha - 2}.
///  conical            cone over a convex polygon N: 0 on the boundary and
///                     -scale at the interior apex, scale calibrated so the
///                     Monge-Ampere measure is exactly atom_mass * delta_apex.
///  surface_tension    the lozenge surface tension on the unit triangle.
enum class Family {
    pn_witness,
    neg_power_super,
    pos_power_super,
    holder_sub,
    log_lipschitz_sub,
    abreu_comparison,
    conical,
    surface_tension,
};

std::string to_string(Family f);
Family family_from_string(const std::string& tag);

struct FamilyParams {
    int n = 2;
    double p = 1.0;      // pn_witness, neg_power_super
    double gamma = 0.0;  // pos_power_super, holder_sub
    double alpha = 0.5;  // abreu_comparison
    double t = 0.0;      // pos_power_super scale; 0 selects 2^{-n/2} sqrt(m)
    double m = 1.0;      // pos_power_super RHS constant
    double M = 1.0;      // holder_sub / log_lipschitz_sub RHS constant
    double diam = 0.0;   // D; 0 selects the natural domain's diameter

    // conical only
    std::vector<Vec> base_polygon;
    Vec apex;
    double atom_mass = 0.0;
};

struct EvalResult {
    double value = 0.0;
    Vec gradient;
    double hessian_det = 0.0;
};

class ClosedFormFunction {
  public:
    static ClosedFormFunction make(Family family, FamilyParams params);

    Family family() const { return family_; }
    const FamilyParams& params() const { return params_; }
    const geom::ConvexDomain& natural_domain() const { return domain_; }

    /// Value/gradient/Hessian determinant at an interior point of the natural
    /// domain (closed forms only). Throws DomainMembershipError outside.
    EvalResult eval(const Vec& x) const;

    // Derived constants, fixed at construction.
    double a() const { return a_; }
    double b() const { return b_; }
    double scale_C() const { return C_; }
    double K() const { return K_; }
    double C_alpha() const { return C_alpha_; }
    double diam() const { return diam_; }
    /// pn_witness: x_n threshold below which |w(0,x_n)| >= x_n^a / 2.
    double witness_threshold() const { return witness_threshold_; }
    /// conical: multiplier with det D^2(scale * unit cone) = atom_mass * delta.
    double conical_scale() const { return conical_scale_; }

    /// Signed violation of the family's defining inequality at x
    /// (<= 0 means the inequality holds there). Unsupported for
    /// surface_tension, whose defining equation is verified by the
    /// finite-difference Hessian oracle instead.
    double inequality_violation(const Vec& x) const;
    std::string inequality_description() const;

    /// Whether x is strictly inside the natural domain.
    bool in_domain(const Vec& x) const;

  private:
    double eval_axis_value(double xn) const;

    Family family_ = Family::pn_witness;
    FamilyParams params_;
    geom::ConvexDomain domain_ = geom::ConvexDomain::box(Vec(0.0, 0.0), Vec(1.0, 1.0));
    double a_ = 0.0, b_ = 0.0, C_ = 0.0, K_ = 0.0, C_alpha_ = 0.0;
    double diam_ = 0.0, witness_threshold_ = 0.0, conical_scale_ = 0.0;
    double alpha_ = 0.0;
};

struct InequalityReport {
    double max_violation = 0.0;
    Vec worst_point;
    std::size_t samples = 0;
    bool pass = false;
};

/// Samples the natural domain with a Halton sequence plus
/// boundary-concentrated dyadic layers, evaluates both sides of the defining
/// inequality in closed form, and reports the maximal signed violation.
/// PASS iff max violation <= slack (scaled by the local magnitude).
/// For the conical family this instead compares the brute-force apex mass
/// with the requested atom mass.
InequalityReport verify_family_inequality(const ClosedFormFunction& f, std::size_t sample_count,
                                          double slack = 1e-12);

/// Total Monge-Ampere mass of the pn_witness function:
/// a b (2b)^{n-1} / (na - 1) * vol_{n-1}(unit ball). Requires 0 < p < n.
double pn_total_mass(int n, double p);

/// Exponent bootstrap for the degenerate range 0 <= q < n-2 (n >= 3):
/// alpha_0 = 1, alpha_{k+1} = (2 + q alpha_k)/n, strictly decreasing to
/// 2/(n-q) with exact geometric contraction factor q/n. Returns
/// {alpha_0, ..., alpha_{k_max}}.
std::vector<double> bootstrap_sequence(int n, double q, int k_max);

}  // namespace masolve::cf
