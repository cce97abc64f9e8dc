#include "masolve/closed_forms/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "masolve/closed_forms/surface_tension.hpp"
#include "masolve/core/errors.hpp"
#include "masolve/core/sampling.hpp"
#include "masolve/geometry/pl_convex.hpp"

namespace masolve::cf {

namespace {

constexpr double kPi = std::numbers::pi;

double unit_ball_volume(int d) {
    switch (d) {
        case 1: return 2.0;
        case 2: return kPi;
        case 3: return 4.0 * kPi / 3.0;
        default: throw ParameterError("unit_ball_volume: dimension out of range");
    }
}

geom::ConvexDomain half_space_frame_box(int n) {
    // Frame used by the sub-barrier constructions: 0 on the boundary, the
    // domain in {x_n > 0}, the x_n-axis pointing inward.
    Vec lo = Vec::zero(n), hi = Vec::zero(n);
    for (int i = 0; i + 1 < n; ++i) {
        lo[i] = -0.5;
        hi[i] = 0.5;
    }
    lo[n - 1] = 0.0;
    hi[n - 1] = 1.0;
    return geom::ConvexDomain::box(lo, hi, 2 * (n - 1));
}

/// Outward facet form of a convex CCW polygon: dot(nrm, x) <= off.
struct PolyFacets {
    std::vector<Vec> nrm;
    std::vector<double> off;
};

PolyFacets outward_facets(const std::vector<Vec>& poly) {
    PolyFacets f;
    const int m = static_cast<int>(poly.size());
    for (int i = 0; i < m; ++i) {
        const Vec a = poly[i], b = poly[(i + 1) % m];
        Vec e = b - a;
        const double len = norm(e);
        Vec out(e[1] / len, -e[0] / len);
        f.nrm.push_back(out);
        f.off.push_back(dot(out, a));
    }
    return f;
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::pn_witness: return "pn-witness";
        case Family::neg_power_super: return "neg-power-super";
        case Family::pos_power_super: return "pos-power-super";
        case Family::holder_sub: return "holder-sub";
        case Family::log_lipschitz_sub: return "log-lipschitz-sub";
        case Family::abreu_comparison: return "abreu-comparison";
        case Family::conical: return "conical";
        case Family::surface_tension: return "surface-tension";
    }
    return "?";
}

Family family_from_string(const std::string& tag) {
    if (tag == "pn-witness") return Family::pn_witness;
    if (tag == "neg-power-super") return Family::neg_power_super;
    if (tag == "pos-power-super") return Family::pos_power_super;
    if (tag == "holder-sub") return Family::holder_sub;
    if (tag == "log-lipschitz-sub") return Family::log_lipschitz_sub;
    if (tag == "abreu-comparison") return Family::abreu_comparison;
    if (tag == "conical") return Family::conical;
    if (tag == "surface-tension") return Family::surface_tension;
    throw ValidationError("unknown family tag: " + tag);
}

ClosedFormFunction ClosedFormFunction::make(Family family, FamilyParams p) {
    ClosedFormFunction f;
    f.family_ = family;
    const int n = p.n;
    if (n < 2 || n > kMaxDim) throw ParameterError("family: dimension must be in [2,4]");

    switch (family) {
        case Family::pn_witness: {
            if (!(p.p > 0.0 && p.p < n)) throw ParameterError("pn_witness requires 0 < p < n");
            f.a_ = 2.0 / (n + p.p);
            f.b_ = 1.0 - f.a_;
            f.witness_threshold_ = std::pow(2.0, -1.0 / f.b_);
            f.domain_ = geom::ConvexDomain::bowl(n, 1.0, 1.0);
            break;
        }
        case Family::neg_power_super: {
            if (!(p.p > 0.0)) throw ParameterError("neg_power_super requires p > 0");
            f.a_ = 2.0 / (n + p.p);
            f.b_ = static_cast<double>(n) / (n + p.p);
            f.C_ = 0.5;
            f.domain_ = geom::ConvexDomain::bowl(n, 1.0, n / (n + p.p - 2.0));
            break;
        }
        case Family::pos_power_super: {
            if (n < 3) throw ParameterError("pos_power_super requires n >= 3");
            if (!(p.gamma >= 0.0 && p.gamma < n - 2)) {
                throw ParameterError("pos_power_super requires 0 <= gamma < n-2");
            }
            if (!(p.m > 0.0)) throw ParameterError("pos_power_super requires m > 0");
            f.alpha_ = (2.0 + p.gamma) / n;
            const double t_max = std::pow(2.0, -0.5 * n) * std::sqrt(p.m);
            if (p.t == 0.0) p.t = t_max;
            if (!(p.t > 0.0 && p.t <= t_max * (1.0 + 1e-12))) {
                throw ParameterError("pos_power_super requires 0 < t <= 2^{-n/2} sqrt(m)");
            }
            f.domain_ = geom::ConvexDomain::bowl(n, p.t, 1.0 / (1.0 - f.alpha_));
            break;
        }
        case Family::holder_sub: {
            if (n < 3) throw ParameterError("holder_sub requires n >= 3");
            if (!(p.gamma >= 0.0 && p.gamma < n - 2)) {
                throw ParameterError("holder_sub requires 0 <= gamma < n-2");
            }
            if (!(p.M > 0.0)) throw ParameterError("holder_sub requires M > 0");
            f.alpha_ = (2.0 + p.gamma) / n;
            f.domain_ = half_space_frame_box(n);
            f.diam_ = p.diam > 0.0 ? p.diam : f.domain_.diameter();
            f.K_ = (2.0 * f.diam_ * f.diam_ + p.M + 1.0) / (f.alpha_ * (1.0 - f.alpha_));
            break;
        }
        case Family::log_lipschitz_sub: {
            if (!(p.M > 0.0)) throw ParameterError("log_lipschitz_sub requires M > 0");
            f.domain_ = half_space_frame_box(n);
            f.diam_ = p.diam > 0.0 ? p.diam : f.domain_.diameter();
            break;
        }
        case Family::abreu_comparison: {
            if (!(p.alpha >= 2.0 / n - 1e-14 && p.alpha <= 1.0)) {
                throw ParameterError("abreu_comparison requires alpha in [2/n, 1]");
            }
            f.alpha_ = std::min(1.0, std::max(2.0 / n, p.alpha));
            f.domain_ = half_space_frame_box(n);
            f.diam_ = p.diam > 0.0 ? p.diam : f.domain_.diameter();
            if (f.alpha_ < 1.0) {
                f.C_alpha_ = (1.0 + 2.0 * f.diam_ * f.diam_) / (f.alpha_ * (1.0 - f.alpha_));
            }
            break;
        }
        case Family::conical: {
            if (p.n != 2) throw ParameterError("conical family is 2D");
            if (!(p.atom_mass > 0.0)) throw ParameterError("conical requires atom_mass > 0");
            if (p.base_polygon.size() < 3) throw ParameterError("conical requires a base polygon");
            f.domain_ = geom::ConvexDomain::polygon(p.base_polygon);
            if (!f.domain_.strictly_inside(p.apex)) {
                throw ParameterError("conical apex must lie strictly inside the base polygon");
            }
            // Apex subdifferential area of the unit cone (value -1 at the
            // apex, 0 at the vertices), computed by the brute-force oracle.
            geom::PlConvexFunction cone;
            cone.nodes = p.base_polygon;
            cone.values.assign(p.base_polygon.size(), 0.0);
            cone.nodes.push_back(p.apex);
            cone.values.push_back(-1.0);
            const double unit_area =
                geom::subgradient_measure(cone, {cone.nodes.size() - 1});
            if (!(unit_area > 0.0)) throw GeometryError("conical: degenerate apex cell");
            // mass scales with degree n=2 homogeneity: (scale)^2 * unit_area
            f.conical_scale_ = std::sqrt(p.atom_mass / unit_area);
            break;
        }
        case Family::surface_tension: {
            if (p.n != 2) throw ParameterError("surface_tension family is 2D");
            f.domain_ = geom::ConvexDomain::polygon({Vec(0.0, 0.0), Vec(1.0, 0.0), Vec(0.0, 1.0)});
            break;
        }
    }
    f.params_ = std::move(p);
    return f;
}

bool ClosedFormFunction::in_domain(const Vec& x) const {
    if (x.n != params_.n) return false;
    switch (domain_.kind()) {
        case geom::DomainKind::bowl: {
            const double r = radial(x);
            const double z = x[x.n - 1];
            return r < domain_.bowl_radial_scale() && z > 0.0 && z < domain_.bowl_profile(r);
        }
        default:
            return domain_.contains(x, 0.0) && dist_to_boundary(domain_, x) > 0.0;
    }
}

EvalResult ClosedFormFunction::eval(const Vec& x) const {
    if (!in_domain(x)) {
        throw DomainMembershipError("eval: point " + masolve::to_string(x) +
                                    " outside the natural domain of " + to_string(family_));
    }
    const int n = params_.n;
    const double r = radial(x);
    const double xn = x[n - 1];
    EvalResult out;
    out.gradient = Vec::zero(n);

    switch (family_) {
        case Family::pn_witness: {
            const double a = a_, b = b_;
            const double q = 1.0 - r * r;
            out.value = xn - std::pow(xn, a) * std::pow(q, b);
            for (int i = 0; i + 1 < n; ++i) {
                out.gradient[i] = 2.0 * b * std::pow(xn, a) * std::pow(q, b - 1.0) * x[i];
            }
            out.gradient[n - 1] = 1.0 - a * std::pow(xn, a - 1.0) * std::pow(q, b);
            out.hessian_det = a * b * std::pow(2.0 * b, n - 1.0) * std::pow(xn, n * a - 2.0) *
                              std::pow(q, 1.0 - n * a);
            break;
        }
        case Family::neg_power_super: {
            const double a = a_, b = b_;
            const double q = 1.0 - r * r;
            out.value = 0.5 * (xn - std::pow(xn, a) * std::pow(q, b));
            for (int i = 0; i + 1 < n; ++i) {
                out.gradient[i] = b * std::pow(xn, a) * std::pow(q, b - 1.0) * x[i];
            }
            out.gradient[n - 1] = 0.5 * (1.0 - a * std::pow(xn, a - 1.0) * std::pow(q, b));
            out.hessian_det = std::pow(C_, n) * std::pow(2.0 * b, n - 1.0) *
                              std::pow(xn, n * a - 2.0) * std::pow(q, n * (b - 1.0)) * a *
                              (1.0 - a + (1.0 - 2.0 * b - a) * r * r);
            break;
        }
        case Family::pos_power_super:
        case Family::holder_sub: {
            const double al = alpha_;
            const double c2 = family_ == Family::pos_power_super
                                  ? params_.t * params_.t
                                  : K_;
            out.value = xn + std::pow(xn, al) * (r * r - c2);
            for (int i = 0; i + 1 < n; ++i) out.gradient[i] = 2.0 * std::pow(xn, al) * x[i];
            out.gradient[n - 1] = 1.0 + al * std::pow(xn, al - 1.0) * (r * r - c2);
            out.hessian_det = std::pow(2.0, n - 1.0) * std::pow(xn, n * al - 2.0) *
                              (al * (1.0 - al) * c2 - (al * al + al) * r * r);
            break;
        }
        case Family::log_lipschitz_sub: {
            const double D = diam_, M = params_.M;
            out.value = (M + 2.0 * D * D) * xn * std::log(xn / D) + xn * (r * r - D * D);
            for (int i = 0; i + 1 < n; ++i) out.gradient[i] = 2.0 * xn * x[i];
            out.gradient[n - 1] =
                (M + 2.0 * D * D) * (std::log(xn / D) + 1.0) + (r * r - D * D);
            out.hessian_det =
                std::pow(2.0, n - 1.0) * std::pow(xn, n - 2.0) * (M + 2.0 * D * D - 2.0 * r * r);
            break;
        }
        case Family::abreu_comparison: {
            const double al = alpha_, D = diam_;
            if (al < 1.0) {
                out.value = std::pow(xn, al) * (r * r - C_alpha_);
                for (int i = 0; i + 1 < n; ++i) out.gradient[i] = 2.0 * std::pow(xn, al) * x[i];
                out.gradient[n - 1] = al * std::pow(xn, al - 1.0) * (r * r - C_alpha_);
                out.hessian_det = std::pow(2.0, n - 1.0) * std::pow(xn, n * al - 2.0) *
                                  (al * (1.0 - al) * C_alpha_ - (al * al + al) * r * r);
            } else {
                out.value = (1.0 + 2.0 * D * D) * xn * std::log(xn / D) + xn * (r * r - D * D);
                for (int i = 0; i + 1 < n; ++i) out.gradient[i] = 2.0 * xn * x[i];
                out.gradient[n - 1] =
                    (1.0 + 2.0 * D * D) * (std::log(xn / D) + 1.0) + (r * r - D * D);
                out.hessian_det = std::pow(2.0, n - 1.0) * std::pow(xn, n - 2.0) *
                                  (1.0 + 2.0 * D * D - 2.0 * r * r);
            }
            break;
        }
        case Family::conical: {
            const auto fct = outward_facets(params_.base_polygon);
            double gauge = -1.0;
            int active = 0;
            for (std::size_t i = 0; i < fct.nrm.size(); ++i) {
                const double den = fct.off[i] - dot(fct.nrm[i], params_.apex);
                const double g = dot(fct.nrm[i], x - params_.apex) / den;
                if (g > gauge) {
                    gauge = g;
                    active = static_cast<int>(i);
                }
            }
            out.value = conical_scale_ * (gauge - 1.0);
            const double den = fct.off[active] - dot(fct.nrm[active], params_.apex);
            out.gradient = (conical_scale_ / den) * fct.nrm[active];
            out.hessian_det = 0.0;  // a.e.; the measure is the apex atom
            break;
        }
        case Family::surface_tension: {
            out.value = SurfaceTensionT::value(x[0], x[1]);
            const auto g = SurfaceTensionT::gradient(x[0], x[1]);
            out.gradient[0] = g[0];
            out.gradient[1] = g[1];
            out.hessian_det = 1.0;
            break;
        }
    }
    return out;
}

std::string ClosedFormFunction::inequality_description() const {
    switch (family_) {
        case Family::pn_witness: return "|w(0,x_n)| >= x_n^a / 2 below the witness threshold";
        case Family::neg_power_super: return "det D^2 w * |w|^p <= 1";
        case Family::pos_power_super: return "det D^2 v <= m x_n^gamma / 4";
        case Family::holder_sub: return "det D^2 w >= (M+1) x_n^{n alpha - 2}";
        case Family::log_lipschitz_sub: return "det D^2 v >= 2 M dist^{n-2}";
        case Family::abreu_comparison: return "det D^2 v_alpha >= dist^{n alpha - 2}";
        case Family::conical: return "apex Monge-Ampere mass equals the requested atom mass";
        case Family::surface_tension: return "(verified via fd_hessian_det)";
    }
    return "";
}

double ClosedFormFunction::inequality_violation(const Vec& x) const {
    const EvalResult e = eval(x);
    const int n = params_.n;
    const double xn = x[n - 1];
    switch (family_) {
        case Family::pn_witness:
            // sampled on the axis: |w(0,x_n)| >= x_n^a / 2
            return 0.5 * std::pow(xn, a_) - std::fabs(eval_axis_value(xn));
        case Family::neg_power_super:
            return e.hessian_det * std::pow(std::fabs(e.value), params_.p) - 1.0;
        case Family::pos_power_super:
            return e.hessian_det - params_.m * std::pow(xn, params_.gamma) / 4.0;
        case Family::holder_sub:
            return (params_.M + 1.0) * std::pow(xn, n * alpha_ - 2.0) - e.hessian_det;
        case Family::log_lipschitz_sub: {
            const double d = dist_to_boundary(domain_, x);
            return 2.0 * params_.M * std::pow(d, n - 2.0) - e.hessian_det;
        }
        case Family::abreu_comparison: {
            const double d = dist_to_boundary(domain_, x);
            const double rate = alpha_ < 1.0 ? std::pow(d, n * alpha_ - 2.0)
                                             : std::pow(d, n - 2.0);
            return rate - e.hessian_det;
        }
        case Family::conical:
        case Family::surface_tension:
            throw UnsupportedFamilyError("inequality_violation: family " + to_string(family_) +
                                         " has no pointwise inequality");
    }
    return 0.0;
}

double ClosedFormFunction::eval_axis_value(double xn) const {
    // pn_witness restricted to the x_n-axis: w(0, x_n) = x_n - x_n^a.
    return xn - std::pow(xn, a_);
}

namespace {

/// Draw a sample strictly inside the natural domain from unit-cube
/// coordinates, concentrating a share of the budget near the degeneracy sets
/// x_n -> 0 and r -> rim.
Vec domain_sample(const geom::ConvexDomain& dom, int n, const double* u, std::uint64_t index) {
    switch (dom.kind()) {
        case geom::DomainKind::bowl: {
            const double t = dom.bowl_radial_scale();
            double r;
            Vec x = Vec::zero(n);
            if (n == 2) {
                const double c = 2.0 * u[0] - 1.0;
                x[0] = c * t;
                r = std::fabs(x[0]);
            } else if (n == 3) {
                r = t * std::sqrt(u[0]);
                const double th = 2.0 * kPi * u[1];
                x[0] = r * std::cos(th);
                x[1] = r * std::sin(th);
            } else {
                r = t * std::pow(u[0], 1.0 / 3.0);
                const double cz = 2.0 * u[1] - 1.0;
                const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
                const double th = 2.0 * kPi * u[2];
                x[0] = r * sz * std::cos(th);
                x[1] = r * sz * std::sin(th);
                x[2] = r * cz;
            }
            double frac = u[n - 1];
            // boundary-concentrated layers: dyadic heights and near-rim radii
            const int mode = static_cast<int>(index % 5);
            if (mode == 3) frac = std::pow(2.0, -1.0 - static_cast<double>(index % 37));
            if (mode == 4) {
                const double shrink = 1.0 - std::pow(2.0, -1.0 - static_cast<double>(index % 37));
                for (int i = 0; i + 1 < n; ++i) x[i] *= shrink * t / std::max(r, 1e-300);
                r = shrink * t;
                frac = std::min(0.9, frac + 0.05);
            }
            const double h = dom.bowl_profile(r);
            x[n - 1] = std::max(1e-300, frac * h);
            return x;
        }
        case geom::DomainKind::box: {
            Vec x = Vec::zero(n);
            for (int i = 0; i < n; ++i) {
                x[i] = dom.lo()[i] + u[i] * (dom.hi()[i] - dom.lo()[i]);
            }
            // concentrate some samples toward the flat boundary piece x_n = lo_n
            if (index % 5 == 3) {
                const double d = std::pow(2.0, -1.0 - static_cast<double>(index % 40));
                x[n - 1] = dom.lo()[n - 1] + d * (dom.hi()[n - 1] - dom.lo()[n - 1]);
            }
            return x;
        }
        default:
            throw UnsupportedFamilyError("domain_sample: unsupported domain kind");
    }
}

InequalityReport verify_conical(const ClosedFormFunction& f, double slack) {
    // Rebuild the scaled cone on its defining nodes and compare the
    // brute-force apex mass with the requested atom.
    geom::PlConvexFunction cone;
    cone.nodes = f.params().base_polygon;
    cone.values.assign(cone.nodes.size(), 0.0);
    cone.nodes.push_back(f.params().apex);
    cone.values.push_back(-f.conical_scale());
    const double mass = geom::subgradient_measure(cone, {cone.nodes.size() - 1});
    InequalityReport rep;
    rep.samples = 1;
    rep.worst_point = f.params().apex;
    rep.max_violation = std::fabs(mass - f.params().atom_mass) -
                        1e-8 * std::max(1.0, f.params().atom_mass);
    rep.pass = rep.max_violation <= slack;
    return rep;
}

}  // namespace

InequalityReport verify_family_inequality(const ClosedFormFunction& f, std::size_t sample_count,
                                          double slack) {
    if (f.family() == Family::surface_tension) {
        throw UnsupportedFamilyError(
            "verify_family_inequality: surface_tension has no pointwise inequality; "
            "use the finite-difference Hessian oracle");
    }
    if (f.family() == Family::conical) return verify_conical(f, slack);

    InequalityReport rep;
    const int n = f.params().n;

    if (f.family() == Family::pn_witness) {
        // witness inequality lives on the x_n-axis below the threshold
        HaltonSequence seq(1);
        double u;
        for (std::size_t k = 0; k < sample_count; ++k) {
            seq.next(&u);
            Vec x = Vec::zero(n);
            x[n - 1] = std::max(1e-300, u * f.witness_threshold());
            const double v = f.inequality_violation(x);
            if (rep.samples == 0 || v > rep.max_violation) {
                rep.max_violation = v;
                rep.worst_point = x;
            }
            ++rep.samples;
        }
        rep.pass = rep.max_violation <= slack;
        return rep;
    }

    HaltonSequence seq(n);
    double u[kMaxDim];
    for (std::size_t k = 0; k < sample_count; ++k) {
        seq.next(u);
        const Vec x = domain_sample(f.natural_domain(), n, u, k);
        if (!f.in_domain(x)) continue;
        const double v = f.inequality_violation(x);
        if (rep.samples == 0 || v > rep.max_violation) {
            rep.max_violation = v;
            rep.worst_point = x;
        }
        ++rep.samples;
    }
    rep.pass = rep.max_violation <= slack;
    return rep;
}

double pn_total_mass(int n, double p) {
    if (!(p > 0.0 && p < n)) {
        throw ParameterError("pn_total_mass requires 0 < p < n (the integral diverges otherwise)");
    }
    const double a = 2.0 / (n + p);
    const double b = 1.0 - a;
    return a * b * std::pow(2.0 * b, n - 1.0) / (n * a - 1.0) * unit_ball_volume(n - 1);
}

std::vector<double> bootstrap_sequence(int n, double q, int k_max) {
    if (n < 3) throw ParameterError("bootstrap_sequence requires n >= 3");
    if (!(q >= 0.0 && q < n - 2)) throw ParameterError("bootstrap_sequence requires 0 <= q < n-2");
    if (k_max < 0) throw ParameterError("bootstrap_sequence requires k_max >= 0");
    std::vector<double> alpha;
    alpha.reserve(static_cast<std::size_t>(k_max) + 1);
    alpha.push_back(1.0);
    for (int k = 0; k < k_max; ++k) alpha.push_back((2.0 + q * alpha.back()) / n);
    return alpha;
}

}  // namespace masolve::cf
