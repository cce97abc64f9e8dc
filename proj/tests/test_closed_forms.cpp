#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "masolve/analysis/fd_hessian.hpp"
#include "masolve/closed_forms/families.hpp"
#include "masolve/closed_forms/lobachevsky.hpp"
#include "masolve/closed_forms/surface_tension.hpp"
#include "masolve/core/errors.hpp"
#include "masolve/core/sampling.hpp"
#include "support/quadrature.hpp"

using namespace masolve;
using cf::Family;
using cf::lobachevsky;
using cf::SurfaceTensionT;
using masolve::testing::lobachevsky_quadrature;

namespace {
constexpr double kPi = std::numbers::pi;

cf::ClosedFormFunction make_family(Family fam, int n, double p = 1.0, double gamma = 0.0,
                                   double M = 1.0, double alpha = 0.5) {
    cf::FamilyParams prm;
    prm.n = n;
    prm.p = p;
    prm.gamma = gamma;
    prm.M = M;
    prm.alpha = alpha;
    return cf::ClosedFormFunction::make(fam, prm);
}

}  // namespace

TEST_CASE("lobachevsky: values at pi, pi/2, pi/3 against the quadrature oracle") {
    CHECK(std::fabs(lobachevsky(kPi)) < 1e-12);
    CHECK(std::fabs(lobachevsky(kPi / 2.0)) < 1e-12);
    CHECK(std::fabs(lobachevsky_quadrature(kPi)) < 1e-11);
    CHECK(std::fabs(lobachevsky_quadrature(kPi / 2.0)) < 1e-11);
    // frozen from the tanh-sinh oracle of the defining integral
    const double l_pi3 = 0.33831386880321787;
    CHECK(lobachevsky(kPi / 3.0) == doctest::Approx(l_pi3).epsilon(1e-12));
    CHECK(lobachevsky_quadrature(kPi / 3.0) == doctest::Approx(l_pi3).epsilon(1e-10));
}

TEST_CASE("lobachevsky: series matches quadrature across (0, pi)") {
    for (int i = 1; i <= 40; ++i) {
        const double theta = kPi * i / 41.0;
        CHECK(lobachevsky(theta) ==
              doctest::Approx(lobachevsky_quadrature(theta)).epsilon(0).scale(1).epsilon(1e-10));
    }
}

TEST_CASE("lobachevsky: oddness and pi-periodicity at random angles") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> dist(-15.0, 15.0);
    for (int k = 0; k < 1000; ++k) {
        const double th = dist(rng);
        CHECK(std::fabs(lobachevsky(-th) + lobachevsky(th)) < 1e-10);
        CHECK(std::fabs(lobachevsky(th + kPi) - lobachevsky(th)) < 1e-10);
    }
}

TEST_CASE("surface tension: value and gradient at the centroid") {
    const double v = SurfaceTensionT::value(1.0 / 3.0, 1.0 / 3.0);
    // -(3/pi^2) L(pi/3), frozen from the quadrature oracle
    CHECK(v == doctest::Approx(-0.10283508488928182).epsilon(1e-12));
    const double v_oracle = -(3.0 / (kPi * kPi)) * lobachevsky_quadrature(kPi / 3.0);
    CHECK(std::fabs(v - v_oracle) < 1e-10);
    const auto g = SurfaceTensionT::gradient(1.0 / 3.0, 1.0 / 3.0);
    CHECK(std::fabs(g[0]) < 1e-14);
    CHECK(std::fabs(g[1]) < 1e-14);
}

TEST_CASE("surface tension: symmetry under permutations of (x1, x2, 1-x1-x2)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        double x1 = u(rng), x2 = u(rng);
        if (x1 + x2 >= 0.999) continue;
        x1 = std::max(x1, 1e-3);
        x2 = std::max(x2, 1e-3);
        const double x3 = 1.0 - x1 - x2;
        const double v = SurfaceTensionT::value(x1, x2);
        CHECK(SurfaceTensionT::value(x2, x1) == doctest::Approx(v).epsilon(1e-13));
        CHECK(SurfaceTensionT::value(x1, x3) == doctest::Approx(v).epsilon(1e-13));
        CHECK(SurfaceTensionT::value(x3, x2) == doctest::Approx(v).epsilon(1e-13));
    }
}

TEST_CASE("surface tension: boundary limit flag and domain errors") {
    CHECK(SurfaceTensionT::value(0.5, 0.0, true) == 0.0);
    CHECK(SurfaceTensionT::value(0.0, 0.5, true) == 0.0);
    CHECK(SurfaceTensionT::value(0.5, 0.5, true) == 0.0);
    CHECK_THROWS_AS(SurfaceTensionT::value(0.5, 0.0), DomainMembershipError);
    CHECK_THROWS_AS(SurfaceTensionT::value(0.7, 0.7, true), DomainMembershipError);
    // limits vanish: |sigma| <= C d (1 + |log d|) -> tiny at d = 1e-10
    const double d = 1e-10;
    CHECK(std::fabs(SurfaceTensionT::value(0.5, d)) < 1e-8);
    CHECK(std::fabs(SurfaceTensionT::value(d, 0.5)) < 1e-8);
    CHECK(std::fabs(SurfaceTensionT::value(0.5 - d / 2, 0.5 - d / 2)) < 1e-8);
}

TEST_CASE("surface tension: gradient matches finite differences") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.05, 0.9);
    const auto f = [](const Vec& x) { return SurfaceTensionT::value(x[0], x[1]); };
    for (int k = 0; k < 50; ++k) {
        const double x1 = u(rng), x2 = u(rng);
        if (x1 + x2 > 0.93) continue;
        const auto g = SurfaceTensionT::gradient(x1, x2);
        const double h = 1e-6;
        const double g0 = (f(Vec(x1 + h, x2)) - f(Vec(x1 - h, x2))) / (2 * h);
        const double g1 = (f(Vec(x1, x2 + h)) - f(Vec(x1, x2 - h))) / (2 * h);
        CHECK(g[0] == doctest::Approx(g0).epsilon(1e-7));
        CHECK(g[1] == doctest::Approx(g1).epsilon(1e-7));
    }
}

TEST_CASE("surface tension: normal-gradient log blowup toward the bottom edge") {
    // second gradient component at (1/2, d) behaves like (1/pi) log(pi d)
    for (double d : {1e-3, 1e-5, 1e-7}) {
        const auto g = SurfaceTensionT::gradient(0.5, d);
        const double predicted = std::log(kPi * d) / kPi;
        CHECK(g[1] == doctest::Approx(predicted).epsilon(5e-3));
    }
}

TEST_CASE("surface tension: fd_hessian_det equals 1 at interior points") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto f = [](const Vec& x) { return SurfaceTensionT::value(x[0], x[1]); };
    int checked = 0;
    while (checked < 25) {
        const double x1 = u(rng), x2 = u(rng);
        if (!SurfaceTensionT::inside(x1, x2)) continue;
        if (SurfaceTensionT::dist_to_boundary(x1, x2) < 0.1) continue;
        const double det = analysis::fd_hessian_det(f, Vec(x1, x2), 1e-3);
        CHECK(det == doctest::Approx(1.0).epsilon(1e-4));
        ++checked;
    }
}

TEST_CASE("pn_witness: closed forms, boundary values, witness bound") {
    auto f = make_family(Family::pn_witness, 2, 2.0);
    CHECK(f.a() == doctest::Approx(0.5));
    CHECK(f.b() == doctest::Approx(0.5));
    // det D^2 w = 1/(4 x_n) on the axis for n = 2, p = 2
    const auto e = f.eval(Vec(0.0, 0.25));
    CHECK(e.hessian_det == doctest::Approx(1.0).epsilon(1e-12));
    const auto e2 = f.eval(Vec(0.0, 0.1));
    CHECK(e2.hessian_det == doctest::Approx(1.0 / 0.4).epsilon(1e-12));
    // w = 0 on both boundary pieces
    for (double r : {0.0, 0.3, 0.7, 0.95}) {
        const double top = 1.0 - r * r;
        const double w_top = top - std::pow(top, f.a()) * std::pow(1 - r * r, f.b());
        CHECK(std::fabs(w_top) < 1e-12);  // x_n = 1-r^2: x_n^a (1-r^2)^b = x_n^{a+b} = x_n
    }
    // witness: |w(0,x_n)| >= x_n^{2/(n+p)}/2 below the threshold
    const auto rep = cf::verify_family_inequality(f, 2000);
    CHECK(rep.pass);
}

TEST_CASE("pn_witness: total mass") {
    CHECK(cf::pn_total_mass(2, 1.0) == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
    CHECK(cf::pn_total_mass(3, 1.0) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
    CHECK_THROWS_AS(cf::pn_total_mass(2, 2.0), ParameterError);
    CHECK_THROWS_AS(cf::pn_total_mass(3, 3.5), ParameterError);
}

TEST_CASE("neg_power_super: reduced inequality quantity for n=2, p=2") {
    auto f = make_family(Family::neg_power_super, 2, 2.0);
    // det * |v|^p with v the pure power part equals (1-r^2)/64; with |w| <= |v|
    // the sampled violation det*|w|^p - 1 stays <= (1-r^2)/64 - 1 < 0.
    for (double r : {0.0, 0.4, 0.8}) {
        Vec x(r, 0.3 * f.natural_domain().bowl_profile(r));
        const auto e = f.eval(x);
        const double v_pure = std::fabs(e.value) + 0.5 * x[1];  // |v| = |w| + C x_n
        const double q = e.hessian_det * std::pow(v_pure, 2.0);
        CHECK(q == doctest::Approx((1.0 - r * r) / 64.0).epsilon(1e-10));
    }
    const auto rep = cf::verify_family_inequality(f, 20000);
    CHECK(rep.pass);
}

TEST_CASE("neg_power_super: non-convex for p < 2, convex for p = 2") {
    for (double p : {0.5, 1.0}) {
        auto f = make_family(Family::neg_power_super, 2, p);
        const auto field = [&](const Vec& x) { return f.eval(x).value; };
        // the Hessian determinant goes negative near the rim; find a witness
        bool found = false;
        for (double r = 0.5; r < 0.99 && !found; r += 0.02) {
            const double h_prof = f.natural_domain().bowl_profile(r);
            if (h_prof < 0.02) break;
            Vec x(r, 0.5 * h_prof);
            if (!f.in_domain(x)) continue;
            if (dist_to_boundary(f.natural_domain(), x) < 4e-3) continue;
            const double lam =
                analysis::fd_hessian_min_eigenvalue(field, x, 1e-4, 4);
            if (lam < -1e-6) found = true;
        }
        CHECK(found);
    }
    {
        auto f = make_family(Family::neg_power_super, 2, 2.0);
        const auto field = [&](const Vec& x) { return f.eval(x).value; };
        for (double r = 0.0; r < 0.95; r += 0.05) {
            Vec x(r, 0.5 * f.natural_domain().bowl_profile(r));
            if (!f.in_domain(x) || dist_to_boundary(f.natural_domain(), x) < 2e-3) continue;
            const double lam = analysis::fd_hessian_min_eigenvalue(field, x, 2e-4, 4);
            CHECK(lam >= -1e-8);
        }
    }
}

TEST_CASE("pos_power_super: determinant value and inequality") {
    cf::FamilyParams prm;
    prm.n = 3;
    prm.gamma = 0.0;
    prm.m = 1.0;
    auto f = cf::ClosedFormFunction::make(Family::pos_power_super, prm);
    const double t = f.params().t;
    CHECK(t == doctest::Approx(std::pow(2.0, -1.5)));
    // on the axis: det = 2^{n-1} alpha(1-alpha) t^2 = (8/9) t^2 for n=3, gamma=0
    Vec x = Vec::zero(3);
    x[2] = 0.2 * f.natural_domain().bowl_profile(0.0);
    const auto e = f.eval(x);
    CHECK(e.hessian_det == doctest::Approx((8.0 / 9.0) * t * t).epsilon(1e-12));
    CHECK(e.hessian_det <= prm.m / 4.0);
    CHECK(cf::verify_family_inequality(f, 20000).pass);
}

TEST_CASE("log_lipschitz_sub: determinant closed form for n=2, M=1, D=1") {
    cf::FamilyParams prm;
    prm.n = 2;
    prm.M = 1.0;
    prm.diam = 1.0;
    auto f = cf::ClosedFormFunction::make(Family::log_lipschitz_sub, prm);
    for (double x1 : {-0.3, 0.0, 0.2}) {
        const auto e = f.eval(Vec(x1, 0.37));
        CHECK(e.hessian_det == doctest::Approx(2.0 * (3.0 - 2.0 * x1 * x1)).epsilon(1e-13));
    }
    CHECK(cf::verify_family_inequality(f, 20000).pass);
}

TEST_CASE("abreu_comparison: determinant closed form for n=3, D=1, alpha=2/3") {
    cf::FamilyParams prm;
    prm.n = 3;
    prm.alpha = 2.0 / 3.0;
    prm.diam = 1.0;
    auto f = cf::ClosedFormFunction::make(Family::abreu_comparison, prm);
    CHECK(f.C_alpha() == doctest::Approx(13.5));
    for (double r : {0.0, 0.4}) {
        const auto e = f.eval(Vec(r, 0.0, 0.5));
        CHECK(e.hessian_det ==
              doctest::Approx(4.0 * (3.0 - (10.0 / 9.0) * r * r)).epsilon(1e-12));
        CHECK(e.hessian_det >= 1.0);
    }
    CHECK(cf::verify_family_inequality(f, 20000).pass);
}

TEST_CASE("families: closed-form gradient and Hessian det match finite differences") {
    struct Case {
        cf::ClosedFormFunction f;
        Vec x;
    };
    cf::FamilyParams prm_pos;
    prm_pos.n = 3;
    prm_pos.gamma = 0.5;
    cf::FamilyParams prm_hold;
    prm_hold.n = 3;
    prm_hold.gamma = 0.0;
    prm_hold.M = 2.0;
    cf::FamilyParams prm_ll;
    prm_ll.n = 3;
    prm_ll.M = 1.0;
    cf::FamilyParams prm_ab;
    prm_ab.n = 4;
    prm_ab.alpha = 0.7;

    std::vector<Case> cases;
    cases.push_back({make_family(Family::pn_witness, 2, 1.0), Vec(0.3, 0.4)});
    cases.push_back({make_family(Family::pn_witness, 3, 1.5), Vec(0.2, -0.3, 0.3)});
    cases.push_back({make_family(Family::neg_power_super, 2, 0.5), Vec(0.4, 0.2)});
    cases.push_back({make_family(Family::neg_power_super, 3, 3.0), Vec(0.2, 0.1, 0.3)});
    {
        auto f = cf::ClosedFormFunction::make(Family::pos_power_super, prm_pos);
        Vec x = Vec::zero(3);
        x[0] = 0.05;
        x[2] = 0.25 * f.natural_domain().bowl_profile(0.05);
        cases.push_back({f, x});
    }
    cases.push_back({cf::ClosedFormFunction::make(Family::holder_sub, prm_hold),
                     Vec(0.2, -0.1, 0.5)});
    cases.push_back(
        {cf::ClosedFormFunction::make(Family::log_lipschitz_sub, prm_ll), Vec(0.1, 0.2, 0.4)});
    cases.push_back({cf::ClosedFormFunction::make(Family::abreu_comparison, prm_ab),
                     Vec(0.1, -0.2, 0.1, 0.5)});

    for (const auto& c : cases) {
        const auto e = c.f.eval(c.x);
        const auto field = [&](const Vec& y) { return c.f.eval(y).value; };
        // gradient: central differences with an h-refinement consistency check
        double err_prev = -1.0;
        for (double h : {1e-3, 5e-4, 2.5e-4}) {
            double err = 0.0;
            for (int i = 0; i < c.x.n; ++i) {
                Vec xp = c.x, xm = c.x;
                xp[i] += h;
                xm[i] -= h;
                const double gi = (field(xp) - field(xm)) / (2 * h);
                err = std::max(err, std::fabs(gi - e.gradient[i]));
            }
            if (err_prev >= 0.0) CHECK(err < err_prev * 0.6 + 1e-11);
            err_prev = err;
            CHECK(err < 1e-4);
        }
        // Hessian determinant vs second-order FD
        const double det_fd = analysis::fd_hessian_det(field, c.x, 1e-4);
        CHECK(e.hessian_det == doctest::Approx(det_fd).epsilon(5e-4));
    }
}

TEST_CASE("families: convexity of the sub-barriers (FD Hessian PSD)") {
    cf::FamilyParams prm_hold;
    prm_hold.n = 3;
    prm_hold.M = 10.0;
    cf::FamilyParams prm_ll;
    prm_ll.n = 2;
    prm_ll.M = 1.0;
    cf::FamilyParams prm_ab;
    prm_ab.n = 3;
    prm_ab.alpha = 2.0 / 3.0;
    for (auto f : {cf::ClosedFormFunction::make(Family::holder_sub, prm_hold),
                   cf::ClosedFormFunction::make(Family::log_lipschitz_sub, prm_ll),
                   cf::ClosedFormFunction::make(Family::abreu_comparison, prm_ab)}) {
        const auto field = [&](const Vec& y) { return f.eval(y).value; };
        HaltonSequence seq(f.params().n);
        double u[kMaxDim];
        int checked = 0;
        while (checked < 60) {
            seq.next(u);
            Vec x = Vec::zero(f.params().n);
            const auto& dom = f.natural_domain();
            for (int i = 0; i < x.n; ++i) x[i] = dom.lo()[i] + u[i] * (dom.hi()[i] - dom.lo()[i]);
            if (dist_to_boundary(dom, x) < 0.05) continue;
            const double lam = analysis::fd_hessian_min_eigenvalue(field, x, 3e-4, 4);
            CHECK(lam >= -1e-10);
            ++checked;
        }
    }
}

TEST_CASE("bootstrap_sequence: values, contraction identity, parameter errors") {
    const auto alpha = cf::bootstrap_sequence(4, 1.0, 2);
    REQUIRE(alpha.size() == 3);
    CHECK(alpha[0] == 1.0);
    CHECK(alpha[1] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(alpha[2] == doctest::Approx(0.6875).epsilon(1e-15));
    const double limit = 2.0 / (4 - 1.0);
    CHECK((alpha[2] - limit) / (alpha[1] - limit) == doctest::Approx(0.25).epsilon(1e-12));

    // |alpha_k - 2/(n-q)| = (q/n)^k (1 - 2/(n-q)) exactly, strict decrease
    for (int n : {3, 4}) {
        for (double q : {0.0, 0.3, 0.9}) {
            if (!(q < n - 2)) continue;
            const auto seq = cf::bootstrap_sequence(n, q, 12);
            const double lim = 2.0 / (n - q);
            for (std::size_t k = 0; k < seq.size(); ++k) {
                const double expect =
                    std::pow(q / n, static_cast<double>(k)) * (1.0 - lim);
                CHECK(std::fabs(seq[k] - lim - expect) < 1e-14);
                if (k > 0 && q > 0.0) CHECK(seq[k] < seq[k - 1]);
            }
        }
    }
    CHECK(cf::bootstrap_sequence(3, 1e-9, 1)[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
    CHECK_THROWS_AS(cf::bootstrap_sequence(2, 0.5, 3), ParameterError);
    CHECK_THROWS_AS(cf::bootstrap_sequence(3, 1.0, 3), ParameterError);
    CHECK_THROWS_AS(cf::bootstrap_sequence(4, -0.5, 3), ParameterError);
}

TEST_CASE("verify_family_inequality: unsupported family") {
    cf::FamilyParams prm;
    prm.n = 2;
    auto f = cf::ClosedFormFunction::make(Family::surface_tension, prm);
    CHECK_THROWS_AS(cf::verify_family_inequality(f, 10), UnsupportedFamilyError);
}
