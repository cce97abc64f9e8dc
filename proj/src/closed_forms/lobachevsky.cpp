#include "masolve/closed_forms/lobachevsky.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace masolve::cf {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(2k) for k = 1..kMaxTerms. The first few come from the classical
// closed forms; higher orders are summed directly (the tail beyond m = 2000
// is below 1e-30 already at 2k = 10).
std::array<double, Lobachevsky::kMaxTerms + 1> make_zeta_even() {
    std::array<double, Lobachevsky::kMaxTerms + 1> z{};
    const double pi2 = kPi * kPi;
    z[1] = pi2 / 6.0;
    z[2] = pi2 * pi2 / 90.0;
    z[3] = pi2 * pi2 * pi2 / 945.0;
    z[4] = pi2 * pi2 * pi2 * pi2 / 9450.0;
    for (int k = 5; k <= Lobachevsky::kMaxTerms; ++k) {
        double s = 0.0;
        for (int m = 2000; m >= 1; --m) s += std::pow(static_cast<double>(m), -2.0 * k);
        z[k] = s;
    }
    return z;
}

const std::array<double, Lobachevsky::kMaxTerms + 1>& zeta_even() {
    static const auto table = make_zeta_even();
    return table;
}

}  // namespace

double Lobachevsky::core(double t) {
    // L(t) = t - t log(2t) + sum_{k>=1} zeta(2k) t^{2k+1} / (k (2k+1) pi^{2k})
    // valid for t in [0, pi); used only on [0, pi/2] where the ratio is <= 1/4.
    if (t <= 0.0) return 0.0;
    const auto& z = zeta_even();
    const double q = (t / kPi) * (t / kPi);
    double qpow = q;
    double sum = 0.0;
    for (int k = 1; k <= kMaxTerms; ++k) {
        const double term = z[k] / (k * (2.0 * k + 1.0)) * qpow;
        sum += term;
        if (term < kAccuracy * 1e-3) break;
        qpow *= q;
    }
    return t - t * std::log(2.0 * t) + t * sum;
}

double Lobachevsky::eval(double theta) {
    // Reduce modulo pi into [-pi/2, pi/2], then apply oddness. The remaining
    // argument lies in [0, pi/2] where the series converges geometrically.
    const double r = std::remainder(theta, kPi);
    const double v = core(std::fabs(r));
    return std::copysign(v, r);
}

}  // namespace masolve::cf
