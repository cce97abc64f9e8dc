#pragma once

#include <cmath>
#include <cstdlib>

namespace masolve::testing {

/// Tanh-sinh (double-exponential) quadrature on [a, b]. Handles integrable
/// endpoint singularities; used as the independent oracle for the defining
/// integrals (it never shares code with the series implementations it
/// checks).
template <class F>
double tanh_sinh(F&& f, double a, double b, double tol = 1e-13) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double tmax = 6.1;

    auto eval_pair = [&](double t) {
        const double pi_half = 1.5707963267948966;
        const double u = pi_half * std::sinh(t);
        const double ch = std::cosh(u);
        const double w = pi_half * std::cosh(t) / (ch * ch);
        // 1 - tanh(u) computed stably for offsets near the endpoints
        const double em = 1.0 / (std::exp(2.0 * u) + 1.0);  // (1 - tanh u)/2
        const double g = std::tanh(u);
        const double x_plus = (g > 0.999) ? b - half * 2.0 * em : mid + half * g;
        const double x_minus = (g > 0.999) ? a + half * 2.0 * em : mid - half * g;
        double s = 0.0;
        if (x_plus > a && x_plus < b) s += f(x_plus);
        if (t > 0.0 && x_minus > a && x_minus < b) s += f(x_minus);
        return w * s;
    };

    double h = 1.0;
    double sum = eval_pair(0.0);
    for (double t = h; t <= tmax; t += h) sum += eval_pair(t);
    double integral = half * h * sum;

    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += eval_pair(t);
        const double next = 0.5 * integral + half * h * add;
        const double err = std::fabs(next - integral);
        integral = next;
        if (level >= 4 && err < tol * (1.0 + std::fabs(integral))) break;
    }
    return integral;
}

/// Oracle for the Lobachevsky function: direct tanh-sinh quadrature of the
/// defining integral -∫_0^theta log|2 sin u| du for theta in [0, pi].
inline double lobachevsky_quadrature(double theta) {
    return -tanh_sinh([](double u) { return std::log(std::fabs(2.0 * std::sin(u))); }, 0.0,
                      theta);
}

}  // namespace masolve::testing
