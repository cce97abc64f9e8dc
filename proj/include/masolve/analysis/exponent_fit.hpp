#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace masolve::analysis {

/// Boundary growth models fitted to probe data (d_j, value_j):
///   power:        value ~ c * d^beta            (log-log regression)
///   log_lipschitz value ~ d * (a + b |log d|)   (value/d against |log d|)
///   gradient_log  value ~ a + c |log d|         (value against |log d|)
enum class FitModel { power, log_lipschitz, gradient_log };

std::string to_string(FitModel m);
FitModel fit_model_from_string(const std::string& s);

struct ExponentFit {
    FitModel model = FitModel::power;
    double beta = 0.0;       // power exponent (power model only)
    double amplitude = 0.0;  // c (power), b (log_lipschitz), c (gradient_log)
    double intercept = 0.0;  // a in the linearized coordinates
    double r2 = 0.0;
    /// RMS of log(predicted/observed): the scale-free residual used to compare
    /// different models on the same data.
    double rms_log_residual = 0.0;
    std::vector<double> residuals;  // per-sample, regression coordinates
    std::vector<std::pair<double, double>> samples;
    bool dropped_head = false;  // largest-d sample removed by the guard

    double predict(double d) const;
};

/// Least-squares fit in the model's linearizing coordinates. Requires >= 4
/// samples, strictly decreasing positive d, positive values (gradient_log
/// accepts magnitudes). When the guard is on, the largest-d sample is
/// dropped and the fit repeated if its residual exceeds 3x the median
/// (pre-asymptotic contamination).
ExponentFit fit_exponent(std::span<const double> d, std::span<const double> value, FitModel model,
                         bool pre_asymptotic_guard = true);

}  // namespace masolve::analysis
