#pragma once

#include <cstdint>

namespace masolve::cf {

/// Evaluator for the Lobachevsky function
///
///   L(theta) = -∫_0^theta log|2 sin u| du,
///
/// which is odd, pi-periodic, and vanishes at 0, pi/2 and pi. Evaluation
/// reduces the argument to [0, pi/2] by periodicity/oddness/reflection and
/// sums the Clausen-type series there with the logarithmic part integrated
/// in closed form, so the result is accurate to ~1e-15 absolute for any
/// finite argument (far inside the 1e-10 contract).
class Lobachevsky {
  public:
    /// Absolute accuracy target of eval(); the series is truncated once terms
    /// drop below this divided by a safety margin.
    static constexpr double kAccuracy = 1e-14;

    static double eval(double theta);

    /// Number of series terms retained (fixed truncation order).
    static constexpr int kMaxTerms = 48;

  private:
    static double core(double theta);  // theta in [0, pi/2]
};

inline double lobachevsky(double theta) { return Lobachevsky::eval(theta); }

}  // namespace masolve::cf
