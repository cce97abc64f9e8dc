#pragma once

#include <cstdint>
#include <vector>

namespace masolve {

/// Radical-inverse (van der Corput) value of index i in the given base.
double radical_inverse(std::uint64_t i, std::uint32_t base);

/// Halton low-discrepancy sequence in [0,1)^dim, dim <= 6.
class HaltonSequence {
  public:
    explicit HaltonSequence(int dim, std::uint64_t start_index = 1);
    /// Next point; writes dim coordinates into out.
    void next(double* out);
    int dim() const { return dim_; }

  private:
    int dim_;
    std::uint64_t index_;
};

/// SplitMix64: tiny deterministic hash/stream used for symbolic perturbations
/// and seeding. Stable across platforms.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic value in [0.5, 1) derived from an integer id.
double hash_unit(std::uint64_t id);

}  // namespace masolve
