#include "masolve/core/sampling.hpp"

#include <cassert>

namespace masolve {

namespace {
constexpr std::uint32_t kPrimes[6] = {2, 3, 5, 7, 11, 13};
}

double radical_inverse(std::uint64_t i, std::uint32_t base) {
    double inv = 1.0 / base;
    double scale = inv;
    double r = 0.0;
    while (i) {
        r += static_cast<double>(i % base) * scale;
        i /= base;
        scale *= inv;
    }
    return r;
}

HaltonSequence::HaltonSequence(int dim, std::uint64_t start_index)
    : dim_(dim), index_(start_index) {
    assert(dim >= 1 && dim <= 6);
}

void HaltonSequence::next(double* out) {
    for (int d = 0; d < dim_; ++d) out[d] = radical_inverse(index_, kPrimes[d]);
    ++index_;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double hash_unit(std::uint64_t id) {
    const std::uint64_t h = splitmix64(id);
    // 53 mantissa bits -> [0,1), then squeeze into [0.5, 1)
    const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    return 0.5 + 0.5 * u;
}

}  // namespace masolve
