#include "masolve/kernels/kernels.hpp"

#include <algorithm>
#include <cstdlib>

namespace masolve::kernels {

namespace scalar {

void directional_second_diff(const double* U, const std::int32_t* ip, const std::int32_t* im,
                             const double* cp, const double* cm, const double* cc, std::size_t n,
                             double* out) {
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = cp[k] * U[ip[k]] + cm[k] * U[im[k]] - cc[k] * U[k];
    }
}

void mul_relu_inplace(double* a, const double* b, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) a[k] *= std::max(b[k], 0.0);
}

void min_inplace(double* a, const double* b, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) a[k] = std::min(a[k], b[k]);
}

void min_plane_distance_2d(const double* x, const double* y, std::size_t n, const double* nx,
                           const double* ny, const double* ofs, std::size_t m, double* out) {
    for (std::size_t k = 0; k < n; ++k) {
        double best = ofs[0] - nx[0] * x[k] - ny[0] * y[k];
        for (std::size_t f = 1; f < m; ++f) {
            best = std::min(best, ofs[f] - nx[f] * x[k] - ny[f] * y[k]);
        }
        out[k] = best;
    }
}

}  // namespace scalar

namespace {

bool avx2_runtime_ok() {
#if defined(MASOLVE_HAVE_AVX2_BUILD) && defined(__x86_64__)
    if (const char* env = std::getenv("MASOLVE_FORCE_SCALAR"); env && env[0] == '1') return false;
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

}  // namespace

IsaTarget active_target() {
    static const IsaTarget t = avx2_runtime_ok() ? IsaTarget::avx2 : IsaTarget::scalar;
    return t;
}

std::string to_string(IsaTarget t) { return t == IsaTarget::avx2 ? "avx2" : "scalar"; }

#if defined(MASOLVE_HAVE_AVX2_BUILD)
#define MASOLVE_DISPATCH(fn, ...) \
    if (active_target() == IsaTarget::avx2) return avx2::fn(__VA_ARGS__); \
    return scalar::fn(__VA_ARGS__)
#else
#define MASOLVE_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void directional_second_diff(const double* U, const std::int32_t* ip, const std::int32_t* im,
                             const double* cp, const double* cm, const double* cc, std::size_t n,
                             double* out) {
    MASOLVE_DISPATCH(directional_second_diff, U, ip, im, cp, cm, cc, n, out);
}

void mul_relu_inplace(double* a, const double* b, std::size_t n) {
    MASOLVE_DISPATCH(mul_relu_inplace, a, b, n);
}

void min_inplace(double* a, const double* b, std::size_t n) {
    MASOLVE_DISPATCH(min_inplace, a, b, n);
}

void min_plane_distance_2d(const double* x, const double* y, std::size_t n, const double* nx,
                           const double* ny, const double* ofs, std::size_t m, double* out) {
    MASOLVE_DISPATCH(min_plane_distance_2d, x, y, n, nx, ny, ofs, m, out);
}

#undef MASOLVE_DISPATCH

}  // namespace masolve::kernels
