#include <immintrin.h>

#include "masolve/kernels/kernels.hpp"

// AVX2+FMA variants of the sweep kernels. Tails fall through to the scalar
// reference so both paths share the boundary behavior exactly.

namespace masolve::kernels::avx2 {

void directional_second_diff(const double* U, const std::int32_t* ip, const std::int32_t* im,
                             const double* cp, const double* cm, const double* cc, std::size_t n,
                             double* out) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m128i vip = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ip + k));
        const __m128i vim = _mm_loadu_si128(reinterpret_cast<const __m128i*>(im + k));
        const __m256d up = _mm256_i32gather_pd(U, vip, 8);
        const __m256d um = _mm256_i32gather_pd(U, vim, 8);
        const __m256d uc = _mm256_loadu_pd(U + k);
        __m256d acc = _mm256_mul_pd(_mm256_loadu_pd(cp + k), up);
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(cm + k), um, acc);
        acc = _mm256_fnmadd_pd(_mm256_loadu_pd(cc + k), uc, acc);
        _mm256_storeu_pd(out + k, acc);
    }
    if (k < n) scalar::directional_second_diff(U + k, ip + k, im + k, cp + k, cm + k, cc + k,
                                               n - k, out + k);
}

void mul_relu_inplace(double* a, const double* b, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d vb = _mm256_max_pd(_mm256_loadu_pd(b + k), zero);
        _mm256_storeu_pd(a + k, _mm256_mul_pd(_mm256_loadu_pd(a + k), vb));
    }
    if (k < n) scalar::mul_relu_inplace(a + k, b + k, n - k);
}

void min_inplace(double* a, const double* b, std::size_t n) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        _mm256_storeu_pd(a + k, _mm256_min_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k)));
    }
    if (k < n) scalar::min_inplace(a + k, b + k, n - k);
}

void min_plane_distance_2d(const double* x, const double* y, std::size_t n, const double* nx,
                           const double* ny, const double* ofs, std::size_t m, double* out) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d vx = _mm256_loadu_pd(x + k);
        const __m256d vy = _mm256_loadu_pd(y + k);
        __m256d best = _mm256_set1_pd(1e300);
        for (std::size_t f = 0; f < m; ++f) {
            __m256d v = _mm256_set1_pd(ofs[f]);
            v = _mm256_fnmadd_pd(_mm256_set1_pd(nx[f]), vx, v);
            v = _mm256_fnmadd_pd(_mm256_set1_pd(ny[f]), vy, v);
            best = _mm256_min_pd(best, v);
        }
        _mm256_storeu_pd(out + k, best);
    }
    if (k < n) scalar::min_plane_distance_2d(x + k, y + k, n - k, nx, ny, ofs, m, out + k);
}

}  // namespace masolve::kernels::avx2
