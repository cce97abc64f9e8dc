#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace masolve::kernels {

/// Data-parallel inner loops of the wide-stencil sweeps and batch geometry
/// queries. Scalar reference implementations are the semantic baseline; the
/// AVX2 variants are selected at runtime when the CPU supports them and are
/// equivalence-tested against the reference. Set MASOLVE_FORCE_SCALAR=1 to
/// pin the scalar path.
enum class IsaTarget { scalar, avx2 };

IsaTarget active_target();
std::string to_string(IsaTarget t);

namespace scalar {

/// out[k] = cp[k]*U[ip[k]] + cm[k]*U[im[k]] - cc[k]*U[k]: one directional
/// second difference per node (boundary-shortened coefficients baked into
/// cp/cm/cc; boundary values materialized as extra slots of U).
void directional_second_diff(const double* U, const std::int32_t* ip, const std::int32_t* im,
                             const double* cp, const double* cm, const double* cc, std::size_t n,
                             double* out);

/// a[k] *= max(b[k], 0)
void mul_relu_inplace(double* a, const double* b, std::size_t n);

/// a[k] = min(a[k], b[k])
void min_inplace(double* a, const double* b, std::size_t n);

/// out[k] = min_f (ofs[f] - nx[f]*x[k] - ny[f]*y[k]): batch distance of 2D
/// points to the supporting lines of a convex polygon (inward normal form).
void min_plane_distance_2d(const double* x, const double* y, std::size_t n, const double* nx,
                           const double* ny, const double* ofs, std::size_t m, double* out);

}  // namespace scalar

#if defined(MASOLVE_HAVE_AVX2_BUILD)
namespace avx2 {
void directional_second_diff(const double* U, const std::int32_t* ip, const std::int32_t* im,
                             const double* cp, const double* cm, const double* cc, std::size_t n,
                             double* out);
void mul_relu_inplace(double* a, const double* b, std::size_t n);
void min_inplace(double* a, const double* b, std::size_t n);
void min_plane_distance_2d(const double* x, const double* y, std::size_t n, const double* nx,
                           const double* ny, const double* ofs, std::size_t m, double* out);
}  // namespace avx2
#endif

// Dispatched entry points (resolved once per process).
void directional_second_diff(const double* U, const std::int32_t* ip, const std::int32_t* im,
                             const double* cp, const double* cm, const double* cc, std::size_t n,
                             double* out);
void mul_relu_inplace(double* a, const double* b, std::size_t n);
void min_inplace(double* a, const double* b, std::size_t n);
void min_plane_distance_2d(const double* x, const double* y, std::size_t n, const double* nx,
                           const double* ny, const double* ofs, std::size_t m, double* out);

}  // namespace masolve::kernels
