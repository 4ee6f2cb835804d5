#pragma once

// Row kernels for modular arithmetic on contiguous uint32 lanes.
//
// Every elimination routine in the library (Smith normal form over Z/p^n,
// Gaussian elimination over F_p) funnels its inner loop through these. The
// scalar versions are the reference; the AVX2 versions are selected at
// runtime when the CPU supports them and must agree bit for bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace monocat::kernels {

enum class Backend { scalar, avx2 };

/// Largest modulus the vector paths accept; wider moduli always run scalar.
inline constexpr std::uint32_t simd_max_modulus = 2048;

/// dst[i] = (dst[i] + c * src[i]) mod m. Inputs must already be reduced.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t m);

/// v[i] = (c * v[i]) mod m.
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t m);

/// v[i] = (m - v[i]) mod m.
void negate_mod(std::span<std::uint32_t> v, std::uint32_t m);

Backend active_backend();
std::string_view backend_name(Backend b);
bool backend_available(Backend b);

/// Pins the dispatcher to one backend (tests use this to compare paths).
/// Returns false when the backend is not available on this machine.
bool force_backend(Backend b);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t m);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t m);
void negate_mod(std::span<std::uint32_t> v, std::uint32_t m);
}  // namespace scalar

#if defined(MONOCAT_BUILD_AVX2)
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t m);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t m);
void negate_mod(std::span<std::uint32_t> v, std::uint32_t m);
}  // namespace avx2
#endif

}  // namespace monocat::kernels
