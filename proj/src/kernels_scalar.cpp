#include "monocat/kernels.hpp"

#include <cstddef>

namespace monocat::kernels::scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t m) {
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < dst.size(); ++i)
        dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % m);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t m) {
    const std::uint64_t cc = c;
    for (auto& x : v) x = static_cast<std::uint32_t>((cc * x) % m);
}

void negate_mod(std::span<std::uint32_t> v, std::uint32_t m) {
    for (auto& x : v) x = x == 0 ? 0 : m - x;
}

}  // namespace monocat::kernels::scalar
