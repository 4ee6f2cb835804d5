#include "monocat/kernels.hpp"

#include <atomic>

namespace monocat::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(MONOCAT_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
    static std::atomic<Backend> backend{detect()};
    return backend;
}

}  // namespace

Backend active_backend() { return current().load(std::memory_order_relaxed); }

std::string_view backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) { return b == Backend::scalar || cpu_has_avx2(); }

bool force_backend(Backend b) {
    if (!backend_available(b)) return false;
    current().store(b, std::memory_order_relaxed);
    return true;
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t m) {
    if (c == 0) return;
#if defined(MONOCAT_BUILD_AVX2)
    if (active_backend() == Backend::avx2 && dst.size() >= 8) return avx2::axpy_mod(dst, src, c, m);
#endif
    scalar::axpy_mod(dst, src, c, m);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t m) {
#if defined(MONOCAT_BUILD_AVX2)
    if (active_backend() == Backend::avx2 && v.size() >= 8) return avx2::scale_mod(v, c, m);
#endif
    scalar::scale_mod(v, c, m);
}

void negate_mod(std::span<std::uint32_t> v, std::uint32_t m) {
#if defined(MONOCAT_BUILD_AVX2)
    if (active_backend() == Backend::avx2 && v.size() >= 8) return avx2::negate_mod(v, m);
#endif
    scalar::negate_mod(v, m);
}

}  // namespace monocat::kernels
