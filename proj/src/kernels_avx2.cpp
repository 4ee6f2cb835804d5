#include "monocat/kernels.hpp"

#include <immintrin.h>

#include <cstddef>

namespace monocat::kernels::avx2 {

namespace {

// Reduces eight lanes holding values below 2^23 modulo m. The float quotient
// is exact up to one unit, which the two conditional corrections absorb.
inline __m256i reduce(__m256i v, __m256i vm, __m256 inv_m) {
    const __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(v), inv_m));
    __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(_mm256_cvtps_epi32(q), vm));
    const __m256i zero = _mm256_setzero_si256();
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vm));
    const __m256i too_big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vm, _mm256_set1_epi32(1)));
    return _mm256_sub_epi32(r, _mm256_and_si256(too_big, vm));
}

}  // namespace

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t m) {
    if (m > simd_max_modulus) return scalar::axpy_mod(dst, src, c, m);
    const std::size_t n = dst.size();
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256 inv_m = _mm256_set1_ps(1.0f / static_cast<float>(m));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
        const __m256i acc = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce(acc, vm, inv_m));
    }
    if (i < n) scalar::axpy_mod(dst.subspan(i), src.subspan(i), c, m);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t m) {
    if (m > simd_max_modulus) return scalar::scale_mod(v, c, m);
    const std::size_t n = v.size();
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256 inv_m = _mm256_set1_ps(1.0f / static_cast<float>(m));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(v.data() + i),
                            reduce(_mm256_mullo_epi32(x, vc), vm, inv_m));
    }
    if (i < n) scalar::scale_mod(v.subspan(i), c, m);
}

void negate_mod(std::span<std::uint32_t> v, std::uint32_t m) {
    const std::size_t n = v.size();
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
        const __m256i neg = _mm256_sub_epi32(vm, x);
        const __m256i is_zero = _mm256_cmpeq_epi32(x, zero);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(v.data() + i),
                            _mm256_andnot_si256(is_zero, neg));
    }
    if (i < n) scalar::negate_mod(v.subspan(i), m);
}

}  // namespace monocat::kernels::avx2
