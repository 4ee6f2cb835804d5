#include "doctest.h"
#include "monocat/kernels.hpp"

#include <random>
#include <vector>

using namespace monocat;

TEST_CASE("avx2 row kernels agree with the scalar reference") {
    if (!kernels::backend_available(kernels::Backend::avx2)) {
        MESSAGE("avx2 not available; skipping equivalence check");
        return;
    }
    std::mt19937 rng(7);
    for (std::uint32_t m : {2u, 3u, 4u, 8u, 9u, 27u, 81u, 125u, 256u, 1024u, 2048u, 2187u, 65536u}) {
        for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 16u, 31u, 64u, 129u}) {
            std::vector<std::uint32_t> a(len), b(len);
            for (auto& x : a) x = rng() % m;
            for (auto& x : b) x = rng() % m;
            const std::uint32_t c = rng() % m;
            auto s1 = a, s2 = a;
            kernels::scalar::axpy_mod(s1, b, c, m);
            kernels::avx2::axpy_mod(s2, b, c, m);
            CHECK(s1 == s2);
            s1 = a;
            s2 = a;
            kernels::scalar::scale_mod(s1, c, m);
            kernels::avx2::scale_mod(s2, c, m);
            CHECK(s1 == s2);
            s1 = a;
            s2 = a;
            kernels::scalar::negate_mod(s1, m);
            kernels::avx2::negate_mod(s2, m);
            CHECK(s1 == s2);
        }
    }
}

TEST_CASE("dispatcher honours a forced backend") {
    REQUIRE(kernels::force_backend(kernels::Backend::scalar));
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    std::vector<std::uint32_t> v{1, 2, 3}, w{3, 3, 3};
    kernels::axpy_mod(v, w, 2, 4);
    CHECK(v == std::vector<std::uint32_t>{3, 0, 1});
    if (kernels::backend_available(kernels::Backend::avx2)) {
        CHECK(kernels::force_backend(kernels::Backend::avx2));
        CHECK(kernels::backend_name(kernels::active_backend()) == "avx2");
    }
}
