#include "doctest.h"
#include "monocat/fp_linalg.hpp"
#include "monocat/ring_matrix.hpp"

#include <random>

using namespace monocat;

namespace {

RingMatrix random_matrix(const RingPtr& r, std::size_t rows, std::size_t cols, std::mt19937& rng) {
    RingMatrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            // Bias towards non-units so valuations vary.
            auto x = rng() % r->size();
            if (rng() % 2) x = r->shift_up(x, 1);
            m.at(i, j) = x;
        }
    return m;
}

}  // namespace

TEST_CASE("Smith form: U A V = D and the inverses are inverses") {
    std::mt19937 rng(11);
    for (auto arith : {Arith::integer, Arith::polynomial})
        for (std::uint32_t p : {2u, 3u})
            for (int n = 1; n <= 4; ++n) {
                auto r = ChainRing::make(arith, p, n);
                for (int trial = 0; trial < 30; ++trial) {
                    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
                    auto a = random_matrix(r, rows, cols, rng);
                    auto s = smith_form(a, want_u | want_u_inv | want_v | want_v_inv);
                    CHECK(s.u * a * s.v == s.d);
                    CHECK(s.u * s.u_inv == RingMatrix::identity(r, rows));
                    CHECK(s.v * s.v_inv == RingMatrix::identity(r, cols));
                    for (std::size_t i = 0; i < rows; ++i)
                        for (std::size_t j = 0; j < cols; ++j) {
                            if (i == j && i < s.rank)
                                CHECK(s.d.at(i, j) == r->pi_power(s.exponents[i]));
                            else
                                CHECK(s.d.at(i, j) == 0);
                        }
                    for (std::size_t k = 1; k < s.rank; ++k) CHECK(s.exponents[k - 1] <= s.exponents[k]);
                }
            }
}

TEST_CASE("cyclic kernel and cokernel sizes add up") {
    std::mt19937 rng(5);
    for (auto arith : {Arith::integer, Arith::polynomial})
        for (int n = 1; n <= 4; ++n) {
            auto r = ChainRing::make(arith, 2, n);
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<int> src(1 + rng() % 4), tgt(1 + rng() % 4);
                for (auto& x : src) x = 1 + static_cast<int>(rng() % n);
                for (auto& x : tgt) x = 1 + static_cast<int>(rng() % n);
                // A random well-defined image-form map: entry (i,j) must be
                // killed by pi^{src_j} in R/pi^{tgt_i}.
                RingMatrix a(r, tgt.size(), src.size());
                for (std::size_t i = 0; i < tgt.size(); ++i)
                    for (std::size_t j = 0; j < src.size(); ++j)
                        a.at(i, j) = r->truncate(r->shift_up(rng() % r->size(), std::max(0, tgt[i] - src[j])), tgt[i]);
                auto k = cyclic_kernel(src, tgt, a);
                auto q = cyclic_cokernel(src, tgt, a);
                int ls = 0, lt = 0, lk = 0, lq = 0;
                for (int x : src) ls += x;
                for (int x : tgt) lt += x;
                for (int x : k.lengths) lk += x;
                for (int x : q.lengths) lq += x;
                // length(src) - length(ker) = length(im) = length(tgt) - length(coker)
                CHECK(ls - lk == lt - lq);
                // Kernel generators map to zero.
                auto img = a * k.basis;
                for (std::size_t i = 0; i < tgt.size(); ++i)
                    for (std::size_t j = 0; j < img.cols(); ++j) CHECK(r->truncate(img.at(i, j), tgt[i]) == 0);
            }
        }
}

TEST_CASE("F_p elimination") {
    auto f = ChainRing::make(Arith::integer, 3, 1);
    RingMatrix a(f, 2, 3);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 2;
    a.at(1, 1) = 1;
    a.at(1, 2) = 1;
    CHECK(fp::rank(a) == 2);
    auto k = fp::kernel(a);
    CHECK(k.cols() == 1);
    auto z = a * k;
    CHECK(z.at(0, 0) == 0);
    CHECK(z.at(1, 0) == 0);
    std::vector<std::uint32_t> b{1, 0};
    auto x = fp::solve(a, std::span<const std::uint32_t>(b));
    REQUIRE(x);
    CHECK(a.apply(*x) == b);
    auto c = fp::complement(k);
    CHECK(c.cols() == 2);
    CHECK(fp::rank(fp::hconcat(k, c)) == 3);
}
