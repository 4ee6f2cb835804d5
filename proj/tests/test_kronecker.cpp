#include "doctest.h"

#include "monocat/decompose.hpp"
#include "monocat/error.hpp"
#include "monocat/fp_linalg.hpp"
#include "monocat/homs.hpp"
#include "monocat/kronecker.hpp"
#include "monocat/mimo.hpp"
#include "support.hpp"

using namespace monocat;

namespace {

struct Member {
    KroneckerKind kind;
    int n;
    KroneckerParam param;
};

std::vector<Member> members(std::uint32_t p, int max_n) {
    std::vector<Member> out;
    for (int n = 0; n <= max_n; ++n) {
        out.push_back({KroneckerKind::P, n, {}});
        out.push_back({KroneckerKind::I, n, {}});
        if (n >= 1)
            for (auto q : projective_line(p)) out.push_back({KroneckerKind::R, n, q});
    }
    return out;
}

BasePtr dual(std::uint32_t p) { return SerialBase::chain(Arith::polynomial, p, 2); }

}  // namespace

TEST_CASE("projective line") {
    CHECK(projective_line(2).size() == 3);
    CHECK(projective_line(3).size() == 4);
    CHECK(projective_line(3).back() == KroneckerParam{0, 1});
    CHECK(parse_kronecker_kind("R") == KroneckerKind::R);
    CHECK_THROWS_AS(parse_kronecker_kind("Q"), InputError);
}

TEST_CASE("field representations") {
    for (std::uint32_t p : {2u, 3u})
        for (const auto& m : members(p, 3)) {
            CAPTURE(to_string(m.kind));
            CAPTURE(m.n);
            const auto r = kronecker_field_rep(p, m.kind, m.n, m.param);
            const auto lv = r.length_vector();
            switch (m.kind) {
            case KroneckerKind::P: CHECK(lv == std::vector<int>{m.n, m.n + 1}); break;
            case KroneckerKind::I: CHECK(lv == std::vector<int>{m.n + 1, m.n}); break;
            case KroneckerKind::R: CHECK(lv == std::vector<int>{m.n, m.n}); break;
            }
            CHECK(is_indecomposable(r));
        }
    // P_1 is (k => k^2) with the coordinate maps.
    const auto p1 = kronecker_field_rep(2, KroneckerKind::P, 1);
    CHECK(p1.map(0).entries().column(0) == std::vector<std::uint32_t>{1, 0});
    CHECK(p1.map(1).entries().column(0) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("regular members depend only on the point of P^1") {
    const auto a = kronecker_field_rep(3, KroneckerKind::R, 2, {2, 2});
    const auto b = kronecker_field_rep(3, KroneckerKind::R, 2, {1, 1});
    CHECK(is_iso_reps(a, b));
    const auto c = kronecker_field_rep(3, KroneckerKind::R, 2, {1, 2});
    CHECK_FALSE(is_iso_reps(a, c));
}

TEST_CASE("golden matrices are the Mimo of the lifted stable family") {
    for (std::uint32_t p : {2u, 3u}) {
        const auto base = dual(p);
        std::vector<Representation> seen;
        for (const auto& m : members(p, 3)) {
            CAPTURE(p);
            CAPTURE(to_string(m.kind));
            CAPTURE(m.n);
            CAPTURE(m.param.b);
            const auto golden = kronecker_family(base, m.kind, m.n, m.param);
            const auto s = kronecker_stable(base, m.kind, m.n, m.param);
            const auto generic = mimo(stable_lift(s)).rep;
            CHECK(is_mono(golden));
            CHECK(is_iso_reps(generic, golden));
            CHECK(is_indecomposable(golden));
            CHECK_FALSE(injective_rep_recognize(golden).has_value());
            CHECK(stable_reduce(golden).modules() == s.modules());
            for (const auto& other : seen)
                if (other.modules() == golden.modules()) CHECK_FALSE(iso_indecomposable(other, golden));
            seen.push_back(golden);
        }
        const auto q = test::quiver("kronecker");
        const auto lam = test::mod(base, {"M2"});
        const auto zero = SerialModule::zero(base);
        CHECK(injective_rep_recognize(f_shriek(base, q, {lam, zero})).has_value());
        CHECK(injective_rep_recognize(f_shriek(base, q, {zero, lam})).has_value());
    }
}

TEST_CASE("shapes of the golden matrices") {
    const auto base = dual(2);
    // P_n: V_{n-1} => V_n + V_{n-2}[x]/x^2.
    CHECK(kronecker_family(base, KroneckerKind::P, 3, {}).module(1).partition() == std::vector<int>{2, 2, 1, 1, 1, 1});
    // I_n: V*_n => V*_{n-1} + V*_{n+1}[x]/x^2.
    CHECK(kronecker_family(base, KroneckerKind::I, 1, {}).module(1).partition() == std::vector<int>{2, 2, 2, 1});
    // R: V_{n-1} => V_n / k q^n + (V_{n-2} + k q^{n-1})[x]/x^2.
    CHECK(kronecker_family(base, KroneckerKind::R, 1, {1, 0}).module(1).partition() == std::vector<int>{2, 1});
    CHECK(kronecker_family(base, KroneckerKind::P, 1, {}).module(1).partition() == std::vector<int>{1, 1});
}

TEST_CASE("kernel inclusions are exact") {
    for (std::uint32_t p : {2u, 3u})
        for (const auto& m : members(p, 4)) {
            const auto r = kronecker_field_rep(p, m.kind, m.n, m.param);
            const auto in = fp::hconcat(r.map(0).entries(), r.map(1).entries());
            const auto k = fp::kernel(in);
            const auto fam = kronecker_family(dual(p), m.kind, m.n, m.param);
            CHECK(fam.module(1).length() == r.module(1).length() + 2 * static_cast<int>(k.cols()));
        }
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(kronecker_family(dual(2), KroneckerKind::R, 0, {}), InputError);
    CHECK_THROWS_AS(kronecker_family(dual(2), KroneckerKind::P, -1, {}), InputError);
    CHECK_THROWS_AS(kronecker_family(dual(3), KroneckerKind::R, 1, {3, 0}), InputError);
    CHECK_THROWS_AS(kronecker_family(SerialBase::chain(Arith::integer, 2, 2), KroneckerKind::P, 1, {}), InputError);
    CHECK_THROWS_AS(kronecker_family(SerialBase::chain(Arith::polynomial, 2, 3), KroneckerKind::P, 1, {}), InputError);
}
