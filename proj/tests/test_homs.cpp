#include "doctest.h"
#include "monocat/error.hpp"
#include "monocat/homs.hpp"
#include "support.hpp"

#include <cmath>

using namespace monocat;
using namespace monocat::test;

namespace {

// Oracle: walk every vertexwise tuple and keep the natural ones.
template <class Visit>
void brute_homs(const Representation& r, const Representation& s, Visit visit) {
    const auto nv = r.modules().size();
    std::vector<HomSpace> hs;
    for (std::size_t v = 0; v < nv; ++v) hs.push_back(hom_space(r.module(v), s.module(v)));
    std::vector<SerialMorphism> cur(nv);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == nv) {
            auto f = RepMorphism::unchecked(r, s, cur);
            if (f.is_natural()) visit(f);
            return;
        }
        hs[v].for_each([&](const SerialMorphism& x) {
            cur[v] = x;
            rec(v + 1);
            return true;
        });
    };
    rec(0);
}

int ambient_log(const Representation& r, const Representation& s) {
    int t = 0;
    for (std::size_t v = 0; v < r.modules().size(); ++v) t += hom_space(r.module(v), s.module(v)).log_size();
    return t;
}

}  // namespace

TEST_CASE("hom space examples") {
    auto b = SerialBase::chain(Arith::integer, 2, 2);
    auto a = quiver("An-linear:2");
    auto m1 = mod(b, {"M1"}), z = SerialModule::zero(b);
    auto top = a2(b, SerialMorphism::zero(m1, z));
    auto bottom = a2(b, SerialMorphism::zero(z, m1));
    CHECK(hom_reps(top, bottom).log_size() == 0);
    CHECK(hom_reps(bottom, top).log_size() == 0);

    auto f = f_shriek(b, a, {m1, z});
    auto end = hom_reps(f, f);
    CHECK(end.log_size() == 1);  // End(M1) = F_2
    auto id = RepMorphism::identity(f);
    auto c = end.coordinates(id);
    CHECK(end.combination(c).components() == id.components());

    CHECK_THROWS_AS(hom_reps(f, a2(SerialBase::chain(Arith::integer, 2, 3), SerialMorphism::zero(mod(SerialBase::chain(Arith::integer, 2, 3), {"M1"}), SerialModule::zero(SerialBase::chain(Arith::integer, 2, 3))))), InputError);
}

TEST_CASE("hom spaces agree with brute-force naturality") {
    std::mt19937_64 rng(3);
    std::vector<BasePtr> bases{SerialBase::chain(Arith::integer, 2, 2), SerialBase::chain(Arith::polynomial, 2, 3),
                               SerialBase::chain(Arith::integer, 2, 3), SerialBase::rad2nak(2, 2),
                               SerialBase::stable_of(SerialBase::chain(Arith::integer, 2, 3))};
    std::vector<QuiverPtr> quivers{quiver("An-linear:2"), quiver("kronecker"), quiver("An:RL")};
    int checked = 0;
    for (const auto& b : bases)
        for (const auto& q : quivers)
            for (int t = 0; t < 12; ++t) {
                auto r = random_rep(b, q, rng, 2);
                auto s = random_rep(b, q, rng, 2);
                if (ambient_log(r, s) > 14) continue;
                auto h = hom_reps(r, s);
                long long count = 0;
                bool all_in = true;
                brute_homs(r, s, [&](const RepMorphism& f) {
                    ++count;
                    auto c = h.coordinates(f);
                    all_in = all_in && h.combination(c).components() == f.components();
                });
                CHECK(all_in);
                CHECK(count == std::llround(std::pow(2.0, h.log_size())));
                for (std::size_t k = 0; k < h.rank(); ++k) CHECK(h.generator(k).is_natural());
                ++checked;
            }
    CHECK(checked > 100);
}

TEST_CASE("is_iso_reps agrees with exhaustive search") {
    std::mt19937_64 rng(17);
    auto b = SerialBase::chain(Arith::integer, 2, 2);
    auto q = quiver("An-linear:2");
    int isos = 0;
    for (int t = 0; t < 200; ++t) {
        auto r = random_rep(b, q, rng, 2);
        // An isomorphic copy: conjugate by random automorphisms.
        std::vector<SerialMorphism> autos;
        for (const auto& m : r.modules()) {
            SerialMorphism g;
            auto hs = hom_space(m, m);
            do g = hs.random(rng);
            while (!is_iso(g));
            autos.push_back(g);
        }
        auto inv = [&](const SerialMorphism& g) { return *solve(g, SerialMorphism::identity(g.target())); };
        auto s = a2(b, compose(autos[1], compose(r.map(0), inv(autos[0]))));
        CHECK(is_iso_reps(r, s));
        auto other = random_rep(b, q, rng, 2);
        if (other.modules() != r.modules()) continue;
        bool brute = false;
        brute_homs(r, other, [&](const RepMorphism& f) { brute = brute || is_iso(f); });
        CHECK(is_iso_reps(r, other) == brute);
        isos += brute;
    }
    CHECK(isos > 0);
}
