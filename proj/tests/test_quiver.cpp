#include "doctest.h"
#include "monocat/error.hpp"
#include "monocat/quiver.hpp"

#include <set>

using namespace monocat;

namespace {

// Independent root oracle for type A: dimension vectors of intervals.
std::set<std::vector<int>> interval_roots(int k) {
    std::set<std::vector<int>> out;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            std::vector<int> v(static_cast<std::size_t>(k), 0);
            for (int t = i; t <= j; ++t) v[static_cast<std::size_t>(t)] = 1;
            out.insert(v);
        }
    return out;
}

// Tits form oracle: positive vectors with q(x) = 1 inside a box are the
// positive roots of a Dynkin graph.
int tits_count(const Quiver& q, int bound) {
    const std::size_t n = q.vertex_count();
    std::vector<int> x(n, 0);
    int count = 0;
    while (true) {
        std::size_t k = 0;
        for (; k < n; ++k) {
            if (++x[k] <= bound) break;
            x[k] = 0;
        }
        if (k == n) break;
        int form = 0;
        for (int c : x) form += c * c;
        for (const auto& a : q.arrows()) form -= x[a.source] * x[a.target];
        if (form == 1) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("paths") {
    auto a2 = Quiver::builtin("An-linear:2");
    REQUIRE(a2.paths().size() == 3);
    CHECK(a2.paths()[0].name(a2) == "e1");
    CHECK(a2.paths()[2].name(a2) == "a1");
    auto kr = Quiver::builtin("kronecker");
    CHECK(kr.paths().size() == 4);
    auto a3 = Quiver::builtin("An-linear:3");
    CHECK(a3.paths().size() == 6);
    CHECK(a3.paths()[5].name(a3) == "a2a1");
    // Every nontrivial path factors uniquely as arrow o shorter path.
    for (const auto& q : {a3, kr, Quiver::builtin("D5"), Quiver::builtin("A4-zigzag")})
        for (std::size_t i = 0; i < q.paths().size(); ++i) {
            const auto& p = q.paths()[i];
            if (p.length() == 0) continue;
            int factorizations = 0;
            for (std::size_t j = 0; j < q.paths().size(); ++j)
                for (std::size_t a = 0; a < q.arrows().size(); ++a)
                    if (q.extend(j, a) == i) ++factorizations;
            CHECK(factorizations == 1);
        }
}

TEST_CASE("acyclicity and topological order") {
    CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}}), InputError);
    auto z = Quiver::builtin("A4-zigzag");
    CHECK(z.topological_order() == std::vector<std::size_t>{0, 2, 1, 3});
    CHECK(z.in_arrows(1).size() == 2);
}

TEST_CASE("Dynkin recognition") {
    CHECK(dynkin_type(Quiver::builtin("An-linear:3")).to_string() == "A3");
    CHECK(dynkin_type(Quiver::builtin("An:RLR")).to_string() == "A4");
    CHECK(dynkin_type(Quiver::builtin("D4")).to_string() == "D4");
    CHECK(dynkin_type(Quiver::builtin("E7")).to_string() == "E7");
    CHECK_FALSE(dynkin_type(Quiver::builtin("kronecker")).valid());
    // An acyclic orientation of a 3-cycle.
    CHECK_FALSE(dynkin_type(Quiver({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}})).valid());
    CHECK_THROWS_AS(dynkin_type(Quiver({"1", "2"}, {})), InputError);
}

TEST_CASE("positive roots") {
    CHECK(positive_roots(Quiver::builtin("An-linear:3")).size() == 6);
    CHECK(positive_roots(Quiver::builtin("D4")).size() == 12);
    for (int k = 1; k <= 8; ++k) {
        auto q = Quiver::builtin("An-linear:" + std::to_string(k));
        auto roots = positive_roots(q);
        CHECK(static_cast<int>(roots.size()) == positive_root_count(dynkin_type(q)));
        CHECK(static_cast<int>(roots.size()) == k * (k + 1) / 2);
        CHECK(std::set<std::vector<int>>(roots.begin(), roots.end()) == interval_roots(k));
    }
    for (const char* name : {"D4", "D5", "D6", "E6", "E7"}) {
        auto q = Quiver::builtin(name);
        auto roots = positive_roots(q);
        CHECK(static_cast<int>(roots.size()) == positive_root_count(dynkin_type(q)));
        CHECK(static_cast<int>(roots.size()) == tits_count(q, 4));
    }
    CHECK(positive_roots(Quiver::builtin("E8")).size() == 120);
    CHECK_THROWS_AS(positive_roots(Quiver::builtin("kronecker")), InputError);
}
