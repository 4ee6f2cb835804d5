#include "monocat/acceptance.hpp"

#include "monocat/decompose.hpp"
#include "monocat/error.hpp"
#include "monocat/homs.hpp"
#include "monocat/json_io.hpp"
#include "monocat/kronecker.hpp"
#include "monocat/mimo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <random>
#include <set>
#include <sstream>

namespace monocat::acceptance {

namespace {

QuiverPtr quiver(const std::string& name) { return std::make_shared<const Quiver>(Quiver::builtin(name)); }
BasePtr poly(std::uint32_t p, int n) { return SerialBase::chain(Arith::polynomial, p, n); }
BasePtr integer(std::uint32_t p, int n) { return SerialBase::chain(Arith::integer, p, n); }

// Collects failed expectations; the first few go into the detail line.
struct Checker {
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::size_t failed = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failed;
        if (failures.size() < 4) failures.push_back(what);
    }
    bool ok() const { return failed == 0; }
    Outcome outcome(const std::string& summary) const {
        std::string d = summary;
        if (!ok()) {
            d += "; " + std::to_string(failed) + " of " + std::to_string(checks) + " checks failed:";
            for (const auto& f : failures) d += " [" + f + "]";
        }
        return {ok(), d};
    }
};

EnumerateOptions mono_options(const Options& o) {
    EnumerateOptions e;
    e.mono_only = true;
    e.budget = o.budget;
    e.seed = o.seed;
    return e;
}

std::string vec(const std::vector<int>& v) {
    std::string s;
    bool digits = true;
    for (int x : v) digits = digits && x >= 0 && x < 10;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!digits && i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

// Single-entry morphism between modules with at most one part each.
SerialMorphism scalar(const SerialModule& s, const SerialModule& t, ChainRing::value_type c) {
    RingMatrix m(s.base()->coeff_ring(), t.size(), s.size());
    if (!s.empty() && !t.empty()) m.at(0, 0) = c;
    return SerialMorphism(s, t, m);
}

SerialModule cyclic(const BasePtr& b, int length) {
    return length == 0 ? SerialModule::zero(b) : SerialModule::from_names(b, {"M" + std::to_string(length)});
}

SerialModule random_module(const BasePtr& b, std::mt19937_64& rng, std::size_t max_parts) {
    std::vector<std::size_t> parts(rng() % (max_parts + 1));
    for (auto& x : parts) x = rng() % b->label_count();
    return SerialModule(b, parts);
}

Representation random_rep(const BasePtr& b, const QuiverPtr& q, std::mt19937_64& rng, std::size_t max_parts) {
    std::vector<SerialModule> mods;
    for (std::size_t v = 0; v < q->vertex_count(); ++v) mods.push_back(random_module(b, rng, max_parts));
    std::vector<SerialMorphism> maps;
    for (const auto& a : q->arrows()) maps.push_back(hom_space(mods[a.source], mods[a.target]).random(rng));
    return Representation(b, q, mods, maps);
}

// Every element of `found` is isomorphic to exactly one element of `expected`
// and the sizes agree.
bool same_classes(const std::vector<Representation>& found, const std::vector<Representation>& expected,
                  std::string& why) {
    if (found.size() != expected.size()) {
        why = std::to_string(found.size()) + " classes, expected " + std::to_string(expected.size());
        return false;
    }
    std::vector<bool> used(expected.size(), false);
    for (const auto& f : found) {
        std::size_t hits = 0, at = 0;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (is_iso_reps(f, expected[i])) ++hits, at = i;
        if (hits != 1 || used[at]) {
            why = "class with length vector " + vec(f.length_vector()) + " matches " + std::to_string(hits) + " expected";
            return false;
        }
        used[at] = true;
    }
    return true;
}

std::vector<Representation> reps_of(const std::vector<EnumeratedClass>& cs, int injective) {
    std::vector<Representation> out;
    for (const auto& c : cs)
        if (injective < 0 || c.injective == (injective == 1)) out.push_back(c.rep);
    return out;
}

std::string data_path(const Options& o, const std::string& file) {
    return (o.data_dir.empty() ? data_dir() : o.data_dir) + "/" + file;
}

std::vector<std::vector<int>> loewy3_table(const Options& o) {
    const auto j = io::read_file(data_path(o, "a3_loewy3_length_vectors.json"));
    return j.at("vectors").get<std::vector<std::vector<int>>>();
}

std::string table_summary(const TableVerdict& v) {
    std::size_t unique = 0;
    std::string bad;
    for (const auto& l : v.listed) {
        if (l.verdict == "unique")
            ++unique;
        else
            bad += " " + vec(l.lengths) + ":" + l.verdict;
    }
    std::string s = std::to_string(unique) + "/" + std::to_string(v.listed.size()) + " listed vectors unique, caps " +
                    vec(v.caps) + ", extras " + std::to_string(v.extras.size());
    if (!v.extras.empty()) {
        s += " (";
        for (std::size_t i = 0; i < v.extras.size(); ++i) s += (i ? " " : "") + vec(v.extras[i].lengths);
        s += ")";
    }
    if (!bad.empty()) s += "; not unique:" + bad;
    return s;
}

// ---------------------------------------------------------------------------

Outcome rad2_count(const Options& o) {
    const auto q = o.quiver ? o.quiver : quiver("An-linear:3");
    const auto b = o.base ? o.base : poly(2, 2);
    const auto report = enumerate_mono_rad2(q, b);
    std::size_t injective_labels = 0;
    for (std::size_t l = 0; l < b->label_count(); ++l) injective_labels += b->label(l).injective;
    const auto t = SerialBase::stable_of(b)->label_count();
    const auto roots = static_cast<std::size_t>(positive_root_count(dynkin_type(*q)));
    const auto m_q0 = injective_labels * q->vertex_count(), t_phi = t * roots;
    Checker c;
    c.expect(report.injective_count == m_q0, "injective count");
    c.expect(report.non_injective_count == t_phi, "non-injective count");
    c.expect(report.classes.size() == m_q0 + t_phi, "total");
    return c.outcome(std::to_string(report.classes.size()) + " classes (" + std::to_string(report.injective_count) +
                     " injective + " + std::to_string(report.non_injective_count) + " non-injective), formula " +
                     std::to_string(injective_labels) + "*" + std::to_string(q->vertex_count()) + " + " +
                     std::to_string(t) + "*" + std::to_string(roots) + " = " + std::to_string(m_q0 + t_phi));
}

Outcome a1(const Options& o) {
    const auto q = quiver("An-linear:3");
    const auto b = poly(2, 2);
    const auto report = enumerate_mono_rad2(q, b);
    const auto bounded = enumerate_bounded(q, b, {3, 3, 3}, mono_options(o));
    Checker c;
    c.expect(report.injective_count == 3 && report.non_injective_count == 6, "classification counts 3 + 6");
    c.expect(bounded.injective_count == 3 && bounded.non_injective_count == 6, "bounded counts 3 + 6");
    std::string why;
    c.expect(same_classes(reps_of(bounded.classes, -1), reps_of(report.classes, -1), why), "class sets: " + why);
    return c.outcome("classification " + std::to_string(report.injective_count) + "+" +
                     std::to_string(report.non_injective_count) + ", bounded caps 333 " +
                     std::to_string(bounded.injective_count) + "+" + std::to_string(bounded.non_injective_count));
}

// 0 -> ... -> 0 -> L -> ... -> L -> I(L) -> ... -> I(L) on linear A_n over a
// chain ring of Loewy length 2, given by its length vector.
Representation linear_shape(const BasePtr& b, const QuiverPtr& q, const std::vector<int>& lv) {
    std::vector<SerialModule> mods;
    for (int l : lv) mods.push_back(cyclic(b, l));
    std::vector<SerialMorphism> maps;
    for (const auto& a : q->arrows()) maps.push_back(scalar(mods[a.source], mods[a.target], 1));
    return Representation(b, q, mods, maps);
}

Outcome a2(const Options& o) {
    const auto q = quiver("An-linear:4");
    const auto b = poly(2, 2);
    const auto report = enumerate_mono_rad2(q, b);
    Checker c;
    c.expect(report.injective_count == 4, "4 injective classes");
    c.expect(report.non_injective_count == 10, "10 non-injective classes");
    std::set<std::vector<int>> shapes;
    for (const auto& cl : report.classes) {
        if (cl.injective) continue;
        const auto lv = cl.rep.length_vector();
        // zeros, then at least one 1, then 2s
        std::size_t i = 0;
        while (i < lv.size() && lv[i] == 0) ++i;
        const std::size_t ones = i;
        while (i < lv.size() && lv[i] == 1) ++i;
        const bool has_l = i > ones;
        while (i < lv.size() && lv[i] == 2) ++i;
        c.expect(has_l && i == lv.size(), "shape of " + vec(lv));
        c.expect(is_iso_reps(cl.rep, linear_shape(b, q, lv)), "maps of " + vec(lv));
        shapes.insert(lv);
    }
    c.expect(shapes.size() == 10, "distinct length vectors");
    const auto bounded = enumerate_bounded(q, b, {2, 2, 2, 2}, mono_options(o));
    std::string why;
    c.expect(same_classes(reps_of(bounded.classes, 0), reps_of(report.classes, 0), why), "bounded cross-check: " + why);
    return c.outcome(std::to_string(report.non_injective_count) + " non-injective classes, " +
                     std::to_string(shapes.size()) + " distinct shapes 0*1+2*, bounded caps 2222 agrees");
}

Outcome a3(const Options& o) {
    const auto golden = io::read_file(data_path(o, "a4_zigzag_rad2_classes.json"));
    std::vector<Representation> inj, non;
    for (const auto& e : golden.at("injective")) inj.push_back(io::representation_from_json(e.at("representation")));
    for (const auto& e : golden.at("non_injective")) non.push_back(io::representation_from_json(e.at("representation")));
    const auto q = quiver("A4-zigzag");
    const auto b = poly(2, 2);
    const auto report = enumerate_mono_rad2(q, b);
    Checker c;
    std::string why;
    c.expect(same_classes(reps_of(report.classes, 1), inj, why), "injective: " + why);
    c.expect(same_classes(reps_of(report.classes, 0), non, why), "non-injective: " + why);
    for (const auto& r : non) c.expect(is_mono(r) && is_indecomposable(r), "golden entry mono and indecomposable");
    const auto bounded = enumerate_bounded(q, b, {2, 3, 2, 2}, mono_options(o));
    c.expect(same_classes(reps_of(bounded.classes, 1), inj, why), "bounded injective: " + why);
    c.expect(same_classes(reps_of(bounded.classes, 0), non, why), "bounded non-injective: " + why);
    return c.outcome("classification " + std::to_string(report.injective_count) + "+" +
                     std::to_string(report.non_injective_count) + " and bounded caps 2322 " +
                     std::to_string(bounded.injective_count) + "+" + std::to_string(bounded.non_injective_count) +
                     " against golden " + std::to_string(inj.size()) + "+" + std::to_string(non.size()));
}

Outcome a4(const Options& o) {
    const auto v = verify_length_vector_table(quiver("An-linear:3"), poly(2, 3), loewy3_table(o), 1, mono_options(o));
    return {v.ok(), table_summary(v)};
}

Outcome a4_smoke(const Options& o) {
    std::vector<std::vector<int>> small;
    for (const auto& lv : loewy3_table(o)) {
        bool fits = true;
        for (int x : lv) fits = fits && x <= 3;
        if (fits) small.push_back(lv);
    }
    const auto v = verify_length_vector_table(quiver("An-linear:3"), poly(2, 3), small, 0, mono_options(o));
    return {v.ok(), table_summary(v)};
}

// The ten indecomposable mono objects of A2 over Z/8: M_i -> M_j (i <= j,
// j > 0) and (pi', iota'): M2 -> M1 + M3.
std::vector<Representation> a2_loewy3_list(const BasePtr& b) {
    const auto q = quiver("An-linear:2");
    std::vector<Representation> out;
    for (int j = 1; j <= 3; ++j)
        for (int i = 0; i <= j; ++i) {
            const auto s = cyclic(b, i), t = cyclic(b, j);
            out.emplace_back(b, q, std::vector<SerialModule>{s, t}, std::vector<SerialMorphism>{scalar(s, t, 1)});
        }
    const auto s = cyclic(b, 2), t = SerialModule::from_names(b, {"M3", "M1"});
    RingMatrix m(b->coeff_ring(), 2, 1);
    m.at(0, 0) = 1;
    m.at(1, 0) = 1;
    out.emplace_back(b, q, std::vector<SerialModule>{s, t}, std::vector<SerialMorphism>{SerialMorphism(s, t, m)});
    return out;
}

Outcome a6(const Options& o) {
    const auto b = integer(2, 3);
    const auto report = enumerate_bounded(quiver("An-linear:2"), b, {3, 4}, mono_options(o));
    Checker c;
    std::string why;
    c.expect(same_classes(reps_of(report.classes, -1), a2_loewy3_list(b), why), why);
    return c.outcome(std::to_string(report.classes.size()) + " classes within caps 34, matching g_{j,i} and (pi',iota')");
}

Outcome a5(const Options& o) {
    std::vector<Representation> classes;
    const auto v = verify_length_vector_table(quiver("An-linear:3"), poly(2, 3), loewy3_table(o), 1, mono_options(o));
    for (const auto* part : {&v.listed, &v.extras})
        for (const auto& vv : *part)
            for (const auto& r : vv.classes) classes.push_back(r);
    const auto from_a3 = classes.size();
    for (const auto& r : enumerate_bounded(quiver("An-linear:2"), integer(2, 3), {3, 4}, mono_options(o)).classes)
        classes.push_back(r.rep);
    Checker c;
    for (const auto& r : classes) {
        const auto partner = r.base()->coeff_ring()->arith() == Arith::integer ? poly(2, 3) : integer(2, 3);
        const auto t = transfer(r, partner);
        const auto name = vec(r.length_vector()) + " over " + r.base()->name();
        c.expect(is_mono(t), name + " mono");
        c.expect(is_indecomposable(t), name + " indecomposable");
        c.expect(t.partition_vector() == r.partition_vector(), name + " partition vector");
        c.expect(is_iso_reps(transfer(t, r.base()), r), name + " round trip");
    }
    return c.outcome(std::to_string(classes.size()) + " classes transferred (" + std::to_string(from_a3) +
                     " from the A3 table run, " + std::to_string(classes.size() - from_a3) + " from the A2 list)");
}

Outcome a7(const Options&) {
    Checker c;
    std::size_t members = 0;
    for (std::uint32_t p : {2u, 3u}) {
        const auto base = poly(p, 2);
        const auto q = quiver("kronecker");
        std::vector<Representation> seen;
        for (int n = 0; n <= 3; ++n)
            for (auto kind : {KroneckerKind::P, KroneckerKind::I, KroneckerKind::R}) {
                std::vector<KroneckerParam> params{{}};
                if (kind == KroneckerKind::R) {
                    if (n == 0) continue;
                    params = projective_line(p);
                }
                for (const auto& par : params) {
                    const auto name = to_string(kind) + std::to_string(n) + "(" + std::to_string(par.a) + ":" +
                                      std::to_string(par.b) + ") p=" + std::to_string(p);
                    const auto golden = kronecker_family(base, kind, n, par);
                    const auto generic = mimo(stable_lift(kronecker_stable(base, kind, n, par))).rep;
                    c.expect(is_iso_reps(generic, golden), name + " generic mimo");
                    c.expect(is_mono(golden) && is_indecomposable(golden), name + " mono indecomposable");
                    c.expect(!injective_rep_recognize(golden).has_value(), name + " not injective");
                    for (const auto& other : seen)
                        if (other.modules() == golden.modules())
                            c.expect(!iso_indecomposable(other, golden), name + " distinct");
                    seen.push_back(golden);
                    ++members;
                }
            }
        const auto lam = SerialModule::from_names(base, {"M2"});
        const auto zero = SerialModule::zero(base);
        c.expect(injective_rep_recognize(f_shriek(base, q, {lam, zero})).has_value(), "f_!(L(1)) injective");
        c.expect(injective_rep_recognize(f_shriek(base, q, {zero, lam})).has_value(), "f_!(L(2)) injective");
    }
    return c.outcome(std::to_string(members) + " family members over p = 2, 3 with n <= 3");
}

// Cyclic modules C/pi^a as functions on C: the generator a -> b projects
// when a >= b and multiplies by pi^(b-a) otherwise.
std::uint32_t generator_at(const ChainRing& r, int a, int b, std::uint32_t x) {
    x = r.truncate(x, a);
    if (a >= b) return r.truncate(x, b);
    return r.truncate(r.shift_up(x, b - a), b);
}

Outcome p1(const Options&) {
    Checker c;
    std::size_t triples = 0;
    for (auto arith : {Arith::integer, Arith::polynomial})
        for (std::uint32_t p : {2u, 3u})
            for (int n = 1; n <= 4; ++n) {
                const auto b = SerialBase::chain(arith, p, n);
                const auto& r = *b->coeff_ring();
                for (int x = 1; x <= n; ++x)
                    for (int y = 1; y <= n; ++y)
                        for (int z = 1; z <= n; ++z) {
                            const auto lx = static_cast<std::size_t>(x - 1), ly = static_cast<std::size_t>(y - 1),
                                       lz = static_cast<std::size_t>(z - 1);
                            const int d = b->comp_exponent(lx, ly, lz);
                            bool agree = true;
                            for (std::uint32_t e = 0; e < r.p_power(x); ++e) {
                                const auto lhs = generator_at(r, y, z, generator_at(r, x, y, e));
                                const auto rhs = d == SerialBase::no_composite
                                                     ? 0
                                                     : r.truncate(r.shift_up(generator_at(r, x, z, e), d), z);
                                agree = agree && lhs == rhs;
                            }
                            c.expect(agree, b->name() + " delta(" + std::to_string(x) + "," + std::to_string(y) + "," +
                                                std::to_string(z) + ")");
                            ++triples;
                        }
            }
    // The stable category of a Loewy length 3 chain: objects M1, M2, every
    // stable hom space one-dimensional, mixed composites zero.
    for (auto arith : {Arith::integer, Arith::polynomial})
        for (std::uint32_t p : {2u, 3u}) {
            const auto parent = SerialBase::chain(arith, p, 3);
            const auto s = SerialBase::stable_of(parent);
            const auto& r = *parent->coeff_ring();
            const auto tag = s->name();
            c.expect(s->label_count() == 2 && s->label(0).name == "M1" && s->label(1).name == "M2", tag + " labels");
            if (s->label_count() != 2) continue;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    c.expect(s->hom_length(i, j) == 1, tag + " dim");
                    // Composites through M3 in the parent cut Hom(Mi, Mj) down to order p.
                    std::set<std::uint32_t> through;
                    for (std::uint32_t f = 0; f < r.p_power(parent->hom_length(i, 2)); ++f)
                        for (std::uint32_t g = 0; g < r.p_power(parent->hom_length(2, j)); ++g)
                            through.insert(parent->compose(i, 2, j, g, f));
                    c.expect(r.p_power(parent->hom_length(i, j)) == p * through.size(), tag + " quotient order");
                }
            c.expect(s->compose(0, 1, 0, 1, 1) == 0 && s->compose(1, 0, 1, 1, 1) == 0, tag + " f21 f12 = 0 = f12 f21");
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    c.expect(s->compose(i, i, j, 1, 1) == 1 && s->compose(i, j, j, 1, 1) == 1, tag + " identities");
        }
    return c.outcome(std::to_string(triples) + " composition triples against the function model; stable n = 3 presentation");
}

std::vector<BasePtr> p2_bases() { return {integer(2, 2), poly(2, 3), integer(3, 2), SerialBase::rad2nak(2, 2)}; }
using Named = std::pair<std::string, QuiverPtr>;

std::vector<Named> named(std::initializer_list<const char*> names) {
    std::vector<Named> out;
    for (const char* n : names) out.emplace_back(n, quiver(n));
    return out;
}

Outcome p2(const Options& o) {
    constexpr int per_config = 500;
    std::mt19937_64 rng(o.seed);
    Checker c;
    std::size_t nonzero = 0, configs = 0;
    for (const auto& b : p2_bases())
        for (const auto& [qname, q] : named({"An-linear:3", "kronecker", "A4-zigzag", "D4"})) {
            ++configs;
            const auto tag = b->name() + "/" + qname;
            for (int t = 0; t < per_config; ++t) {
                const auto r = random_rep(b, q, rng, 2);
                bool l1_zero = true;
                for (const auto& k : l1_kopf(r)) l1_zero = l1_zero && k.module.empty();
                c.expect(is_mono(r) == l1_zero, tag + " mono iff L1Kopf = 0");
                bool kopf_zero = true;
                for (const auto& k : kopf(r)) kopf_zero = kopf_zero && k.module.empty();
                if (!r.is_zero()) ++nonzero;
                c.expect(kopf_zero == r.is_zero(), tag + " Kopf(R) = 0 iff R = 0");

                std::vector<SerialModule> m;
                for (std::size_t v = 0; v < q->vertex_count(); ++v) m.push_back(random_module(b, rng, 2));
                const auto f = f_shriek(b, q, m);
                c.expect(is_mono(f), tag + " f_! mono");
                const auto kf = kopf(f);
                for (std::size_t v = 0; v < m.size(); ++v) {
                    c.expect(kf[v].module == m[v], tag + " Kopf f_! = id");
                    const auto in = in_map(f, v).map;
                    c.expect(solve_extend(in, SerialMorphism::identity(in.source())).has_value(), tag + " split in-map");
                }
            }
        }
    return c.outcome(std::to_string(per_config) + " random representations in each of " + std::to_string(configs) +
                     " configurations (" + std::to_string(nonzero) + " nonzero)");
}

std::vector<BasePtr> p3_bases() { return {poly(2, 2), integer(2, 2), poly(2, 3), integer(2, 3), SerialBase::rad2nak(2, 2)}; }
std::vector<Named> small_quivers() { return named({"An-linear:2", "An-linear:3", "kronecker", "An:RL"}); }

Outcome p3(const Options& o) {
    constexpr int per_config = 10;  // 5 bases x 4 quivers x 10 = 200
    constexpr double exhaust_bits = 16;
    constexpr double approx_bits = 14;
    std::mt19937_64 rng(o.seed + 3);
    Checker c;
    std::size_t reps = 0, lifted = 0, exhausted = 0, sampled = 0;
    for (const auto& b : p3_bases())
        for (const auto& [qname, q] : small_quivers())
            for (int t = 0; t < per_config; ++t, ++reps) {
                const auto tag = b->name() + "/" + qname;
                const auto r = random_rep(b, q, rng, 2);
                const auto m = mimo(r);
                c.expect(is_mono(m.rep), tag + " mono");
                c.expect(m.projection.is_natural(), tag + " natural projection");
                const double bits_per_unit = std::log2(static_cast<double>(b->p()));

                // Approximation: every map from a mono object factors through p.
                for (int u = 0; u < 3; ++u) {
                    const auto n = mimo(random_rep(b, q, rng, 2)).rep;
                    const auto h = hom_reps(n, r);
                    const auto into = hom_reps(n, m.rep);
                    if ((h.log_size() + into.log_size()) * bits_per_unit > approx_bits) continue;
                    h.for_each([&](const RepMorphism& g) {
                        bool found = false;
                        into.for_each([&](const RepMorphism& x) {
                            found = compose(m.projection, x).components() == g.components();
                            return !found;
                        });
                        c.expect(found, tag + " approximation");
                        ++lifted;
                        return true;
                    });
                }

                // Minimality: phi with p phi = p is invertible.
                const auto end = hom_reps(m.rep, m.rep);
                if (end.log_size() * bits_per_unit <= exhaust_bits) {
                    ++exhausted;
                    end.for_each([&](const RepMorphism& phi) {
                        if (compose(m.projection, phi).components() == m.projection.components())
                            c.expect(is_iso(phi), tag + " minimality");
                        return true;
                    });
                } else {
                    ++sampled;
                    for (int u = 0; u < 256; ++u) {
                        const auto phi = end.random(rng);
                        if (compose(m.projection, phi).components() == m.projection.components())
                            c.expect(is_iso(phi), tag + " minimality (sampled)");
                    }
                }

                const auto stripped = mimo(strip_injective_summands(r).rep).rep;
                for (const auto& piece : decompose(stripped))
                    c.expect(!injective_rep_recognize(piece.rep).has_value(), tag + " no f_!(J) summand");

                // A second lift e'_i = e_i + w o in_i.
                const auto d = minimal_envelope_data(r);
                auto d2 = d;
                for (std::size_t v = 0; v < d.maps.size(); ++v) {
                    const auto in = in_map(r, v).map;
                    const auto w = hom_space(in.target(), d.modules[v]).random(rng);
                    d2.maps[v] = add(d.maps[v], compose(w, in));
                }
                c.expect(is_iso_reps(mo(r, d).rep, mo(r, d2).rep), tag + " lift independence");
            }
    return c.outcome(std::to_string(reps) + " random representations; " + std::to_string(lifted) +
                     " maps lifted exhaustively; minimality exhausted on " + std::to_string(exhausted) +
                     ", sampled on " + std::to_string(sampled));
}

Outcome p4(const Options& o) {
    constexpr int pairs_per_base = 200;
    std::mt19937_64 rng(o.seed + 4);
    Checker c;
    std::size_t premise = 0, unrelated = 0;
    const auto quivers = small_quivers();
    const std::vector<BasePtr> bases{integer(2, 2), poly(2, 2), integer(2, 3), poly(2, 3)};
    for (const auto& b : bases) {
        const auto sb = SerialBase::stable_of(b);
        for (int t = 0; t < pairs_per_base; ++t) {
            const auto& [qname, q] = quivers[static_cast<std::size_t>(t) % quivers.size()];
            const auto tag = b->name() + "/" + qname;
            const auto s = random_rep(sb, q, rng, 2);
            // Denseness.
            const auto r1 = mimo_from_stable(s);
            c.expect(is_iso_reps(stable_reduce(r1), s), tag + " denseness");

            // Two mono objects over the same stable object.
            std::vector<SerialModule> j1, j2;
            for (std::size_t v = 0; v < q->vertex_count(); ++v) {
                j1.push_back(SerialModule(b, std::vector<std::size_t>(rng() % 2, b->label_count() - 1)));
                j2.push_back(SerialModule(b, std::vector<std::size_t>(rng() % 2, b->label_count() - 1)));
            }
            const auto x = direct_sum(r1, f_shriek(b, q, j1));
            const auto y = direct_sum(mimo(stable_lift(s)).rep, f_shriek(b, q, j2));
            const bool same = is_iso_reps(stable_reduce(x), stable_reduce(y));
            c.expect(same, tag + " stable images agree");
            if (same) {
                ++premise;
                c.expect(is_iso_reps(mimo(strip_injective_summands(x).rep).rep, mimo(strip_injective_summands(y).rep).rep),
                         tag + " iso reflection");
            }
            // An unrelated pair: the implication must hold whenever its premise does.
            const auto z = mimo(random_rep(b, q, rng, 2)).rep;
            if (is_iso_reps(stable_reduce(x), stable_reduce(z))) {
                ++unrelated;
                c.expect(is_iso_reps(mimo(strip_injective_summands(x).rep).rep, mimo(strip_injective_summands(z).rep).rep),
                         tag + " iso reflection (random pair)");
            }
        }
    }
    return c.outcome(std::to_string(pairs_per_base) + " pairs per base over " + std::to_string(bases.size()) +
                     " bases; iso reflection exercised on " + std::to_string(premise + unrelated) + " pairs (" +
                     std::to_string(unrelated) + " random)");
}

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("MONOCAT_DATA_DIR"); env && *env) return env;
    return MONOCAT_DATA_DIR;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"A1", "rad2 count on linear A3 over F_2[x]/x^2, cross-checked by bounded enumeration", 300, a1},
        {"A2", "shapes of the non-injectives on linear A4 over F_2[x]/x^2", 300, a2},
        {"A3", "zigzag A4 over F_2[x]/x^2 against the golden list", 600, a3},
        {"A4", "23-vector table for linear A3 over F_2[x]/x^3, hull + 1", 3600, a4},
        {"A4-smoke", "entries <= 3 of the 23-vector table, caps 333", 300, a4_smoke},
        {"A5", "transfer between F_2[x]/x^3 and Z/8 on the A3 and A2 classes", 600, a5},
        {"A6", "A2 over Z/8 with caps 34", 600, a6},
        {"A7", "Kronecker families over F_p[x]/x^2, n <= 3, p in {2,3}", 600, a7},
        {"P1", "composition exponent against the function model; stable n = 3", 600, p1},
        {"P2", "functor laws on random representations", 600, p2},
        {"P3", "Mimo contract on random representations", 600, p3},
        {"P4", "denseness and iso reflection on sampled pairs", 600, p4},
        {"rad2-count", "m*|Q0| + t*|Phi+| count for --quiver and --base", 300, rad2_count},
    };
    return all;
}

const Criterion* find(const std::string& name) {
    for (const auto& c : criteria())
        if (c.name == name) return &c;
    return nullptr;
}

Result run(const Criterion& c, const Options& opt) {
    Result r;
    r.name = c.name;
    r.limit_seconds = c.limit_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto o = c.run(opt);
        r.pass = o.pass;
        r.detail = o.detail;
    } catch (const BudgetExceeded& e) {
        r.budget_exceeded = true;
        r.detail = std::string("budget exceeded: ") + e.what();
    } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.pass && r.seconds > r.limit_seconds) {
        r.pass = false;
        r.detail += "; over the time limit";
    }
    return r;
}

std::string format(const Result& r) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %-10s %8.1fs/%.0fs  ", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                  r.limit_seconds);
    return head + r.detail;
}

}  // namespace monocat::acceptance
