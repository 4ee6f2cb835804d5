#include "monocat/decompose.hpp"

#include "monocat/error.hpp"
#include "monocat/fp_linalg.hpp"
#include "monocat/homs.hpp"
#include "monocat/mimo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace monocat {

int nilpotency_bound(const Representation& r) {
    int n = 1;
    for (const auto& m : r.modules()) n = std::max(n, m.length());
    return n;
}

RepMorphism power(const RepMorphism& x, int k) {
    auto out = RepMorphism::identity(x.source());
    auto b = x;
    // Square and multiply; all factors commute.
    while (k > 0) {
        if (k & 1) out = compose(out, b);
        k >>= 1;
        if (k) b = compose(b, b);
    }
    return out;
}

namespace {

RepMorphism shift(const RepMorphism& x, ChainRing::value_type lambda) {
    if (lambda == 0) return x;
    const auto& ring = *x.source().base()->coeff_ring();
    return add(x, scale(RepMorphism::identity(x.source()), ring.neg(lambda)));
}

std::vector<ChainRing::value_type> residues(const std::vector<ChainRing::value_type>& coords, std::uint32_t p) {
    std::vector<ChainRing::value_type> out;
    for (auto c : coords) out.push_back(c % p);
    return out;
}

RingMatrix as_columns(const std::vector<std::vector<ChainRing::value_type>>& vs, std::size_t dim, std::uint32_t p) {
    RingMatrix m(ChainRing::make(Arith::integer, p, 1), dim, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = vs[j][i];
    return m;
}

// End(R) mod pi is F_p + N with N a nilpotent ideal: End(R) is local.
bool algebraic_certificate(const RepHomSpace& end, int bound) {
    const auto& ring = *end.source.base()->coeff_ring();
    const auto p = ring.p();
    const std::size_t d = end.rank();
    std::vector<RepMorphism> nil;
    std::vector<std::vector<ChainRing::value_type>> nil_coords;
    for (std::size_t k = 0; k < d; ++k) {
        const auto g = end.generator(k);
        bool found = false;
        for (std::uint32_t l = 0; l < p && !found; ++l) {
            auto n = shift(g, ring.from_int(l));
            if (power(n, bound).is_zero()) {
                nil_coords.push_back(residues(end.coordinates(n), p));
                nil.push_back(std::move(n));
                found = true;
            }
        }
        if (!found) return false;
    }
    const auto span = as_columns(nil_coords, d, p);
    auto basis_of = [&](const std::vector<std::vector<ChainRing::value_type>>& vs) {
        auto e = fp::rref(as_columns(vs, d, p));
        std::vector<std::vector<ChainRing::value_type>> out;
        for (auto c : e.pivots) out.push_back(vs[c]);
        return out;
    };
    // Ideal closure: n_i n_j stays in N.
    for (const auto& a : nil)
        for (const auto& b : nil)
            if (!fp::solve(span, residues(end.coordinates(compose(a, b)), p))) return false;
    // Nilpotency of N through the chain N, N^2, ...
    auto layer = basis_of(nil_coords);
    std::size_t last = layer.size() + 1;
    while (!layer.empty()) {
        if (layer.size() >= last) return false;
        last = layer.size();
        std::vector<std::vector<ChainRing::value_type>> next;
        for (const auto& v : layer) {
            const auto x = end.combination(v);
            for (const auto& n : nil) next.push_back(residues(end.coordinates(compose(x, n)), p));
        }
        layer = next.empty() ? next : basis_of(next);
    }
    return true;
}

struct Split {
    Representation a, b;
};

std::optional<Split> fitting_split(const Representation& r, const RepMorphism& x, int bound) {
    const auto y = power(x, bound);
    if (y.is_zero() || is_iso(y)) return std::nullopt;
    const auto& q = *r.quiver();
    std::vector<SubModule> ks, is;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        ks.push_back(kernel(y.component(v)));
        is.push_back(image(y.component(v)));
    }
    auto restrict_to = [&](const std::vector<SubModule>& sub) {
        std::vector<SerialModule> mods;
        std::vector<SerialMorphism> maps;
        for (const auto& s : sub) mods.push_back(s.module);
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            const auto& ar = q.arrow(a);
            auto h = solve(sub[ar.target].inclusion, compose(r.map(a), sub[ar.source].inclusion));
            if (!h) throw std::logic_error("fitting split: not a subrepresentation");
            maps.push_back(*h);
        }
        return Representation(r.base(), r.quiver(), mods, maps);
    };
    Split s{restrict_to(ks), restrict_to(is)};
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        auto lay = block_layout(r.base(), {ks[v].module, is[v].module});
        std::vector<std::vector<std::optional<SerialMorphism>>> row{{ks[v].inclusion, is[v].inclusion}};
        if (!is_iso(assemble(lay, block_layout(r.base(), {r.module(v)}), row)))
            throw std::logic_error("fitting split: kernel and image do not span");
    }
    return s;
}

enum class Verdict { indecomposable, split, unknown };

struct Analysis {
    Verdict verdict = Verdict::unknown;
    std::string kind;
    std::optional<Split> split;
};

// Residue representatives: coefficients in [0, p).
RepMorphism residue_element(const RepHomSpace& end, std::uint64_t index, std::uint32_t p) {
    std::vector<ChainRing::value_type> c(end.rank());
    for (auto& x : c) {
        x = static_cast<ChainRing::value_type>(index % p);
        index /= p;
    }
    return end.combination(c);
}

Analysis analyse(const Representation& r, const DecomposeOptions& opt) {
    Analysis out;
    if (r.is_zero()) {
        out.kind = "zero";
        return out;
    }
    const auto end = hom_reps(r, r);
    const int bound = nilpotency_bound(r);
    const auto& ring = *r.base()->coeff_ring();
    const auto p = ring.p();
    if (algebraic_certificate(end, bound)) {
        out.verdict = Verdict::indecomposable;
        out.kind = "algebraic";
        return out;
    }
    const bool can_split = r.base()->abelian();
    auto attempt = [&](const RepMorphism& x) {
        if (!can_split) {
            const auto y = power(x, bound);
            if (!y.is_zero() && !is_iso(y)) out.verdict = Verdict::split;
            return out.verdict == Verdict::split;
        }
        if (auto s = fitting_split(r, x, bound)) {
            out.verdict = Verdict::split;
            out.kind = "split";
            out.split = std::move(s);
            return true;
        }
        return false;
    };
    const auto lambdas = std::min<std::uint32_t>(p, 64);
    for (std::size_t k = 0; k < end.rank(); ++k)
        for (std::uint32_t l = 0; l < lambdas; ++l)
            if (attempt(shift(end.generator(k), ring.from_int(l)))) return out;
    for (std::size_t i = 0; i < end.rank(); ++i)
        for (std::size_t j = i + 1; j < end.rank(); ++j)
            if (attempt(add(end.generator(i), end.generator(j)))) return out;
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.random_tries; ++t)
        if (attempt(shift(end.random(rng), ring.from_int(static_cast<long long>(rng() % p))))) return out;
    // Exhaust End(R) mod pi: End is local iff every residue class is nilpotent or a unit.
    double log2 = 0;
    for (std::size_t k = 0; k < end.rank(); ++k) log2 += std::log2(static_cast<double>(p));
    if (log2 <= opt.exhaustive_log2_limit) {
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < end.rank(); ++k) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx)
            if (attempt(residue_element(end, idx, p))) return out;
        out.verdict = Verdict::indecomposable;
        out.kind = "exhaustive";
        return out;
    }
    return out;
}

void add_piece(std::vector<Piece>& pieces, Piece pc) {
    for (auto& q : pieces)
        if (iso_indecomposable(q.rep, pc.rep)) {
            q.multiplicity += pc.multiplicity;
            return;
        }
    pieces.push_back(std::move(pc));
}

void decompose_abelian(const Representation& r, int mult, const DecomposeOptions& opt, std::vector<Piece>& out) {
    if (r.is_zero()) return;
    auto a = analyse(r, opt);
    if (a.verdict == Verdict::indecomposable) {
        add_piece(out, {r, mult});
        return;
    }
    if (a.verdict == Verdict::unknown)
        throw BudgetExceeded("decompose: no certificate or split found for " + r.summary());
    decompose_abelian(a.split->a, mult, opt, out);
    decompose_abelian(a.split->b, mult, opt, out);
}

}  // namespace

std::vector<Piece> decompose(const Representation& r, const DecomposeOptions& opt) {
    std::vector<Piece> out;
    if (r.base()->abelian()) {
        decompose_abelian(r, 1, opt, out);
        return out;
    }
    // Stable: indecomposable non-injective Mimo pieces correspond to the
    // indecomposable stable summands.
    std::vector<Piece> lifted;
    decompose_abelian(mimo_from_stable(r), 1, opt, lifted);
    for (auto& pc : lifted) {
        if (injective_rep_recognize(pc.rep)) continue;
        out.push_back({stable_reduce(pc.rep), pc.multiplicity});
    }
    return out;
}

IndecomposabilityCertificate indecomposability(const Representation& r, const DecomposeOptions& opt) {
    auto a = analyse(r, opt);
    if (a.kind == "zero") return {false, "zero"};
    if (a.verdict == Verdict::indecomposable) return {true, a.kind};
    if (a.verdict == Verdict::split) return {false, "split"};
    if (!r.base()->abelian()) {
        const auto pieces = decompose(r, opt);
        const bool one = pieces.size() == 1 && pieces[0].multiplicity == 1;
        return {one, "mimo"};
    }
    throw BudgetExceeded("indecomposability: no certificate or split found for " + r.summary());
}

bool is_indecomposable(const Representation& r, const DecomposeOptions& opt) { return indecomposability(r, opt).indecomposable; }

bool iso_indecomposable(const Representation& a, const Representation& b) {
    if (!a.base()->same_as(*b.base()) || !a.quiver()->same_as(*b.quiver())) return false;
    if (a.modules() != b.modules()) return false;
    const auto ab = hom_reps(a, b), ba = hom_reps(b, a);
    for (std::size_t i = 0; i < ab.rank(); ++i) {
        const auto f = ab.generator(i);
        for (std::size_t j = 0; j < ba.rank(); ++j)
            if (is_iso(compose(ba.generator(j), f))) return true;
    }
    return false;
}

}  // namespace monocat
