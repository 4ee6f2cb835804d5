#include "monocat/homs.hpp"

#include "monocat/decompose.hpp"
#include "monocat/error.hpp"

#include <numeric>

namespace monocat {

namespace {

void add_into(std::vector<ChainRing::value_type>& out, std::size_t at, const std::vector<ChainRing::value_type>& v,
              const ChainRing& ring) {
    for (std::size_t k = 0; k < v.size(); ++k) out[at + k] = ring.add(out[at + k], v[k]);
}

}  // namespace

int RepHomSpace::log_size() const { return std::accumulate(orders.begin(), orders.end(), 0); }

std::vector<ChainRing::value_type> RepHomSpace::flatten(const RepMorphism& f) const {
    std::vector<ChainRing::value_type> v;
    for (std::size_t k = 0; k < vertex_spaces.size(); ++k) {
        auto part = vertex_spaces[k].flatten(f.component(k));
        v.insert(v.end(), part.begin(), part.end());
    }
    return v;
}

RepMorphism RepHomSpace::from_ambient(std::span<const ChainRing::value_type> v) const {
    std::vector<SerialMorphism> comps;
    for (std::size_t k = 0; k < vertex_spaces.size(); ++k)
        comps.push_back(vertex_spaces[k].unflatten(v.subspan(offset[k], vertex_spaces[k].orders.size())));
    return RepMorphism::unchecked(source, target, comps);
}

RepMorphism RepHomSpace::generator(std::size_t k) const {
    const auto col = basis.column(k);
    return from_ambient(col);
}

RepMorphism RepHomSpace::combination(std::span<const ChainRing::value_type> coeffs) const {
    const auto& ring = *source.base()->coeff_ring();
    std::vector<ChainRing::value_type> v(ambient_orders.size(), 0);
    for (std::size_t k = 0; k < orders.size(); ++k) {
        if (coeffs[k] == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = ring.add(v[i], ring.mul(coeffs[k], basis.at(i, k)));
    }
    return from_ambient(v);
}

RepMorphism RepHomSpace::random(std::mt19937_64& rng) const {
    const auto& ring = *source.base()->coeff_ring();
    std::vector<ChainRing::value_type> c(orders.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = static_cast<ChainRing::value_type>(rng() % ring.p_power(orders[k]));
    return combination(c);
}

void RepHomSpace::for_each(const std::function<bool(const RepMorphism&)>& visit) const {
    const auto& ring = *source.base()->coeff_ring();
    std::vector<ChainRing::value_type> c(orders.size(), 0);
    while (true) {
        if (!visit(combination(c))) return;
        std::size_t k = 0;
        for (; k < c.size(); ++k) {
            if (++c[k] < ring.p_power(orders[k])) break;
            c[k] = 0;
        }
        if (k == c.size()) return;
    }
}

std::vector<ChainRing::value_type> RepHomSpace::coordinates(const RepMorphism& f) const {
    auto x = CyclicSolver(orders, ambient_orders, basis).solve(flatten(f));
    if (!x) throw InputError("coordinates: morphism is not natural");
    return *x;
}

RepHomSpace hom_reps(const Representation& r, const Representation& s) {
    if (!r.base()->same_as(*s.base())) throw InputError("hom_reps: base mismatch");
    if (!r.quiver()->same_as(*s.quiver())) throw InputError("hom_reps: quiver mismatch");
    const auto& q = *r.quiver();
    const auto& ring = r.base()->coeff_ring();
    RepHomSpace h;
    h.source = r;
    h.target = s;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        h.offset.push_back(h.ambient_orders.size());
        h.vertex_spaces.push_back(hom_space(r.module(v), s.module(v)));
        const auto& o = h.vertex_spaces.back().orders;
        h.ambient_orders.insert(h.ambient_orders.end(), o.begin(), o.end());
    }
    std::vector<HomSpace> edge_spaces;
    std::vector<std::size_t> edge_offset;
    std::vector<int> edge_orders;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        edge_offset.push_back(edge_orders.size());
        edge_spaces.push_back(hom_space(r.module(q.arrow(a).source), s.module(q.arrow(a).target)));
        const auto& o = edge_spaces.back().orders;
        edge_orders.insert(edge_orders.end(), o.begin(), o.end());
    }

    // Column c is the naturality defect of the c-th unit vector.
    RingMatrix m(ring, edge_orders.size(), h.ambient_orders.size());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        const auto& hs = h.vertex_spaces[v];
        for (std::size_t c = 0; c < hs.orders.size(); ++c) {
            if (hs.orders[c] == 0) continue;
            std::vector<ChainRing::value_type> unit(hs.orders.size(), 0);
            unit[c] = ring->one();
            const auto phi = hs.unflatten(unit);
            std::vector<ChainRing::value_type> col(edge_orders.size(), 0);
            for (auto a : q.in_arrows(v))
                add_into(col, edge_offset[a], edge_spaces[a].flatten(compose(phi, r.map(a))), *ring);
            for (auto a : q.out_arrows(v))
                add_into(col, edge_offset[a], edge_spaces[a].flatten(negate(compose(s.map(a), phi))), *ring);
            for (std::size_t i = 0; i < col.size(); ++i) m.at(i, h.offset[v] + c) = col[i];
        }
    }
    auto kb = cyclic_kernel(h.ambient_orders, edge_orders, m);
    h.orders = kb.lengths;
    h.basis = kb.basis;
    return h;
}

bool is_iso_reps(const Representation& r, const Representation& s, std::uint64_t seed) {
    if (!r.base()->same_as(*s.base())) throw InputError("is_iso_reps: base mismatch");
    if (!r.quiver()->same_as(*s.quiver())) throw InputError("is_iso_reps: quiver mismatch");
    if (r.modules() != s.modules()) return false;
    if (r.is_zero()) return true;
    const auto h = hom_reps(r, s);
    for (std::size_t k = 0; k < h.rank(); ++k)
        if (is_iso(h.generator(k))) return true;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 16; ++t)
        if (is_iso(h.random(rng))) return true;
    // No witness found by sampling; compare Krull-Schmidt decompositions.
    const auto a = decompose(r), b = decompose(s);
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& pa : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j) {
            if (used[j] || b[j].multiplicity != pa.multiplicity) continue;
            if (iso_indecomposable(pa.rep, b[j].rep)) found = used[j] = true;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace monocat
