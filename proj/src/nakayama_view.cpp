#include "monocat/nakayama_view.hpp"

#include "monocat/error.hpp"
#include "monocat/fp_linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace monocat::linear {

namespace {

using value_type = ChainRing::value_type;

RingPtr field_of(const SerialBase& b) { return ChainRing::make(Arith::integer, b.p(), 1); }

RingMatrix empty_cols(const RingPtr& f, std::size_t rows) { return RingMatrix(f, rows, 0); }

RingMatrix columns(const RingMatrix& a, const std::vector<std::size_t>& idx) {
    RingMatrix out(a.ring(), a.rows(), idx.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < idx.size(); ++t) out.at(i, t) = a.at(i, idx[t]);
    return out;
}

RingMatrix top_rows(const RingMatrix& a, std::size_t k) {
    RingMatrix out(a.ring(), k, a.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    return out;
}

std::vector<std::size_t> coords_in(const View& v, int c) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.dim; ++i)
        if (v.component[i] == c) out.push_back(i);
    return out;
}

struct Top {
    int component;
    int length;
    std::vector<value_type> vec;
};

// Tops of a graded Jordan basis of S/U, where S and U are T-stable graded
// subspaces of the ambient space given per component by spanning columns.
// For each length l (longest first) and component c the tops are a
// complement of  U_c + ker T^{l-1} + T(ker T^{l+1})  inside  ker T^l,
// all kernels taken modulo U.
std::vector<Top> jordan_tops(const RingMatrix& t, int m, int max_len, const std::vector<RingMatrix>& s,
                             const std::vector<RingMatrix>& u) {
    const auto& f = t.ring();
    const std::size_t d = t.rows();
    std::vector<RingMatrix> tpow{RingMatrix::identity(f, d)};
    for (int k = 1; k <= max_len + 1; ++k) tpow.push_back(t * tpow.back());

    auto ker_mod_u = [&](int l, int c) {
        const auto& sc = s[static_cast<std::size_t>(c)];
        if (sc.cols() == 0) return empty_cols(f, d);
        if (l > max_len) return sc;
        const auto& uc = u[static_cast<std::size_t>(((c + l) % m + m) % m)];
        auto k = fp::kernel(fp::hconcat(tpow[static_cast<std::size_t>(l)] * sc, uc));
        return sc * top_rows(k, sc.cols());
    };

    std::vector<Top> tops;
    for (int l = max_len; l >= 1; --l)
        for (int c = 0; c < m; ++c) {
            auto cand = ker_mod_u(l, c);
            if (cand.cols() == 0) continue;
            auto known = fp::hconcat(u[static_cast<std::size_t>(c)], ker_mod_u(l - 1, c));
            known = fp::hconcat(known, tpow[1] * ker_mod_u(l + 1, ((c - 1) % m + m) % m));
            auto e = fp::rref(fp::hconcat(known, cand));
            for (auto p : e.pivots) {
                if (p < known.cols()) continue;
                tops.push_back({c, l, cand.column(p - known.cols())});
            }
        }
    return tops;
}

// Coefficient of the hom a -> b whose top image restricted to the part
// starting at coordinate `off` of the ambient vector is given.
value_type coeff_from_positions(const SerialBase& base, std::size_t a, std::size_t b, const std::vector<value_type>& v,
                                std::size_t off) {
    const int len_b = base.label(b).length;
    const int hl = base.hom_length(a, b);
    const int k0 = hl > 0 ? base.image_position(a, b) : len_b;
    std::vector<int> digits(static_cast<std::size_t>(base.coeff_ring()->n()), 0);
    for (int pos = 0; pos < len_b; ++pos) {
        const auto x = v[off + static_cast<std::size_t>(pos)];
        if (x == 0) continue;
        if (pos < k0 || pos - k0 >= hl) throw std::logic_error("linear view: vector is not the image of a module map");
        digits[static_cast<std::size_t>(pos - k0)] = static_cast<int>(x);
    }
    return base.coeff_ring()->from_digits(digits);
}

SubModule submodule_from_tops(const SerialModule& ambient, const View& view, const std::vector<Top>& tops) {
    const auto& base = ambient.base();
    std::vector<std::size_t> parts;
    for (const auto& t : tops) {
        auto l = base->label_for(t.component, t.length);
        if (!l) throw std::logic_error("linear view: no label with the computed top and length");
        parts.push_back(*l);
    }
    RingMatrix m(base->coeff_ring(), ambient.size(), tops.size());
    for (std::size_t t = 0; t < tops.size(); ++t)
        for (std::size_t i = 0; i < ambient.size(); ++i)
            m.at(i, t) = coeff_from_positions(*base, parts[t], ambient.parts()[i], tops[t].vec, view.offset[i]);
    auto inc = SerialMorphism::from_unsorted(base, parts, ambient.parts(), m);
    return {inc.source(), inc};
}

}  // namespace

bool supported(const SerialBase& base) {
    if (base.kind() == BaseKind::rad2nak) return true;
    if (base.kind() != BaseKind::chain) return false;
    return base.coeff_ring()->arith() == Arith::polynomial || base.coeff_ring()->n() == 1;
}

View view_of(const SerialModule& m) {
    const auto& base = *m.base();
    if (!supported(base)) throw UnsupportedError("linear view needs an F_p-linear base, got " + base.name());
    View v;
    v.field = field_of(base);
    const int comps = base.components();
    for (auto p : m.parts()) {
        const auto& l = base.label(p);
        v.offset.push_back(v.dim);
        for (int pos = 0; pos < l.length; ++pos) v.component.push_back((l.top + pos) % comps);
        v.dim += static_cast<std::size_t>(l.length);
    }
    return v;
}

RingMatrix matrix_of(const SerialMorphism& f) {
    const auto& base = *f.base();
    const auto vs = view_of(f.source());
    const auto vt = view_of(f.target());
    RingMatrix out(vs.field, vt.dim, vs.dim);
    const auto& ring = *base.coeff_ring();
    for (std::size_t i = 0; i < f.target().size(); ++i)
        for (std::size_t j = 0; j < f.source().size(); ++j) {
            const auto c = f.at(i, j);
            if (c == 0) continue;
            const auto a = f.source().parts()[j], b = f.target().parts()[i];
            const int k0 = base.image_position(a, b);
            const int la = base.label(a).length, lb = base.label(b).length;
            const auto digits = ring.digits(c);
            for (int k = 0; k < la; ++k)
                for (std::size_t d = 0; d < digits.size(); ++d) {
                    const int pos = k + k0 + static_cast<int>(d);
                    if (digits[d] == 0 || pos >= lb) continue;
                    auto& x = out.at(vt.offset[i] + static_cast<std::size_t>(pos), vs.offset[j] + static_cast<std::size_t>(k));
                    x = vs.field->add(x, static_cast<value_type>(digits[d]));
                }
        }
    return out;
}

RingMatrix nilpotent_of(const SerialModule& m) {
    const auto v = view_of(m);
    RingMatrix t(v.field, v.dim, v.dim);
    for (std::size_t j = 0; j < m.size(); ++j) {
        const int len = m.base()->label(m.parts()[j]).length;
        for (int pos = 0; pos + 1 < len; ++pos)
            t.at(v.offset[j] + static_cast<std::size_t>(pos) + 1, v.offset[j] + static_cast<std::size_t>(pos)) = 1;
    }
    return t;
}

SubModule kernel(const SerialMorphism& f) {
    const auto& base = *f.base();
    const auto vs = view_of(f.source());
    const auto fm = matrix_of(f);
    const int m = base.components();
    std::vector<RingMatrix> s, u;
    for (int c = 0; c < m; ++c) {
        const auto idx = coords_in(vs, c);
        const auto k = fp::kernel(columns(fm, idx));
        RingMatrix emb(vs.field, vs.dim, k.cols());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t t = 0; t < k.cols(); ++t) emb.at(idx[r], t) = k.at(r, t);
        s.push_back(std::move(emb));
        u.push_back(empty_cols(vs.field, vs.dim));
    }
    auto tops = jordan_tops(nilpotent_of(f.source()), m, base.max_length(), s, u);
    return submodule_from_tops(f.source(), vs, tops);
}

SubModule image(const SerialMorphism& f) {
    const auto& base = *f.base();
    const auto vs = view_of(f.source());
    const auto vt = view_of(f.target());
    const auto fm = matrix_of(f);
    const int m = base.components();
    std::vector<RingMatrix> s, u;
    for (int c = 0; c < m; ++c) {
        s.push_back(columns(fm, coords_in(vs, c)));
        u.push_back(empty_cols(vt.field, vt.dim));
    }
    auto tops = jordan_tops(nilpotent_of(f.target()), m, base.max_length(), s, u);
    return submodule_from_tops(f.target(), vt, tops);
}

QuotientModule cokernel(const SerialMorphism& f) {
    const auto& base = f.base();
    const auto vs = view_of(f.source());
    const auto vt = view_of(f.target());
    const auto fm = matrix_of(f);
    const int m = base->components();
    std::vector<RingMatrix> s, u;
    RingMatrix all_u = empty_cols(vt.field, vt.dim);
    for (int c = 0; c < m; ++c) {
        const auto idx = coords_in(vt, c);
        RingMatrix sc(vt.field, vt.dim, idx.size());
        for (std::size_t t = 0; t < idx.size(); ++t) sc.at(idx[t], t) = 1;
        s.push_back(std::move(sc));
        u.push_back(columns(fm, coords_in(vs, c)));
        all_u = fp::hconcat(all_u, u.back());
    }
    const auto tn = nilpotent_of(f.target());
    auto tops = jordan_tops(tn, m, base->max_length(), s, u);

    std::vector<std::size_t> parts;
    std::vector<std::size_t> first_col;  // column of T^0 top_r in the Jordan basis
    RingMatrix jb = empty_cols(vt.field, vt.dim);
    for (const auto& t : tops) {
        parts.push_back(*base->label_for(t.component, t.length));
        first_col.push_back(jb.cols());
        RingMatrix orbit(vt.field, vt.dim, static_cast<std::size_t>(t.length));
        auto v = t.vec;
        for (int k = 0; k < t.length; ++k) {
            for (std::size_t i = 0; i < vt.dim; ++i) orbit.at(i, static_cast<std::size_t>(k)) = v[i];
            v = tn.apply(v);
        }
        jb = fp::hconcat(jb, orbit);
    }
    const std::size_t jb_cols = jb.cols();
    jb = fp::hconcat(jb, all_u);

    RingMatrix rhs(vt.field, vt.dim, f.target().size());
    for (std::size_t j = 0; j < f.target().size(); ++j) rhs.at(vt.offset[j], j) = 1;
    auto x = fp::solve(jb, rhs);
    if (!x) throw std::logic_error("linear view: Jordan basis does not span the quotient");

    RingMatrix proj(base->coeff_ring(), parts.size(), f.target().size());
    for (std::size_t r = 0; r < parts.size(); ++r)
        for (std::size_t j = 0; j < f.target().size(); ++j) {
            std::vector<value_type> alpha(static_cast<std::size_t>(base->label(parts[r]).length));
            for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] = x->at(first_col[r] + k, j);
            proj.at(r, j) = coeff_from_positions(*base, f.target().parts()[j], parts[r], alpha, 0);
        }
    (void)jb_cols;
    auto p = SerialMorphism::from_unsorted(base, f.target().parts(), parts, proj);
    return {p.target(), p};
}

SubModule submodule(const SerialModule& m, const RingMatrix& basis) {
    const auto v = view_of(m);
    const int comps = m.base()->components();
    std::vector<RingMatrix> s, u;
    for (int c = 0; c < comps; ++c) {
        RingMatrix sc = basis;
        for (std::size_t i = 0; i < v.dim; ++i)
            if (v.component[i] != c)
                for (std::size_t j = 0; j < sc.cols(); ++j) sc.at(i, j) = 0;
        s.push_back(std::move(sc));
        u.push_back(empty_cols(v.field, v.dim));
    }
    auto tops = jordan_tops(nilpotent_of(m), comps, m.base()->max_length(), s, u);
    return submodule_from_tops(m, v, tops);
}

RingMatrix canonical_basis(const RingMatrix& cols) {
    auto e = fp::rref(cols.transpose());
    RingMatrix out(cols.ring(), cols.rows(), e.pivots.size());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t i = 0; i < cols.rows(); ++i) out.at(i, r) = e.reduced.at(r, i);
    return out;
}

std::vector<RingMatrix> invariant_subspaces(const SerialModule& m, std::size_t max_dim) {
    const auto v = view_of(m);
    const auto t = nilpotent_of(m);
    const auto& f = v.field;
    const std::uint32_t p = f->p();

    // Cyclic spans of homogeneous vectors, one per line through the origin.
    std::vector<RingMatrix> cyclic;
    for (int c = 0; c < m.base()->components(); ++c) {
        const auto idx = coords_in(v, c);
        std::uint64_t count = 1;
        for (std::size_t k = 0; k < idx.size(); ++k) count *= p;
        for (std::uint64_t code = 1; code < count; ++code) {
            std::vector<value_type> x(v.dim, 0);
            auto rest = code;
            value_type lead = 0;
            for (std::size_t k = 0; k < idx.size(); ++k) {
                x[idx[k]] = static_cast<value_type>(rest % p);
                rest /= p;
                if (x[idx[k]] != 0) lead = x[idx[k]];
            }
            if (lead != 1) continue;
            RingMatrix span(f, v.dim, 0);
            while (std::any_of(x.begin(), x.end(), [](value_type a) { return a != 0; })) {
                RingMatrix col(f, v.dim, 1);
                for (std::size_t i = 0; i < v.dim; ++i) col.at(i, 0) = x[i];
                span = fp::hconcat(span, col);
                x = t.apply(x);
            }
            cyclic.push_back(std::move(span));
        }
    }

    auto key_of = [](const RingMatrix& b) {
        std::vector<value_type> k{static_cast<value_type>(b.cols())};
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) k.push_back(b.at(i, j));
        return k;
    };

    std::vector<RingMatrix> found{RingMatrix(f, v.dim, 0)};
    std::map<std::vector<value_type>, std::size_t> seen{{key_of(found[0]), 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const auto cur = found[queue.front()];
        queue.pop_front();
        for (const auto& span : cyclic) {
            if (cur.cols() + 1 > max_dim) break;
            auto next = canonical_basis(fp::hconcat(cur, span));
            if (next.cols() == cur.cols() || next.cols() > max_dim) continue;
            auto [it, fresh] = seen.emplace(key_of(next), found.size());
            if (!fresh) continue;
            queue.push_back(found.size());
            found.push_back(std::move(next));
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const RingMatrix& a, const RingMatrix& b) { return a.cols() < b.cols(); });
    return found;
}

}  // namespace monocat::linear
