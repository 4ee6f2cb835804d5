#include "monocat/serial_module.hpp"

#include "monocat/error.hpp"
#include "monocat/nakayama_view.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monocat {

// ---------------------------------------------------------------- modules

std::vector<std::size_t> SerialModule::normal_permutation(const SerialBase& base, const std::vector<std::size_t>& parts) {
    std::vector<std::size_t> perm(parts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        const int lx = base.label(parts[x]).length, ly = base.label(parts[y]).length;
        if (lx != ly) return lx > ly;
        return parts[x] < parts[y];
    });
    return perm;
}

SerialModule::SerialModule(BasePtr base, std::vector<std::size_t> parts) : base_(std::move(base)) {
    if (!base_) throw InputError("module without a base");
    for (auto p : parts)
        if (p >= base_->label_count()) throw InputError("module part label out of range");
    const auto perm = normal_permutation(*base_, parts);
    parts_.reserve(parts.size());
    for (auto k : perm) parts_.push_back(parts[k]);
}

SerialModule SerialModule::from_names(BasePtr base, const std::vector<std::string>& names) {
    std::vector<std::size_t> parts;
    for (const auto& n : names) {
        auto l = base->find_label(n);
        if (!l) throw InputError("unknown label '" + n + "' for base " + base->name());
        parts.push_back(*l);
    }
    return SerialModule(std::move(base), std::move(parts));
}

int SerialModule::length() const {
    int s = 0;
    for (auto p : parts_) s += base_->label(p).length;
    return s;
}

std::vector<int> SerialModule::partition() const {
    std::vector<int> out;
    for (auto p : parts_) out.push_back(base_->label(p).length);
    return out;
}

std::vector<std::string> SerialModule::names() const {
    std::vector<std::string> out;
    for (auto p : parts_) out.push_back(base_->label(p).name);
    return out;
}

std::string SerialModule::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "+" : "") << base_->label(parts_[i]).name;
    return os.str();
}

bool operator==(const SerialModule& a, const SerialModule& b) {
    if (a.parts_ != b.parts_) return false;
    if (a.base_ == b.base_) return true;
    return a.base_ && b.base_ && a.base_->same_as(*b.base_);
}

SerialModule direct_sum(const SerialModule& a, const SerialModule& b) {
    auto parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return SerialModule(a.base(), std::move(parts));
}

// -------------------------------------------------------------- morphisms

SerialMorphism::SerialMorphism(SerialModule source, SerialModule target, RingMatrix entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (!source_.base()->same_as(*target_.base())) throw InputError("morphism between modules over different bases");
    if (entries_.rows() != target_.size() || entries_.cols() != source_.size())
        throw InputError("morphism matrix shape does not match its modules");
    const auto& b = *source_.base();
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (std::size_t j = 0; j < entries_.cols(); ++j)
            entries_.at(i, j) = b.reduce(source_.parts()[j], target_.parts()[i], entries_.at(i, j));
}

SerialMorphism SerialMorphism::zero(const SerialModule& source, const SerialModule& target) {
    return SerialMorphism(source, target, RingMatrix(source.base()->coeff_ring(), target.size(), source.size()));
}

SerialMorphism SerialMorphism::identity(const SerialModule& m) {
    return SerialMorphism(m, m, RingMatrix::identity(m.base()->coeff_ring(), m.size()));
}

SerialMorphism SerialMorphism::from_unsorted(const BasePtr& base, const std::vector<std::size_t>& src_parts,
                                             const std::vector<std::size_t>& tgt_parts, const RingMatrix& entries) {
    if (entries.rows() != tgt_parts.size() || entries.cols() != src_parts.size())
        throw InputError("from_unsorted: shape mismatch");
    const auto ps = SerialModule::normal_permutation(*base, src_parts);
    const auto pt = SerialModule::normal_permutation(*base, tgt_parts);
    RingMatrix m(base->coeff_ring(), tgt_parts.size(), src_parts.size());
    for (std::size_t i = 0; i < pt.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) m.at(i, j) = entries.at(pt[i], ps[j]);
    return SerialMorphism(SerialModule(base, src_parts), SerialModule(base, tgt_parts), std::move(m));
}

bool SerialMorphism::is_zero() const {
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (auto x : entries_.row(i))
            if (x != 0) return false;
    return true;
}

bool operator==(const SerialMorphism& a, const SerialMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.entries_ == b.entries_;
}

SerialMorphism compose(const SerialMorphism& g, const SerialMorphism& f) {
    if (!(f.target() == g.source())) throw InputError("compose: target of f is not the source of g");
    const auto& b = *f.base();
    const auto& ring = *b.coeff_ring();
    const auto& a_parts = f.source().parts();
    const auto& b_parts = f.target().parts();
    const auto& c_parts = g.target().parts();
    RingMatrix out(b.coeff_ring(), c_parts.size(), a_parts.size());
    for (std::size_t i = 0; i < c_parts.size(); ++i)
        for (std::size_t j = 0; j < b_parts.size(); ++j) {
            const auto gij = g.at(i, j);
            if (gij == 0) continue;
            for (std::size_t k = 0; k < a_parts.size(); ++k) {
                const auto fjk = f.at(j, k);
                if (fjk == 0) continue;
                out.at(i, k) = ring.add(out.at(i, k), b.compose(a_parts[k], b_parts[j], c_parts[i], gij, fjk));
            }
        }
    return SerialMorphism(f.source(), g.target(), std::move(out));
}

SerialMorphism add(const SerialMorphism& a, const SerialMorphism& b) {
    if (!(a.source() == b.source()) || !(a.target() == b.target())) throw InputError("add: shape mismatch");
    const auto& ring = *a.base()->coeff_ring();
    RingMatrix m = a.entries();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = ring.add(m.at(i, j), b.at(i, j));
    return SerialMorphism(a.source(), a.target(), std::move(m));
}

SerialMorphism negate(const SerialMorphism& a) {
    const auto& ring = *a.base()->coeff_ring();
    RingMatrix m = a.entries();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& x : m.row(i)) x = ring.neg(x);
    return SerialMorphism(a.source(), a.target(), std::move(m));
}

SerialMorphism scale(const SerialMorphism& a, ChainRing::value_type c) {
    const auto& ring = *a.base()->coeff_ring();
    RingMatrix m = a.entries();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (auto& x : m.row(i)) x = ring.mul(c, x);
    return SerialMorphism(a.source(), a.target(), std::move(m));
}

SerialMorphism direct_sum(const SerialMorphism& f, const SerialMorphism& g) {
    const auto& base = f.base();
    auto sp = f.source().parts(), tp = f.target().parts();
    sp.insert(sp.end(), g.source().parts().begin(), g.source().parts().end());
    tp.insert(tp.end(), g.target().parts().begin(), g.target().parts().end());
    RingMatrix m(base->coeff_ring(), tp.size(), sp.size());
    for (std::size_t i = 0; i < f.target().size(); ++i)
        for (std::size_t j = 0; j < f.source().size(); ++j) m.at(i, j) = f.at(i, j);
    for (std::size_t i = 0; i < g.target().size(); ++i)
        for (std::size_t j = 0; j < g.source().size(); ++j)
            m.at(f.target().size() + i, f.source().size() + j) = g.at(i, j);
    return SerialMorphism::from_unsorted(base, sp, tp, m);
}

BlockLayout block_layout(const BasePtr& base, const std::vector<SerialModule>& blocks) {
    std::vector<std::size_t> parts;
    std::vector<std::pair<std::size_t, std::size_t>> concat_origin;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t k = 0; k < blocks[b].size(); ++k) {
            parts.push_back(blocks[b].parts()[k]);
            concat_origin.push_back({b, k});
        }
    const auto perm = SerialModule::normal_permutation(*base, parts);
    BlockLayout l;
    l.total = SerialModule(base, parts);
    l.position.resize(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) l.position[b].resize(blocks[b].size());
    for (std::size_t t = 0; t < perm.size(); ++t) {
        const auto [b, k] = concat_origin[perm[t]];
        l.position[b][k] = t;
        l.origin.push_back({b, k});
    }
    return l;
}

SerialMorphism assemble(const BlockLayout& src, const BlockLayout& tgt,
                        const std::vector<std::vector<std::optional<SerialMorphism>>>& blocks) {
    const auto& base = src.total.base();
    RingMatrix m(base->coeff_ring(), tgt.total.size(), src.total.size());
    for (std::size_t tb = 0; tb < blocks.size(); ++tb)
        for (std::size_t sb = 0; sb < blocks[tb].size(); ++sb) {
            const auto& blk = blocks[tb][sb];
            if (!blk) continue;
            if (blk->target().size() != tgt.position[tb].size() || blk->source().size() != src.position[sb].size())
                throw InputError("assemble: block shape mismatch");
            for (std::size_t i = 0; i < blk->target().size(); ++i)
                for (std::size_t j = 0; j < blk->source().size(); ++j)
                    m.at(tgt.position[tb][i], src.position[sb][j]) = blk->at(i, j);
        }
    return SerialMorphism(src.total, tgt.total, std::move(m));
}

SerialMorphism extract(const SerialMorphism& f, const BlockLayout& src, const BlockLayout& tgt, std::size_t tb,
                       std::size_t sb, const SerialModule& src_block, const SerialModule& tgt_block) {
    RingMatrix m(f.base()->coeff_ring(), tgt_block.size(), src_block.size());
    for (std::size_t i = 0; i < tgt_block.size(); ++i)
        for (std::size_t j = 0; j < src_block.size(); ++j) m.at(i, j) = f.at(tgt.position[tb][i], src.position[sb][j]);
    return SerialMorphism(src_block, tgt_block, std::move(m));
}

// ------------------------------------------------------- the Smith engine

namespace {

void require_abelian(const SerialBase& b, const char* what) {
    if (!b.abelian()) throw UnsupportedError(std::string(what) + " is not available on the stable base " + b.name());
}

std::vector<int> lengths_of(const SerialModule& m) { return m.partition(); }

// Image-form matrix of a chain-base morphism: entry (i,j) is the image of the
// generator of part j, an element of R/pi^{b_i}.
RingMatrix to_image_form(const SerialMorphism& f) {
    const auto& b = *f.base();
    const auto& ring = *b.coeff_ring();
    RingMatrix m(b.coeff_ring(), f.target().size(), f.source().size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = ring.shift_up(f.at(i, j), b.image_position(f.source().parts()[j], f.target().parts()[i]));
    return m;
}

// Coefficient of the hom from label `a` to `b` whose top image is the
// image-form value r in R/pi^{length(b)}.
ChainRing::value_type coeff_from_image(const SerialBase& base, std::size_t a, std::size_t b, ChainRing::value_type r) {
    if (r == 0) return 0;
    const auto& ring = *base.coeff_ring();
    if (base.hom_length(a, b) == 0) throw std::logic_error("image-form value in a zero hom space");
    const int k0 = base.image_position(a, b);
    if (ring.valuation(r) < k0) throw std::logic_error("image-form value is not a module map");
    return ring.truncate(ring.shift_down(r, k0), base.hom_length(a, b));
}

std::size_t chain_label(const SerialBase& base, int length) { return *base.label_for(0, length); }

SubModule smith_submodule(const SerialModule& ambient, const CyclicBasis& cb) {
    const auto& base = ambient.base();
    std::vector<std::size_t> parts;
    for (int l : cb.lengths) parts.push_back(chain_label(*base, l));
    SerialModule sub(base, parts);
    RingMatrix m(base->coeff_ring(), ambient.size(), parts.size());
    for (std::size_t i = 0; i < ambient.size(); ++i)
        for (std::size_t t = 0; t < parts.size(); ++t)
            m.at(i, t) = coeff_from_image(*base, sub.parts()[t], ambient.parts()[i], cb.basis.at(i, t));
    return {sub, SerialMorphism(sub, ambient, std::move(m))};
}

bool smith_supported(const SerialBase& b) { return b.kind() == BaseKind::chain; }

Engine pick(const SerialBase& b, Engine e) {
    if (e == Engine::automatic) return smith_supported(b) ? Engine::smith : Engine::linear;
    if (e == Engine::smith && !smith_supported(b)) throw UnsupportedError("Smith engine needs a chain base");
    if (e == Engine::linear && !linear::supported(b)) throw UnsupportedError("linear engine needs an F_p-linear base");
    return e;
}

}  // namespace

SubModule kernel(const SerialMorphism& f, Engine engine) {
    require_abelian(*f.base(), "kernel");
    if (pick(*f.base(), engine) == Engine::linear) return linear::kernel(f);
    const auto src = lengths_of(f.source()), tgt = lengths_of(f.target());
    return smith_submodule(f.source(), cyclic_kernel(src, tgt, to_image_form(f)));
}

SubModule image(const SerialMorphism& f, Engine engine) {
    require_abelian(*f.base(), "image");
    if (pick(*f.base(), engine) == Engine::linear) return linear::image(f);
    const auto tgt = lengths_of(f.target());
    return smith_submodule(f.target(), cyclic_submodule(f.base()->coeff_ring(), tgt, to_image_form(f)));
}

QuotientModule cokernel(const SerialMorphism& f, Engine engine) {
    require_abelian(*f.base(), "cokernel");
    if (pick(*f.base(), engine) == Engine::linear) return linear::cokernel(f);
    const auto& base = f.base();
    const auto src = lengths_of(f.source()), tgt = lengths_of(f.target());
    auto q = cyclic_cokernel(src, tgt, to_image_form(f));
    std::vector<std::size_t> parts;
    for (int l : q.lengths) parts.push_back(chain_label(*base, l));
    SerialModule qm(base, parts);
    RingMatrix m(base->coeff_ring(), parts.size(), f.target().size());
    for (std::size_t r = 0; r < parts.size(); ++r)
        for (std::size_t j = 0; j < f.target().size(); ++j)
            m.at(r, j) = coeff_from_image(*base, f.target().parts()[j], qm.parts()[r], q.projection.at(r, j));
    return {qm, SerialMorphism(f.target(), qm, std::move(m))};
}

bool is_injective_map(const SerialMorphism& f) { return kernel(f).module.empty(); }
bool is_surjective_map(const SerialMorphism& f) { return cokernel(f).module.empty(); }

bool is_iso(const SerialMorphism& f) {
    if (!(f.source() == f.target())) {
        // Krull-Schmidt: isomorphic modules have equal normal forms.
        return false;
    }
    if (f.base()->abelian()) return is_injective_map(f);
    const auto id = SerialMorphism::identity(f.source());
    return solve(f, id).has_value() && solve_extend(f, id).has_value();
}

// ------------------------------------------------ socle and envelopes

SerialModule socle(const SerialModule& m) { return socle_inclusion(m).module; }

SubModule socle_inclusion(const SerialModule& m) {
    const auto& base = m.base();
    require_abelian(*base, "socle");
    std::vector<std::size_t> parts;
    for (auto a : m.parts()) parts.push_back(base->socle_label(a));
    RingMatrix e = RingMatrix::identity(base->coeff_ring(), parts.size());
    auto inc = SerialMorphism::from_unsorted(base, parts, m.parts(), e);
    return {inc.source(), inc};
}

Envelope injective_envelope(const SerialModule& m) {
    const auto& base = m.base();
    require_abelian(*base, "injective_envelope");
    std::vector<std::size_t> parts;
    for (auto a : m.parts()) parts.push_back(base->envelope_label(a));
    RingMatrix e = RingMatrix::identity(base->coeff_ring(), parts.size());
    auto j = SerialMorphism::from_unsorted(base, m.parts(), parts, e);
    return {j.target(), j};
}

bool is_injective_module(const SerialModule& m) {
    for (auto a : m.parts())
        if (!m.base()->label(a).injective) return false;
    return true;
}

// ------------------------------------------------------------ hom spaces

int HomSpace::log_size() const { return std::accumulate(orders.begin(), orders.end(), 0); }

std::vector<ChainRing::value_type> HomSpace::flatten(const SerialMorphism& f) const {
    std::vector<ChainRing::value_type> v;
    v.reserve(orders.size());
    for (std::size_t i = 0; i < target.size(); ++i)
        for (std::size_t j = 0; j < source.size(); ++j) v.push_back(f.at(i, j));
    return v;
}

SerialMorphism HomSpace::unflatten(std::span<const ChainRing::value_type> v) const {
    RingMatrix m(source.base()->coeff_ring(), target.size(), source.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < target.size(); ++i)
        for (std::size_t j = 0; j < source.size(); ++j) m.at(i, j) = v[k++];
    return SerialMorphism(source, target, std::move(m));
}

SerialMorphism HomSpace::random(std::mt19937_64& rng) const {
    const auto& ring = *source.base()->coeff_ring();
    std::vector<ChainRing::value_type> v(orders.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto bound = ring.p_power(orders[k]);
        v[k] = static_cast<ChainRing::value_type>(rng() % bound);
    }
    return unflatten(v);
}

void HomSpace::for_each(const std::function<bool(const SerialMorphism&)>& visit) const {
    const auto& ring = *source.base()->coeff_ring();
    std::vector<ChainRing::value_type> v(orders.size(), 0);
    while (true) {
        if (!visit(unflatten(v))) return;
        std::size_t k = 0;
        for (; k < v.size(); ++k) {
            if (++v[k] < ring.p_power(orders[k])) break;
            v[k] = 0;
        }
        if (k == v.size()) return;
    }
}

HomSpace hom_space(const SerialModule& m, const SerialModule& n) {
    HomSpace h{m, n, {}};
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) h.orders.push_back(m.base()->hom_length(m.parts()[j], n.parts()[i]));
    return h;
}

// f o h = g, solved one column of h at a time: column j of f o h only
// depends on column j of h.
std::optional<SerialMorphism> solve(const SerialMorphism& f, const SerialMorphism& g) {
    if (!(f.target() == g.target())) throw InputError("solve: f and g must share a target");
    const auto& base = *f.base();
    const auto& M = f.source();
    const auto& N = f.target();
    const auto& L = g.source();
    RingMatrix h(base.coeff_ring(), M.size(), L.size());
    for (std::size_t j = 0; j < L.size(); ++j) {
        const auto l = L.parts()[j];
        std::vector<int> dom(M.size()), cod(N.size());
        for (std::size_t i = 0; i < M.size(); ++i) dom[i] = base.hom_length(l, M.parts()[i]);
        for (std::size_t k = 0; k < N.size(); ++k) cod[k] = base.hom_length(l, N.parts()[k]);
        RingMatrix a(base.coeff_ring(), N.size(), M.size());
        for (std::size_t k = 0; k < N.size(); ++k)
            for (std::size_t i = 0; i < M.size(); ++i)
                if (dom[i] > 0) a.at(k, i) = base.compose(l, M.parts()[i], N.parts()[k], f.at(k, i), 1);
        std::vector<ChainRing::value_type> rhs(N.size());
        for (std::size_t k = 0; k < N.size(); ++k) rhs[k] = g.at(k, j);
        auto x = CyclicSolver(dom, cod, a).solve(rhs);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < M.size(); ++i) h.at(i, j) = (*x)[i];
    }
    return SerialMorphism(L, M, std::move(h));
}

// h o f = g, solved one row of h at a time.
std::optional<SerialMorphism> solve_extend(const SerialMorphism& f, const SerialMorphism& g) {
    if (!(f.source() == g.source())) throw InputError("solve_extend: f and g must share a source");
    const auto& base = *f.base();
    const auto& L = f.source();
    const auto& M = f.target();
    const auto& N = g.target();
    RingMatrix h(base.coeff_ring(), N.size(), M.size());
    for (std::size_t i = 0; i < N.size(); ++i) {
        const auto n = N.parts()[i];
        std::vector<int> dom(M.size()), cod(L.size());
        for (std::size_t k = 0; k < M.size(); ++k) dom[k] = base.hom_length(M.parts()[k], n);
        for (std::size_t j = 0; j < L.size(); ++j) cod[j] = base.hom_length(L.parts()[j], n);
        RingMatrix a(base.coeff_ring(), L.size(), M.size());
        for (std::size_t j = 0; j < L.size(); ++j)
            for (std::size_t k = 0; k < M.size(); ++k)
                if (dom[k] > 0) a.at(j, k) = base.compose(L.parts()[j], M.parts()[k], n, 1, f.at(k, j));
        std::vector<ChainRing::value_type> rhs(L.size());
        for (std::size_t j = 0; j < L.size(); ++j) rhs[j] = g.at(i, j);
        auto x = CyclicSolver(dom, cod, a).solve(rhs);
        if (!x) return std::nullopt;
        for (std::size_t k = 0; k < M.size(); ++k) h.at(i, k) = (*x)[k];
    }
    return SerialMorphism(M, N, std::move(h));
}

// ------------------------------------------------------- diagonalization

namespace {

// Some c with c * x = y in C/pi^len, or nullopt.
std::optional<ChainRing::value_type> divide(const ChainRing& ring, ChainRing::value_type y, ChainRing::value_type x, int len) {
    y = ring.truncate(y, len);
    x = ring.truncate(x, len);
    if (y == 0) return 0;
    if (x == 0) return std::nullopt;
    const int v = ring.valuation(x);
    if (ring.valuation(y) < v) return std::nullopt;
    const auto u = ring.shift_down(x, v);
    return ring.truncate(ring.mul(ring.shift_down(y, v), ring.inverse(u)), len);
}

// id + c * e, with e the generator from part `from` to part `to` (from != to).
SerialMorphism elementary(const SerialModule& m, std::size_t to, std::size_t from, ChainRing::value_type c) {
    RingMatrix e = RingMatrix::identity(m.base()->coeff_ring(), m.size());
    e.at(to, from) = c;
    return SerialMorphism(m, m, std::move(e));
}

}  // namespace

std::optional<SmithDecomposition> snf(const SerialMorphism& f) {
    const auto& base = *f.base();
    require_abelian(base, "snf");
    const auto& ring = *base.coeff_ring();
    const auto& M = f.source();
    const auto& N = f.target();
    SmithDecomposition s{SerialMorphism::identity(N), f, SerialMorphism::identity(M), SerialMorphism::identity(N),
                         SerialMorphism::identity(M)};
    std::vector<bool> row_done(N.size(), false), col_done(M.size(), false);
    while (true) {
        struct Cand {
            int val, neg_len;
            std::size_t i, j;
        };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < N.size(); ++i)
            for (std::size_t j = 0; j < M.size(); ++j)
                if (!row_done[i] && !col_done[j] && s.d.at(i, j) != 0)
                    cands.push_back({ring.valuation(s.d.at(i, j)), -base.hom_length(M.parts()[j], N.parts()[i]), i, j});
        if (cands.empty()) break;
        std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
            return std::tie(x.val, x.neg_len) < std::tie(y.val, y.neg_len);
        });
        bool progressed = false;
        for (const auto& c : cands) {
            const auto i = c.i, j = c.j;
            const auto a = M.parts()[j], b = N.parts()[i];
            const auto piv = s.d.at(i, j);
            std::vector<std::pair<std::size_t, ChainRing::value_type>> row_ops, col_ops;
            bool ok = true;
            for (std::size_t r = 0; r < N.size() && ok; ++r) {
                if (r == i || row_done[r] || s.d.at(r, j) == 0) continue;
                const auto br = N.parts()[r];
                const auto x = base.hom_length(b, br) ? base.compose(a, b, br, 1, piv) : 0;
                auto q = divide(ring, s.d.at(r, j), x, base.hom_length(a, br));
                if (!q) ok = false;
                else row_ops.push_back({r, ring.neg(*q)});
            }
            for (std::size_t k = 0; k < M.size() && ok; ++k) {
                if (k == j || col_done[k] || s.d.at(i, k) == 0) continue;
                const auto ak = M.parts()[k];
                const auto x = base.hom_length(ak, a) ? base.compose(ak, a, b, piv, 1) : 0;
                auto q = divide(ring, s.d.at(i, k), x, base.hom_length(ak, b));
                if (!q) ok = false;
                else col_ops.push_back({k, ring.neg(*q)});
            }
            if (!ok) continue;
            for (auto [r, q] : row_ops) {
                if (base.hom_length(b, N.parts()[r]) == 0) continue;
                auto e = elementary(N, r, i, q);
                s.d = compose(e, s.d);
                s.u = compose(e, s.u);
                s.u_inv = compose(s.u_inv, elementary(N, r, i, ring.neg(q)));
            }
            for (auto [k, q] : col_ops) {
                if (base.hom_length(M.parts()[k], a) == 0) continue;
                auto e = elementary(M, j, k, q);
                s.d = compose(s.d, e);
                s.v = compose(s.v, e);
                s.v_inv = compose(elementary(M, j, k, ring.neg(q)), s.v_inv);
            }
            // Normalize the pivot to pi^e.
            const auto pv = s.d.at(i, j);
            const int e = ring.valuation(pv);
            const auto unit = ring.shift_down(pv, e);
            if (unit != 1) {
                RingMatrix sc = RingMatrix::identity(base.coeff_ring(), N.size());
                sc.at(i, i) = ring.inverse(unit);
                RingMatrix sc_inv = RingMatrix::identity(base.coeff_ring(), N.size());
                sc_inv.at(i, i) = unit;
                SerialMorphism u1(N, N, std::move(sc)), u1_inv(N, N, std::move(sc_inv));
                s.d = compose(u1, s.d);
                s.u = compose(u1, s.u);
                s.u_inv = compose(s.u_inv, u1_inv);
            }
            row_done[i] = col_done[j] = true;
            progressed = true;
            break;
        }
        if (!progressed) return std::nullopt;
    }
    return s;
}

}  // namespace monocat
