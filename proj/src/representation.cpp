#include "monocat/representation.hpp"

#include "monocat/error.hpp"
#include "monocat/homs.hpp"
#include "monocat/mimo.hpp"

#include <sstream>

namespace monocat {

Representation::Representation(BasePtr base, QuiverPtr quiver, std::vector<SerialModule> modules,
                               std::vector<SerialMorphism> maps)
    : base_(std::move(base)), quiver_(std::move(quiver)), modules_(std::move(modules)), maps_(std::move(maps)) {
    if (!base_ || !quiver_) throw InputError("representation needs a base and a quiver");
    if (modules_.size() != quiver_->vertex_count()) throw InputError("one module per vertex expected");
    if (maps_.size() != quiver_->arrows().size()) throw InputError("one map per arrow expected");
    for (const auto& m : modules_)
        if (!m.base()->same_as(*base_)) throw InputError("vertex module over a different base");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
        const auto& ar = quiver_->arrow(a);
        if (!(maps_[a].source() == modules_[ar.source]) || !(maps_[a].target() == modules_[ar.target]))
            throw InputError("arrow map '" + ar.name + "' does not match its vertex modules");
    }
}

Representation Representation::zero(BasePtr base, QuiverPtr quiver) {
    std::vector<SerialModule> mods(quiver->vertex_count(), SerialModule::zero(base));
    std::vector<SerialMorphism> maps;
    for (std::size_t a = 0; a < quiver->arrows().size(); ++a) maps.push_back(SerialMorphism::zero(mods[0], mods[0]));
    return Representation(base, quiver, mods, maps);
}

bool Representation::is_zero() const {
    for (const auto& m : modules_)
        if (!m.empty()) return false;
    return true;
}

std::vector<int> Representation::length_vector() const {
    std::vector<int> out;
    for (const auto& m : modules_) out.push_back(m.length());
    return out;
}

std::vector<std::vector<int>> Representation::partition_vector() const {
    if (base_->kind() != BaseKind::chain) throw UnsupportedError("partition_vector needs a chain base");
    std::vector<std::vector<int>> out;
    for (const auto& m : modules_) out.push_back(m.partition());
    return out;
}

std::string Representation::summary() const {
    std::ostringstream os;
    for (std::size_t v = 0; v < modules_.size(); ++v) os << (v ? " " : "") << quiver_->vertex_name(v) << ":" << modules_[v].to_string();
    return os.str();
}

bool operator==(const Representation& a, const Representation& b) {
    return a.base_->same_as(*b.base_) && a.quiver_->same_as(*b.quiver_) && a.modules_ == b.modules_ && a.maps_ == b.maps_;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!a.base()->same_as(*b.base()) || !a.quiver()->same_as(*b.quiver())) throw InputError("direct_sum: mismatch");
    std::vector<SerialModule> mods;
    std::vector<SerialMorphism> maps;
    for (std::size_t v = 0; v < a.modules().size(); ++v) mods.push_back(direct_sum(a.module(v), b.module(v)));
    for (std::size_t k = 0; k < a.maps().size(); ++k) maps.push_back(direct_sum(a.map(k), b.map(k)));
    return Representation(a.base(), a.quiver(), mods, maps);
}

// ------------------------------------------------------------ morphisms

RepMorphism RepMorphism::unchecked(Representation source, Representation target, std::vector<SerialMorphism> components) {
    RepMorphism f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.components_ = std::move(components);
    if (f.components_.size() != f.source_.modules().size()) throw InputError("one component per vertex expected");
    for (std::size_t v = 0; v < f.components_.size(); ++v)
        if (!(f.components_[v].source() == f.source_.module(v)) || !(f.components_[v].target() == f.target_.module(v)))
            throw InputError("component shape does not match the representations");
    return f;
}

RepMorphism RepMorphism::make(Representation source, Representation target, std::vector<SerialMorphism> components) {
    auto f = unchecked(std::move(source), std::move(target), std::move(components));
    if (!f.is_natural()) throw InputError("components are not natural");
    return f;
}

RepMorphism RepMorphism::identity(const Representation& r) {
    std::vector<SerialMorphism> c;
    for (const auto& m : r.modules()) c.push_back(SerialMorphism::identity(m));
    return unchecked(r, r, c);
}

RepMorphism RepMorphism::zero(const Representation& s, const Representation& t) {
    std::vector<SerialMorphism> c;
    for (std::size_t v = 0; v < s.modules().size(); ++v) c.push_back(SerialMorphism::zero(s.module(v), t.module(v)));
    return unchecked(s, t, c);
}

bool RepMorphism::is_natural() const {
    const auto& q = *source_.quiver();
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& ar = q.arrow(a);
        if (!(compose(components_[ar.target], source_.map(a)) == compose(target_.map(a), components_[ar.source])))
            return false;
    }
    return true;
}

bool RepMorphism::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    std::vector<SerialMorphism> c;
    for (std::size_t v = 0; v < f.components().size(); ++v) c.push_back(compose(g.component(v), f.component(v)));
    return RepMorphism::unchecked(f.source(), g.target(), c);
}

RepMorphism add(const RepMorphism& a, const RepMorphism& b) {
    std::vector<SerialMorphism> c;
    for (std::size_t v = 0; v < a.components().size(); ++v) c.push_back(add(a.component(v), b.component(v)));
    return RepMorphism::unchecked(a.source(), a.target(), c);
}

RepMorphism scale(const RepMorphism& a, ChainRing::value_type s) {
    std::vector<SerialMorphism> c;
    for (const auto& x : a.components()) c.push_back(scale(x, s));
    return RepMorphism::unchecked(a.source(), a.target(), c);
}

bool is_iso(const RepMorphism& f) {
    for (const auto& c : f.components())
        if (!is_iso(c)) return false;
    return true;
}

// ------------------------------------------------------- functor toolkit

InMap in_map(const Representation& r, std::size_t v) {
    const auto& q = *r.quiver();
    InMap out;
    out.arrows = q.in_arrows(v);
    std::vector<SerialModule> blocks;
    for (auto a : out.arrows) blocks.push_back(r.module(q.arrow(a).source));
    out.layout = block_layout(r.base(), blocks);
    auto tgt = block_layout(r.base(), {r.module(v)});
    std::vector<std::vector<std::optional<SerialMorphism>>> m(1);
    for (auto a : out.arrows) m[0].push_back(r.map(a));
    out.map = assemble(out.layout, tgt, m);
    return out;
}

std::vector<SubModule> l1_kopf(const Representation& r) {
    std::vector<SubModule> out;
    for (std::size_t v = 0; v < r.modules().size(); ++v) out.push_back(kernel(in_map(r, v).map));
    return out;
}

std::vector<QuotientModule> kopf(const Representation& r) {
    std::vector<QuotientModule> out;
    for (std::size_t v = 0; v < r.modules().size(); ++v) out.push_back(cokernel(in_map(r, v).map));
    return out;
}

bool is_mono(const Representation& r) {
    for (std::size_t v = 0; v < r.modules().size(); ++v)
        if (!is_injective_map(in_map(r, v).map)) return false;
    return true;
}

Representation f_shriek(const BasePtr& base, const QuiverPtr& quiver, const std::vector<SerialModule>& m) {
    const auto& q = *quiver;
    if (m.size() != q.vertex_count()) throw InputError("f_shriek: one module per vertex expected");
    std::vector<BlockLayout> layouts;
    std::vector<std::vector<std::size_t>> ending(q.vertex_count());
    for (std::size_t k = 0; k < q.vertex_count(); ++k) {
        ending[k] = q.paths_ending_at(k);
        std::vector<SerialModule> blocks;
        for (auto p : ending[k]) blocks.push_back(m[q.paths()[p].source]);
        layouts.push_back(block_layout(base, blocks));
    }
    std::vector<SerialMorphism> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& ar = q.arrow(a);
        std::vector<std::vector<std::optional<SerialMorphism>>> blocks(ending[ar.target].size(),
                                                                       std::vector<std::optional<SerialMorphism>>(ending[ar.source].size()));
        for (std::size_t j = 0; j < ending[ar.source].size(); ++j) {
            const auto ext = *q.extend(ending[ar.source][j], a);
            for (std::size_t i = 0; i < ending[ar.target].size(); ++i)
                if (ending[ar.target][i] == ext) blocks[i][j] = SerialMorphism::identity(m[q.paths()[ext].source]);
        }
        maps.push_back(assemble(layouts[ar.source], layouts[ar.target], blocks));
    }
    std::vector<SerialModule> mods;
    for (const auto& l : layouts) mods.push_back(l.total);
    return Representation(base, quiver, mods, maps);
}

namespace {

std::vector<std::size_t> kept_parts(const SerialModule& m, bool injective) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.base()->label(m.parts()[i]).injective == injective) idx.push_back(i);
    return idx;
}

SerialMorphism restrict_entries(const SerialMorphism& f, const BasePtr& base, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols, const std::vector<std::size_t>& src_labels,
                                const std::vector<std::size_t>& tgt_labels) {
    RingMatrix m(base->coeff_ring(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = f.at(rows[i], cols[j]);
    return SerialMorphism::from_unsorted(base, src_labels, tgt_labels, m);
}

std::vector<std::size_t> labels_at(const SerialModule& m, const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> out;
    for (auto i : idx) out.push_back(m.parts()[i]);
    return out;
}

std::vector<std::size_t> to_stable_labels(const SerialBase& stable, const std::vector<std::size_t>& parent_labels) {
    std::vector<std::size_t> out;
    for (auto l : parent_labels) out.push_back(*stable.stable_label(l));
    return out;
}

}  // namespace

StrippedRepresentation strip_injective_summands(const Representation& r) {
    const auto& base = r.base();
    if (!base->abelian()) throw UnsupportedError("strip_injective_summands needs an abelian base");
    const auto& q = *r.quiver();
    StrippedRepresentation out;
    std::vector<SerialModule> mods;
    for (const auto& m : r.modules()) {
        mods.push_back(SerialModule(base, labels_at(m, kept_parts(m, false))));
        out.injective.push_back(SerialModule(base, labels_at(m, kept_parts(m, true))));
    }
    std::vector<SerialMorphism> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& ar = q.arrow(a);
        const auto& s = r.module(ar.source);
        const auto& t = r.module(ar.target);
        const auto cols = kept_parts(s, false), rows = kept_parts(t, false);
        maps.push_back(restrict_entries(r.map(a), base, rows, cols, labels_at(s, cols), labels_at(t, rows)));
    }
    out.rep = Representation(base, r.quiver(), mods, maps);
    return out;
}

Representation stable_reduce(const Representation& r) {
    const auto& base = r.base();
    if (!base->abelian()) throw UnsupportedError("stable_reduce needs an abelian base");
    auto stable = SerialBase::stable_of(base);
    const auto& q = *r.quiver();
    std::vector<SerialModule> mods;
    for (const auto& m : r.modules()) mods.push_back(SerialModule(stable, to_stable_labels(*stable, labels_at(m, kept_parts(m, false)))));
    std::vector<SerialMorphism> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& ar = q.arrow(a);
        const auto& s = r.module(ar.source);
        const auto& t = r.module(ar.target);
        const auto cols = kept_parts(s, false), rows = kept_parts(t, false);
        maps.push_back(restrict_entries(r.map(a), stable, rows, cols, to_stable_labels(*stable, labels_at(s, cols)),
                                        to_stable_labels(*stable, labels_at(t, rows))));
    }
    return Representation(stable, r.quiver(), mods, maps);
}

RepMorphism stable_reduce(const RepMorphism& f) {
    auto s = stable_reduce(f.source());
    auto t = stable_reduce(f.target());
    std::vector<SerialMorphism> comps;
    for (std::size_t v = 0; v < f.components().size(); ++v) {
        const auto& a = f.source().module(v);
        const auto& b = f.target().module(v);
        const auto cols = kept_parts(a, false), rows = kept_parts(b, false);
        comps.push_back(restrict_entries(f.component(v), s.base(), rows, cols,
                                         to_stable_labels(*s.base(), labels_at(a, cols)),
                                         to_stable_labels(*s.base(), labels_at(b, rows))));
    }
    return RepMorphism::unchecked(s, t, comps);
}

Representation stable_lift(const Representation& s) {
    const auto& stable = s.base();
    if (stable->kind() != BaseKind::stable) throw InputError("stable_lift needs a representation over a stable base");
    const auto& parent = stable->parent();
    const auto& q = *s.quiver();
    auto lift_labels = [&](const SerialModule& m) {
        std::vector<std::size_t> out;
        for (auto l : m.parts()) out.push_back(stable->parent_label(l));
        return out;
    };
    std::vector<SerialModule> mods;
    for (const auto& m : s.modules()) mods.push_back(SerialModule(parent, lift_labels(m)));
    std::vector<SerialMorphism> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& f = s.map(a);
        maps.push_back(SerialMorphism::from_unsorted(parent, lift_labels(f.source()), lift_labels(f.target()), f.entries()));
    }
    return Representation(parent, s.quiver(), mods, maps);
}

std::optional<std::vector<SerialModule>> injective_rep_recognize(const Representation& r) {
    if (!r.base()->abelian()) throw UnsupportedError("injective_rep_recognize needs an abelian base");
    for (const auto& m : r.modules())
        if (!is_injective_module(m)) return std::nullopt;
    if (!is_mono(r)) return std::nullopt;
    std::vector<SerialModule> j;
    for (const auto& k : kopf(r)) j.push_back(k.module);
    if (!is_iso_reps(r, f_shriek(r.base(), r.quiver(), j))) return std::nullopt;
    return j;
}

Representation relabel(const Representation& r, const BasePtr& target) {
    if (r.base()->label_count() != target->label_count()) throw InputError("relabel: label sets differ");
    const auto& q = *r.quiver();
    std::vector<SerialModule> mods;
    for (const auto& m : r.modules()) mods.push_back(SerialModule(target, m.parts()));
    std::vector<SerialMorphism> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& f = r.map(a);
        RingMatrix e(target->coeff_ring(), f.target().size(), f.source().size());
        for (std::size_t i = 0; i < e.rows(); ++i)
            for (std::size_t j = 0; j < e.cols(); ++j) {
                const auto x = f.at(i, j);
                // Digit encodings agree on F_p coefficients; beyond that the
                // two rings are not isomorphic and relabeling is meaningless.
                if (x >= target->p() && !r.base()->coeff_ring()->same_as(*target->coeff_ring()))
                    throw UnsupportedError("relabel only transports F_p coefficients between different rings");
                e.at(i, j) = x;
            }
        maps.push_back(SerialMorphism(mods[q.arrow(a).source], mods[q.arrow(a).target], e));
    }
    return Representation(target, r.quiver(), mods, maps);
}

Representation transfer(const Representation& r, const BasePtr& target) {
    const auto& src = r.base();
    if (src->kind() != BaseKind::chain || target->kind() != BaseKind::chain)
        throw InputError("transfer needs chain-ring bases");
    const int n = src->coeff_ring()->n();
    if (target->coeff_ring()->n() != n || target->p() != src->p())
        throw InputError("transfer needs equal Loewy length and residue characteristic");
    if (n > 3) throw UnsupportedError("stable categories are not equivalent beyond Loewy length 3");
    if (!is_mono(r)) throw InputError("transfer needs a monomorphic representation");
    if (auto j = injective_rep_recognize(r)) {
        std::vector<SerialModule> jt;
        for (const auto& m : *j) jt.push_back(SerialModule(target, m.parts()));
        return f_shriek(target, r.quiver(), jt);
    }
    auto s = stable_reduce(r);
    return mimo_from_stable(relabel(s, SerialBase::stable_of(target)));
}

}  // namespace monocat
