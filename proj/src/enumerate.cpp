#include "monocat/enumerate.hpp"

#include "monocat/decompose.hpp"
#include "monocat/error.hpp"
#include "monocat/fp_linalg.hpp"
#include "monocat/homs.hpp"
#include "monocat/mimo.hpp"
#include "monocat/nakayama_view.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>

namespace monocat {

namespace {

using value_type = ChainRing::value_type;

class Budget {
public:
    explicit Budget(std::uint64_t limit) : limit_(limit) {}
    void spend(std::uint64_t n) {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExceeded("enumeration budget of " + std::to_string(limit_) + " candidates exceeded");
    }

private:
    std::uint64_t limit_, used_ = 0;
};

bool support_connected(const Quiver& q, const std::vector<int>& lengths) {
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        if (lengths[v] > 0) support.push_back(v);
    if (support.empty()) return false;
    std::set<std::size_t> reached{support[0]};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& a : q.arrows()) {
            if (lengths[a.source] == 0 || lengths[a.target] == 0) continue;
            const bool s = reached.count(a.source) > 0, t = reached.count(a.target) > 0;
            if (s != t) {
                reached.insert(s ? a.target : a.source);
                grew = true;
            }
        }
    }
    return reached.size() == support.size();
}

// Vertices along the arrows when the quiver is a linearly oriented A_n.
std::optional<std::vector<std::size_t>> linear_order(const Quiver& q) {
    if (!q.connected()) return std::nullopt;
    std::optional<std::size_t> start;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        if (q.in_arrows(v).size() > 1 || q.out_arrows(v).size() > 1) return std::nullopt;
        if (q.in_arrows(v).empty()) {
            if (start) return std::nullopt;
            start = v;
        }
    }
    if (!start) return std::nullopt;
    std::vector<std::size_t> order{*start};
    while (!q.out_arrows(order.back()).empty()) order.push_back(q.arrow(q.out_arrows(order.back())[0]).target);
    return order;
}

std::map<std::size_t, int> socle_counts(const SerialModule& m) {
    std::map<std::size_t, int> out;
    const auto soc = socle(m);
    for (auto part : soc.parts()) ++out[part];
    return out;
}

// Pairwise non-isomorphic indecomposables among the candidates.
std::vector<Representation> indecomposable_classes(const std::vector<Representation>& candidates,
                                                   const DecomposeOptions& dopt) {
    std::vector<Representation> out;
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (const auto& r : candidates) {
        if (!is_indecomposable(r, dopt)) continue;
        std::string key;
        for (const auto& m : r.modules()) key += m.to_string() + "|";
        key += std::to_string(hom_reps(r, r).log_size());
        auto& bucket = buckets[key];
        const bool known =
            std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) { return iso_indecomposable(out[i], r); });
        if (known) continue;
        bucket.push_back(out.size());
        out.push_back(r);
    }
    return out;
}

// ---- flags of invariant subspaces (mono, linear base, linear A_n) ----

struct Flag {
    std::vector<RingMatrix> spaces;  // V-coordinates, from the vertex next to the sink downwards
    std::vector<SubModule> subs;     // matching submodules of V
};

RingMatrix apply_to(const RingMatrix& g, const RingMatrix& u) { return linear::canonical_basis(g * u); }

std::vector<value_type> key_of(const RingMatrix& b) {
    std::vector<value_type> k{static_cast<value_type>(b.cols())};
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) k.push_back(b.at(i, j));
    return k;
}

// F_p-basis of End(V) acting on the coordinates of V.
std::vector<RingMatrix> endomorphism_basis(const SerialModule& v) {
    const auto hs = hom_space(v, v);
    const auto& ring = *v.base()->coeff_ring();
    std::vector<RingMatrix> out;
    for (std::size_t k = 0; k < hs.orders.size(); ++k) {
        std::vector<value_type> e(hs.orders.size(), 0);
        e[k] = 1;
        const auto gen = hs.unflatten(e);
        for (int i = 0; i < hs.orders[k]; ++i) out.push_back(linear::matrix_of(scale(gen, ring.pi_power(i))));
    }
    return out;
}

// A few random automorphisms of V preserving every subspace in `fixed`.
std::vector<RingMatrix> stabilizer_units(const std::vector<RingMatrix>& end_basis, const std::vector<RingMatrix>& fixed,
                                         std::size_t d, const RingPtr& field, std::mt19937_64& rng) {
    std::size_t constraint_rows = 0;
    std::vector<std::pair<RingMatrix, RingMatrix>> conds;  // (annihilator rows, basis)
    for (const auto& u : fixed) {
        if (u.cols() == 0 || u.cols() == d) continue;
        conds.emplace_back(fp::kernel(u.transpose()).transpose(), u);
        constraint_rows += (d - u.cols()) * u.cols();
    }
    RingMatrix c(field, constraint_rows, end_basis.size());
    for (std::size_t j = 0; j < end_basis.size(); ++j) {
        std::size_t r = 0;
        for (const auto& [w, u] : conds) {
            const auto x = w * end_basis[j] * u;
            for (std::size_t a = 0; a < x.rows(); ++a)
                for (std::size_t b = 0; b < x.cols(); ++b) c.at(r++, j) = x.at(a, b);
        }
    }
    const auto coeffs = fp::kernel(c);
    std::vector<RingMatrix> units;
    std::uniform_int_distribution<value_type> digit(0, field->p() - 1);
    for (int tries = 0; tries < 200 && units.size() < 6; ++tries) {
        RingMatrix g(field, d, d);
        for (std::size_t t = 0; t < coeffs.cols(); ++t) {
            const auto lambda = digit(rng);
            if (lambda == 0) continue;
            for (std::size_t j = 0; j < end_basis.size(); ++j) {
                const auto cj = field->mul(lambda, coeffs.at(j, t));
                if (cj == 0) continue;
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b)
                        g.at(a, b) = field->add(g.at(a, b), field->mul(cj, end_basis[j].at(a, b)));
            }
        }
        if (fp::rank(g) == d) units.push_back(std::move(g));
    }
    return units;
}

std::vector<Representation> flag_candidates(const QuiverPtr& q, const BasePtr& base, const std::vector<int>& lengths,
                                            const std::vector<std::size_t>& order, Budget& budget,
                                            std::mt19937_64& rng) {
    const std::size_t n = order.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (lengths[order[k]] > lengths[order[k + 1]]) return {};
    const std::size_t sink = order[n - 1];

    std::map<std::string, std::vector<RingMatrix>> subspace_cache;
    auto subspaces_of = [&](const SerialModule& w, std::size_t dim) -> const std::vector<RingMatrix>& {
        auto key = w.to_string() + "#" + std::to_string(dim);
        auto it = subspace_cache.find(key);
        if (it == subspace_cache.end()) {
            std::vector<RingMatrix> keep;
            for (auto& s : linear::invariant_subspaces(w, dim))
                if (s.cols() == dim) keep.push_back(std::move(s));
            it = subspace_cache.emplace(key, std::move(keep)).first;
        }
        return it->second;
    };

    std::vector<Representation> out;
    for (const auto& v : modules_of_length(base, lengths[sink])) {
        const auto view = linear::view_of(v);
        const std::size_t d = view.dim;
        const auto end_basis = endomorphism_basis(v);
        std::vector<Flag> states{Flag{}};
        for (std::size_t level = n - 1; level-- > 0;) {
            const auto dim = static_cast<std::size_t>(lengths[order[level]]);
            std::vector<Flag> next;
            for (const auto& st : states) {
                SerialModule parent = st.subs.empty() ? v : st.subs.back().module;
                RingMatrix push = st.subs.empty() ? RingMatrix::identity(view.field, d)
                                                  : linear::matrix_of(st.subs.back().inclusion);
                const auto& local = subspaces_of(parent, dim);
                std::vector<RingMatrix> cands;
                std::map<std::vector<value_type>, std::size_t> index;
                for (const auto& s : local) {
                    auto u = linear::canonical_basis(push * s);
                    index.emplace(key_of(u), cands.size());
                    cands.push_back(std::move(u));
                }
                const auto units = stabilizer_units(end_basis, st.spaces, d, view.field, rng);
                budget.spend(cands.size() * (units.size() + 1));
                std::vector<char> seen(cands.size(), 0);
                for (std::size_t c = 0; c < cands.size(); ++c) {
                    if (seen[c]) continue;
                    seen[c] = 1;
                    std::vector<std::size_t> stack{c};
                    while (!stack.empty()) {
                        const auto cur = stack.back();
                        stack.pop_back();
                        for (const auto& g : units) {
                            auto it = index.find(key_of(apply_to(g, cands[cur])));
                            if (it == index.end()) throw std::logic_error("flag enumeration: orbit left the candidates");
                            if (!seen[it->second]) {
                                seen[it->second] = 1;
                                stack.push_back(it->second);
                            }
                        }
                    }
                    Flag f = st;
                    f.spaces.push_back(cands[c]);
                    f.subs.push_back(linear::submodule(v, cands[c]));
                    next.push_back(std::move(f));
                }
            }
            states = std::move(next);
        }
        for (const auto& st : states) {
            std::vector<SerialModule> modules(n);
            std::vector<SerialMorphism> inc(n);
            modules[sink] = v;
            inc[sink] = SerialMorphism::identity(v);
            for (std::size_t level = 0; level + 1 < n; ++level) {
                const auto& sub = st.subs[n - 2 - level];
                modules[order[level]] = sub.module;
                inc[order[level]] = sub.inclusion;
            }
            std::vector<SerialMorphism> maps(q->arrows().size());
            for (std::size_t a = 0; a < maps.size(); ++a) {
                const auto& arrow = q->arrow(a);
                auto h = solve(inc[arrow.target], inc[arrow.source]);
                if (!h) throw std::logic_error("flag enumeration: subspaces are not nested");
                maps[a] = *h;
            }
            out.emplace_back(base, q, std::move(modules), std::move(maps));
        }
    }
    return out;
}

// ---- arrow by arrow orbit enumeration (any base) ----

struct UnitPair {
    SerialMorphism target, source_inverse;
};

std::vector<Representation> arrow_candidates(const QuiverPtr& q, const BasePtr& base, const std::vector<int>& lengths,
                                             bool mono_only, Budget& budget, std::mt19937_64& rng) {
    const auto& quiver = *q;
    const std::size_t nv = quiver.vertex_count();
    std::vector<std::size_t> topo_pos(nv);
    for (std::size_t i = 0; i < nv; ++i) topo_pos[quiver.topological_order()[i]] = i;
    std::vector<std::size_t> arrow_order(quiver.arrows().size());
    for (std::size_t a = 0; a < arrow_order.size(); ++a) arrow_order[a] = a;
    std::stable_sort(arrow_order.begin(), arrow_order.end(), [&](std::size_t a, std::size_t b) {
        return topo_pos[quiver.arrow(a).target] < topo_pos[quiver.arrow(b).target];
    });
    std::vector<std::size_t> rank_of(arrow_order.size());
    for (std::size_t i = 0; i < arrow_order.size(); ++i) rank_of[arrow_order[i]] = i;

    std::vector<std::vector<SerialModule>> choices(nv);
    for (std::size_t v = 0; v < nv; ++v) choices[v] = modules_of_length(base, lengths[v]);
    const std::uint32_t p = base->p();

    std::vector<Representation> out;
    std::vector<std::size_t> pick(nv, 0);
    while (true) {
        std::vector<SerialModule> modules(nv);
        for (std::size_t v = 0; v < nv; ++v) modules[v] = choices[v][pick[v]];

        bool feasible = true;
        if (mono_only)
            for (std::size_t t = 0; t < nv && feasible; ++t) {
                std::map<std::size_t, int> need;
                for (auto a : quiver.in_arrows(t))
                    for (auto [lab, c] : socle_counts(modules[quiver.arrow(a).source])) need[lab] += c;
                const auto have = socle_counts(modules[t]);
                for (auto [lab, c] : need) {
                    auto it = have.find(lab);
                    if (it == have.end() || it->second < c) feasible = false;
                }
            }

        if (feasible) {
            std::vector<std::vector<SerialMorphism>> states(1);
            for (std::size_t a = 0; a < quiver.arrows().size(); ++a)
                states[0].push_back(SerialMorphism::zero(modules[quiver.arrow(a).source], modules[quiver.arrow(a).target]));
            for (auto a : arrow_order) {
                const auto s = quiver.arrow(a).source, t = quiver.arrow(a).target;
                const auto hs = hom_space(modules[s], modules[t]);
                std::vector<std::uint64_t> radix;
                std::uint64_t total = 1;
                for (int o : hs.orders) {
                    std::uint64_t r = 1;
                    for (int i = 0; i < o; ++i) r *= p;
                    radix.push_back(r);
                    if (total > (std::uint64_t{1} << 40) / r) throw BudgetExceeded("hom space too large to enumerate");
                    total *= r;
                }
                auto decode = [&](std::uint64_t idx) {
                    std::vector<value_type> x(radix.size());
                    for (std::size_t k = 0; k < radix.size(); ++k) {
                        x[k] = static_cast<value_type>(idx % radix[k]);
                        idx /= radix[k];
                    }
                    return hs.unflatten(x);
                };
                auto encode = [&](const SerialMorphism& f) {
                    const auto x = hs.flatten(f);
                    std::uint64_t idx = 0;
                    for (std::size_t k = radix.size(); k-- > 0;) idx = idx * radix[k] + x[k];
                    return idx;
                };
                int unprocessed_in = 0;
                for (auto b : quiver.in_arrows(t))
                    if (rank_of[b] > rank_of[a]) unprocessed_in += modules[quiver.arrow(b).source].length();

                std::vector<std::vector<SerialMorphism>> next;
                for (const auto& st : states) {
                    budget.spend(total);
                    const Representation partial(base, q, modules, st);
                    const auto end = hom_reps(partial, partial);
                    std::vector<UnitPair> units;
                    for (int tries = 0; tries < 64 && units.size() < 6; ++tries) {
                        const auto g = end.random(rng);
                        if (!is_iso(g)) continue;
                        auto inv = solve(g.component(s), SerialMorphism::identity(modules[s]));
                        if (!inv) continue;
                        units.push_back({g.component(t), *inv});
                    }
                    std::vector<char> seen(total, 0);
                    for (std::uint64_t idx = 0; idx < total; ++idx) {
                        if (seen[idx]) continue;
                        seen[idx] = 1;
                        const auto f = decode(idx);
                        std::vector<std::uint64_t> stack{idx};
                        while (!stack.empty()) {
                            const auto cur = decode(stack.back());
                            stack.pop_back();
                            for (const auto& u : units) {
                                const auto j = encode(compose(u.target, compose(cur, u.source_inverse)));
                                if (!seen[j]) {
                                    seen[j] = 1;
                                    stack.push_back(j);
                                }
                            }
                        }
                        auto maps = st;
                        maps[a] = f;
                        if (mono_only) {
                            const Representation trial(base, q, modules, maps);
                            if (kernel(in_map(trial, t).map).module.length() != unprocessed_in) continue;
                        }
                        next.push_back(std::move(maps));
                    }
                }
                states = std::move(next);
            }
            for (auto& st : states) out.emplace_back(base, q, modules, std::move(st));
        }

        std::size_t v = 0;
        while (v < nv && ++pick[v] == choices[v].size()) pick[v++] = 0;
        if (v == nv) break;
    }
    return out;
}

}  // namespace

std::uint64_t default_budget() {
    if (const char* env = std::getenv("MONOCAT_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 100'000'000ULL;
}

std::vector<SerialModule> modules_of_length(const BasePtr& base, int length) {
    std::vector<SerialModule> out;
    std::vector<std::size_t> parts;
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            out.emplace_back(base, parts);
            return;
        }
        for (std::size_t l = from; l < base->label_count(); ++l) {
            const int len = base->label(l).length;
            if (len > left) continue;
            parts.push_back(l);
            self(self, l, left - len);
            parts.pop_back();
        }
    };
    if (length >= 0) rec(rec, 0, length);
    return out;
}

std::vector<SerialModule> modules_up_to(const BasePtr& base, int max_length) {
    std::vector<SerialModule> out;
    for (int l = 0; l <= max_length; ++l)
        for (auto& m : modules_of_length(base, l)) out.push_back(std::move(m));
    return out;
}

std::vector<Representation> enumerate_length_vector(const QuiverPtr& q, const BasePtr& base,
                                                    const std::vector<int>& lengths, const EnumerateOptions& opt) {
    if (lengths.size() != q->vertex_count()) throw InputError("length vector does not match the quiver");
    if (std::any_of(lengths.begin(), lengths.end(), [](int l) { return l < 0; }))
        throw InputError("negative entry in length vector");
    if (opt.mono_only && !base->abelian()) throw UnsupportedError("mono enumeration needs an abelian base");
    if (!support_connected(*q, lengths)) return {};

    Budget budget(opt.budget);
    std::mt19937_64 rng(opt.seed);
    const auto order = linear_order(*q);
    const bool flags_ok = opt.mono_only && linear::supported(*base) && order.has_value();
    if (opt.engine == EnumerationEngine::flags && !flags_ok)
        throw InputError("flag enumeration needs mono_only, an F_p-linear base and a linearly oriented A_n");
    std::vector<Representation> cands;
    if (flags_ok && opt.engine != EnumerationEngine::arrows)
        cands = flag_candidates(q, base, lengths, *order, budget, rng);
    else
        cands = arrow_candidates(q, base, lengths, opt.mono_only, budget, rng);
    DecomposeOptions dopt;
    dopt.seed = opt.seed;
    return indecomposable_classes(cands, dopt);
}

EnumerationReport enumerate_bounded(const QuiverPtr& q, const BasePtr& base, const std::vector<int>& caps,
                                    const EnumerateOptions& opt) {
    if (caps.size() != q->vertex_count()) throw InputError("caps do not match the quiver");
    EnumerationReport rep{base, q, caps, {}, 0, 0};
    std::vector<int> l(caps.size(), 0);
    while (true) {
        for (auto& r : enumerate_length_vector(q, base, l, opt)) {
            const bool inj = base->abelian() && is_mono(r) && injective_rep_recognize(r).has_value();
            (inj ? rep.injective_count : rep.non_injective_count)++;
            rep.classes.push_back({std::move(r), "exhaustive", inj});
        }
        std::size_t v = 0;
        while (v < l.size() && ++l[v] > caps[v]) l[v++] = 0;
        if (v == l.size()) break;
    }
    return rep;
}

std::vector<Representation> enumerate_gabriel(const QuiverPtr& q, std::uint32_t p) {
    if (!dynkin_type(*q).valid()) throw InputError("enumerate_gabriel needs a Dynkin quiver");
    const auto field = SerialBase::chain(Arith::integer, p, 1);
    std::mt19937_64 rng(p * 7919ULL + q->vertex_count());
    std::uniform_int_distribution<value_type> digit(0, p - 1);
    DecomposeOptions dopt;
    std::vector<Representation> out;
    for (const auto& root : positive_roots(*q)) {
        std::vector<SerialModule> modules;
        for (int d : root) modules.emplace_back(field, std::vector<std::size_t>(static_cast<std::size_t>(d), 0));
        std::optional<Representation> found;
        for (int tries = 0; tries < 200 && !found; ++tries) {
            std::vector<SerialMorphism> maps;
            for (const auto& a : q->arrows()) {
                RingMatrix m(field->coeff_ring(), modules[a.target].size(), modules[a.source].size());
                for (std::size_t i = 0; i < m.rows(); ++i)
                    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = digit(rng);
                maps.emplace_back(modules[a.source], modules[a.target], m);
            }
            Representation r(field, q, modules, std::move(maps));
            try {
                if (is_indecomposable(r, dopt)) found = std::move(r);
            } catch (const BudgetExceeded&) {
            }
        }
        if (!found) {
            EnumerateOptions opt;
            opt.engine = EnumerationEngine::arrows;
            auto classes = enumerate_length_vector(q, field, root, opt);
            if (classes.size() != 1) throw std::logic_error("enumerate_gabriel: root without a unique indecomposable");
            found = classes[0];
        }
        out.push_back(std::move(*found));
    }
    return out;
}

EnumerationReport enumerate_mono_rad2(const QuiverPtr& q, const BasePtr& base) {
    if (!dynkin_type(*q).valid()) throw InputError("enumerate_mono_rad2 needs a Dynkin quiver");
    const bool ok = base->kind() == BaseKind::rad2nak || (base->kind() == BaseKind::chain && base->max_length() == 2);
    if (!ok) throw InputError("enumerate_mono_rad2 needs a chain base with n = 2 or a rad2nak base");
    EnumerationReport rep{base, q, {}, {}, 0, 0};

    const std::size_t nv = q->vertex_count();
    for (std::size_t l = 0; l < base->label_count(); ++l) {
        if (!base->label(l).injective) continue;
        for (std::size_t v = 0; v < nv; ++v) {
            std::vector<SerialModule> m(nv, SerialModule::zero(base));
            m[v] = SerialModule(base, {l});
            rep.classes.push_back({f_shriek(base, q, m), "family", true});
            ++rep.injective_count;
        }
    }

    const auto stable = SerialBase::stable_of(base);
    const auto gabriel = enumerate_gabriel(q, base->p());
    for (std::size_t s = 0; s < stable->label_count(); ++s)
        for (const auto& g : gabriel) {
            std::vector<SerialModule> modules;
            for (const auto& m : g.modules()) modules.emplace_back(stable, std::vector<std::size_t>(m.size(), s));
            std::vector<SerialMorphism> maps;
            for (std::size_t a = 0; a < q->arrows().size(); ++a) {
                const auto& e = g.map(a).entries();
                RingMatrix m(stable->coeff_ring(), e.rows(), e.cols());
                for (std::size_t i = 0; i < e.rows(); ++i)
                    for (std::size_t j = 0; j < e.cols(); ++j) m.at(i, j) = e.at(i, j);
                maps.emplace_back(modules[q->arrow(a).source], modules[q->arrow(a).target], m);
            }
            const Representation sr(stable, q, modules, std::move(maps));
            rep.classes.push_back({mimo_from_stable(sr), "family", false});
            ++rep.non_injective_count;
        }

    std::size_t injective_labels = 0;
    for (std::size_t l = 0; l < base->label_count(); ++l) injective_labels += base->label(l).injective ? 1 : 0;
    const auto roots = static_cast<std::size_t>(positive_root_count(dynkin_type(*q)));
    if (rep.injective_count != injective_labels * nv || rep.non_injective_count != stable->label_count() * roots)
        throw std::logic_error("enumerate_mono_rad2: class count disagrees with the formula");
    return rep;
}

bool TableVerdict::ok() const {
    return extras.empty() &&
           std::all_of(listed.begin(), listed.end(), [](const VectorVerdict& v) { return v.verdict == "unique"; });
}

TableVerdict verify_length_vector_table(const QuiverPtr& q, const BasePtr& base,
                                        const std::vector<std::vector<int>>& table, int margin,
                                        const EnumerateOptions& opt) {
    if (base->kind() != BaseKind::chain) throw InputError("verify_length_vector_table needs a chain base");
    TableVerdict out;
    if (table.empty()) return out;
    const std::size_t nv = q->vertex_count();
    out.caps.assign(nv, 0);
    for (const auto& row : table) {
        if (row.size() != nv) throw InputError("table vector does not match the quiver");
        for (std::size_t v = 0; v < nv; ++v) out.caps[v] = std::max(out.caps[v], row[v]);
    }
    for (auto& c : out.caps) c += margin;

    auto mono = opt;
    mono.mono_only = true;
    for (const auto& row : table) {
        VectorVerdict vv{row, "", enumerate_length_vector(q, base, row, mono)};
        vv.verdict = vv.classes.empty() ? "missing" : (vv.classes.size() == 1 ? "unique" : "multiple");
        out.listed.push_back(std::move(vv));
    }
    const std::set<std::vector<int>> listed(table.begin(), table.end());
    std::vector<int> l(nv, 0);
    while (true) {
        if (!listed.count(l)) {
            auto classes = enumerate_length_vector(q, base, l, mono);
            if (!classes.empty()) out.extras.push_back({l, "extra", std::move(classes)});
        }
        std::size_t v = 0;
        while (v < nv && ++l[v] > out.caps[v]) l[v++] = 0;
        if (v == nv) break;
    }
    return out;
}

}  // namespace monocat

