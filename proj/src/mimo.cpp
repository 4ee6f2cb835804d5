#include "monocat/mimo.hpp"

#include "monocat/error.hpp"

#include <algorithm>

namespace monocat {

namespace {

// Inclusion of block b into the total of a layout.
SerialMorphism block_inclusion(const BlockLayout& layout, std::size_t b, const SerialModule& block) {
    auto single = block_layout(block.base(), {block});
    std::vector<std::vector<std::optional<SerialMorphism>>> m(layout.position.size(), std::vector<std::optional<SerialMorphism>>(1));
    m[b][0] = SerialMorphism::identity(block);
    return assemble(single, layout, m);
}

}  // namespace

EnvelopeData minimal_envelope_data(const Representation& r) {
    if (!r.base()->abelian()) throw UnsupportedError("mimo needs an abelian base");
    EnvelopeData d;
    for (std::size_t v = 0; v < r.modules().size(); ++v) {
        const auto in = in_map(r, v);
        const auto k = kernel(in.map);
        const auto env = injective_envelope(k.module);
        auto e = solve_extend(k.inclusion, env.map);
        if (!e) throw InputError("mimo: envelope does not extend (base not self-injective?)");
        d.modules.push_back(env.module);
        d.maps.push_back(*e);
    }
    return d;
}

MimoResult mo(const Representation& r, const EnvelopeData& data) {
    const auto& base = r.base();
    if (!base->abelian()) throw UnsupportedError("mo needs an abelian base");
    const auto& q = *r.quiver();
    const std::size_t nv = q.vertex_count();
    if (data.modules.size() != nv || data.maps.size() != nv) throw InputError("mo: one envelope per vertex expected");

    std::vector<InMap> ins;
    for (std::size_t v = 0; v < nv; ++v) {
        ins.push_back(in_map(r, v));
        if (!is_injective_module(data.modules[v])) throw InputError("mo: J_" + q.vertex_name(v) + " is not injective");
        const auto& e = data.maps[v];
        if (!(e.source() == ins[v].map.source()) || !(e.target() == data.modules[v]))
            throw InputError("mo: e_" + q.vertex_name(v) + " has the wrong shape");
        const auto k = kernel(ins[v].map);
        if (!is_injective_map(compose(e, k.inclusion)))
            throw InputError("mo: e_" + q.vertex_name(v) + " is not monic on the kernel of the in-map");
    }

    // Vertex k: block 0 is R_k, block 1 + t is J_{s(q_t)} for the t-th path ending at k.
    std::vector<std::vector<std::size_t>> ending(nv);
    std::vector<BlockLayout> layouts;
    for (std::size_t k = 0; k < nv; ++k) {
        ending[k] = q.paths_ending_at(k);
        std::vector<SerialModule> blocks{r.module(k)};
        for (auto p : ending[k]) blocks.push_back(data.modules[q.paths()[p].source]);
        layouts.push_back(block_layout(base, blocks));
    }

    std::vector<SerialMorphism> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto i = q.arrow(a).source, k = q.arrow(a).target;
        std::vector<std::vector<std::optional<SerialMorphism>>> blocks(
            1 + ending[k].size(), std::vector<std::optional<SerialMorphism>>(1 + ending[i].size()));
        blocks[0][0] = r.map(a);
        // The trivial path at k comes first among the paths ending at k.
        const auto trivial = static_cast<std::size_t>(
            std::find_if(ending[k].begin(), ending[k].end(), [&](std::size_t p) { return q.paths()[p].length() == 0; }) -
            ending[k].begin());
        const auto slot = static_cast<std::size_t>(std::find(ins[k].arrows.begin(), ins[k].arrows.end(), a) - ins[k].arrows.begin());
        blocks[1 + trivial][0] = compose(data.maps[k], block_inclusion(ins[k].layout, slot, r.module(i)));
        for (std::size_t t = 0; t < ending[i].size(); ++t) {
            const auto ext = *q.extend(ending[i][t], a);
            const auto u = static_cast<std::size_t>(std::find(ending[k].begin(), ending[k].end(), ext) - ending[k].begin());
            blocks[1 + u][1 + t] = SerialMorphism::identity(data.modules[q.paths()[ending[i][t]].source]);
        }
        maps.push_back(assemble(layouts[i], layouts[k], blocks));
    }
    std::vector<SerialModule> mods;
    for (const auto& l : layouts) mods.push_back(l.total);
    Representation out(base, r.quiver(), mods, maps);

    std::vector<SerialMorphism> proj;
    for (std::size_t k = 0; k < nv; ++k) {
        std::vector<std::vector<std::optional<SerialMorphism>>> row(1, std::vector<std::optional<SerialMorphism>>(1 + ending[k].size()));
        row[0][0] = SerialMorphism::identity(r.module(k));
        proj.push_back(assemble(layouts[k], block_layout(base, {r.module(k)}), row));
    }
    return {out, RepMorphism::unchecked(out, r, proj)};
}

MimoResult mimo(const Representation& r) { return mo(r, minimal_envelope_data(r)); }

Representation mimo_from_stable(const Representation& s) { return mimo(stable_lift(s)).rep; }

}  // namespace monocat
