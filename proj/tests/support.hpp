#pragma once

// Small builders shared by the test binaries.

#include "monocat/representation.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace monocat::test {

inline SerialModule mod(const BasePtr& b, std::vector<std::string> names) { return SerialModule::from_names(b, names); }

inline SerialMorphism mor(const SerialModule& s, const SerialModule& t, std::vector<std::vector<std::uint32_t>> rows) {
    RingMatrix m(s.base()->coeff_ring(), t.size(), s.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return SerialMorphism(s, t, m);
}

inline QuiverPtr quiver(const std::string& name) { return std::make_shared<const Quiver>(Quiver::builtin(name)); }

inline Representation rep(const BasePtr& b, const QuiverPtr& q, std::vector<SerialModule> mods,
                          std::vector<SerialMorphism> maps) {
    return Representation(b, q, std::move(mods), std::move(maps));
}

/// A1 -> A2 representation f: M -> N.
inline Representation a2(const BasePtr& b, const SerialMorphism& f) {
    return rep(b, quiver("An-linear:2"), {f.source(), f.target()}, {f});
}

inline SerialModule random_module(const BasePtr& b, std::mt19937_64& rng, std::size_t max_parts) {
    std::vector<std::size_t> parts(rng() % (max_parts + 1));
    for (auto& x : parts) x = rng() % b->label_count();
    return SerialModule(b, parts);
}

inline Representation random_rep(const BasePtr& b, const QuiverPtr& q, std::mt19937_64& rng, std::size_t max_parts) {
    std::vector<SerialModule> mods;
    for (std::size_t v = 0; v < q->vertex_count(); ++v) mods.push_back(random_module(b, rng, max_parts));
    std::vector<SerialMorphism> maps;
    for (const auto& a : q->arrows()) maps.push_back(hom_space(mods[a.source], mods[a.target]).random(rng));
    return Representation(b, q, mods, maps);
}

}  // namespace monocat::test
