#pragma once

// Hom groups between representations: the kernel of the naturality map
//   (+)_v Hom(R_v, S_v) -> (+)_alpha Hom(R_s(alpha), S_t(alpha)),
//   (phi_v) |-> phi_t o R_alpha - S_alpha o phi_s.

#include "monocat/representation.hpp"

#include <functional>
#include <random>

namespace monocat {

struct RepHomSpace {
    Representation source, target;
    std::vector<HomSpace> vertex_spaces;
    std::vector<std::size_t> offset;  // first ambient coordinate of each vertex
    std::vector<int> ambient_orders;
    /// Cyclic decomposition: generator k has order orders[k] and ambient
    /// coordinates basis.column(k).
    std::vector<int> orders;
    RingMatrix basis;

    /// log_p |Hom(R, S)|.
    int log_size() const;
    std::size_t rank() const { return orders.size(); }
    std::vector<ChainRing::value_type> flatten(const RepMorphism& f) const;
    RepMorphism from_ambient(std::span<const ChainRing::value_type> v) const;
    RepMorphism generator(std::size_t k) const;
    RepMorphism combination(std::span<const ChainRing::value_type> coeffs) const;
    RepMorphism random(std::mt19937_64& rng) const;
    /// Visits every element; stops early when visit returns false.
    void for_each(const std::function<bool(const RepMorphism&)>& visit) const;
    /// Coordinates of f in the generators (unique mod pi^orders).
    std::vector<ChainRing::value_type> coordinates(const RepMorphism& f) const;
};

/// Throws InputError on base or quiver mismatch.
RepHomSpace hom_reps(const Representation& r, const Representation& s);

/// Random search first, then an exact comparison of Krull-Schmidt
/// decompositions.
bool is_iso_reps(const Representation& r, const Representation& s, std::uint64_t seed = 1);

}  // namespace monocat
