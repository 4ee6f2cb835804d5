#pragma once

// Modules over a serial base (formal direct sums of indecomposables kept in
// normal form) and morphisms between them as coefficient matrices.
//
// Matrix convention: rows are target parts, columns are source parts, and
// g o f is the matrix product g * f under the base's composition law.

#include "monocat/ring_matrix.hpp"
#include "monocat/serial_base.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace monocat {

class SerialModule {
public:
    SerialModule() = default;
    /// Sorts the parts into normal form.
    SerialModule(BasePtr base, std::vector<std::size_t> parts);
    static SerialModule zero(BasePtr base) { return SerialModule(std::move(base), {}); }
    static SerialModule from_names(BasePtr base, const std::vector<std::string>& names);

    const BasePtr& base() const { return base_; }
    const std::vector<std::size_t>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int length() const;
    std::vector<int> partition() const;  // part lengths, non-increasing
    std::vector<std::string> names() const;
    std::string to_string() const;

    /// Permutation sorting `parts` into normal form: sorted[k] = parts[perm[k]].
    static std::vector<std::size_t> normal_permutation(const SerialBase& base, const std::vector<std::size_t>& parts);

    friend bool operator==(const SerialModule& a, const SerialModule& b);

private:
    BasePtr base_;
    std::vector<std::size_t> parts_;
};

SerialModule direct_sum(const SerialModule& a, const SerialModule& b);

class SerialMorphism {
public:
    using value_type = ChainRing::value_type;

    SerialMorphism() = default;
    /// Entries are reduced into their hom modules.
    SerialMorphism(SerialModule source, SerialModule target, RingMatrix entries);
    static SerialMorphism zero(const SerialModule& source, const SerialModule& target);
    static SerialMorphism identity(const SerialModule& m);
    /// Builds a morphism between unsorted part lists and conjugates it into
    /// normal form on both sides.
    static SerialMorphism from_unsorted(const BasePtr& base, const std::vector<std::size_t>& src_parts,
                                        const std::vector<std::size_t>& tgt_parts, const RingMatrix& entries);

    const SerialModule& source() const { return source_; }
    const SerialModule& target() const { return target_; }
    const BasePtr& base() const { return source_.base(); }
    const RingMatrix& entries() const { return entries_; }
    value_type at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
    bool is_zero() const;

    friend bool operator==(const SerialMorphism& a, const SerialMorphism& b);

private:
    SerialModule source_, target_;
    RingMatrix entries_;
};

SerialMorphism compose(const SerialMorphism& g, const SerialMorphism& f);
SerialMorphism add(const SerialMorphism& a, const SerialMorphism& b);
SerialMorphism negate(const SerialMorphism& a);
SerialMorphism scale(const SerialMorphism& a, ChainRing::value_type c);
SerialMorphism direct_sum(const SerialMorphism& f, const SerialMorphism& g);

/// A direct sum of blocks in normal form, remembering where each block's
/// parts went.
struct BlockLayout {
    SerialModule total;
    std::vector<std::vector<std::size_t>> position;  // position[block][k] = index in total
    std::vector<std::pair<std::size_t, std::size_t>> origin;  // per part of total: (block, k)
};
BlockLayout block_layout(const BasePtr& base, const std::vector<SerialModule>& blocks);
/// Morphism between two layouts from a block matrix [target block][source
/// block]; missing blocks are zero.
SerialMorphism assemble(const BlockLayout& src, const BlockLayout& tgt,
                        const std::vector<std::vector<std::optional<SerialMorphism>>>& blocks);
/// The (target block, source block) component of f.
SerialMorphism extract(const SerialMorphism& f, const BlockLayout& src, const BlockLayout& tgt, std::size_t tb,
                       std::size_t sb, const SerialModule& src_block, const SerialModule& tgt_block);

/// A subobject or quotient together with its structure map.
struct SubModule {
    SerialModule module;
    SerialMorphism inclusion;
};
struct QuotientModule {
    SerialModule module;
    SerialMorphism projection;
};

enum class Engine { automatic, smith, linear };

// Abelian operations; UnsupportedError on stable bases. The Smith engine
// needs a chain base; the linear engine needs an F_p-linear base.
SubModule kernel(const SerialMorphism& f, Engine engine = Engine::automatic);
QuotientModule cokernel(const SerialMorphism& f, Engine engine = Engine::automatic);
SubModule image(const SerialMorphism& f, Engine engine = Engine::automatic);
bool is_injective_map(const SerialMorphism& f);
bool is_surjective_map(const SerialMorphism& f);
/// Works on every base (by solving g o f = id and f o g = id on stable ones).
bool is_iso(const SerialMorphism& f);

SerialModule socle(const SerialModule& m);
SubModule socle_inclusion(const SerialModule& m);
struct Envelope {
    SerialModule module;
    SerialMorphism map;
};
Envelope injective_envelope(const SerialModule& m);
bool is_injective_module(const SerialModule& m);

/// Some h with f o h = g (f: M -> N, g: L -> N), or nullopt.
std::optional<SerialMorphism> solve(const SerialMorphism& f, const SerialMorphism& g);
/// Some h with h o f = g (f: L -> M, g: L -> N), or nullopt.
std::optional<SerialMorphism> solve_extend(const SerialMorphism& f, const SerialMorphism& g);

/// Hom(M, N) as the cyclic C-module (+) C/pi^{L(m_j, n_i)}, entries in row-major order.
struct HomSpace {
    SerialModule source, target;
    std::vector<int> orders;
    /// log_p |Hom(M, N)|.
    int log_size() const;
    std::vector<ChainRing::value_type> flatten(const SerialMorphism& f) const;
    SerialMorphism unflatten(std::span<const ChainRing::value_type> v) const;
    SerialMorphism random(std::mt19937_64& rng) const;
    /// Calls visit on every element; stops early when visit returns false.
    void for_each(const std::function<bool(const SerialMorphism&)>& visit) const;
};
HomSpace hom_space(const SerialModule& m, const SerialModule& n);

/// Best-effort diagonalization D = U o f o V with U, V isomorphisms. A
/// morphism between serial modules need not admit one (the module map
/// Z/p^2 -> Z/p + Z/p^3, (proj, incl) is such a case); nullopt then.
struct SmithDecomposition {
    SerialMorphism u, d, v, u_inv, v_inv;
};
std::optional<SmithDecomposition> snf(const SerialMorphism& f);

}  // namespace monocat
