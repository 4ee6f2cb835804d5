#pragma once

// Enumeration of indecomposable representations.
//
// enumerate_bounded works one length vector at a time. Linearly oriented
// A_n with an F_p-linear base and mono_only runs on flags of invariant
// subspaces of the sink module; everything else chooses vertex modules and
// then arrow maps one arrow at a time, keeping one map per orbit of the
// automorphisms of the partial representation. Orbits are generated by a
// few random automorphisms, so they may split; the exact isomorphism
// filter at the end merges whatever the orbit pass missed.

#include "monocat/representation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace monocat {

struct EnumeratedClass {
    Representation rep;
    std::string certificate;  // "exhaustive", "per-vector" or "family"
    bool injective = false;
};

struct EnumerationReport {
    BasePtr base;
    QuiverPtr quiver;
    std::vector<int> caps;
    std::vector<EnumeratedClass> classes;
    std::size_t injective_count = 0;
    std::size_t non_injective_count = 0;
};

enum class EnumerationEngine { automatic, flags, arrows };

/// MONOCAT_BUDGET from the environment, else 10^8.
std::uint64_t default_budget();

struct EnumerateOptions {
    bool mono_only = false;
    /// Candidate maps or subspaces visited before BudgetExceeded.
    std::uint64_t budget = default_budget();
    std::uint64_t seed = 1;
    EnumerationEngine engine = EnumerationEngine::automatic;
};

/// Every module of total length exactly `length`, in a fixed order.
std::vector<SerialModule> modules_of_length(const BasePtr& base, int length);
/// Every module of length <= max_length, zero first.
std::vector<SerialModule> modules_up_to(const BasePtr& base, int max_length);

/// One indecomposable F_p-representation per positive root, in root order.
/// Throws InputError for non-Dynkin quivers.
std::vector<Representation> enumerate_gabriel(const QuiverPtr& q, std::uint32_t p);

/// The indecomposable mono representations over a base whose stable
/// category is semisimple (chain n = 2 or rad2nak): f_!(J) per injective J
/// and vertex, plus mimo of the Gabriel representations on each stable
/// simple. Throws InputError for non-Dynkin quivers or other bases.
EnumerationReport enumerate_mono_rad2(const QuiverPtr& q, const BasePtr& base);

/// Indecomposables with exactly the given length vector, pairwise
/// non-isomorphic.
std::vector<Representation> enumerate_length_vector(const QuiverPtr& q, const BasePtr& base,
                                                    const std::vector<int>& lengths, const EnumerateOptions& opt);

/// All indecomposables with length vector <= caps, ordered by length vector.
EnumerationReport enumerate_bounded(const QuiverPtr& q, const BasePtr& base, const std::vector<int>& caps,
                                    const EnumerateOptions& opt);

struct VectorVerdict {
    std::vector<int> lengths;
    std::string verdict;  // "unique", "missing", "multiple" or "extra"
    std::vector<Representation> classes;
};

struct TableVerdict {
    std::vector<int> caps;
    std::vector<VectorVerdict> listed;  // in table order
    std::vector<VectorVerdict> extras;  // unlisted vectors with classes
    bool ok() const;
};

/// Checks that each listed vector carries exactly one indecomposable mono
/// class and that no other vector within the hull of the table plus
/// `margin` carries any.
TableVerdict verify_length_vector_table(const QuiverPtr& q, const BasePtr& base,
                                        const std::vector<std::vector<int>>& table, int margin,
                                        const EnumerateOptions& opt);

}  // namespace monocat
