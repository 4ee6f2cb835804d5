#pragma once

// Krull-Schmidt decomposition of representations.
//
// Abelian bases: End(R) is computed as a cyclic C-module. R is certified
// indecomposable when every generator is a scalar plus a nilpotent and those
// nilpotent parts span a nilpotent two-sided ideal of End(R)/pi (so End(R) is
// local), or by exhausting End(R) when it is small. Otherwise an element that
// is neither nilpotent nor invertible splits R by Fitting's lemma.
// Stable bases go through Mimo: decompose mimo(stable_lift(S)) and reduce the
// non-injective pieces.

#include "monocat/representation.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace monocat {

struct DecomposeOptions {
    std::uint64_t seed = 1;
    int random_tries = 64;
    /// Exhaustive search over End(R) only when |End(R)| <= 2^limit.
    int exhaustive_log2_limit = 16;
};

struct Piece {
    Representation rep;
    int multiplicity = 1;
};

/// Pieces are pairwise non-isomorphic. Throws BudgetExceeded when neither
/// certificate nor split is found within the options.
std::vector<Piece> decompose(const Representation& r, const DecomposeOptions& opt = {});

struct IndecomposabilityCertificate {
    bool indecomposable = false;
    std::string kind;  // "algebraic", "exhaustive", "split", "zero"
};
IndecomposabilityCertificate indecomposability(const Representation& r, const DecomposeOptions& opt = {});
bool is_indecomposable(const Representation& r, const DecomposeOptions& opt = {});

/// Exact isomorphism test for two indecomposable representations: some
/// composite of generators R -> S -> R is invertible.
bool iso_indecomposable(const Representation& a, const Representation& b);

/// Some power of a nilpotent endomorphism vanishes by this exponent.
int nilpotency_bound(const Representation& r);
RepMorphism power(const RepMorphism& x, int k);

}  // namespace monocat
