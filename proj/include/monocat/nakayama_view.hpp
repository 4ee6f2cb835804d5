#pragma once

// Linear-algebra view of modules over an F_p-linear abelian base (the
// truncated polynomial chains and the rad^2 = 0 cyclic Nakayama algebras).
//
// A module becomes an F_p-space with one coordinate per (part, position);
// position k of a part with top t lies in simple component (t + k) mod m and
// the nilpotent T moves position k to k + 1. Kernels and cokernels are plain
// Gaussian elimination; the serial normal form is recovered from the graded
// Jordan structure of T.

#include "monocat/serial_module.hpp"

namespace monocat::linear {

bool supported(const SerialBase& base);

struct View {
    RingPtr field;
    std::vector<std::size_t> offset;  // first coordinate of each part
    std::vector<int> component;       // per coordinate
    std::size_t dim = 0;
};

View view_of(const SerialModule& m);
/// dim(target) x dim(source) matrix over F_p.
RingMatrix matrix_of(const SerialMorphism& f);
/// The radical action on the coordinates of m.
RingMatrix nilpotent_of(const SerialModule& m);

SubModule kernel(const SerialMorphism& f);
QuotientModule cokernel(const SerialMorphism& f);
SubModule image(const SerialMorphism& f);

/// The submodule whose coordinates are spanned by the columns of `basis`;
/// the span must be T-stable and graded.
SubModule submodule(const SerialModule& m, const RingMatrix& basis);
/// Column basis in reduced echelon form (unique per subspace).
RingMatrix canonical_basis(const RingMatrix& cols);
/// All T-stable graded subspaces of dimension <= max_dim, as canonical
/// bases, ordered by dimension and then by discovery.
std::vector<RingMatrix> invariant_subspaces(const SerialModule& m, std::size_t max_dim);

}  // namespace monocat::linear
