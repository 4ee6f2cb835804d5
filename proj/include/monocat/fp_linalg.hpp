#pragma once

// Gaussian elimination over the prime field F_p, on RingMatrix values whose
// ring has Loewy length 1.

#include "monocat/ring_matrix.hpp"

#include <optional>
#include <vector>

namespace monocat::fp {

struct Echelon {
    RingMatrix reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(const RingMatrix& a);
std::size_t rank(const RingMatrix& a);
/// Columns form a basis of the null space.
RingMatrix kernel(const RingMatrix& a);
std::optional<std::vector<ChainRing::value_type>> solve(const RingMatrix& a, std::span<const ChainRing::value_type> b);
/// Solves A X = B column by column; nullopt if any column is inconsistent.
std::optional<RingMatrix> solve(const RingMatrix& a, const RingMatrix& b);
/// Standard basis vectors completing the (independent) columns of `b` to a basis.
RingMatrix complement(const RingMatrix& b);
RingMatrix hconcat(const RingMatrix& a, const RingMatrix& b);
std::optional<RingMatrix> inverse(const RingMatrix& a);

}  // namespace monocat::fp
