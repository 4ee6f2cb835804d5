#pragma once

// Dense matrices over a chain ring, Smith normal form, and linear algebra for
// finite modules presented as direct sums of cyclic modules R/pi^a.
//
// "Image form": a homomorphism  (+)_j R/pi^{a_j} -> (+)_i R/pi^{b_i}  is the
// matrix whose column j lists the image of the j-th cyclic generator, entry i
// reduced mod pi^{b_i}. Well-definedness means pi^{a_j} * A(i,j) = 0 mod pi^{b_i}.

#include "monocat/chain_ring.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace monocat {

class RingMatrix {
public:
    using value_type = ChainRing::value_type;

    RingMatrix() = default;
    RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    static RingMatrix identity(RingPtr ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    value_type at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<value_type> column(std::size_t j) const;

    /// row(dst) += c * row(src)
    void add_row_multiple(std::size_t dst, std::size_t src, value_type c);
    /// col(dst) += c * col(src)
    void add_col_multiple(std::size_t dst, std::size_t src, value_type c);
    void scale_row(std::size_t i, value_type c);
    void scale_col(std::size_t j, value_type c);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    RingMatrix transpose() const;
    std::vector<value_type> apply(std::span<const value_type> v) const;
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
    friend bool operator==(const RingMatrix& a, const RingMatrix& b);

private:
    RingPtr ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<value_type> data_;
};

/// U * A * V = D with D diagonal, D(k,k) = pi^{exponents[k]}.
struct SmithForm {
    RingMatrix d;
    RingMatrix u, u_inv, v, v_inv;  // only those requested are filled
    std::vector<int> exponents;     // for k < rank; each < n
    std::size_t rank = 0;
};

enum SmithWant : unsigned { want_u = 1, want_u_inv = 2, want_v = 4, want_v_inv = 8 };

/// Pivot rule: minimal valuation, ties broken in row-major order.
SmithForm smith_form(const RingMatrix& a, unsigned want);

/// A submodule (or kernel) in normal form: cyclic lengths in non-increasing
/// order, and the image-form columns of the chosen generators.
struct CyclicBasis {
    std::vector<int> lengths;
    RingMatrix basis;  // ambient_dim x lengths.size()
};

struct CyclicQuotient {
    std::vector<int> lengths;
    RingMatrix projection;  // lengths.size() x ambient_dim, image form
};

/// Submodule of (+) R/pi^{lengths} generated by the columns of `generators`.
CyclicBasis cyclic_submodule(const RingPtr& ring, std::span<const int> lengths, const RingMatrix& generators);

/// Kernel of an image-form map.
CyclicBasis cyclic_kernel(std::span<const int> src, std::span<const int> tgt, const RingMatrix& map);

/// Cokernel of an image-form map.
CyclicQuotient cyclic_cokernel(std::span<const int> src, std::span<const int> tgt, const RingMatrix& map);

/// Factors an image-form map once so that many right-hand sides can be
/// solved; solve(rhs) returns some x with map * x = rhs (mod pi^tgt),
/// reduced mod pi^src, or nullopt when no solution exists.
class CyclicSolver {
public:
    CyclicSolver(std::span<const int> src, std::span<const int> tgt, const RingMatrix& map);
    std::optional<std::vector<RingMatrix::value_type>> solve(std::span<const RingMatrix::value_type> rhs) const;

private:
    RingPtr ring_;
    std::vector<int> src_;
    std::size_t tgt_dim_;
    SmithForm smith_;
};

}  // namespace monocat
