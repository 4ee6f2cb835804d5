#include "monocat/ring_matrix.hpp"

#include "monocat/error.hpp"
#include "monocat/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace monocat {

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

RingMatrix RingMatrix::identity(RingPtr ring, std::size_t n) {
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring->one();
    return m;
}

std::vector<RingMatrix::value_type> RingMatrix::column(std::size_t j) const {
    std::vector<value_type> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void RingMatrix::add_row_multiple(std::size_t dst, std::size_t src, value_type c) {
    if (c == 0) return;
    if (ring_->arith() == Arith::integer) {
        kernels::axpy_mod(row(dst), row(src), c, ring_->size());
        return;
    }
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t j = 0; j < cols_; ++j)
        if (s[j] != 0) d[j] = ring_->add(d[j], ring_->mul(c, s[j]));
}

void RingMatrix::add_col_multiple(std::size_t dst, std::size_t src, value_type c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const value_type s = at(i, src);
        if (s != 0) at(i, dst) = ring_->add(at(i, dst), ring_->mul(c, s));
    }
}

void RingMatrix::scale_row(std::size_t i, value_type c) {
    if (ring_->arith() == Arith::integer) {
        kernels::scale_mod(row(i), c, ring_->size());
        return;
    }
    for (auto& x : row(i)) x = ring_->mul(c, x);
}

void RingMatrix::scale_col(std::size_t j, value_type c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = ring_->mul(c, at(i, j));
}

void RingMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void RingMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<RingMatrix::value_type> RingMatrix::apply(std::span<const value_type> v) const {
    std::vector<value_type> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        value_type acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0 && at(i, j) != 0) acc = ring_->add(acc, ring_->mul(at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in product");
    RingMatrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto x = a.at(i, k);
            if (x == 0) continue;
            if (a.ring_->arith() == Arith::integer) {
                kernels::axpy_mod(c.row(i), b.row(k), x, a.ring_->size());
            } else {
                auto dst = c.row(i);
                auto src = b.row(k);
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (src[j] != 0) dst[j] = a.ring_->add(dst[j], a.ring_->mul(x, src[j]));
            }
        }
    return c;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

SmithForm smith_form(const RingMatrix& a, unsigned want) {
    const auto& ring = a.ring();
    const std::size_t r = a.rows(), c = a.cols();
    const int n = ring->n();
    SmithForm s;
    s.d = a;
    RingMatrix& d = s.d;
    if (want & want_u) s.u = RingMatrix::identity(ring, r);
    if (want & want_u_inv) s.u_inv = RingMatrix::identity(ring, r);
    if (want & want_v) s.v = RingMatrix::identity(ring, c);
    if (want & want_v_inv) s.v_inv = RingMatrix::identity(ring, c);

    const std::size_t steps = std::min(r, c);
    for (std::size_t k = 0; k < steps; ++k) {
        int best = n;
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = k; i < r && best > 0; ++i)
            for (std::size_t j = k; j < c; ++j) {
                const auto x = d.at(i, j);
                if (x == 0) continue;
                const int v = ring->valuation(x);
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    if (v == 0) break;
                }
            }
        if (best == n) break;

        d.swap_rows(k, pi);
        if (want & want_u) s.u.swap_rows(k, pi);
        if (want & want_u_inv) s.u_inv.swap_cols(k, pi);
        d.swap_cols(k, pj);
        if (want & want_v) s.v.swap_cols(k, pj);
        if (want & want_v_inv) s.v_inv.swap_rows(k, pj);

        const int e = best;
        const auto unit = ring->shift_down(d.at(k, k), e);
        const auto unit_inv = ring->inverse(unit);
        d.scale_row(k, unit_inv);
        if (want & want_u) s.u.scale_row(k, unit_inv);
        if (want & want_u_inv) s.u_inv.scale_col(k, unit);

        for (std::size_t i = k + 1; i < r; ++i) {
            const auto x = d.at(i, k);
            if (x == 0) continue;
            const auto q = ring->shift_down(x, e);
            const auto mq = ring->neg(q);
            d.add_row_multiple(i, k, mq);
            if (want & want_u) s.u.add_row_multiple(i, k, mq);
            if (want & want_u_inv) s.u_inv.add_col_multiple(k, i, q);
        }
        for (std::size_t j = k + 1; j < c; ++j) {
            const auto x = d.at(k, j);
            if (x == 0) continue;
            const auto q = ring->shift_down(x, e);
            const auto mq = ring->neg(q);
            d.at(k, j) = 0;
            if (want & want_v) s.v.add_col_multiple(j, k, mq);
            if (want & want_v_inv) s.v_inv.add_row_multiple(k, j, q);
        }
        s.exponents.push_back(e);
        s.rank = k + 1;
    }
    return s;
}

namespace {

// Generators of {x in R^c : A x = 0} together with their annihilator exponents.
struct MatrixKernel {
    RingMatrix gens;
    std::vector<int> orders;
};

MatrixKernel matrix_kernel(const RingMatrix& a) {
    const auto& ring = a.ring();
    const int n = ring->n();
    auto s = smith_form(a, want_v);
    std::vector<std::size_t> cols;
    std::vector<int> shifts, orders;
    for (std::size_t k = 0; k < s.rank; ++k) {
        if (s.exponents[k] == 0) continue;
        cols.push_back(k);
        shifts.push_back(n - s.exponents[k]);
        orders.push_back(s.exponents[k]);
    }
    for (std::size_t k = s.rank; k < a.cols(); ++k) {
        cols.push_back(k);
        shifts.push_back(0);
        orders.push_back(n);
    }
    MatrixKernel out{RingMatrix(ring, a.cols(), cols.size()), orders};
    for (std::size_t t = 0; t < cols.size(); ++t)
        for (std::size_t i = 0; i < a.cols(); ++i) out.gens.at(i, t) = ring->shift_up(s.v.at(i, cols[t]), shifts[t]);
    return out;
}

// Indices of the nonzero lengths, in stable non-increasing length order.
std::vector<std::size_t> normal_order(const std::vector<int>& lengths) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lengths.size(); ++i)
        if (lengths[i] > 0) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return lengths[x] > lengths[y]; });
    return idx;
}

}  // namespace

CyclicBasis cyclic_submodule(const RingPtr& ring, std::span<const int> lengths, const RingMatrix& generators) {
    const std::size_t s = lengths.size();
    const std::size_t m = generators.cols();
    const int n = ring->n();
    // Relations among the generators: z with G z in (+) pi^{a_i} R.
    RingMatrix stacked(ring, s, m + s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < m; ++j) stacked.at(i, j) = ring->truncate(generators.at(i, j), lengths[i]);
        stacked.at(i, m + i) = ring->neg(ring->pi_power(lengths[i]));
    }
    auto rel = matrix_kernel(stacked);
    RingMatrix z(ring, m, rel.gens.cols());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < rel.gens.cols(); ++j) z.at(i, j) = rel.gens.at(i, j);

    auto sf = smith_form(z, want_u_inv);
    std::vector<int> orders(m, n);
    for (std::size_t k = 0; k < sf.rank; ++k) orders[k] = sf.exponents[k];
    RingMatrix cand = generators * sf.u_inv;
    auto idx = normal_order(orders);
    CyclicBasis out{{}, RingMatrix(ring, s, idx.size())};
    for (std::size_t t = 0; t < idx.size(); ++t) {
        out.lengths.push_back(orders[idx[t]]);
        for (std::size_t i = 0; i < s; ++i) out.basis.at(i, t) = ring->truncate(cand.at(i, idx[t]), lengths[i]);
    }
    return out;
}

CyclicBasis cyclic_kernel(std::span<const int> src, std::span<const int> tgt, const RingMatrix& map) {
    const auto& ring = map.ring();
    const std::size_t s = src.size(), t = tgt.size();
    if (map.rows() != t || map.cols() != s) throw InputError("cyclic_kernel: shape mismatch");
    RingMatrix stacked(ring, t, s + t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < s; ++j) stacked.at(i, j) = map.at(i, j);
        stacked.at(i, s + i) = ring->neg(ring->pi_power(tgt[i]));
    }
    auto k = matrix_kernel(stacked);
    RingMatrix gens(ring, s, k.gens.cols());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < k.gens.cols(); ++j) gens.at(i, j) = k.gens.at(i, j);
    return cyclic_submodule(ring, src, gens);
}

CyclicQuotient cyclic_cokernel(std::span<const int> src, std::span<const int> tgt, const RingMatrix& map) {
    const auto& ring = map.ring();
    const std::size_t s = src.size(), t = tgt.size();
    if (map.rows() != t || map.cols() != s) throw InputError("cyclic_cokernel: shape mismatch");
    const int n = ring->n();
    RingMatrix stacked(ring, t, s + t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < s; ++j) stacked.at(i, j) = map.at(i, j);
        stacked.at(i, s + i) = ring->pi_power(tgt[i]);
    }
    auto sf = smith_form(stacked, want_u);
    std::vector<int> orders(t, n);
    for (std::size_t k = 0; k < sf.rank; ++k) orders[k] = sf.exponents[k];
    auto idx = normal_order(orders);
    CyclicQuotient out{{}, RingMatrix(ring, idx.size(), t)};
    for (std::size_t r = 0; r < idx.size(); ++r) {
        out.lengths.push_back(orders[idx[r]]);
        for (std::size_t j = 0; j < t; ++j) out.projection.at(r, j) = ring->truncate(sf.u.at(idx[r], j), orders[idx[r]]);
    }
    return out;
}

CyclicSolver::CyclicSolver(std::span<const int> src, std::span<const int> tgt, const RingMatrix& map)
    : ring_(map.ring()), src_(src.begin(), src.end()), tgt_dim_(tgt.size()) {
    const std::size_t s = src.size(), t = tgt.size();
    if (map.rows() != t || map.cols() != s) throw InputError("CyclicSolver: shape mismatch");
    RingMatrix stacked(ring_, t, s + t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < s; ++j) stacked.at(i, j) = map.at(i, j);
        stacked.at(i, s + i) = ring_->neg(ring_->pi_power(tgt[i]));
    }
    smith_ = smith_form(stacked, want_u | want_v);
}

std::optional<std::vector<RingMatrix::value_type>> CyclicSolver::solve(
    std::span<const RingMatrix::value_type> rhs) const {
    if (rhs.size() != tgt_dim_) throw InputError("CyclicSolver: rhs dimension mismatch");
    const auto w = smith_.u.apply(rhs);
    const std::size_t cols = smith_.v.rows();
    std::vector<RingMatrix::value_type> z(cols, 0);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k < smith_.rank) {
            const int e = smith_.exponents[k];
            if (ring_->valuation(w[k]) < e) return std::nullopt;
            z[k] = ring_->shift_down(w[k], e);
        } else if (w[k] != 0) {
            return std::nullopt;
        }
    }
    const auto full = smith_.v.apply(z);
    std::vector<RingMatrix::value_type> x(src_.size());
    for (std::size_t j = 0; j < src_.size(); ++j) x[j] = ring_->truncate(full[j], src_[j]);
    return x;
}

}  // namespace monocat
