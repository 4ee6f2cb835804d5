#include "monocat/fp_linalg.hpp"

#include "monocat/error.hpp"

namespace monocat::fp {

Echelon rref(const RingMatrix& a) {
    const auto& f = a.ring();
    if (f->n() != 1) throw InputError("fp::rref needs a prime field");
    Echelon e{a, {}};
    auto& m = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        m.scale_row(row, f->inverse(m.at(row, col)));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != row && m.at(i, col) != 0) m.add_row_multiple(i, row, f->neg(m.at(i, col)));
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const RingMatrix& a) { return rref(a).pivots.size(); }

RingMatrix kernel(const RingMatrix& a) {
    const auto& f = a.ring();
    auto e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RingMatrix k(f, a.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const auto fc = free_cols[t];
        k.at(fc, t) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) k.at(e.pivots[r], t) = f->neg(e.reduced.at(r, fc));
    }
    return k;
}

RingMatrix hconcat(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows() != b.rows()) throw InputError("hconcat: row mismatch");
    RingMatrix c(a.ring(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

std::optional<RingMatrix> solve(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows() != b.rows()) throw InputError("fp::solve: row mismatch");
    auto e = rref(hconcat(a, b));
    RingMatrix x(a.ring(), a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(e.pivots[r], j) = e.reduced.at(r, a.cols() + j);
    }
    return x;
}

std::optional<std::vector<ChainRing::value_type>> solve(const RingMatrix& a, std::span<const ChainRing::value_type> b) {
    RingMatrix bm(a.ring(), b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm.at(i, 0) = b[i];
    auto x = solve(a, bm);
    if (!x) return std::nullopt;
    return x->column(0);
}

RingMatrix complement(const RingMatrix& b) {
    const std::size_t d = b.rows();
    auto e = rref(hconcat(b, RingMatrix::identity(b.ring(), d)));
    std::vector<std::size_t> extra;
    for (auto c : e.pivots)
        if (c >= b.cols()) extra.push_back(c - b.cols());
    RingMatrix out(b.ring(), d, extra.size());
    for (std::size_t t = 0; t < extra.size(); ++t) out.at(extra[t], t) = 1;
    return out;
}

std::optional<RingMatrix> inverse(const RingMatrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return solve(a, RingMatrix::identity(a.ring(), a.rows()));
}

}  // namespace monocat::fp
