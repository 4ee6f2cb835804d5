#include "monocat/kronecker.hpp"

#include "monocat/error.hpp"
#include "monocat/fp_linalg.hpp"

#include <memory>

namespace monocat {

namespace {

using value_type = ChainRing::value_type;

// Multiplication by y (or z) from V_{n-1} to V_n.
RingMatrix times(const RingPtr& f, int n, bool by_z) {
    RingMatrix m(f, static_cast<std::size_t>(n + 1), static_cast<std::size_t>(std::max(n, 0)));
    for (int k = 0; k < n; ++k) m.at(static_cast<std::size_t>(k + (by_z ? 1 : 0)), static_cast<std::size_t>(k)) = 1;
    return m;
}

RingMatrix stack(const RingMatrix& top, const RingMatrix& bottom) {
    return fp::hconcat(top.transpose(), bottom.transpose()).transpose();
}

RingMatrix block(const RingMatrix& m, std::size_t r0, std::size_t rows, std::size_t c0, std::size_t cols) {
    RingMatrix out(m.ring(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(r0 + i, c0 + j);
    return out;
}

KroneckerParam normalize(std::uint32_t p, KroneckerParam q) {
    const auto f = ChainRing::make(Arith::integer, p, 1);
    const value_type a = q.a % p, b = q.b % p;
    if (a == 0 && b == 0) throw InputError("Kronecker parameter (0:0) is not a point of P^1");
    if (a == 0) return {0, 1};
    return {1, f->mul(b, f->inverse(a))};
}

// Coordinates of q^n = (a y + b z)^n.
std::vector<value_type> power_form(const RingPtr& f, KroneckerParam q, int n) {
    std::vector<value_type> c{1};
    for (int step = 0; step < n; ++step) {
        std::vector<value_type> next(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] = f->add(next[k], f->mul(c[k], q.a));
            next[k + 1] = f->add(next[k + 1], f->mul(c[k], q.b));
        }
        c = std::move(next);
    }
    return c;
}

// The two arrow matrices of the field representation and the kernel
// inclusion of its in-map (columns of the kernel inside source + source).
struct Model {
    RingMatrix y, z, iota;
};

Model model(std::uint32_t p, KroneckerKind kind, int n, KroneckerParam param) {
    const auto f = ChainRing::make(Arith::integer, p, 1);
    if (n < 0 || (kind == KroneckerKind::R && n < 1))
        throw InputError("Kronecker index out of range for " + to_string(kind));
    switch (kind) {
    case KroneckerKind::P: {
        // 0 -> V_{n-2} -(-z; y)-> V_{n-1} + V_{n-1}
        auto y = times(f, n, false), z = times(f, n, true);
        RingMatrix iota(f, 2 * static_cast<std::size_t>(std::max(n, 0)), static_cast<std::size_t>(std::max(n - 1, 0)));
        if (n >= 2) {
            auto zz = times(f, n - 1, true), yy = times(f, n - 1, false);
            for (std::size_t i = 0; i < zz.rows(); ++i)
                for (std::size_t j = 0; j < zz.cols(); ++j) {
                    iota.at(i, j) = f->neg(zz.at(i, j));
                    iota.at(zz.rows() + i, j) = yy.at(i, j);
                }
        }
        return {y, z, iota};
    }
    case KroneckerKind::I: {
        // 0 -> V*_{n+1} -(-z*; y*)-> V*_n + V*_n
        auto y = times(f, n, false).transpose(), z = times(f, n, true).transpose();
        auto ys = times(f, n + 1, false).transpose(), zs = times(f, n + 1, true).transpose();
        RingMatrix iota(f, 2 * ys.rows(), ys.cols());
        for (std::size_t i = 0; i < ys.rows(); ++i)
            for (std::size_t j = 0; j < ys.cols(); ++j) {
                iota.at(i, j) = f->neg(zs.at(i, j));
                iota.at(ys.rows() + i, j) = ys.at(i, j);
            }
        return {y, z, iota};
    }
    case KroneckerKind::R: {
        const auto q = normalize(p, param);
        const auto pn = power_form(f, q, n);
        RingMatrix col(f, static_cast<std::size_t>(n + 1), 1);
        for (std::size_t k = 0; k < pn.size(); ++k) col.at(k, 0) = pn[k];
        // Quotient V_n -> V_n / k q^n in the coordinates of a complement.
        const auto comp = fp::complement(col);
        const auto change = fp::inverse(fp::hconcat(comp, col));
        const auto quot = block(*change, 0, comp.cols(), 0, static_cast<std::size_t>(n + 1));
        auto y = quot * times(f, n, false), z = quot * times(f, n, true);
        // 0 -> V_{n-2} + k q^{n-1} -[[-z, a q^{n-1}], [y, b q^{n-1}]]-> V_{n-1} + V_{n-1}
        const auto pn1 = power_form(f, q, n - 1);
        const std::size_t m = static_cast<std::size_t>(n);
        RingMatrix iota(f, 2 * m, m);
        if (n >= 2) {
            auto zz = times(f, n - 1, true), yy = times(f, n - 1, false);
            for (std::size_t i = 0; i < zz.rows(); ++i)
                for (std::size_t j = 0; j < zz.cols(); ++j) {
                    iota.at(i, j) = f->neg(zz.at(i, j));
                    iota.at(m + i, j) = yy.at(i, j);
                }
        }
        for (std::size_t k = 0; k < m; ++k) {
            iota.at(k, m - 1) = f->mul(q.a, pn1[k]);
            iota.at(m + k, m - 1) = f->mul(q.b, pn1[k]);
        }
        return {y, z, iota};
    }
    }
    throw InputError("unknown Kronecker kind");
}

QuiverPtr kronecker_quiver() { return std::make_shared<const Quiver>(Quiver::builtin("kronecker")); }

Representation place(const BasePtr& base, std::size_t label, const RingMatrix& y, const RingMatrix& z) {
    const SerialModule src(base, std::vector<std::size_t>(y.cols(), label));
    const SerialModule tgt(base, std::vector<std::size_t>(y.rows(), label));
    auto lift = [&](const RingMatrix& m) {
        RingMatrix out(base->coeff_ring(), m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
        return SerialMorphism(src, tgt, out);
    };
    return Representation(base, kronecker_quiver(), {src, tgt}, {lift(y), lift(z)});
}

void require_dual_numbers(const BasePtr& base) {
    if (base->kind() != BaseKind::chain || base->max_length() != 2 || base->coeff_ring()->arith() != Arith::polynomial)
        throw InputError("Kronecker families need the base F_p[x]/x^2, got " + base->name());
}

}  // namespace

std::vector<KroneckerParam> projective_line(std::uint32_t p) {
    std::vector<KroneckerParam> out;
    for (std::uint32_t b = 0; b < p; ++b) out.push_back({1, b});
    out.push_back({0, 1});
    return out;
}

KroneckerKind parse_kronecker_kind(const std::string& s) {
    if (s == "P") return KroneckerKind::P;
    if (s == "I") return KroneckerKind::I;
    if (s == "R") return KroneckerKind::R;
    throw InputError("Kronecker family must be P, I or R, got '" + s + "'");
}

std::string to_string(KroneckerKind k) {
    switch (k) {
    case KroneckerKind::P: return "P";
    case KroneckerKind::I: return "I";
    case KroneckerKind::R: return "R";
    }
    return "?";
}

Representation kronecker_field_rep(std::uint32_t p, KroneckerKind kind, int n, KroneckerParam param) {
    const auto field = SerialBase::chain(Arith::integer, p, 1);
    const auto m = model(p, kind, n, param);
    return place(field, 0, m.y, m.z);
}

Representation kronecker_stable(const BasePtr& base, KroneckerKind kind, int n, KroneckerParam param) {
    require_dual_numbers(base);
    const auto stable = SerialBase::stable_of(base);
    const auto m = model(base->p(), kind, n, param);
    return place(stable, *stable->stable_label(*base->find_label("M1")), m.y, m.z);
}

Representation kronecker_family(const BasePtr& base, KroneckerKind kind, int n, KroneckerParam param) {
    require_dual_numbers(base);
    const auto m = model(base->p(), kind, n, param);
    const auto& f = m.y.ring();
    const std::size_t u = m.y.cols(), w = m.y.rows(), k = m.iota.cols();
    RingMatrix r(f, k, 2 * u);
    if (k > 0) {
        auto rt = fp::solve(m.iota.transpose(), RingMatrix::identity(f, k));
        if (!rt) throw std::logic_error("kronecker_family: kernel inclusion has no retraction");
        r = rt->transpose();
    }
    const auto m1 = *base->find_label("M1"), m2 = *base->find_label("M2");
    std::vector<std::size_t> src(u, m1), tgt(w, m1);
    tgt.insert(tgt.end(), k, m2);
    std::vector<SerialMorphism> maps;
    for (int arrow = 0; arrow < 2; ++arrow) {
        const auto top = arrow == 0 ? m.y : m.z;
        const auto low = block(r, 0, k, arrow == 0 ? 0 : u, u);
        const auto full = stack(top, low);
        RingMatrix e(base->coeff_ring(), full.rows(), full.cols());
        for (std::size_t i = 0; i < full.rows(); ++i)
            for (std::size_t j = 0; j < full.cols(); ++j) e.at(i, j) = full.at(i, j);
        maps.push_back(SerialMorphism::from_unsorted(base, src, tgt, e));
    }
    return Representation(base, kronecker_quiver(), {maps[0].source(), maps[0].target()}, maps);
}

}  // namespace monocat
