#include "monocat/serial_base.hpp"

#include "monocat/error.hpp"

#include <algorithm>

namespace monocat {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

BasePtr SerialBase::chain(Arith arith, std::uint32_t p, int n) {
    auto b = std::shared_ptr<SerialBase>(new SerialBase());
    b->kind_ = BaseKind::chain;
    b->ring_ = ChainRing::make(arith, p, n);
    b->components_ = 1;
    for (int a = 1; a <= n; ++a) b->labels_.push_back({"M" + std::to_string(a), a, 0, 0, a == n});
    b->build_tables();
    return b;
}

BasePtr SerialBase::rad2nak(int m, std::uint32_t p) {
    if (m < 1) throw InputError("rad2nak needs m >= 1");
    if (m == 1) return chain(Arith::polynomial, p, 2);
    auto b = std::shared_ptr<SerialBase>(new SerialBase());
    b->kind_ = BaseKind::rad2nak;
    b->ring_ = ChainRing::make(Arith::integer, p, 1);
    b->components_ = m;
    b->rad2_m_ = m;
    for (int i = 0; i < m; ++i) b->labels_.push_back({"S" + std::to_string(i + 1), 1, i, i, false});
    for (int i = 0; i < m; ++i) b->labels_.push_back({"P" + std::to_string(i + 1), 2, i, (i + 1) % m, true});
    b->build_tables();
    return b;
}

BasePtr SerialBase::stable_of(const BasePtr& parent) {
    if (!parent) throw InputError("stable_of: null base");
    if (!parent->abelian()) throw InputError("stable_of: the parent base is already stable");
    auto b = std::shared_ptr<SerialBase>(new SerialBase());
    b->kind_ = BaseKind::stable;
    b->ring_ = parent->ring_;
    b->components_ = parent->components_;
    b->parent_ = parent;
    for (std::size_t i = 0; i < parent->label_count(); ++i) {
        if (parent->label(i).injective) continue;
        b->labels_.push_back(parent->label(i));
        b->parent_labels_.push_back(i);
    }
    const std::size_t k = b->labels_.size();
    b->hom_len_.assign(k * k, 0);
    b->delta_.assign(k * k * k, no_composite);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < k; ++c)
            b->hom_len_[a * k + c] = stable_hom_basis(*parent, b->parent_labels_[a], b->parent_labels_[c]).stable_length;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t m = 0; m < k; ++m)
            for (std::size_t c = 0; c < k; ++c)
                b->delta_[(a * k + m) * k + c] =
                    parent->comp_exponent(b->parent_labels_[a], b->parent_labels_[m], b->parent_labels_[c]);
    return b;
}

// Positions model: position k of a uniserial b lies in component
// (top_b + k) mod m. The canonical generator a -> b sends the top of a to the
// smallest position k0 with the right component whose tail fits into a.
void SerialBase::build_tables() {
    const std::size_t k = labels_.size();
    const int m = components_;
    hom_len_.assign(k * k, 0);
    k0_.assign(k * k, -1);
    delta_.assign(k * k * k, no_composite);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const auto& la = labels_[a];
            const auto& lb = labels_[b];
            int count = 0;
            for (int pos = 0; pos < lb.length; ++pos) {
                if (mod(lb.top + pos, m) != la.top) continue;
                if (lb.length - pos > la.length) continue;
                if (k0_[a * k + b] < 0) k0_[a * k + b] = pos;
                ++count;
            }
            hom_len_[a * k + b] = std::min(count, ring_->n());
        }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c) {
                if (hom_length(a, b) == 0 || hom_length(b, c) == 0 || hom_length(a, c) == 0) continue;
                const int k1 = k0_[a * k + b], k2 = k0_[b * k + c], k3 = k0_[a * k + c];
                if (k1 + k2 >= labels_[c].length) continue;
                delta_[(a * k + b) * k + c] = k1 + k2 - k3;
            }
}

int SerialBase::max_length() const {
    int m = 0;
    for (const auto& l : labels_) m = std::max(m, l.length);
    return m;
}

std::string SerialBase::name() const {
    switch (kind_) {
        case BaseKind::chain:
            return std::string("chain:") + (ring_->arith() == Arith::integer ? "int:" : "poly:") + std::to_string(ring_->p()) +
                   ":" + std::to_string(ring_->n());
        case BaseKind::rad2nak:
            return "rad2nak:" + std::to_string(rad2_m_) + ":" + std::to_string(ring_->p());
        case BaseKind::stable:
            return "stable:" + parent_->name();
    }
    return {};
}

bool SerialBase::same_as(const SerialBase& other) const { return this == &other || name() == other.name(); }

std::optional<std::size_t> SerialBase::find_label(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i].name == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> SerialBase::label_for(int top, int length) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i].top == top && labels_[i].length == length) return i;
    return std::nullopt;
}

SerialBase::value_type SerialBase::compose(std::size_t a, std::size_t b, std::size_t c, value_type g, value_type f) const {
    if (g == 0 || f == 0) return 0;
    const int d = comp_exponent(a, b, c);
    if (d == no_composite) return 0;
    return ring_->truncate(ring_->shift_up(ring_->mul(g, f), d), hom_length(a, c));
}

std::size_t SerialBase::socle_label(std::size_t a) const {
    if (!abelian()) throw UnsupportedError("socle needs an abelian base");
    auto s = label_for(labels_[a].socle, 1);
    return *s;
}

std::size_t SerialBase::envelope_label(std::size_t a) const {
    if (!abelian()) throw UnsupportedError("injective envelope needs an abelian base");
    for (std::size_t j = 0; j < labels_.size(); ++j)
        if (labels_[j].injective && labels_[j].socle == labels_[a].socle) return j;
    throw UnsupportedError("base is not self-injective");
}

std::optional<std::size_t> SerialBase::stable_label(std::size_t parent_index) const {
    for (std::size_t i = 0; i < parent_labels_.size(); ++i)
        if (parent_labels_[i] == parent_index) return i;
    return std::nullopt;
}

StableHomBasis stable_hom_basis(const SerialBase& base, std::size_t a, std::size_t b) {
    if (!base.abelian()) throw UnsupportedError("stable_hom_basis needs an abelian parent base");
    StableHomBasis s;
    s.full_length = base.hom_length(a, b);
    s.factoring_exponent = s.full_length;
    for (std::size_t j = 0; j < base.label_count(); ++j) {
        if (!base.label(j).injective) continue;
        if (base.hom_length(a, j) == 0 || base.hom_length(j, b) == 0) continue;
        const int d = base.comp_exponent(a, j, b);
        if (d != SerialBase::no_composite) s.factoring_exponent = std::min(s.factoring_exponent, d);
    }
    s.stable_length = std::min(s.full_length, s.factoring_exponent);
    return s;
}

}  // namespace monocat
