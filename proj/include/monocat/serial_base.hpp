#pragma once

// Serial base categories: the finitely many indecomposable objects of the
// category the representations take values in, with their hom modules and
// composition law.
//
// Every hom module is cyclic over the coefficient chain ring C:
//     Hom(a, b) = C / pi^{L(a,b)} * g_{b<-a}
// and composing canonical generators multiplies by a power of pi:
//     g_{c<-b} o g_{b<-a} = pi^{delta(a,b,c)} * g_{c<-a}.
// A hom element is therefore just a C value reduced mod pi^{L(a,b)}.

#include "monocat/chain_ring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace monocat {

enum class BaseKind { chain, rad2nak, stable };

struct Label {
    std::string name;
    int length = 0;
    int top = 0;     // simple component of the top (0-based)
    int socle = 0;   // simple component of the socle
    bool injective = false;
};

class SerialBase;
using BasePtr = std::shared_ptr<const SerialBase>;

class SerialBase {
public:
    using value_type = ChainRing::value_type;
    static constexpr int no_composite = 1 << 20;

    /// Module category of a chain ring: labels M1..Mn with M_a = R/m^a.
    static BasePtr chain(Arith arith, std::uint32_t p, int n);
    /// Cyclic Nakayama algebra with m simples and rad^2 = 0 over F_p. The
    /// case m = 1 is F_p[x]/x^2 and is returned as the chain base.
    static BasePtr rad2nak(int m, std::uint32_t p);
    /// Injectively stable quotient; throws InputError for a stable parent.
    static BasePtr stable_of(const BasePtr& parent);

    BaseKind kind() const { return kind_; }
    bool abelian() const { return kind_ != BaseKind::stable; }
    const RingPtr& coeff_ring() const { return ring_; }
    std::uint32_t p() const { return ring_->p(); }
    /// Number of simple components (m for rad2nak, 1 for chains).
    int components() const { return components_; }
    int max_length() const;
    std::string name() const;
    bool same_as(const SerialBase& other) const;

    std::size_t label_count() const { return labels_.size(); }
    const Label& label(std::size_t i) const { return labels_[i]; }
    std::optional<std::size_t> find_label(const std::string& name) const;
    std::optional<std::size_t> label_for(int top, int length) const;

    /// L(a,b); 0 means Hom(a,b) = 0.
    int hom_length(std::size_t a, std::size_t b) const { return hom_len_[a * labels_.size() + b]; }
    /// delta(a,b,c), or no_composite when the composite of generators is 0.
    int comp_exponent(std::size_t a, std::size_t b, std::size_t c) const {
        const auto n = labels_.size();
        return delta_[(a * n + b) * n + c];
    }
    /// Composite of g (b -> c) after f (a -> b), as a value of Hom(a, c).
    value_type compose(std::size_t a, std::size_t b, std::size_t c, value_type g, value_type f) const;
    value_type reduce(std::size_t a, std::size_t b, value_type x) const { return ring_->truncate(x, hom_length(a, b)); }

    /// Abelian bases: position (0 = top) in b hit by the top of a under g_{b<-a}.
    int image_position(std::size_t a, std::size_t b) const { return k0_[a * labels_.size() + b]; }

    /// For abelian bases: label of the socle of a, and the injective envelope.
    std::size_t socle_label(std::size_t a) const;
    std::size_t envelope_label(std::size_t a) const;

    // Stable quotient data (kind() == stable).
    const BasePtr& parent() const { return parent_; }
    /// Parent label index of a stable label.
    std::size_t parent_label(std::size_t a) const { return parent_labels_[a]; }
    /// Stable label index of a non-injective parent label.
    std::optional<std::size_t> stable_label(std::size_t parent_index) const;

private:
    SerialBase() = default;
    void build_tables();

    BaseKind kind_ = BaseKind::chain;
    RingPtr ring_;
    int components_ = 1;
    int rad2_m_ = 0;
    std::vector<Label> labels_;
    std::vector<int> hom_len_;
    std::vector<int> delta_;
    std::vector<int> k0_;  // minimal position of the image of the top (abelian only)
    BasePtr parent_;
    std::vector<std::size_t> parent_labels_;
};

/// The part of Hom(a,b) factoring through injectives of the parent base.
struct StableHomBasis {
    int full_length = 0;         // L(a,b) in the parent
    int factoring_exponent = 0;  // composites through injectives span pi^e * Hom(a,b)
    int stable_length = 0;       // min(full_length, factoring_exponent)
    /// Reduction to the stable hom: idempotent and additive.
    ChainRing::value_type reduce(const ChainRing& r, ChainRing::value_type x) const { return r.truncate(x, stable_length); }
    /// The fixed section: the canonical representative (digits >= stable_length are zero).
    ChainRing::value_type lift(ChainRing::value_type x) const { return x; }
};

/// a, b are parent label indices of non-injective labels; base must be abelian.
StableHomBasis stable_hom_basis(const SerialBase& base, std::size_t a, std::size_t b);

}  // namespace monocat
