#pragma once

// Representations of a finite acyclic quiver in a serial base category: one
// module per vertex and one morphism per arrow.

#include "monocat/quiver.hpp"
#include "monocat/serial_module.hpp"

#include <optional>
#include <vector>

namespace monocat {

class Representation {
public:
    Representation() = default;
    /// Throws InputError when shapes do not match the quiver.
    Representation(BasePtr base, QuiverPtr quiver, std::vector<SerialModule> modules, std::vector<SerialMorphism> maps);
    static Representation zero(BasePtr base, QuiverPtr quiver);

    const BasePtr& base() const { return base_; }
    const QuiverPtr& quiver() const { return quiver_; }
    const std::vector<SerialModule>& modules() const { return modules_; }
    const SerialModule& module(std::size_t v) const { return modules_[v]; }
    const std::vector<SerialMorphism>& maps() const { return maps_; }
    const SerialMorphism& map(std::size_t a) const { return maps_[a]; }

    bool is_zero() const;
    std::vector<int> length_vector() const;
    /// Chain bases only.
    std::vector<std::vector<int>> partition_vector() const;
    std::string summary() const;

    friend bool operator==(const Representation& a, const Representation& b);

private:
    BasePtr base_;
    QuiverPtr quiver_;
    std::vector<SerialModule> modules_;
    std::vector<SerialMorphism> maps_;
};

Representation direct_sum(const Representation& a, const Representation& b);

class RepMorphism {
public:
    RepMorphism() = default;
    /// Checks every naturality square; throws InputError otherwise.
    static RepMorphism make(Representation source, Representation target, std::vector<SerialMorphism> components);
    /// Skips the naturality check (callers that construct natural maps).
    static RepMorphism unchecked(Representation source, Representation target, std::vector<SerialMorphism> components);
    static RepMorphism identity(const Representation& r);
    static RepMorphism zero(const Representation& s, const Representation& t);

    const Representation& source() const { return source_; }
    const Representation& target() const { return target_; }
    const std::vector<SerialMorphism>& components() const { return components_; }
    const SerialMorphism& component(std::size_t v) const { return components_[v]; }
    bool is_natural() const;
    bool is_zero() const;

private:
    Representation source_, target_;
    std::vector<SerialMorphism> components_;
};

RepMorphism compose(const RepMorphism& g, const RepMorphism& f);
RepMorphism add(const RepMorphism& a, const RepMorphism& b);
RepMorphism scale(const RepMorphism& a, ChainRing::value_type c);
/// Vertexwise isomorphism test.
bool is_iso(const RepMorphism& f);

/// The map out of (+)_{alpha: t(alpha) = v} R_{s(alpha)}, arrows in order.
struct InMap {
    SerialMorphism map;
    BlockLayout layout;                // blocks = incoming arrows
    std::vector<std::size_t> arrows;   // block index -> arrow
};
InMap in_map(const Representation& r, std::size_t v);

bool is_mono(const Representation& r);
/// Vertexwise kernels of the in-maps.
std::vector<SubModule> l1_kopf(const Representation& r);
/// Vertexwise cokernels of the in-maps.
std::vector<QuotientModule> kopf(const Representation& r);

/// Vertex k gets (+)_{paths q ending at k} M_{s(q)}; arrow alpha maps the q
/// block identically onto the alpha.q block. Blocks follow the path order.
Representation f_shriek(const BasePtr& base, const QuiverPtr& quiver, const std::vector<SerialModule>& m);

struct StrippedRepresentation {
    Representation rep;
    std::vector<SerialModule> injective;
};
StrippedRepresentation strip_injective_summands(const Representation& r);

/// Representation over stable_of(base) with injective parts removed and
/// arrow entries reduced.
Representation stable_reduce(const Representation& r);
RepMorphism stable_reduce(const RepMorphism& f);
/// Lift along the fixed stable-hom section.
Representation stable_lift(const Representation& s);

/// If r is mono with injective vertex modules, the J with r = f_!(J).
std::optional<std::vector<SerialModule>> injective_rep_recognize(const Representation& r);

/// Transfer between chain rings of equal Loewy length n <= 3 and equal p.
Representation transfer(const Representation& r, const BasePtr& target);

/// Same labels and coefficients over another base with the same label set.
Representation relabel(const Representation& r, const BasePtr& target);

}  // namespace monocat
