#pragma once

// Indecomposable mono representations of the Kronecker quiver over
// F_p[x]/x^2, written out from the homogeneous polynomial model.
//
// V_n is the space of degree n forms in y, z with basis y^{n-k} z^k indexed
// by k. The first arrow acts as multiplication by y, the second by z.
// P_n = (V_{n-1} => V_n), I_n = (V_n^* => V_{n-1}^*) with the transposed
// maps, and R = (V_{n-1} => V_n / k q^n) for q = a y + b z.

#include "monocat/representation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace monocat {

enum class KroneckerKind { P, I, R };

/// A point (a : b) of the projective line; the regular family needs it.
struct KroneckerParam {
    std::uint32_t a = 1, b = 0;
    friend bool operator==(const KroneckerParam&, const KroneckerParam&) = default;
};

/// (1 : b) for b in F_p, then (0 : 1).
std::vector<KroneckerParam> projective_line(std::uint32_t p);

KroneckerKind parse_kronecker_kind(const std::string& s);
std::string to_string(KroneckerKind k);

/// The F_p-representation P_n, I_n (n >= 0) or R (n >= 1). Throws InputError
/// on invalid n or a parameter (0 : 0).
Representation kronecker_field_rep(std::uint32_t p, KroneckerKind kind, int n, KroneckerParam param = {});

/// The same representation placed on the stable simple of stable_of(base).
Representation kronecker_stable(const BasePtr& base, KroneckerKind kind, int n, KroneckerParam param = {});

/// The explicit Mimo: vertex 2 gets the target of the field representation
/// on M1 plus one M2 per dimension of the kernel of the in-map, and the M2
/// rows of the arrow maps are the two halves of a retraction of the kernel
/// inclusion. base must be F_p[x]/x^2.
Representation kronecker_family(const BasePtr& base, KroneckerKind kind, int n, KroneckerParam param = {});

}  // namespace monocat
