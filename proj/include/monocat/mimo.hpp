#pragma once

// The Mimo construction: the minimal right approximation of a representation
// by a monomorphic one, assembled from injective envelopes of the kernels of
// the in-maps.

#include "monocat/representation.hpp"

namespace monocat {

struct MimoResult {
    Representation rep;
    RepMorphism projection;  // rep -> original
};

/// Envelope data per vertex i: an injective J_i and e_i from the source of
/// the in-map at i to J_i that is monic on the kernel of the in-map.
struct EnvelopeData {
    std::vector<SerialModule> modules;
    std::vector<SerialMorphism> maps;
};

/// Minimal envelopes j_i: K_i -> J_i extended along K_i -> source of in_i.
EnvelopeData minimal_envelope_data(const Representation& r);

/// Assembles the result for given envelope data after validating it.
MimoResult mo(const Representation& r, const EnvelopeData& data);
MimoResult mimo(const Representation& r);
/// mimo(stable_lift(s)).
Representation mimo_from_stable(const Representation& s);

}  // namespace monocat
