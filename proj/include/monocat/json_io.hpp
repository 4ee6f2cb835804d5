#pragma once

// JSON files for bases, quivers, modules, morphisms and representations.
// Keys are emitted sorted, so equal values serialize identically.
//
// Morphism entries are {"coeff": digits}, little-endian pi-adic digits of the
// hom coefficient; rows follow the target's part list as written in the file
// and columns the source's. Missing entries or rows are zero.

#include "monocat/enumerate.hpp"
#include "monocat/representation.hpp"

#include <json.hpp>

#include <string>

namespace monocat::io {

using Json = nlohmann::json;

Json to_json(const SerialBase& b);
BasePtr base_from_json(const Json& j);
/// "chain:poly:2:3", "chain:int:2:2", "rad2nak:2:3", "stable:<spec>".
BasePtr parse_base(const std::string& spec);

Json to_json(const Quiver& q);
/// A builtin name or {"vertices": [...], "arrows": [{"name", "from", "to"}]}.
QuiverPtr quiver_from_json(const Json& j);
/// Builtin name, or a path to a JSON quiver file when the name is unknown.
QuiverPtr parse_quiver(const std::string& spec);

Json to_json(const SerialModule& m);
/// Label indices in file order.
std::vector<std::size_t> parts_from_json(const BasePtr& base, const Json& j);
SerialModule module_from_json(const BasePtr& base, const Json& j);

Json to_json(const SerialMorphism& f);
SerialMorphism morphism_from_json(const BasePtr& base, const std::vector<std::size_t>& source_parts,
                                  const std::vector<std::size_t>& target_parts, const Json& j);

Json to_json(const Representation& r);
Representation representation_from_json(const Json& j);
/// {"components": {vertex: morphism}}; source and target are not repeated.
Json to_json(const RepMorphism& f);

Json to_json(const EnumerationReport& r);

/// Parses a file; throws InputError on unreadable or malformed JSON.
Json read_file(const std::string& path);
/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace monocat::io
