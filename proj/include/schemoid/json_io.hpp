#pragma once

#include "schemoid/scheme.hpp"

#include "json.hpp"

namespace schemoid {

// Fixture formats. Keys are emitted in sorted order and lists in canonical
// index order, so serializing is byte-stable. Parsers throw PreconditionError
// naming the offending field.
//
//   category.json: {"objects": N, "morphisms": [{"src": i, "tgt": j}...],
//                   "identity": [...], "compose": [[g, f, gf], ...]}
//   colored.json:  category.json plus "colors": [c_0, ..., c_{m-1}]
//   scheme.json:   {"points": n, "relations": [[...]], "adjoint": [...]}
//   functor.json:  {"object_sets": [[labels]...], "morphism_maps": [[...]]}

nlohmann::json category_to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const nlohmann::json& j);

nlohmann::json colored_to_json(const ColoredCategory& x);
ColoredCategory colored_from_json(const nlohmann::json& j);

nlohmann::json scheme_to_json(const AssociationScheme& s);
/// With validate = false the axioms and the adjoint field are not checked;
/// callers that report violations themselves use this mode.
AssociationScheme scheme_from_json(const nlohmann::json& j, bool validate = true);

nlohmann::json functor_to_json(const SetFunctor& F);
SetFunctor functor_from_json(const nlohmann::json& j);

/// Single canonical text form: sorted keys (nlohmann's default map order),
/// two-space indentation, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

} // namespace schemoid
