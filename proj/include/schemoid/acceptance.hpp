#pragma once

#include "schemoid/builders.hpp"
#include "schemoid/cohomology.hpp"
#include "schemoid/toposlab.hpp"

#include "json.hpp"

namespace schemoid {

struct AcceptanceRow {
  std::string name;
  bool pass = false;
  nlohmann::json detail; // computed values backing the verdict
};

/// The regression table: one row per verified claim, each exact (no
/// tolerances). Deterministic; rows are always emitted in the same order.
std::vector<AcceptanceRow> acceptance_table(CompletionCaps caps = {});

/// Built-in association schemes with at most max_points points, as
/// (name, scheme) pairs in a fixed order.
std::vector<std::pair<std::string, AssociationScheme>> builtin_schemes(int max_points);

} // namespace schemoid
