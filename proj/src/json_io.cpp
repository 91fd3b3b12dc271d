#include "schemoid/json_io.hpp"

#include <algorithm>
#include <tuple>

namespace schemoid {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw PreconditionError(std::string("missing field: ") + key);
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer()) throw PreconditionError(std::string("not an integer: ") + key);
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const char* key) {
  if (!v.is_array()) throw PreconditionError(std::string("not a list: ") + key);
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw PreconditionError(std::string("not an integer in: ") + key);
    out.push_back(e.get<int>());
  }
  return out;
}

} // namespace

json category_to_json(const FiniteCategory& c) {
  json j;
  j["objects"] = c.object_count;
  j["morphisms"] = json::array();
  for (const auto& m : c.morphisms) j["morphisms"].push_back({{"src", m.src}, {"tgt", m.tgt}});
  j["identity"] = c.identity_of;
  j["compose"] = json::array();
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f)
      if (c.composable(g, f)) j["compose"].push_back({g, f, c.compose(g, f)});
  return j;
}

FiniteCategory category_from_json(const json& j) {
  FiniteCategory c;
  c.object_count = int_field(j, "objects");
  if (c.object_count < 0) throw PreconditionError("objects: negative");
  const auto& morphisms = field(j, "morphisms");
  if (!morphisms.is_array()) throw PreconditionError("not a list: morphisms");
  for (const auto& m : morphisms) {
    int src = int_field(m, "src"), tgt = int_field(m, "tgt");
    if (src < 0 || src >= c.object_count || tgt < 0 || tgt >= c.object_count)
      throw PreconditionError("morphisms: endpoint out of range");
    c.morphisms.push_back({src, tgt});
  }
  c.identity_of = int_list(field(j, "identity"), "identity");
  if (static_cast<int>(c.identity_of.size()) != c.object_count)
    throw PreconditionError("identity: wrong length");
  for (int f : c.identity_of)
    if (f < 0 || f >= c.morphism_count()) throw PreconditionError("identity: out of range");
  c.init_compose_table();
  const auto& compose = field(j, "compose");
  if (!compose.is_array()) throw PreconditionError("not a list: compose");
  for (const auto& t : compose) {
    auto triple = int_list(t, "compose");
    if (triple.size() != 3) throw PreconditionError("compose: entry is not a triple");
    auto [g, f, gf] = std::tuple(triple[0], triple[1], triple[2]);
    if (g < 0 || g >= c.morphism_count() || f < 0 || f >= c.morphism_count() || gf < 0 ||
        gf >= c.morphism_count())
      throw PreconditionError("compose: index out of range");
    if (!c.composable(g, f)) throw PreconditionError("compose: pair is not composable");
    c.set_compose(g, f, gf);
  }
  return c;
}

json colored_to_json(const ColoredCategory& x) {
  json j = category_to_json(x.base);
  j["colors"] = x.color_of;
  return j;
}

ColoredCategory colored_from_json(const json& j) {
  auto c = category_from_json(j);
  auto colors = int_list(field(j, "colors"), "colors");
  int color_count = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  return ColoredCategory(std::move(c), std::move(colors), color_count);
}

json scheme_to_json(const AssociationScheme& s) {
  json j;
  j["points"] = s.point_count;
  j["relations"] = json::array();
  for (int x = 0; x < s.point_count; ++x) {
    json row = json::array();
    for (int y = 0; y < s.point_count; ++y) row.push_back(s.rel(x, y));
    j["relations"].push_back(std::move(row));
  }
  j["adjoint"] = scheme_constants(s).adjoint;
  return j;
}

AssociationScheme scheme_from_json(const json& j, bool validate) {
  AssociationScheme s;
  s.point_count = int_field(j, "points");
  if (s.point_count <= 0) throw PreconditionError("points: must be positive");
  const auto& rows = field(j, "relations");
  if (!rows.is_array() || static_cast<int>(rows.size()) != s.point_count)
    throw PreconditionError("relations: wrong row count");
  for (const auto& row : rows) {
    auto r = int_list(row, "relations");
    if (static_cast<int>(r.size()) != s.point_count)
      throw PreconditionError("relations: wrong row length");
    for (int v : r) {
      if (v < 0) throw PreconditionError("relations: negative entry");
      s.relation_count = std::max(s.relation_count, v + 1);
      s.relation_of.push_back(v);
    }
  }
  if (validate) {
    auto report = validate_scheme(s);
    if (!report.ok()) throw PreconditionError("relations: " + report.summary());
    auto adjoint = int_list(field(j, "adjoint"), "adjoint");
    if (adjoint != scheme_constants(s).adjoint)
      throw PreconditionError("adjoint: inconsistent with relations");
  }
  return s;
}

json functor_to_json(const SetFunctor& F) {
  json j;
  j["object_sets"] = F.object_sets;
  j["morphism_maps"] = F.morphism_maps;
  return j;
}

SetFunctor functor_from_json(const json& j) {
  SetFunctor F;
  const auto& sets = field(j, "object_sets");
  if (!sets.is_array()) throw PreconditionError("not a list: object_sets");
  for (const auto& labels : sets) {
    if (!labels.is_array()) throw PreconditionError("object_sets: entry is not a list");
    std::vector<std::string> out;
    for (const auto& l : labels) {
      if (!l.is_string()) throw PreconditionError("object_sets: label is not a string");
      out.push_back(l.get<std::string>());
    }
    F.object_sets.push_back(std::move(out));
  }
  const auto& maps = field(j, "morphism_maps");
  if (!maps.is_array()) throw PreconditionError("not a list: morphism_maps");
  for (const auto& m : maps) F.morphism_maps.push_back(int_list(m, "morphism_maps"));
  return F;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace schemoid
