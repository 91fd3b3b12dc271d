#include "schemoid/fincat.hpp"

#include <sstream>

namespace schemoid {

FiniteCategory FiniteCategory::terminal() {
  FiniteCategory c;
  c.object_count = 1;
  c.morphisms = {{0, 0}};
  c.identity_of = {0};
  c.init_compose_table();
  c.set_compose(0, 0, 0);
  return c;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    os << " [" << v.rule;
    for (int d : v.data) os << " " << d;
    if (!v.detail.empty()) os << " : " << v.detail;
    os << "]";
  }
  return os.str();
}

ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport report;
  const int m = c.morphism_count();

  if (static_cast<int>(c.identity_of.size()) != c.object_count) {
    report.add("structure", {}, "identity_of size != object_count");
    return report;
  }
  if (c.compose_table.size() != static_cast<size_t>(m) * m) {
    report.add("structure", {}, "compose_table size != morphisms^2");
    return report;
  }
  for (int x = 0; x < c.object_count; ++x) {
    int e = c.identity_of[x];
    if (e < 0 || e >= m || c.src(e) != x || c.tgt(e) != x)
      report.add("identity-endpoints", {x, e});
  }
  for (int f = 0; f < m; ++f) {
    if (c.src(f) < 0 || c.src(f) >= c.object_count || c.tgt(f) < 0 || c.tgt(f) >= c.object_count)
      report.add("endpoints", {f});
  }
  if (!report.ok()) return report;

  // compose_table total on composable pairs, undefined elsewhere
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int gf = c.compose(g, f);
      if (c.composable(g, f)) {
        if (gf < 0 || gf >= m)
          report.add("compose-undefined", {g, f});
        else if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
          report.add("compose-endpoints", {g, f, gf});
      } else if (gf != -1) {
        report.add("compose-spurious", {g, f, gf});
      }
    }
  if (!report.ok()) return report;

  for (int f = 0; f < m; ++f) {
    int l = c.compose(c.identity_of[c.tgt(f)], f);
    if (l != f) report.add("left-identity", {f, l});
    int r = c.compose(f, c.identity_of[c.src(f)]);
    if (r != f) report.add("right-identity", {f, r});
  }

  // associativity over composable triples
  std::vector<std::vector<int>> out_of(c.object_count); // morphisms by source
  for (int f = 0; f < m; ++f) out_of[c.src(f)].push_back(f);
  for (int f = 0; f < m; ++f)
    for (int g : out_of[c.tgt(f)])
      for (int h : out_of[c.tgt(g)]) {
        int a = c.compose(h, c.compose(g, f));
        int b = c.compose(c.compose(h, g), f);
        if (a != b) report.add("associativity", {h, g, f, a, b});
      }
  return report;
}

std::map<std::string, std::string> SetFunctor::label_map(const FiniteCategory& c, int f) const {
  std::map<std::string, std::string> out;
  int x = c.src(f), y = c.tgt(f);
  const auto& map = morphism_maps[f];
  for (size_t i = 0; i < map.size(); ++i) out[object_sets[x][i]] = object_sets[y][map[i]];
  return out;
}

bool same_function(const FiniteCategory& c, const SetFunctor& F, int f, const SetFunctor& G, int g) {
  return F.label_map(c, f) == G.label_map(c, g);
}

ValidationReport check_functor(const FiniteCategory& c, const SetFunctor& F) {
  ValidationReport report;
  const int m = c.morphism_count();
  if (static_cast<int>(F.object_sets.size()) != c.object_count) {
    report.add("structural", {}, "object_sets size mismatch");
    return report;
  }
  if (static_cast<int>(F.morphism_maps.size()) != m) {
    report.add("structural", {}, "morphism_maps size mismatch");
    return report;
  }
  for (int f = 0; f < m; ++f) {
    const auto& map = F.morphism_maps[f];
    if (static_cast<int>(map.size()) != F.set_size(c.src(f))) {
      report.add("structural", {f}, "map domain size mismatch");
      return report;
    }
    for (int v : map)
      if (v < 0 || v >= F.set_size(c.tgt(f))) {
        report.add("structural", {f}, "map value out of range");
        return report;
      }
  }
  for (int x = 0; x < c.object_count; ++x) {
    const auto& map = F.morphism_maps[c.identity_of[x]];
    for (size_t i = 0; i < map.size(); ++i)
      if (map[i] != static_cast<int>(i)) report.add("functor-identity", {x});
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (!c.composable(g, f)) continue;
      int gf = c.compose(g, f);
      const auto& mf = F.morphism_maps[f];
      const auto& mg = F.morphism_maps[g];
      const auto& mgf = F.morphism_maps[gf];
      for (size_t i = 0; i < mf.size(); ++i)
        if (mg[mf[i]] != mgf[i]) {
          report.add("functor-compose", {g, f, gf});
          break;
        }
    }
  return report;
}

ValidationReport check_natural(const FiniteCategory& c, const SetFunctor& F, const SetFunctor& G,
                               const NaturalTransformation& eta) {
  ValidationReport report;
  if (static_cast<int>(eta.components.size()) != c.object_count) {
    report.add("structural", {}, "component missing at some object");
    return report;
  }
  for (int x = 0; x < c.object_count; ++x) {
    if (static_cast<int>(eta.components[x].size()) != F.set_size(x)) {
      report.add("structural", {x}, "component domain size mismatch");
      return report;
    }
    for (int v : eta.components[x])
      if (v < 0 || v >= G.set_size(x)) {
        report.add("structural", {x}, "component value out of range");
        return report;
      }
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    int x = c.src(f), y = c.tgt(f);
    for (int i = 0; i < F.set_size(x); ++i) {
      int via_g = G.morphism_maps[f][eta.components[x][i]];
      int via_f = eta.components[y][F.morphism_maps[f][i]];
      if (via_g != via_f) {
        report.add("naturality", {f, i});
        break;
      }
    }
  }
  return report;
}

ValidationReport check_cat_functor(const FiniteCategory& dom, const FiniteCategory& cod,
                                   const CatFunctor& u) {
  ValidationReport report;
  if (static_cast<int>(u.object_map.size()) != dom.object_count ||
      static_cast<int>(u.morphism_map.size()) != dom.morphism_count()) {
    report.add("structural", {}, "map size mismatch");
    return report;
  }
  for (int f = 0; f < dom.morphism_count(); ++f) {
    int uf = u.morphism_map[f];
    if (uf < 0 || uf >= cod.morphism_count()) {
      report.add("structural", {f}, "morphism image out of range");
      return report;
    }
    if (cod.src(uf) != u.object_map[dom.src(f)] || cod.tgt(uf) != u.object_map[dom.tgt(f)])
      report.add("functor-endpoints", {f, uf});
  }
  for (int x = 0; x < dom.object_count; ++x)
    if (u.morphism_map[dom.identity_of[x]] != cod.identity_of[u.object_map[x]])
      report.add("functor-identity", {x});
  for (int g = 0; g < dom.morphism_count(); ++g)
    for (int f = 0; f < dom.morphism_count(); ++f) {
      if (!dom.composable(g, f)) continue;
      int lhs = u.morphism_map[dom.compose(g, f)];
      int rhs = cod.compose(u.morphism_map[g], u.morphism_map[f]);
      if (lhs != rhs) report.add("functor-compose", {g, f});
    }
  return report;
}

CatFunctor compose_functors(const CatFunctor& u, const CatFunctor& v) {
  CatFunctor w;
  w.object_map.reserve(u.object_map.size());
  for (int x : u.object_map) w.object_map.push_back(v.object_map[x]);
  w.morphism_map.reserve(u.morphism_map.size());
  for (int f : u.morphism_map) w.morphism_map.push_back(v.morphism_map[f]);
  return w;
}

} // namespace schemoid
