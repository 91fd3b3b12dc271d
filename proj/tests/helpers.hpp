#pragma once

#include "schemoid/scheme.hpp"

namespace schemoid::testing {

/// Two objects x, y with a single non-identity morphism f : x -> y.
/// Morphism indices: 0 = id_x, 1 = id_y, 2 = f.
inline FiniteCategory arrow_category() {
  FiniteCategory c;
  c.object_count = 2;
  c.morphisms = {{0, 0}, {1, 1}, {0, 1}};
  c.identity_of = {0, 1};
  c.init_compose_table();
  c.set_compose(0, 0, 0);
  c.set_compose(1, 1, 1);
  c.set_compose(2, 0, 2);
  c.set_compose(1, 2, 2);
  return c;
}

/// Discrete category: n objects, identities only.
inline FiniteCategory discrete_category(int n) {
  FiniteCategory c;
  c.object_count = n;
  c.identity_of.resize(n);
  for (int i = 0; i < n; ++i) {
    c.identity_of[i] = i;
    c.morphisms.push_back({i, i});
  }
  c.init_compose_table();
  for (int i = 0; i < n; ++i) c.set_compose(i, i, i);
  return c;
}

} // namespace schemoid::testing
