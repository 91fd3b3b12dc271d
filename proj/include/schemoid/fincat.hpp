#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schemoid {

/// Error thrown when an operation's precondition fails; carries a witness
/// description of the offending data.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Error thrown when a computation cannot decide or does not support the input
/// (e.g. an undecided word problem or a multi-object quotient).
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

struct Morphism {
  int src = 0;
  int tgt = 0;
};

/// A finite small category with dense integer indices for objects and
/// morphisms and an explicit composition table.
struct FiniteCategory {
  int object_count = 0;
  std::vector<Morphism> morphisms;
  std::vector<int> identity_of;       // object -> morphism index
  std::vector<int32_t> compose_table; // g * M + f -> g∘f, -1 when tgt(f) != src(g)

  int morphism_count() const { return static_cast<int>(morphisms.size()); }
  int src(int f) const { return morphisms[f].src; }
  int tgt(int f) const { return morphisms[f].tgt; }
  bool composable(int g, int f) const { return morphisms[f].tgt == morphisms[g].src; }

  int compose(int g, int f) const {
    return compose_table[static_cast<size_t>(g) * morphisms.size() + f];
  }
  void set_compose(int g, int f, int gf) {
    compose_table[static_cast<size_t>(g) * morphisms.size() + f] = gf;
  }
  void init_compose_table() {
    compose_table.assign(morphisms.size() * morphisms.size(), -1);
  }

  bool is_identity(int f) const {
    int x = morphisms[f].src;
    return morphisms[f].tgt == x && identity_of[x] == f;
  }

  /// One object, one (identity) morphism.
  static FiniteCategory terminal();
};

struct Violation {
  std::string rule;       // which law failed
  std::vector<int> data;  // indices involved
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::vector<int> data, std::string detail = {}) {
    violations.push_back({std::move(rule), std::move(data), std::move(detail)});
  }
  std::string summary() const;
};

/// Checks identity laws, associativity and that compose_table is defined
/// exactly on composable pairs. Violations are report content, not failures.
ValidationReport validate_category(const FiniteCategory& c);

/// A finite Set-valued functor. Elements are opaque string labels; morphism
/// maps are positional (index in source object set -> index in target set).
struct SetFunctor {
  std::vector<std::vector<std::string>> object_sets;
  std::vector<std::vector<int>> morphism_maps;

  int set_size(int x) const { return static_cast<int>(object_sets[x].size()); }
  const std::string& label(int x, int i) const { return object_sets[x][i]; }

  /// The map of morphism f as a label-level graph, for equality tests that do
  /// not depend on element ordering.
  std::map<std::string, std::string> label_map(const FiniteCategory& c, int f) const;
};

/// Two functions are equal pointwise on labels: same domain label set, same
/// codomain labels assigned.
bool same_function(const FiniteCategory& c, const SetFunctor& F, int f, const SetFunctor& G, int g);

ValidationReport check_functor(const FiniteCategory& c, const SetFunctor& F);

struct NaturalTransformation {
  // components[x][i] = index in G(x) of the image of element i of F(x)
  std::vector<std::vector<int>> components;
};

ValidationReport check_natural(const FiniteCategory& c, const SetFunctor& F, const SetFunctor& G,
                               const NaturalTransformation& eta);

/// A functor between finite categories, as index maps.
struct CatFunctor {
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

ValidationReport check_cat_functor(const FiniteCategory& dom, const FiniteCategory& cod,
                                   const CatFunctor& u);

/// Composite v∘u of functors u : A -> B and v : B -> C.
CatFunctor compose_functors(const CatFunctor& u, const CatFunctor& v);

} // namespace schemoid
