#pragma once

#include "schemoid/scheme.hpp"

namespace schemoid {

/// An abstract simplicial complex on vertices 0..vertex_count-1. The empty
/// face is always present (index 0) so that the face poset has a minimum.
/// Faces are sorted vertex lists, ordered by (size, bitmask).
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<int>> faces;

  /// Downward closure of the generating faces (plus the empty face).
  /// Vertices not covered by any generator are isolated-but-listed.
  static SimplicialComplex closure(int vertex_count, const std::vector<std::vector<int>>& generating);

  ValidationReport validate() const;
  /// Index in `faces`, or -1 when absent.
  int face_index(const std::vector<int>& face) const;
  bool has_edge(int i, int j) const;
  /// The 2-element faces, each as a sorted pair.
  std::vector<std::pair<int, int>> edges() const;
};

/// Every morphism its own color.
ColoredCategory discrete_schemoid(const FiniteCategory& c);

/// Which group element labels the unique morphism x -> y. The two
/// conventions produce isomorphic colored categories (object map x -> x⁻¹).
enum class GroupColorConvention {
  TargetOverSource, // y x⁻¹
  SourceIntoTarget, // x⁻¹ y
};

/// Objects are the group elements, one morphism per ordered pair (x, y)
/// (index x * order + y), colored by the convention above.
ColoredCategory group_schemoid(const FiniteGroup& g,
                               GroupColorConvention conv = GroupColorConvention::TargetOverSource);

/// The face poset of K under inclusion; the color of an inclusion t ⊆ v is
/// the face v \ t. Colors are indexed like the faces, empty face first.
ColoredCategory simplicial_schemoid(const SimplicialComplex& k);

/// One-object presentation with a generator per vertex and a commutation
/// relation per edge of K.
CategoryPresentation trace_monoid_presentation(const SimplicialComplex& k);

/// Two objects x = 0, y = 1; morphisms id_x, id_y and an involution f on y;
/// the coloring {id_x, f}, {id_y}. F sends everything to the identity of the
/// three-point set U; eta and lambda form the cospan lambda : F -> F <- F : eta
/// whose objectwise pullback is not color-preserving.
struct PullbackFixture {
  ColoredCategory x;
  SetFunctor F;
  NaturalTransformation eta, lambda;
};

PullbackFixture pullback_counterexample();

/// Three objects 00, 01, 10 with mutually inverse a : 00 -> 01, b : 01 -> 00
/// and c : 00 -> 10, d : 01 -> 10 (d∘a = c, c∘b = d). Six colors: each
/// identity a singleton, {a, b}, {c}, {d}; this coloring is not a schemoid
/// and not natural. u embeds the objects into the pair category of the
/// two-bit binary Hamming scheme as the points 00, 01, 10; tau is the color
/// {a, b}, which lands in odd distance 1.
struct PropAppFixture {
  ColoredCategory x;
  ColoredCategory hamming;
  CatFunctor u;
  int tau = 0;
};

PropAppFixture prop_app_example();

/// Marker for the one-object category freely generated by a single
/// endomorphism sigma, colored by word length. The category is infinite and
/// never materializes as a FiniteCategory; its Ext groups are computed by
/// koszul_ext from the action of sigma on a module.
struct NatLenSymbol {
  std::string description = "free category on one endomorphism, length coloring";
};

inline NatLenSymbol nat_len_symbol() { return {}; }

/// Finite stand-in for structure-constant tests: objects 0..max_length with
/// a unique morphism i -> j for i <= j, colored by j - i.
ColoredCategory nat_len_truncation(int max_length);

/// Brute-force isomorphism search over object bijections with backtracking
/// morphism assignment; small categories only.
std::optional<CatFunctor> find_category_isomorphism(const FiniteCategory& a,
                                                    const FiniteCategory& b);

struct ColoredIsomorphism {
  CatFunctor functor;
  std::vector<int> color_map; // bijective
};

/// As above, additionally requiring the morphism bijection to induce a
/// bijection of colors.
std::optional<ColoredIsomorphism> find_colored_isomorphism(const ColoredCategory& a,
                                                           const ColoredCategory& b);

} // namespace schemoid
