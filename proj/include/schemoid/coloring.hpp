#pragma once

#include "schemoid/fincat.hpp"

#include <optional>

namespace schemoid {

/// A finite category with a surjective coloring of its morphisms.
/// Construction validates the partition property; a category with no
/// morphisms is rejected (every object carries an identity).
struct ColoredCategory {
  FiniteCategory base;
  std::vector<int> color_of; // morphism -> color
  int color_count = 0;

  ColoredCategory() = default;
  ColoredCategory(FiniteCategory base_, std::vector<int> color_of_, int color_count_);

  int color(int f) const { return color_of[f]; }
  /// Morphisms of each color, in index order.
  std::vector<std::vector<int>> fibers() const;
};

/// A partition of 0..n-1 with canonical representatives (minimum index).
struct Partition {
  std::vector<int> class_of; // element -> class id (dense, ordered by min representative)
  int class_count = 0;

  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
  std::vector<std::vector<int>> members() const;
};

/// The equivalence ⁰∼ on objects: union-find closure of
/// { s(f) ~ s(g), t(f) ~ t(g) : f, g share a color }.
Partition object_classes(const ColoredCategory& x);

struct StructureConstantTable {
  int color_count = 0;
  std::vector<long long> p; // (sigma * cc + tau) * cc + mu
  bool schemoid = false;

  struct Witness {
    int sigma, tau, mu; // colors
    int f, g;           // morphisms in mu with different fiber sizes
  };
  std::optional<Witness> witness;

  long long at(int sigma, int tau, int mu) const {
    return p[(static_cast<size_t>(sigma) * color_count + tau) * color_count + mu];
  }
};

/// Computes p(σ,τ,μ) = |{(l,k) ∈ σ×τ : l∘k = f}| for f ∈ μ. The schemoid
/// flag is set when the count is independent of the choice of f.
StructureConstantTable structure_constants(const ColoredCategory& x);

struct NaturalityResult {
  bool natural = false;
  std::optional<std::pair<int, int>> witness; // morphisms f ~ g with identity colors differing
};

NaturalityResult is_naturally_colored(const ColoredCategory& x);

struct TamenessReport {
  bool applicable = false; // structure constants well defined (schemoid)
  bool unital = false;     // T(i)
  bool tii = false;        // T(ii), checked directly
  bool tiii = false;       // T(iii)
  bool tame = false;       // unital && tiii
};

TamenessReport tameness(const ColoredCategory& x);

/// The coloring-map view: object colors, morphism colors, and the unique
/// endpoint maps s̄, t̄ making the evident squares commute.
struct ColorQuiver {
  std::vector<int> object_colors;  // I0: colors containing identities, sorted
  std::vector<int> sbar, tbar;     // morphism color -> position in object_colors
  std::vector<int> object_color_of; // object -> position in object_colors
};

/// Requires is_naturally_colored(x); throws PreconditionError with the
/// witness pair otherwise.
ColorQuiver color_quiver(const ColoredCategory& x);

struct ColoredMorphismResult {
  bool valid = false;
  std::vector<int> color_map; // S -> S' when valid
  struct Witness {
    int sigma; // color split across targets
    int f, g;  // morphisms in sigma with different image colors
  };
  std::optional<Witness> witness;
};

/// Checks that the functor u sends each color of X into a single color of Y
/// and returns the induced color map.
ColoredMorphismResult check_colored_morphism(const CatFunctor& u, const ColoredCategory& x,
                                             const ColoredCategory& y);

/// Hypotheses of the odd-distance nonvanishing criterion: u is a colored
/// morphism into a Hamming schemoid over the binary alphabet whose colors
/// are indexed by distance, u(tau) lands in an odd-distance color, and tau
/// contains an invertible morphism whose inverse is again in tau.
bool prop_app_hypotheses(const CatFunctor& u, const ColoredCategory& x, const ColoredCategory& hamming,
                         int tau);

} // namespace schemoid
