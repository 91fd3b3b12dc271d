#pragma once

#include "schemoid/quotient.hpp"

namespace schemoid {

struct ColorPreservation {
  bool preserving = false;
  // morphisms sharing a color whose images differ as functions
  std::optional<std::pair<int, int>> witness;
};

/// A Set-valued functor is color-preserving when morphisms of equal color map
/// to the same function (equality at label level, forcing equal value sets on
/// the endpoints).
ColorPreservation is_color_preserving(const ColoredCategory& x, const SetFunctor& F);

struct SharpTransformation {
  NaturalTransformation eta;
  bool locally_constant = false; // components agree where the identity colors agree
  bool sharp = false;            // components agree on ⁰∼ classes; implies locally constant
};

SharpTransformation classify_transformation(const ColoredCategory& x, const SetFunctor& F,
                                            const SetFunctor& G, const NaturalTransformation& eta);

/// The finite quotient together with the projection functor, computed once
/// and shared. Throws UnsupportedError when the quotient is undecided.
struct QuotientContext {
  QuotientResult q;
  CatFunctor pi;
};

QuotientContext quotient_context(const ColoredCategory& x, CompletionCaps caps = {});

/// Transport of a color-preserving functor to the quotient category: classes
/// take the value at their minimal representative and a quotient morphism
/// acts by the common label map of any representative word.
SetFunctor transport_theta(const ColoredCategory& x, const QuotientContext& ctx,
                           const SetFunctor& F);

/// Restriction along a functor: (u*H)(x) = H(u(x)).
SetFunctor pullback_along(const FiniteCategory& dom, const CatFunctor& u, const SetFunctor& H);

struct PullbackSpan {
  SetFunctor P; // pairs (a, b) with alpha(a) = beta(b), labels "(a,b)"
  NaturalTransformation to_first, to_second;
};

/// Objectwise fiber product of alpha : F -> H <- G : beta with its projections.
PullbackSpan objectwise_pullback(const FiniteCategory& c, const SetFunctor& F,
                                 const SetFunctor& G, const SetFunctor& H,
                                 const NaturalTransformation& alpha,
                                 const NaturalTransformation& beta);

/// Right Kan extension along pi : c -> qcat, computed as the finite limit
/// over each comma category (q ↓ pi). An empty comma category yields the
/// one-point limit. Limit elements are matched families; their labels join
/// the entry labels with '|' in comma-object order ("*" for the empty family).
SetFunctor kan_pushforward(const FiniteCategory& c, const FiniteCategory& qcat,
                           const CatFunctor& pi, const SetFunctor& G);

/// pi* (Ran_pi G): the coreflection of an arbitrary functor into the
/// color-preserving ones. Always passes is_color_preserving.
SetFunctor sheafify(const ColoredCategory& x, const QuotientContext& ctx, const SetFunctor& G);

/// The adjunction unit F -> sheafify(F) for a color-preserving F: an element
/// maps to the family of its pushforwards along every quotient morphism.
NaturalTransformation sheafify_unit(const ColoredCategory& x, const QuotientContext& ctx,
                                    const SetFunctor& F);

/// All functors with value sets of size 0..max_size drawn from the shared
/// label pool "0", "1", ... (so equal sizes mean equal label sets).
std::vector<SetFunctor> enumerate_functors(const FiniteCategory& c, int max_size);

/// All natural transformations F -> G.
std::vector<NaturalTransformation> enumerate_natural(const FiniteCategory& c, const SetFunctor& F,
                                                     const SetFunctor& G);

long long count_natural(const FiniteCategory& c, const SetFunctor& F, const SetFunctor& G);
/// Natural transformations whose components agree on ⁰∼ classes.
long long count_sharp(const ColoredCategory& x, const SetFunctor& F, const SetFunctor& G);

/// Objectwise disjoint union, with labels tagged "l:" / "r:"; the canonical
/// injections are written to inl / inr when non-null.
SetFunctor functor_coproduct(const FiniteCategory& c, const SetFunctor& F, const SetFunctor& G,
                             NaturalTransformation* inl = nullptr,
                             NaturalTransformation* inr = nullptr);

} // namespace schemoid
