#pragma once

#include "schemoid/coloring.hpp"

namespace schemoid {

/// A word over presentation generators, written in diagrammatic order:
/// w = (g_1, ..., g_n) means g_1 first, then g_2, and so on. The composite
/// of f then g (that is, g∘f) is the concatenation word(f) ++ word(g).
using Word = std::vector<int>;

/// Generators-and-relations data for the quotient category of a colored
/// category: one generator per color, typed by the object classes of ⁰∼.
struct CategoryPresentation {
  int object_count = 0; // |I0|
  struct Generator {
    int color = -1;
    int src = 0, tgt = 0; // object classes
  };
  std::vector<Generator> generators; // index == color for built presentations
  std::vector<std::pair<Word, Word>> relations;
  std::vector<char> is_identity_generator;

  int word_src(const Word& w, int fallback = -1) const {
    return w.empty() ? fallback : generators[w.front()].src;
  }
  int word_tgt(const Word& w, int fallback = -1) const {
    return w.empty() ? fallback : generators[w.back()].tgt;
  }
  bool word_composable(const Word& w) const;
};

/// Relations of the quotient: the composition relation (two letters collapse
/// to the color of a composite), the object relation (two identity-bearing
/// colors over ⁰∼-equal objects coincide), and identity colors equal the
/// empty word.
CategoryPresentation build_presentation(const ColoredCategory& x);

struct CompletionCaps {
  int max_rule_length = 12;
  int max_pairs = 10000;
};

/// Length-lex ordering with generator-index tiebreak; a < b.
bool word_less(const Word& a, const Word& b);

struct RewriteSystem {
  std::vector<CategoryPresentation::Generator> generators;
  int object_count = 0;
  std::vector<std::pair<Word, Word>> rules; // lhs -> rhs, lhs > rhs in length-lex
  bool complete = false;
  CompletionCaps caps;

  /// Reduces w to an irreducible word. Terminates because every rule
  /// decreases the length-lex order.
  Word normalize(Word w) const;
};

/// Knuth-Bendix completion on object-typed words. Returns complete=false
/// when the caps are exhausted; never returns a wrong complete system.
RewriteSystem complete(const CategoryPresentation& p, CompletionCaps caps = {});

struct QuotientResult {
  enum class Status { Finite, Undecided };
  enum class Kind { Group, Monoid, General };

  Status status = Status::Undecided;
  Kind kind = Kind::General;
  RewriteSystem rws;
  Partition classes; // ⁰∼ partition of the original objects

  // Populated when status == Finite. Objects of `category` are the ⁰∼
  // classes; morphism i is the normal form morphism_word[i] based at
  // morphism_src[i] (empty words are the identities).
  FiniteCategory category;
  std::vector<Word> morphism_word;
  std::vector<int> morphism_src;
  std::vector<int> generator_morphism; // color -> morphism index of its normal form

  int morphism_of(int src, const Word& normal_form) const;
};

/// Builds the presentation, completes it, and enumerates normal forms
/// breadth-first per hom-set. Exceeding homset_cap (or failing to complete)
/// yields Undecided with the partial rewrite system.
QuotientResult quotient_category(const ColoredCategory& x, CompletionCaps caps = {},
                                 int homset_cap = 10000);

/// π : C -> c[(C,S)], object x to [x] and f to the class of its color.
/// Requires a finite quotient.
CatFunctor pi_functor(const ColoredCategory& x, const QuotientResult& q);

/// The tame-case category on identity-color classes with the unique-composite
/// multiplication. Morphism indices run over colors in a dense reindexing.
struct BracketCategory {
  FiniteCategory category;
  std::vector<int> morphism_of_color; // color -> morphism index
  std::vector<int> object_of_identity_color; // identity color -> object index, -1 otherwise
};

/// Requires tameness(x).tame; throws PreconditionError otherwise.
BracketCategory bracket_category(const ColoredCategory& x);

struct BracketComparison {
  bool isomorphic = false;
  std::string detail;
};

/// Checks that color -> normal form of its one-letter word is an isomorphism
/// from the bracket category onto the finite quotient.
BracketComparison compare_bracket_quotient(const ColoredCategory& x, CompletionCaps caps = {});

/// Enumerates, per word length 0..max_len, the number of distinct congruence
/// classes of words of that weighted length, by bounded congruence closure.
/// Only valid when every relation preserves the generator weights (identity
/// generators are eliminated first); used for growth-series cross-oracles.
std::vector<long long> bounded_growth_series(const CategoryPresentation& p,
                                             const std::vector<int>& weight_of_generator,
                                             int max_weight);

} // namespace schemoid
