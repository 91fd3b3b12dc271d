#pragma once

#include "schemoid/quotient.hpp"

namespace schemoid {

/// An association scheme: a partition of X×X into relations 0..r-1 where
/// relation 0 is the diagonal, relations are closed under transpose, and the
/// intersection numbers are well defined.
struct AssociationScheme {
  int point_count = 0;
  int relation_count = 0;
  std::vector<int> relation_of; // x * point_count + y
  std::vector<std::string> point_names;

  int rel(int x, int y) const { return relation_of[static_cast<size_t>(x) * point_count + y]; }
};

struct SchemeConstants {
  int relation_count = 0;
  std::vector<long long> p;      // (i * r + j) * r + k
  std::vector<int> adjoint;      // i -> i*
  std::vector<long long> valency;

  long long at(int i, int j, int k) const {
    return p[(static_cast<size_t>(i) * relation_count + j) * relation_count + k];
  }
};

/// Checks the association scheme axioms; violations name the failing law.
ValidationReport validate_scheme(const AssociationScheme& s);

/// Intersection numbers p(i,j,k) = |{z : (x,z) in i, (z,y) in j}| for
/// (x,y) in k, the transpose map, and valencies. Requires a valid scheme.
SchemeConstants scheme_constants(const AssociationScheme& s);

/// Points are words of length n over an alphabet of size q; relation index is
/// the Hamming distance.
AssociationScheme hamming_scheme(int n, int q);

/// Points are the d-subsets of a v-set; relation index is d - |A ∩ B|.
AssociationScheme johnson_scheme(int v, int d);

/// A finite group with a dense multiplication table; element 0 is the
/// identity.
struct FiniteGroup {
  int order = 0;
  std::vector<int> mult; // a * order + b -> ab
  std::vector<std::string> element_names;

  int times(int a, int b) const { return mult[static_cast<size_t>(a) * order + b]; }
  int inverse(int a) const;
  int element_order(int a) const;

  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  /// Symmetric group on n letters (n small), permutations in lexicographic
  /// order of one-line notation so the identity is element 0.
  static FiniteGroup symmetric(int n);
};

/// The scheme on the group's elements with (x,y) in relation g iff x⁻¹y = g.
AssociationScheme group_scheme(const FiniteGroup& g);

/// Verifies A_i A_j = Σ_k p(i,j,k) A_k for the 0/1 relation matrices.
bool standard_representation_check(const AssociationScheme& s, std::string* detail = nullptr);

bool is_closed_subset(const AssociationScheme& s, const std::vector<char>& subset);

/// The smallest closed subset containing every complex product s·s*.
std::vector<char> thin_residue(const AssociationScheme& s);

struct FactorScheme {
  AssociationScheme scheme;          // on the blocks xT
  std::vector<int> block_of;         // point -> block
  std::vector<std::vector<int>> relation_members; // factor relation -> sorted base relations
};

/// Blocks are the sets xT of a closed subset; the relation of a block pair is
/// the set of base relations occurring between them.
FactorScheme factor_scheme(const AssociationScheme& s, const std::vector<char>& closed);

/// All valencies equal 1.
bool is_thin(const AssociationScheme& s);

/// The group structure of a thin scheme: relations multiply by the unique
/// relation with nonzero intersection number. Requires is_thin.
FiniteGroup thin_scheme_group(const AssociationScheme& s);

/// The colored category on X with one morphism per ordered pair, colored by
/// the scheme relations.
ColoredCategory scheme_schemoid(const AssociationScheme& s);

/// An isomorphism as an image vector, or nullopt.
std::optional<std::vector<int>> group_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// Reads a one-object, all-invertible finite quotient back as a group
/// (identity listed first). Throws UnsupportedError otherwise.
FiniteGroup group_from_quotient(const QuotientResult& q);

struct PropHResult {
  bool holds = false;
  std::string detail;
  int group_order = 0;
};

/// Compares the quotient category of the scheme's colored category with the
/// group of the factor scheme by the thin residue.
PropHResult thin_residue_crosscheck(const AssociationScheme& s, CompletionCaps caps = {});

} // namespace schemoid
