#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "grouplarge/hom.hpp"
#include "grouplarge/partition.hpp"

namespace grouplarge {

// Generators split into (x_alpha, y_alpha) pairs; X is all x's, Y all y's.
struct PairedAlphabet {
  std::vector<std::pair<int, int>> pairs;

  // Throws InvalidPairing unless every generator of [0, rank) appears exactly once.
  void validate(int rank) const;
};

// Cells P_a = {g != e : first letter base a}, each left 3-large with F = {e, a}.
PartitionScheme letter3_scheme(const Alphabet& alphabet);

// Pair cells P_alpha = L_alpha u R_alpha, each 4-large with a 3-element
// witness per side.  The Literal variant transcribes the misprinted second
// clause of R_alpha; Corrected reads it as rho(g)=y_alpha <=> lambda(g) in X.
PartitionScheme paired4_scheme(const Alphabet& alphabet, const PairedAlphabet& pairing,
                               ReadingVariant variant);

// Syllable cells P_m = {g != e : first syllable a^(+-m)}, each left 3-large.
// m_max bounds reporting only, never membership.
PartitionScheme syllable3_scheme(const Alphabet& alphabet, int a, int b, int m_max);

// Rank-2 cells P_m = L_m u R_m, each 5-large.  The Literal variant reads the
// exponent-1 conditions as exact syllables; Corrected reads them as
// boundary-letter conditions.
PartitionScheme syllable5_scheme(const Alphabet& f2, ReadingVariant variant, int m_max);

// Pullback of a scheme through a quotient map; witnesses are pushed through
// a generator section (right inverse of the map on generators).
PartitionScheme lift_scheme(const GeneratorMap& map, const GeneratorMap& section,
                            const PartitionScheme& target_scheme);

// The two-cell dichotomy proof chain: given disjoint X (left 3-large via
// {e,x}) and Y (right 3-large via {e,y}) and g outside both, produces an
// element of X n Y.  Throws HypothesisViolated if a premise fails at a
// probed element.
struct DichotomyCertificate {
  Word element;
  bool in_x;
  bool in_y;
};

using WordPredicate = std::function<bool(const Word&)>;

DichotomyCertificate dichotomy_certificate(const Word& x, const Word& y, const WordPredicate& in_x,
                                           const WordPredicate& in_y, const Word& g);

}  // namespace grouplarge
