#pragma once

#include <optional>
#include <vector>

#include "mcm/element.hpp"
#include "mcm/freeword.hpp"

namespace mcm {

/// Idempotent equalizing two related elements: compose(a, epsilon) equals
/// compose(b, epsilon) exactly.
struct SigmaWitness {
  Idempotent epsilon;
};

/// The eventual behaviour of an orientation-preserving element, which is a
/// complete invariant of its class under the cofinite-agreement congruence.
///
/// row[j-1] / col[i-1] are the eventual left/down shifts of row j / column
/// i, trailing zeros trimmed. The remaining fields are the thresholds used
/// by the normal-form construction:
///   fix_bound   - least n with every domain point of ^(n,n) fixed
///   row_clear   - least h such that for every row index r < fix_bound, all
///                 (p,r) with p >= h lie in the image, lie in the domain and
///                 map back into row r (0 when fix_bound == 1); col_clear
///                 symmetric
///   row_support - 1 + the largest row index with a nonzero eventual shift;
///                 col_support symmetric
struct ShiftProfile {
  std::vector<int> row;
  std::vector<int> col;
  int fix_bound = 1;
  int row_clear = 0;
  int col_clear = 0;
  int row_support = 1;
  int col_support = 1;
};

ShiftProfile shift_profile(const Element& e);

/// Congruence test: same orientation and identical eventual shifts, which
/// is equivalent to agreement on a cofinite set.
bool sigma_equiv(const Element& a, const Element& b);

/// Constructive counterpart of sigma_equiv: the partial identity avoiding
/// the images of the finite disagreement region. Throws InternalError if
/// the profile test and the construction ever disagree.
std::optional<SigmaWitness> sigma_witness(const Element& a, const Element& b);

/// Restriction of e that acts as an exact partial shift on every row and
/// column below the fixing bound; congruent to e.
Element shift_normal_form(const Element& e);

/// Exponents read off the shift profile by cumulative differences: the
/// letter a_k carries row[k]-row[k+1], b_l carries col[l]-col[l+1]. The
/// product of the corresponding generators is congruent to e (verified).
FreeWord generator_word(const Element& e);

/// Product of row-shift generators then column-shift generators named by
/// the word (reversed order when cols_first).
Element word_product(const FreeWord& w, bool cols_first = false);

/// Partial identity far enough out that composing it before e, before the
/// word's generator product, or before the reversed product all yield the
/// same element; the three-way equality is asserted.
Idempotent equalizing_idempotent(const Element& e, const FreeWord& w);

}  // namespace mcm
