#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcm/core.hpp"
#include "mcm/report.hpp"

namespace mcm {

/// Finite description of an orientation-preserving monotone injective
/// partial selfmap of N x N with cofinite domain and image.
///
/// Behaviour by region, with B = window:
///   (i,j), i<=B, j<=B : explicit_map; keys absent from it are domain holes
///   (i,j), i> B, j<=B : (i - row_shifts[j-1], j)
///   (i,j), i<=B, j> B : (i, j - col_shifts[i-1])
///   (i,j), i> B, j> B : (i,j)
///
/// For a valid part the shift vectors are non-increasing and bounded by the
/// window, and the whole map is injective and monotone; validate() decides
/// this on finite data.
struct PlusPart {
  int window = 1;
  std::map<Point, Point> explicit_map;
  std::vector<int> row_shifts{0};
  std::vector<int> col_shifts{0};
};

/// A monoid element: an orientation-preserving part followed by the
/// coordinate swap raised to `orientation`. Evaluation is a right action:
/// x |-> swap^orientation(plus(x)).
struct Element {
  PlusPart plus;
  int orientation = 0;
};

/// An idempotent is an element that is the identity on its (cofinite)
/// domain; mk_partial_identity builds them and is_idempotent recognises
/// them. Structurally they are ordinary elements.
using Idempotent = Element;

PlusPart identity_plus();
int max_shift(const PlusPart& p);

/// Decides injectivity and monotonicity of the represented infinite map.
///
/// Malformed fields (sizes, negative shifts, out-of-window keys, coordinates
/// below 1) throw std::invalid_argument; semantic violations are reported.
ValidationReport validate(const PlusPart& p);
ValidationReport validate(const Element& e);

std::optional<Point> apply(const PlusPart& p, Point x);
std::optional<Point> apply(const Element& e, Point x);

/// Unique x with x->y under the (injective) map, if any.
std::optional<Point> preimage(const PlusPart& p, Point y);
std::optional<Point> preimage(const Element& e, Point y);

/// Same map re-represented with a larger window bound.
PlusPart rewindow(const PlusPart& p, int bound);

/// Conjugation by the coordinate swap: transposes the explicit map and
/// exchanges the shift vectors.
PlusPart transpose(const PlusPart& p);

PlusPart compose(const PlusPart& a, const PlusPart& b);

/// Exact composition, apply `a` first then `b`. Result is normalized.
Element compose(const Element& a, const Element& b);

/// Shrinks the window while the outermost ring agrees with the tail rules;
/// the result is the unique minimal representation of the same map.
PlusPart normalize(PlusPart p);
Element normalize(Element e);

/// Semantic equality: same orientation, same zero-padded shift vectors and
/// identical evaluation on the common window.
bool equals(const Element& a, const Element& b);

/// Compact canonical encoding of the normalized element, usable as a set or
/// hash key. Two elements get the same key iff equals() holds.
std::string canonical_key(const Element& e);

Element mk_identity();
Element mk_swap();

/// Shifts rows 1..n one step left; domain omits (1,1)..(1,n).
Element mk_row_shift(int n);
/// Shifts columns 1..n one step down; domain omits (1,1)..(n,1).
Element mk_col_shift(int n);

/// Identity map on the complement of `holes`.
Idempotent mk_partial_identity(const std::set<Point>& holes);

bool is_idempotent(const Element& e);

/// Natural partial order: a is a restriction of b.
bool natural_leq(const Element& a, const Element& b);

/// When natural_leq(a,b), an idempotent e with compose(b,e) equal to a
/// (the partial identity on the image of a); nothing otherwise.
std::optional<Idempotent> natural_leq_witness(const Element& a, const Element& b);

/// a with extra_holes removed from its domain.
Element restrict(const Element& a, const std::set<Point>& extra_holes);

/// Stored orientation bit, cross-checked against the image of a far point
/// of row 1; throws ConsistencyError on a corrupt representation.
int orientation(const Element& e);

/// Splits e into its orientation-preserving part and the swap exponent;
/// compose(first, swap^second) reproduces e.
std::pair<Element, int> decompose(const Element& e);

/// The automorphism conjugating by the coordinate swap.
Element swap_conjugate(const Element& e);

/// Smallest n such that every domain point with both coordinates >= n is
/// fixed. Defined for orientation-preserving elements only.
int fixing_bound(const Element& e);

std::set<Point> domain_complement(const Element& e);
std::set<Point> range_complement(const Element& e);

}  // namespace mcm
