#pragma once

#include <map>

namespace mcm {

/// Element of the free commutative monoid over the two-family alphabet
/// {a_1, a_2, ...} u {b_1, b_2, ...}: two finitely-supported exponent maps,
/// stored exponents strictly positive. Default-constructed is the unit.
struct FreeWord {
  std::map<int, int> a;
  std::map<int, int> b;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

bool is_unit(const FreeWord& w);

/// Multiset sum of exponents.
FreeWord word_mul(const FreeWord& u, const FreeWord& v);

/// The involutive automorphism exchanging the a- and b-families.
FreeWord swap_alphabets(const FreeWord& u);

/// Pair (word, g) with the product twisted by the alphabet swap:
/// (u,g)(v,h) = (u * (v or swapped v), g+h mod 2).
struct SemidirectElement {
  FreeWord word;
  int g = 0;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

SemidirectElement semidirect_mul(const SemidirectElement& x, const SemidirectElement& y);

}  // namespace mcm
