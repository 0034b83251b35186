#pragma once

#include "mcm/congruence.hpp"
#include "mcm/element.hpp"
#include "mcm/freeword.hpp"

namespace mcm {

/// Class of an orientation-preserving element in the free commutative
/// monoid; constant on congruence classes and multiplicative.
FreeWord sigma_class_word(const Element& e);

/// Class of an arbitrary element in the semidirect product: the word of its
/// orientation-preserving part paired with the orientation bit.
SemidirectElement sigma_class(const Element& e);

/// A concrete preimage of (word, g): the generator product, followed by the
/// coordinate swap when g is set.
Element class_preimage(const SemidirectElement& s);

}  // namespace mcm
