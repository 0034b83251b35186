#include "mcm/quotient.hpp"

#include <stdexcept>

namespace mcm {

FreeWord sigma_class_word(const Element& e) {
  if (e.orientation != 0)
    throw std::invalid_argument("class word requires an orientation-preserving element");
  return generator_word(e);
}

SemidirectElement sigma_class(const Element& e) {
  auto [plus, g] = decompose(e);
  return SemidirectElement{generator_word(plus), g};
}

Element class_preimage(const SemidirectElement& s) {
  Element e = word_product(s.word);
  if (s.g) e = compose(e, mk_swap());
  return e;
}

}  // namespace mcm
