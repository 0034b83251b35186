#include "mcm/freeword.hpp"

#include <stdexcept>

namespace mcm {

bool is_unit(const FreeWord& w) { return w.a.empty() && w.b.empty(); }

FreeWord word_mul(const FreeWord& u, const FreeWord& v) {
  FreeWord r = u;
  for (const auto& [k, e] : v.a) r.a[k] += e;
  for (const auto& [l, f] : v.b) r.b[l] += f;
  return r;
}

FreeWord swap_alphabets(const FreeWord& u) {
  FreeWord r;
  r.a = u.b;
  r.b = u.a;
  return r;
}

SemidirectElement semidirect_mul(const SemidirectElement& x, const SemidirectElement& y) {
  if ((x.g | y.g) & ~1) throw std::invalid_argument("group component must be 0 or 1");
  SemidirectElement r;
  r.word = word_mul(x.word, x.g ? swap_alphabets(y.word) : y.word);
  r.g = x.g ^ y.g;
  return r;
}

}  // namespace mcm
