#include "mcm/congruence.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcm {

namespace {

std::vector<int> trimmed(const std::vector<int>& v) {
  std::vector<int> r = v;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

int shift_at(const std::vector<int>& v, int k) {
  return k <= static_cast<int>(v.size()) ? v[static_cast<size_t>(k) - 1] : 0;
}

bool in_range(const PlusPart& p, Point y) { return preimage(p, y).has_value(); }

}  // namespace

ShiftProfile shift_profile(const Element& e) {
  if (e.orientation != 0)
    throw std::invalid_argument("shift profile requires an orientation-preserving element");
  const PlusPart& p = e.plus;
  ShiftProfile prof;
  prof.row = trimmed(p.row_shifts);
  prof.col = trimmed(p.col_shifts);
  prof.fix_bound = fixing_bound(e);
  prof.row_support = static_cast<int>(prof.row.size()) + 1;
  prof.col_support = static_cast<int>(prof.col.size()) + 1;

  // Row/column regularity thresholds. All irregularities (image gaps,
  // domain holes, images leaving the row) sit inside the window plus one
  // extra ring, so a bounded scan decides the "for all p >= h" conditions.
  const int scan = p.window + max_shift(p) + 2;
  for (int r = 1; r < prof.fix_bound; ++r) {
    int worst = 0;
    for (int x = 1; x <= scan; ++x) {
      const Point pt{x, r};
      auto img = apply(p, pt);
      const bool good = in_range(p, pt) && img && img->j == r;
      if (!good) worst = x;
    }
    prof.row_clear = std::max(prof.row_clear, worst + 1);
  }
  for (int c = 1; c < prof.fix_bound; ++c) {
    int worst = 0;
    for (int y = 1; y <= scan; ++y) {
      const Point pt{c, y};
      auto img = apply(p, pt);
      const bool good = in_range(p, pt) && img && img->i == c;
      if (!good) worst = y;
    }
    prof.col_clear = std::max(prof.col_clear, worst + 1);
  }
  return prof;
}

bool sigma_equiv(const Element& a, const Element& b) {
  if (a.orientation != b.orientation) return false;
  return trimmed(a.plus.row_shifts) == trimmed(b.plus.row_shifts) &&
         trimmed(a.plus.col_shifts) == trimmed(b.plus.col_shifts);
}

std::optional<SigmaWitness> sigma_witness(const Element& a, const Element& b) {
  if (!sigma_equiv(a, b)) return std::nullopt;
  // Outside the common window the maps agree (equal tails), so the
  // disagreement region is finite; removing its images from the identity
  // yields an equalizer.
  const int m = std::max(a.plus.window, b.plus.window);
  std::set<Point> cut;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      auto ya = apply(a, Point{i, j});
      auto yb = apply(b, Point{i, j});
      if (ya == yb) continue;
      if (ya) cut.insert(*ya);
      if (yb) cut.insert(*yb);
    }
  SigmaWitness w{mk_partial_identity(cut)};
  if (!equals(compose(a, w.epsilon), compose(b, w.epsilon)))
    throw InternalError("profile test and witness construction disagree");
  return w;
}

Element shift_normal_form(const Element& e) {
  if (e.orientation != 0)
    throw std::invalid_argument("shift normal form requires an orientation-preserving element");
  ShiftProfile prof = shift_profile(e);
  std::set<Point> holes;
  for (int i = 1; i <= prof.row_clear; ++i)
    for (int j = 1; j <= prof.fix_bound; ++j) holes.insert(Point{i, j});
  for (int i = 1; i <= prof.fix_bound; ++i)
    for (int j = 1; j <= prof.col_clear; ++j) holes.insert(Point{i, j});
  return restrict(e, holes);
}

FreeWord generator_word(const Element& e) {
  ShiftProfile prof = shift_profile(e);
  FreeWord w;
  for (int k = 1; k <= static_cast<int>(prof.row.size()); ++k) {
    const int exp = shift_at(prof.row, k) - shift_at(prof.row, k + 1);
    if (exp > 0) w.a[k] = exp;
  }
  for (int l = 1; l <= static_cast<int>(prof.col.size()); ++l) {
    const int exp = shift_at(prof.col, l) - shift_at(prof.col, l + 1);
    if (exp > 0) w.b[l] = exp;
  }
  if (!sigma_equiv(e, word_product(w)))
    throw InternalError("generator word is not congruent to its element");
  return w;
}

Element word_product(const FreeWord& w, bool cols_first) {
  Element acc = mk_identity();
  auto mul_in = [&acc](const std::map<int, int>& exps, Element (*gen)(int)) {
    for (const auto& [k, e] : exps) {
      Element g = gen(k);
      for (int t = 0; t < e; ++t) acc = compose(acc, g);
    }
  };
  if (cols_first) {
    mul_in(w.b, &mk_col_shift);
    mul_in(w.a, &mk_row_shift);
  } else {
    mul_in(w.a, &mk_row_shift);
    mul_in(w.b, &mk_col_shift);
  }
  return acc;
}

Idempotent equalizing_idempotent(const Element& e, const FreeWord& w) {
  if (e.orientation != 0)
    throw std::invalid_argument("equalizing idempotent requires an orientation-preserving element");
  ShiftProfile prof = shift_profile(e);
  int bound = prof.fix_bound + prof.row_clear + prof.col_clear;
  for (const auto& [k, exp] : w.a) bound += exp;
  for (const auto& [l, exp] : w.b) bound += exp;
  const Element fwd = word_product(w, false);
  const Element rev = word_product(w, true);
  // Every irregularity of all three maps must sit inside the excluded
  // square, including domain holes far from the origin.
  bound = std::max({bound, normalize(e).plus.window, fwd.plus.window, rev.plus.window});
  std::set<Point> holes;
  for (int i = 1; i <= bound; ++i)
    for (int j = 1; j <= bound; ++j) holes.insert(Point{i, j});
  Idempotent eps = mk_partial_identity(holes);
  const Element via_e = compose(eps, e);
  if (!equals(via_e, compose(eps, fwd)) || !equals(via_e, compose(eps, rev)))
    throw InternalError("equalizing idempotent failed its defining equalities");
  return eps;
}

}  // namespace mcm
