#include "mcm/equations.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace mcm {

namespace {

int shift_at(const std::vector<int>& v, int k) {
  return k <= static_cast<int>(v.size()) ? v[static_cast<size_t>(k) - 1] : 0;
}

// Zero-padded componentwise difference hi - lo; empty result when some
// entry would be negative or the difference fails to be non-increasing
// (then no element of the monoid can carry these tails).
std::optional<std::vector<int>> shift_difference(const std::vector<int>& hi,
                                                 const std::vector<int>& lo) {
  const int n = static_cast<int>(std::max(hi.size(), lo.size()));
  std::vector<int> d(static_cast<size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    d[k - 1] = shift_at(hi, k) - shift_at(lo, k);
    if (d[k - 1] < 0) return std::nullopt;
    if (k > 1 && d[k - 2] < d[k - 1]) return std::nullopt;
  }
  return d;
}

std::vector<int> padded(std::vector<int> v, int n) {
  v.resize(static_cast<size_t>(n), 0);
  return v;
}

// Enumerates every partial injective assignment of `sources` into
// `targets` that is monotone within itself, calling sink for each.
void for_each_assignment(const std::vector<Point>& sources,
                         const std::vector<Point>& targets,
                         const std::function<void(const std::map<Point, Point>&)>& sink) {
  std::map<Point, Point> acc;
  std::vector<bool> used(targets.size(), false);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == sources.size()) {
      sink(acc);
      return;
    }
    rec(k + 1);  // source left out of the domain
    const Point s = sources[k];
    for (size_t t = 0; t < targets.size(); ++t) {
      if (used[t]) continue;
      const Point c = targets[t];
      bool fits = true;
      for (const auto& [s2, c2] : acc) {
        if (leq(s2, s) && !leq(c2, c)) fits = false;
        if (leq(s, s2) && !leq(c, c2)) fits = false;
        if (!fits) break;
      }
      if (!fits) continue;
      used[t] = true;
      acc.emplace(s, c);
      rec(k + 1);
      acc.erase(s);
      used[t] = false;
    }
  };
  rec(0);
}

int analytic_window(const Element& a, const Element& b) {
  return std::max(a.plus.window, b.plus.window) + max_shift(a.plus) +
         max_shift(b.plus) + 2;
}

int pick_window(const Element& a, const Element& b, std::optional<int> margin) {
  const int w = analytic_window(a, b);
  if (!margin) return w;
  if (*margin < w)
    throw MarginTooSmall("search margin " + std::to_string(*margin) +
                         " below the analytic bound " + std::to_string(w));
  return *margin;
}

}  // namespace

std::vector<Element> solve_right(const Element& a, const Element& b,
                                 std::optional<int> search_margin) {
  std::vector<Element> out;
  const int gx = a.orientation ^ b.orientation;

  // The domain of the composite is contained in the domain of the first
  // factor, so a domain hole of `a` that is not a hole of `b` kills every
  // candidate.
  for (const Point& h : domain_complement(a))
    if (apply(b, h)) return out;

  // Tail shifts add under composition (with a transpose when a swaps), so
  // the unknown's tails are forced by the difference of the profiles.
  auto d_row = shift_difference(b.plus.row_shifts, a.plus.row_shifts);
  auto d_col = shift_difference(b.plus.col_shifts, a.plus.col_shifts);
  if (!d_row || !d_col) return out;
  const std::vector<int> x_rows = a.orientation ? *d_col : *d_row;
  const std::vector<int> x_cols = a.orientation ? *d_row : *d_col;

  const int w = pick_window(a, b, search_margin);

  // On the image of `a` the unknown is pointwise forced; the window is wide
  // enough that beyond it the forced values follow the tail rules above.
  std::map<Point, Point> core;
  for (int i = 1; i <= w; ++i)
    for (int j = 1; j <= w; ++j) {
      const Point y{i, j};
      auto x = preimage(a, y);
      if (!x) continue;
      if (auto v = apply(b, *x)) core.emplace(y, gx ? swapped(*v) : *v);
    }

  const std::set<Point> free_set = range_complement(a);
  const std::set<Point> cand_set = range_complement(b);
  const std::vector<Point> freedom(free_set.begin(), free_set.end());
  const std::vector<Point> cands(cand_set.begin(), cand_set.end());

  for_each_assignment(freedom, cands, [&](const std::map<Point, Point>& asg) {
    PlusPart p;
    p.window = w;
    p.row_shifts = padded(x_rows, w);
    p.col_shifts = padded(x_cols, w);
    p.explicit_map = core;
    for (const auto& [f, c] : asg) p.explicit_map.emplace(f, gx ? swapped(c) : c);
    if (!validate(p).ok()) return;
    Element cand = normalize(Element{std::move(p), gx});
    if (equals(compose(a, cand), b)) out.push_back(std::move(cand));
  });
  return out;
}

std::vector<Element> solve_left(const Element& a, const Element& b,
                                std::optional<int> search_margin) {
  std::vector<Element> out;
  const int gx = a.orientation ^ b.orientation;

  // The image of the composite is contained in the image of the second
  // factor, so every image point of `b` must be hit by `a`.
  for (const Point& y : range_complement(a))
    if (preimage(b, y)) return out;

  auto d_row =
      shift_difference(b.plus.row_shifts,
                       gx ? transpose(a.plus).row_shifts : a.plus.row_shifts);
  auto d_col =
      shift_difference(b.plus.col_shifts,
                       gx ? transpose(a.plus).col_shifts : a.plus.col_shifts);
  if (!d_row || !d_col) return out;

  const int w = pick_window(a, b, search_margin);

  // On the domain of `b` the unknown is forced: it must send x to the
  // unique preimage under `a` of xb.
  std::map<Point, Point> core;
  for (int i = 1; i <= w; ++i)
    for (int j = 1; j <= w; ++j) {
      const Point x{i, j};
      auto yb = apply(b, x);
      if (!yb) continue;
      auto mid = preimage(a, *yb);
      if (!mid) return out;  // image point of b escapes ran a
      core.emplace(x, gx ? swapped(*mid) : *mid);
    }

  const std::set<Point> src_set = domain_complement(b);
  const std::set<Point> tgt_set = domain_complement(a);
  const std::vector<Point> sources(src_set.begin(), src_set.end());
  const std::vector<Point> targets(tgt_set.begin(), tgt_set.end());

  for_each_assignment(sources, targets, [&](const std::map<Point, Point>& asg) {
    PlusPart p;
    p.window = w;
    p.row_shifts = padded(*d_row, w);
    p.col_shifts = padded(*d_col, w);
    p.explicit_map = core;
    for (const auto& [s, t] : asg) p.explicit_map.emplace(s, gx ? swapped(t) : t);
    if (!validate(p).ok()) return;
    Element cand = normalize(Element{std::move(p), gx});
    if (equals(compose(cand, a), b)) out.push_back(std::move(cand));
  });
  return out;
}

std::optional<Element> try_inverse(const Element& a) {
  const Element n = normalize(a);
  const PlusPart& p = n.plus;
  // A nonzero tail shift inverts to a right/up shift, which loses
  // monotonicity against the fixed far quadrant; only the explicit window
  // can carry an inverse.
  for (int s : p.row_shifts)
    if (s != 0) return std::nullopt;
  for (int s : p.col_shifts)
    if (s != 0) return std::nullopt;

  const int w = p.window + 1;
  PlusPart inv;
  inv.window = w;
  inv.row_shifts.assign(static_cast<size_t>(w), 0);
  inv.col_shifts.assign(static_cast<size_t>(w), 0);
  for (int i = 1; i <= w; ++i)
    for (int j = 1; j <= w; ++j)
      if (auto x = preimage(p, Point{i, j})) inv.explicit_map.emplace(Point{i, j}, *x);
  if (!validate(inv).ok()) return std::nullopt;
  if (n.orientation) inv = transpose(inv);
  return normalize(Element{std::move(inv), n.orientation});
}

}  // namespace mcm
