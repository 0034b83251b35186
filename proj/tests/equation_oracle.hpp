// Test-only brute force for the one-sided equations, independent of the
// solver under test: the unknown is pointwise forced on the image of the
// first factor (evaluated over a grid with margin), the finitely many
// unhit window points take every hole/image assignment, and candidates are
// accepted purely by exhaustive window checks plus pointwise composition
// equality.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcm/element.hpp"
#include "mcm/oracle.hpp"

namespace mcm::testing {

inline std::optional<std::vector<int>> tail_diff(const std::vector<int>& hi,
                                                 const std::vector<int>& lo) {
  const size_t n = std::max(hi.size(), lo.size());
  std::vector<int> d(n, 0);
  for (size_t k = 0; k < n; ++k) {
    const int h = k < hi.size() ? hi[k] : 0;
    const int l = k < lo.size() ? lo[k] : 0;
    d[k] = h - l;
    if (d[k] < 0) return std::nullopt;
    if (k > 0 && d[k - 1] < d[k]) return std::nullopt;
  }
  return d;
}

inline void bf_assignments(const std::vector<Point>& sources,
                           const std::vector<Point>& targets,
                           std::map<Point, Point>& acc, std::vector<bool>& used,
                           size_t k, const std::function<void()>& sink) {
  if (k == sources.size()) {
    sink();
    return;
  }
  bf_assignments(sources, targets, acc, used, k + 1, sink);
  const Point s = sources[k];
  for (size_t t = 0; t < targets.size(); ++t) {
    if (used[t]) continue;
    const Point img = targets[t];
    bool fits = true;
    for (const auto& [s2, i2] : acc) {
      if (leq(s2, s) && !leq(i2, img)) fits = false;
      if (leq(s, s2) && !leq(img, i2)) fits = false;
      if (!fits) break;
    }
    if (!fits) continue;
    used[t] = true;
    acc.emplace(s, img);
    bf_assignments(sources, targets, acc, used, k + 1, sink);
    acc.erase(s);
    used[t] = false;
  }
}

/// Sorted canonical keys of every solution with its finite part inside the
/// given window; `right` selects a*x = b, otherwise x*a = b.
inline std::vector<std::string> bf_solutions(const Element& a, const Element& b,
                                             bool right, int window = 9) {
  const int gx = a.orientation ^ b.orientation;

  std::vector<int> rows, cols;
  if (right) {
    auto dr = tail_diff(b.plus.row_shifts, a.plus.row_shifts);
    auto dc = tail_diff(b.plus.col_shifts, a.plus.col_shifts);
    if (!dr || !dc) return {};
    rows = a.orientation ? *dc : *dr;
    cols = a.orientation ? *dr : *dc;
  } else {
    const PlusPart ap = gx ? transpose(a.plus) : a.plus;
    auto dr = tail_diff(b.plus.row_shifts, ap.row_shifts);
    auto dc = tail_diff(b.plus.col_shifts, ap.col_shifts);
    if (!dr || !dc) return {};
    rows = *dr;
    cols = *dc;
  }
  if (static_cast<int>(rows.size()) > window || static_cast<int>(cols.size()) > window)
    return {};

  const int grid = window + max_shift(a.plus) + max_shift(b.plus) + 1;
  const int sweep = grid + max_shift(a.plus) + max_shift(b.plus);

  std::map<Point, Point> forced;  // point of the unknown -> final value
  std::set<Point> excluded;       // points the unknown must not contain
  if (right) {
    for (int i = 1; i <= sweep; ++i)
      for (int j = 1; j <= sweep; ++j) {
        const Point x{i, j};
        auto ya = apply(a, x);
        if (!ya) {
          if (apply(b, x)) return {};  // composite cannot gain domain
          continue;
        }
        if (auto yb = apply(b, x))
          forced.emplace(*ya, *yb);
        else
          excluded.insert(*ya);
      }
  } else {
    for (int i = 1; i <= sweep; ++i)
      for (int j = 1; j <= sweep; ++j) {
        const Point x{i, j};
        auto yb = apply(b, x);
        if (!yb) continue;
        auto mid = preimage(a, *yb);
        if (!mid) return {};  // image point of b escapes the image of a
        forced.emplace(x, *mid);
      }
  }

  // unhit points and unused images, both confined to the candidate window
  std::vector<Point> freedom, cands;
  if (right) {
    std::set<Point> bhit;
    for (int i = 1; i <= sweep; ++i)
      for (int j = 1; j <= sweep; ++j)
        if (auto v = apply(b, Point{i, j})) bhit.insert(*v);
    for (int i = 1; i <= window; ++i)
      for (int j = 1; j <= window; ++j) {
        const Point y{i, j};
        if (!forced.count(y) && !excluded.count(y)) freedom.push_back(y);
        if (!bhit.count(y)) cands.push_back(y);
      }
  } else {
    for (int i = 1; i <= window; ++i)
      for (int j = 1; j <= window; ++j) {
        const Point y{i, j};
        if (!apply(b, y)) freedom.push_back(y);
        if (!apply(a, y)) cands.push_back(y);
      }
  }

  std::vector<std::string> keys;
  std::map<Point, Point> acc;
  std::vector<bool> used(cands.size(), false);
  bf_assignments(freedom, cands, acc, used, 0, [&]() {
    PlusPart p;
    p.window = window;
    p.row_shifts = rows;
    p.row_shifts.resize(static_cast<size_t>(window), 0);
    p.col_shifts = cols;
    p.col_shifts.resize(static_cast<size_t>(window), 0);
    for (int i = 1; i <= window; ++i)
      for (int j = 1; j <= window; ++j) {
        const Point y{i, j};
        if (auto it = forced.find(y); it != forced.end())
          p.explicit_map.emplace(y, gx ? swapped(it->second) : it->second);
        else if (auto as = acc.find(y); as != acc.end())
          p.explicit_map.emplace(y, gx ? swapped(as->second) : as->second);
      }
    const Element cand{std::move(p), gx};

    if (!bf_check(truncate(cand, Window{grid})).ok()) return;
    // the candidate must reproduce the forced data across the whole grid
    for (int i = 1; i <= grid; ++i)
      for (int j = 1; j <= grid; ++j) {
        const Point y{i, j};
        auto v = apply(cand, y);
        if (auto it = forced.find(y); it != forced.end()) {
          if (!v || *v != it->second) return;
        } else if (excluded.count(y)) {
          if (v) return;
        }
      }
    // pointwise composition equality over the grid
    const auto target = truncate(b, Window{grid}).entries;
    if (right) {
      if (bf_compose(truncate(a, Window{grid}), truncate(cand, Window{grid}))
              .entries != target)
        return;
    } else {
      if (bf_compose(truncate(cand, Window{grid}), truncate(a, Window{grid}))
              .entries != target)
        return;
    }
    keys.push_back(canonical_key(cand));
  });
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace mcm::testing
