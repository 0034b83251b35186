#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace mcm {

/// A point of the grid N x N, 1-based in both coordinates.
///
/// operator<=> is the lexicographic order, provided so points can serve as
/// container keys; the product partial order is exposed through leq() only.
struct Point {
  int i = 1;
  int j = 1;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point swapped(Point p) { return Point{p.j, p.i}; }

/// Product partial order on N x N.
constexpr bool leq(Point p, Point q) { return p.i <= q.i && p.j <= q.j; }

/// The square [1,B] x [1,B].
struct Window {
  int bound = 1;
};

struct OutOfWindowError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// The n-th row truncated to the window: (1,n), (2,n), ..., (B,n).
inline std::vector<Point> row_points(int n, Window w) {
  if (n < 1) throw std::invalid_argument("row index must be positive");
  if (n > w.bound) throw OutOfWindowError("row index exceeds window bound");
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(w.bound));
  for (int i = 1; i <= w.bound; ++i) out.push_back(Point{i, n});
  return out;
}

/// The n-th column truncated to the window: (n,1), (n,2), ..., (n,B).
inline std::vector<Point> col_points(int n, Window w) {
  if (n < 1) throw std::invalid_argument("column index must be positive");
  if (n > w.bound) throw OutOfWindowError("column index exceeds window bound");
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(w.bound));
  for (int j = 1; j <= w.bound; ++j) out.push_back(Point{n, j});
  return out;
}

}  // namespace mcm
