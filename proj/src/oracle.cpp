#include "mcm/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace mcm {

WindowedPartialMap checked_map(int window, std::map<Point, Point> entries) {
  if (window < 1) throw std::invalid_argument("window bound must be >= 1");
  std::set<Point> seen;
  for (const auto& [k, v] : entries) {
    if (k.i < 1 || k.j < 1 || k.i > window || k.j > window)
      throw std::invalid_argument("entry key outside the window");
    if (!seen.insert(v).second)
      throw std::invalid_argument("entries are not injective");
  }
  return WindowedPartialMap{window, std::move(entries)};
}

WindowedPartialMap truncate(const Element& e, Window w) {
  WindowedPartialMap m;
  m.window = w.bound;
  for (int i = 1; i <= w.bound; ++i)
    for (int j = 1; j <= w.bound; ++j)
      if (auto y = apply(e, Point{i, j})) m.entries.emplace(Point{i, j}, *y);
  return m;
}

ValidationReport bf_check(const WindowedPartialMap& m) {
  std::map<Point, Point> seen;
  for (const auto& [k, v] : m.entries) {
    auto [it, fresh] = seen.emplace(v, k);
    if (!fresh) return {Violation::InjectivityCollision, it->second, k};
  }
  for (const auto& [k, v] : m.entries)
    for (const auto& [k2, v2] : m.entries) {
      if (k2 == k) continue;
      if (leq(k, k2) && !leq(v, v2))
        return {Violation::MonotonicityViolation, k, k2};
    }
  return {};
}

WindowedPartialMap bf_compose(const WindowedPartialMap& a, const WindowedPartialMap& b) {
  WindowedPartialMap r;
  r.window = a.window;
  for (const auto& [k, v] : a.entries) {
    auto it = b.entries.find(v);
    if (it != b.entries.end()) r.entries.emplace(k, it->second);
  }
  return r;
}

namespace {

// All non-increasing vectors of the given length with entries in [0, cap].
void each_shift_vector(int length, int cap,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(static_cast<size_t>(length), 0);
  std::function<void(int, int)> rec = [&](int pos, int bound) {
    if (pos == length) {
      fn(v);
      return;
    }
    for (int s = bound; s >= 0; --s) {
      v[static_cast<size_t>(pos)] = s;
      rec(pos + 1, s);
    }
  };
  rec(0, cap);
}

struct WindowFiller {
  int b;
  const std::vector<int>& rows;
  const std::vector<int>& cols;
  std::map<Point, Point> assigned;
  std::set<Point> used;

  Point upper(Point p) const {
    return Point{std::min(b + 1 - rows[static_cast<size_t>(p.j) - 1], p.i),
                 std::min(p.j, b + 1 - cols[static_cast<size_t>(p.i) - 1])};
  }

  Point lower(Point p) const {
    Point lo{1, 1};
    for (const auto& [k, v] : assigned)
      if (leq(k, p)) {
        lo.i = std::max(lo.i, v.i);
        lo.j = std::max(lo.j, v.j);
      }
    return lo;
  }

  bool collides_with_tail(Point img) const {
    if (img.j <= b && img.i >= b + 1 - rows[static_cast<size_t>(img.j) - 1]) return true;
    if (img.i <= b && img.j >= b + 1 - cols[static_cast<size_t>(img.i) - 1]) return true;
    return false;
  }

  std::vector<Point> feasible(Point p) const {
    const Point lo = lower(p);
    const Point hi = upper(p);
    std::vector<Point> out;
    for (int u = lo.i; u <= hi.i; ++u)
      for (int v = lo.j; v <= hi.j; ++v) {
        const Point img{u, v};
        if (used.count(img) || collides_with_tail(img)) continue;
        out.push_back(img);
      }
    return out;
  }
};

}  // namespace

void enumerate_elements(int max_window, int max_shift,
                        const std::function<bool(const Element&)>& visit) {
  if (max_window < 1) throw std::invalid_argument("max_window must be >= 1");
  if (max_shift < 0) throw std::invalid_argument("max_shift must be >= 0");
  std::set<std::string> seen;
  bool stop = false;

  for (int b = 1; b <= max_window && !stop; ++b) {
    const int cap = std::min(max_shift, b);
    each_shift_vector(b, cap, [&](const std::vector<int>& rows) {
      if (stop) return;
      each_shift_vector(b, cap, [&](const std::vector<int>& cols) {
        if (stop) return;
        WindowFiller filler{b, rows, cols, {}, {}};
        std::vector<Point> order;
        for (int i = 1; i <= b; ++i)
          for (int j = 1; j <= b; ++j) order.push_back(Point{i, j});

        std::function<void(size_t)> rec = [&](size_t k) {
          if (stop) return;
          if (k == order.size()) {
            PlusPart p;
            p.window = b;
            p.row_shifts = rows;
            p.col_shifts = cols;
            p.explicit_map = filler.assigned;
            if (!validate(p).ok()) return;  // pruning should make this moot
            for (int g = 0; g <= 1 && !stop; ++g) {
              Element e = normalize(Element{p, g});
              if (seen.insert(canonical_key(e)).second)
                if (!visit(e)) stop = true;
            }
            return;
          }
          const Point pt = order[k];
          rec(k + 1);  // hole
          for (const Point& img : filler.feasible(pt)) {
            filler.assigned.emplace(pt, img);
            filler.used.insert(img);
            rec(k + 1);
            filler.used.erase(img);
            filler.assigned.erase(pt);
            if (stop) return;
          }
        };
        rec(0);
      });
    });
  }
}

std::vector<Element> enumerate_elements(int max_window, int max_shift) {
  std::vector<Element> out;
  enumerate_elements(max_window, max_shift, [&](const Element& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

Element random_element(std::uint64_t seed, const RandomParams& params) {
  if (params.max_window < 1 || params.max_shift < 0 || params.hole_budget < 0)
    throw std::invalid_argument("bad random element parameters");
  std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ull);
  auto pick = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  for (int attempt = 0; attempt < 64; ++attempt) {
    const int b = pick(1, params.max_window);
    const int cap = std::min(params.max_shift, b);
    std::vector<int> rows(static_cast<size_t>(b)), cols(static_cast<size_t>(b));
    for (int& s : rows) s = pick(0, cap);
    for (int& s : cols) s = pick(0, cap);
    std::sort(rows.rbegin(), rows.rend());
    std::sort(cols.rbegin(), cols.rend());

    WindowFiller filler{b, rows, cols, {}, {}};
    int holes_left = params.hole_budget;
    bool dead = false;
    for (int i = 1; i <= b && !dead; ++i)
      for (int j = 1; j <= b && !dead; ++j) {
        const Point pt{i, j};
        auto options = filler.feasible(pt);
        const bool want_hole = holes_left > 0 && pick(0, 5) == 0;
        if (options.empty() || want_hole) {
          if (holes_left == 0) {
            dead = true;
            break;
          }
          --holes_left;
          continue;
        }
        const Point img = options[static_cast<size_t>(pick(0, static_cast<int>(options.size()) - 1))];
        filler.assigned.emplace(pt, img);
        filler.used.insert(img);
      }
    if (dead) continue;

    PlusPart p;
    p.window = b;
    p.row_shifts = rows;
    p.col_shifts = cols;
    p.explicit_map = filler.assigned;
    if (!validate(p).ok()) continue;
    return normalize(Element{std::move(p), pick(0, 1)});
  }
  throw GenerationExhausted("no valid element after 64 attempts for seed " +
                            std::to_string(seed));
}

}  // namespace mcm
