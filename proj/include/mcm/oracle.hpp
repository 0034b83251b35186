#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "mcm/element.hpp"

namespace mcm {

/// Representation-free ground truth: a raw partial injective map on a
/// finite square window. Deliberately knows nothing about tails so that a
/// bug in the canonical representation cannot hide here.
struct WindowedPartialMap {
  int window = 1;
  std::map<Point, Point> entries;
};

/// Builds a map after checking entry injectivity (throws on collision).
WindowedPartialMap checked_map(int window, std::map<Point, Point> entries);

/// Pointwise evaluation of e on [1,w]^2.
WindowedPartialMap truncate(const Element& e, Window w);

/// Exhaustive injectivity and monotonicity check over all pairs.
ValidationReport bf_check(const WindowedPartialMap& m);

/// Pointwise composition; entries exist only where the intermediate point
/// is itself an entry of the second map.
WindowedPartialMap bf_compose(const WindowedPartialMap& a, const WindowedPartialMap& b);

/// Exhaustively yields every valid element with window bound and shifts at
/// most the given limits, both orientations, duplicate-free up to
/// normalization. Stops early when the visitor returns false.
void enumerate_elements(int max_window, int max_shift,
                        const std::function<bool(const Element&)>& visit);
std::vector<Element> enumerate_elements(int max_window, int max_shift);

struct RandomParams {
  int max_window = 4;
  int max_shift = 2;
  int hole_budget = 3;
};

/// Deterministic for a fixed seed: draws non-increasing shift vectors, then
/// fills the explicit window monotonically, validating before returning.
/// Throws GenerationExhausted when the rejection budget runs out (caller
/// retries with another seed).
Element random_element(std::uint64_t seed, const RandomParams& params = {});

}  // namespace mcm
