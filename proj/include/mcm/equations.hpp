#pragma once

#include <optional>
#include <vector>

#include "mcm/element.hpp"

namespace mcm {

/// All x with compose(a, x) equal to b. The solution is pointwise forced on
/// the image of a; the only freedom is over the finite image complement,
/// which is enumerated exhaustively. search_margin overrides the analytic
/// construction window for testing and must not fall below it
/// (MarginTooSmall).
std::vector<Element> solve_right(const Element& a, const Element& b,
                                 std::optional<int> search_margin = std::nullopt);

/// All x with compose(x, a) equal to b; freedom ranges over the finite
/// domain complements instead.
std::vector<Element> solve_left(const Element& a, const Element& b,
                                std::optional<int> search_margin = std::nullopt);

/// The set-theoretic inverse when it belongs to the monoid, nothing
/// otherwise. Any nonzero tail shift inverts to a right/up tail, which
/// cannot be monotone against the fixed far quadrant, so only shift-free
/// elements can qualify; their inverted window is validated explicitly.
std::optional<Element> try_inverse(const Element& a);

}  // namespace mcm
