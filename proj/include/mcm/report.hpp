#pragma once

#include <stdexcept>
#include <string>

#include "mcm/core.hpp"

namespace mcm {

enum class Violation {
  None,
  InjectivityCollision,    // two domain points share an image; a, b are the points
  MonotonicityViolation,   // a <= b but the images are not ordered
  ShiftVectorNotMonotone,  // a = {index, next index} where the vector increases
  TailUnderflow,           // a = {index, shift}: tail images would leave the grid
};

/// Result of a validity check. Carries the first violation found together
/// with the offending points so property-test shrinking has something to
/// chew on.
struct ValidationReport {
  Violation kind = Violation::None;
  Point a{};
  Point b{};
  bool ok() const { return kind == Violation::None; }
};

inline std::string to_string(const ValidationReport& r) {
  auto pt = [](Point p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  };
  switch (r.kind) {
    case Violation::None:
      return "ok";
    case Violation::InjectivityCollision:
      return "injectivity collision between " + pt(r.a) + " and " + pt(r.b);
    case Violation::MonotonicityViolation:
      return "monotonicity violation between " + pt(r.a) + " and " + pt(r.b);
    case Violation::ShiftVectorNotMonotone:
      return "shift vector increases at index " + std::to_string(r.a.i);
    case Violation::TailUnderflow:
      return "tail underflow at index " + std::to_string(r.a.i);
  }
  return "unknown";
}

/// An internal contract broke; indicates a bug, callers must not continue.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Stored orientation bit contradicts the map's behaviour.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Random generation gave up after the rejection budget.
struct GenerationExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Caller forced a search window below the analytic bound.
struct MarginTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace mcm
