#pragma once

// Min-plus (tropical) evaluation primitives.

#include "troplab/rational.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace troplab {

/// Tropical sum with tie detection. argmins holds every 0-based term
/// position attaining the minimum, in increasing order.
struct MinResult {
  Rational value;
  std::vector<std::size_t> argmins;

  bool is_tie() const { return argmins.size() > 1; }
};

/// Throws std::invalid_argument("empty tropical sum") on an empty list.
MinResult trop_min(std::span<const Rational> terms);
MinResult trop_min(std::initializer_list<Rational> terms);

/// Minimum value only; the bracket [a, b, ...] of min-plus formulas.
Rational tmin(std::initializer_list<Rational> terms);
Rational tmin(std::span<const Rational> terms);

}  // namespace troplab
