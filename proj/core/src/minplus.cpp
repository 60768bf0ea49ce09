#include "troplab/minplus.hpp"

#include <stdexcept>

namespace troplab {

MinResult trop_min(std::span<const Rational> terms) {
  if (terms.empty()) throw std::invalid_argument("empty tropical sum");
  MinResult r{terms[0], {0}};
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] < r.value) {
      r.value = terms[i];
      r.argmins.assign(1, i);
    } else if (terms[i] == r.value) {
      r.argmins.push_back(i);
    }
  }
  return r;
}

MinResult trop_min(std::initializer_list<Rational> terms) {
  return trop_min(std::span<const Rational>(terms.begin(), terms.size()));
}

Rational tmin(std::span<const Rational> terms) {
  if (terms.empty()) throw std::invalid_argument("empty tropical sum");
  const Rational* best = &terms[0];
  for (const auto& t : terms)
    if (t < *best) best = &t;
  return *best;
}

Rational tmin(std::initializer_list<Rational> terms) {
  return tmin(std::span<const Rational>(terms.begin(), terms.size()));
}

}  // namespace troplab
