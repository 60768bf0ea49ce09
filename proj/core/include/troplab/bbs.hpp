#pragma once

// Periodic box-ball system and its correspondence with T^0 of the Toda lattice.

#include "troplab/toda.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace troplab {

/// L boxes on a circle; cells[i] == '1' means box i holds a ball.
class BBSState {
 public:
  /// Throws DomainError on characters other than 0/1 or when 2 * balls >= L.
  explicit BBSState(std::string cells);

  /// Same as the constructor but reports the offending position as
  /// std::invalid_argument, for user input.
  static BBSState parse(std::string_view text);

  std::size_t length() const { return cells_.size(); }
  std::size_t balls() const;
  bool occupied(std::size_t i) const { return cells_[i] == '1'; }
  const std::string& str() const { return cells_; }

  friend bool operator==(const BBSState&, const BBSState&) = default;
  friend auto operator<=>(const BBSState&, const BBSState&) = default;

 private:
  std::string cells_;
};

/// One time step: every ball moves once, to the first box to its right
/// (cyclically) that was empty before the step and has not been filled yet.
BBSState bbs_evolve(const BBSState& b);

/// As bbs_evolve, processing balls in the given order of their box indices.
/// `order` must be a permutation of the occupied boxes.
BBSState bbs_evolve_ordered(const BBSState& b, std::span<const std::size_t> order);

/// beta: run-length parse into a T^0 state. g is the number of cyclic ball
/// clusters. Throws DomainError for an empty system and FalsificationError
/// if the parse leaves T^0.
TodaState beta(const BBSState& b);

/// rho = beta^{-1} on integer T^0 states. Throws DomainError otherwise.
BBSState rho(const TodaState& s);

struct BBSInvariants {
  int g = 0;
  std::vector<Rational> lambda;
  ConservedVector C;
};

/// conserved(beta(b)) together with its genus and partition.
BBSInvariants invariants_of(const BBSState& b);

/// Every length-L word whose partition is exactly lambda, in lexicographic
/// order. Requires 0 < lambda_1 < ... < lambda_g and 2 * sum < L.
std::vector<BBSState> enumerate_bbs(std::size_t L, std::span<const std::int64_t> lambda);

}  // namespace troplab
