#pragma once

// Ultra-discrete (g+1)-periodic Toda lattice: phase space, time evolution,
// conserved quantities, the cyclic shift, the T^i cover and integer
// isolevel-set enumeration.

#include "troplab/rational.hpp"

#include <optional>
#include <tuple>
#include <string>
#include <vector>

namespace troplab {

/// A point (Q_1..Q_{g+1}, W_1..W_{g+1}) of the phase space. Indices are
/// cyclic modulo g+1; the vectors are stored 0-based.
class TodaState {
 public:
  /// Throws DomainError unless q.size() == w.size() >= 2.
  TodaState(std::vector<Rational> q, std::vector<Rational> w);

  int genus() const { return static_cast<int>(q_.size()) - 1; }
  int period() const { return static_cast<int>(q_.size()); }

  const std::vector<Rational>& q() const { return q_; }
  const std::vector<Rational>& w() const { return w_; }

  /// 1-based cyclic accessors: Q(0) == Q(g+1), Q(-1) == Q(g), ...
  const Rational& Q(int i) const { return q_[wrap(i)]; }
  const Rational& W(int i) const { return w_[wrap(i)]; }

  Rational sum_q() const;
  Rational sum_w() const;
  /// sum Q < sum W.
  bool in_phase_space() const;
  bool is_integral() const;

  /// "(Q_1,...,Q_{g+1},W_1,...,W_{g+1})", the tuple notation of the BBS tables.
  std::string tuple_str() const;

  friend bool operator==(const TodaState&, const TodaState&) = default;
  friend auto operator<=>(const TodaState& a, const TodaState& b) {
    return std::tie(a.q_, a.w_) <=> std::tie(b.q_, b.w_);
  }

 private:
  std::size_t wrap(int i) const {
    const int n = period();
    return static_cast<std::size_t>((((i - 1) % n) + n) % n);
  }

  std::vector<Rational> q_;
  std::vector<Rational> w_;
};

/// C = (C_{-1}, C_0, ..., C_g).
class ConservedVector {
 public:
  /// values in the order C_{-1}, C_0, ..., C_g; needs at least 3 entries.
  explicit ConservedVector(std::vector<Rational> values);

  int genus() const { return static_cast<int>(c_.size()) - 2; }
  /// C_k for k in [-1, g].
  const Rational& at(int k) const;
  const std::vector<Rational>& values() const { return c_; }

  /// The violated generic-condition inequality, if any.
  std::optional<std::string> genericity_violation() const;
  bool is_generic() const { return !genericity_violation().has_value(); }
  bool is_normalized() const { return at(genus()) == Rational(0); }
  bool is_integral() const;

  /// lambda_i = C_{g-i} - C_{g-i+1}, i = 1..g.
  std::vector<Rational> lambda() const;
  /// p_i = C_{-1} - 2 sum_j min(lambda_i, lambda_j).
  std::vector<Rational> p() const;

  std::string str() const;

  friend bool operator==(const ConservedVector&, const ConservedVector&) = default;

 private:
  std::vector<Rational> c_;
};

/// One step of the evolution T. Throws DomainError("not in 𝒯") when
/// sum Q >= sum W.
TodaState evolve(const TodaState& s);

/// Phi(s): the conserved vector. C_{g-k} for 0 <= k <= g is the minimum of
/// sum_{i in S} Q_i + sum_{j in T} W_j over index sets with |S|+|T| = k+1 and
/// j != i, i-1 (mod g+1) for all i in S, j in T; C_{-1} = sum (Q_i + W_i).
ConservedVector conserved(const TodaState& s);

/// (Q_1..Q_{g+1}, W_1..W_{g+1}) -> (Q_2..Q_{g+1},Q_1, W_2..W_{g+1},W_1),
/// applied `times` times (negative values rotate the other way).
TodaState shift(const TodaState& s, int times = 1);

/// W_1 > 0 and (Q_1 = 0 or W_{g+1} = 0).
bool in_T0(const TodaState& s);

/// Every i in [0, g] with shift^{-i}(s) in T^0, i.e. s in T^i = s^i(T^0).
std::vector<int> t_cover_indices(const TodaState& s);

/// The unique i of t_cover_indices. Throws DomainError when Phi(s) is not
/// generic and normalized, FalsificationError when zero or several i match.
int t0_membership(const TodaState& s);

/// Every integer state with conserved(s) == C, in lexicographic order of
/// (Q_1, ..., Q_{g+1}, W_1, ..., W_{g+1}). Requires integer, generic,
/// normalized C; throws DomainError otherwise.
std::vector<TodaState> enumerate_isolevel(const ConservedVector& C);

}  // namespace troplab
