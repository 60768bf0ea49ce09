#pragma once

// Ultra-discrete eigenvector maps psi: T_C -> D^g(Gamma_C) for g = 1, 2, 3,
// their inverses for g = 1, 2, and pi = eta o psi.

#include "troplab/jacobian.hpp"

#include <array>
#include <string>
#include <vector>

namespace troplab {

struct PlanarPoint {
  Rational x;
  Rational y;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
  friend auto operator<=>(const PlanarPoint& a, const PlanarPoint& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

struct BranchTrace {
  int genus = 0;
  // g = 2: [Q_2,W_1] <= [Q_3,W_2] selects (Y_1^a, Y_2^b).
  bool first_branch = true;
  bool x_tie = false;
  // g = 3: the selection and the resolution level of rule (ii)/(iii),
  // 0 = s_2 unique, 1 = s_3 unique, 2 = s_2 ambiguous, 3 = s_3 ambiguous,
  // 4 = free choice.
  std::array<int, 3> s{0, 0, 0};
  int level = -1;

  std::string str() const;
};

/// The planar points (X_i, Y_i) sorted by (X, Y), before placing them on
/// the curve. Throws UnsupportedError for g >= 4.
std::vector<PlanarPoint> psi_points(const TodaState& s, const Rational& total, BranchTrace* trace = nullptr);

struct PsiResult {
  Divisor divisor;
  std::vector<PlanarPoint> points;
  BranchTrace trace;
};

/// Throws DomainError when conserved(s) differs from the curve's C,
/// UnsupportedError for g >= 4, and FalsificationError when an image point
/// is off the curve.
PsiResult psi(const CurveModel& curve, const TodaState& s);

/// psi^{-1} for g = 1, 2. Throws UnsupportedError for g = 3 and DomainError
/// when d is not in D^g.
TodaState psi_inverse(const Jacobian& jac, const Divisor& d);

/// eta(psi(s), p0).
JacPoint pi(const Jacobian& jac, const TodaState& s, const GraphPoint& p0);
JacPoint pi(const Jacobian& jac, const TodaState& s);

/// g = 3 only: every selection (s_1, s_2, s_3) that rules (i)-(iii) permit
/// when each "choose" clause is left open, paired with its points.
struct G3Selection {
  std::array<int, 3> s;
  int level;
  std::vector<PlanarPoint> points;
};
std::vector<G3Selection> g3_selections(const TodaState& s, const Rational& total);

}  // namespace troplab
