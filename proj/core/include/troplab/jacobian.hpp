#pragma once

// The pairing Q on paths, the period matrices K, Lambda, A, the tropical
// Jacobian R^g / M Z^g with exact reduction, the Abel-Jacobi map eta and the
// divisor class D^g.
//
// Coordinates: a K-tagged vector lists pairings with alpha_1..alpha_g. A
// Lambda- or A-tagged vector lists pairings with the cumulative cycles
// alpha_1 + ... + alpha_i, i.e. z_Lambda = L z_K with L lower-triangular ones.

#include "troplab/curve.hpp"
#include "troplab/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace troplab {

/// A piece of a path along one edge, from offset `from` to offset `to`.
struct PathSegment {
  int edge;
  Rational from;
  Rational to;
};

using Path = std::vector<PathSegment>;
using Divisor = std::vector<GraphPoint>;

/// Q(path, alpha_i), i 1-based. Throws DomainError when consecutive segments
/// do not meet.
Rational pairing(const CurveModel& curve, const Path& path, int i);
/// (Q(path, alpha_1), ..., Q(path, alpha_g)).
Vec pairing_vector(const CurveModel& curve, const Path& path);

/// alpha_i as a closed path starting at lower vertex i.
Path cycle_path(const CurveModel& curve, int i);

/// The spanning-tree path from the vertex (0, 0) to p. The tree is the left
/// vertical edge plus the lower and upper chains.
Path root_path(const CurveModel& curve, const GraphPoint& p);
/// The tree path from s to p (root_path(s) reversed, then root_path(p)).
Path tree_path(const CurveModel& curve, const GraphPoint& s, const GraphPoint& p);

/// iota_S(P) = pairing_vector(tree_path(S, P)).
Vec iota(const CurveModel& curve, const GraphPoint& s, const GraphPoint& p);

enum class Basis { K, Lambda, A };

std::string to_string(Basis b);
Basis basis_from_string(const std::string& s);

struct PeriodData {
  Matrix K;
  Matrix Lambda;
  Matrix A;
  Rational detK;
  Rational detLambda;
  Rational detA;

  static PeriodData of(const CurveModel& curve);
  const Matrix& matrix(Basis b) const;
};

struct JacPoint {
  Vec z;
  Basis basis = Basis::K;

  friend bool operator==(const JacPoint&, const JacPoint&) = default;
  friend auto operator<=>(const JacPoint& a, const JacPoint& b) {
    if (auto c = a.basis <=> b.basis; c != 0) return c;
    return a.z <=> b.z;
  }
};

enum class Translation { Nu, V };

class Jacobian {
 public:
  explicit Jacobian(CurveModel curve);

  const CurveModel& curve() const { return curve_; }
  const PeriodData& periods() const { return periods_; }
  int genus() const { return curve_.genus(); }

  /// M frac(M^{-1} z): the representative with lattice coordinates in [0,1).
  JacPoint reduce(const Vec& z, Basis b) const;
  bool equal(const Vec& z1, const Vec& z2, Basis b) const;

  /// Converts coordinates without reducing.
  Vec convert(const Vec& z, Basis from, Basis to) const;

  /// Reduced sum of iota(p0, P_i) in K coordinates.
  JacPoint eta(const Divisor& d, const GraphPoint& p0) const;
  /// eta with p0 = vertex (0, 0).
  JacPoint eta(const Divisor& d) const;

  /// nu adds C_{-1}(1, ..., 1) in Lambda coordinates; v adds
  /// (lambda_1, lambda_2 - lambda_1, ...) in K coordinates.
  Vec translation(Translation t, Basis b) const;
  JacPoint translate(const JacPoint& p, Translation t) const;

  /// Re-reduction modulo A Z^g in Lambda-type coordinates.
  JacPoint to_Jprime(const JacPoint& p) const;

  /// |Z^g / M Z^g| = |det M|; needs integer C.
  std::int64_t lattice_point_count(Basis b) const;
  /// One integer vector per class of Z^g / M Z^g, from the Hermite normal
  /// form: 0 <= x_i < H_ii.
  std::vector<Vec> representatives(Basis b) const;

  /// P_i on closed alpha_i under some assignment, and at most one point in
  /// the open overlap of each pair of adjacent cycles.
  bool in_Dg(const Divisor& d) const;

 private:
  CurveModel curve_;
  PeriodData periods_;
  Matrix lower_;
};

}  // namespace troplab
