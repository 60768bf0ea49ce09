#pragma once

// The compact tropical hyperelliptic curve Gamma_C, both as a planar set and
// as a weighted metric graph with cycle basis alpha_1..alpha_g.
//
// Vertex ids: lower vertex k = (lambda_k, h(lambda_k)) is k, upper vertex k =
// (lambda_k, C_{-1} - h(lambda_k)) is g+1+k, for k = 0..g with lambda_0 = 0.
// Edge ids: vertical k is k (0..g, tail below), lower chain k is g+k and
// upper chain k is 2g+k (1..g, tail on the left).

#include "troplab/toda.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace troplab {

enum class EdgeKind { Vertical, Lower, Upper };

struct Vertex {
  Rational x;
  Rational y;
};

struct Edge {
  EdgeKind kind;
  int k;  // X = lambda_k for verticals; the strip [lambda_{k-1}, lambda_k] for chains
  int tail;
  int head;
  std::array<int, 2> xi;  // primitive tangent vector, tail to head
  Rational weight;
};

/// A point of the metric graph: `offset` is measured from the tail of `edge`
/// in the weight metric. Vertices use the smallest incident (edge, offset).
struct GraphPoint {
  int edge = 0;
  Rational offset;
  Rational x;
  Rational y;

  friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
    return a.edge == b.edge && a.offset == b.offset;
  }
  friend auto operator<=>(const GraphPoint& a, const GraphPoint& b) {
    if (auto c = a.edge <=> b.edge; c != 0) return c;
    return a.offset <=> b.offset;
  }
};

class CurveModel {
 public:
  /// Throws DomainError naming the violated inequality for non-generic C,
  /// and when C_g != 0.
  static CurveModel build(const ConservedVector& C);

  int genus() const { return g_; }
  const ConservedVector& C() const { return c_; }
  const Rational& total() const { return c_.at(-1); }
  /// lambda_1..lambda_g.
  const std::vector<Rational>& lambda() const { return lambda_; }
  /// lambda_k with lambda_0 = 0.
  const Rational& lambda_at(int k) const { return xs_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& p() const { return p_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int vertical_edge(int k) const { return k; }
  int lower_edge(int k) const { return g_ + k; }
  int upper_edge(int k) const { return 2 * g_ + k; }
  int lower_vertex(int k) const { return k; }
  int upper_vertex(int k) const { return g_ + 1 + k; }

  /// Lower-branch height min[(g+1)X, gX + C_g, ..., X + C_1, C_0].
  Rational height(const Rational& X) const;

  /// Orientation of alpha_i (1-based) on edge e: +1, -1 or 0.
  int cycle_sign(int edge, int i) const;
  /// Oriented edges of alpha_i as (edge, sign) in traversal order starting
  /// at lower vertex i.
  std::vector<std::pair<int, int>> cycle(int i) const;

  /// Planar membership test on the compact part 0 <= X <= lambda_g.
  bool contains(const Rational& X, const Rational& Y) const;
  /// Throws DomainError when (X, Y) is off the curve.
  GraphPoint locate(const Rational& X, const Rational& Y) const;
  std::optional<GraphPoint> try_locate(const Rational& X, const Rational& Y) const;
  /// Planar coordinates of (edge, offset); throws DomainError if offset is
  /// outside [0, w(edge)].
  std::array<Rational, 2> coords(int edge, const Rational& offset) const;
  /// Canonical GraphPoint for (edge, offset).
  GraphPoint point(int edge, const Rational& offset) const;
  GraphPoint vertex_point(int v) const;

  /// The vertex a point sits on, if any.
  std::optional<int> vertex_of(const GraphPoint& p) const;
  /// Cycles (1-based) whose closed support contains p.
  std::vector<int> cycles_through(const GraphPoint& p) const;

  /// Outgoing primitive vectors at v within the full curve, including the
  /// removed infinite rays at the four corner vertices.
  std::vector<std::array<int, 2>> outgoing(int v) const;
  /// First vertex where sum xi != 0 or some |xi_a ^ xi_b| != 1.
  std::optional<std::string> balance_violation() const;

 private:
  int g_ = 0;
  ConservedVector c_{std::vector<Rational>{0, 0, 0}};
  std::vector<Rational> lambda_;
  std::vector<Rational> xs_;
  std::vector<Rational> p_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

}  // namespace troplab
