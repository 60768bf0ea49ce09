#include "troplab/curve.hpp"

#include "troplab/errors.hpp"
#include "troplab/minplus.hpp"

#include <algorithm>
#include <sstream>

namespace troplab {

CurveModel CurveModel::build(const ConservedVector& C) {
  if (!C.is_normalized()) throw DomainError("curve needs C_g = 0, got " + C.str());
  if (auto bad = C.genericity_violation()) throw DomainError("non-generic C " + C.str() + ": " + *bad);

  CurveModel m;
  m.g_ = C.genus();
  m.c_ = C;
  m.lambda_ = C.lambda();
  m.p_ = C.p();
  m.xs_.push_back(Rational(0));
  m.xs_.insert(m.xs_.end(), m.lambda_.begin(), m.lambda_.end());

  const int g = m.g_;
  for (int k = 0; k <= g; ++k) m.vertices_.push_back({m.xs_[k], m.height(m.xs_[k])});
  for (int k = 0; k <= g; ++k) m.vertices_.push_back({m.xs_[k], m.total() - m.height(m.xs_[k])});

  for (int k = 0; k <= g; ++k) {
    const int t = m.lower_vertex(k);
    const int h = m.upper_vertex(k);
    m.edges_.push_back({EdgeKind::Vertical, k, t, h, {0, 1}, m.vertices_[h].y - m.vertices_[t].y});
  }
  for (int k = 1; k <= g; ++k) {
    m.edges_.push_back({EdgeKind::Lower, k, m.lower_vertex(k - 1), m.lower_vertex(k), {1, g + 1 - k},
                        m.xs_[k] - m.xs_[k - 1]});
  }
  for (int k = 1; k <= g; ++k) {
    m.edges_.push_back({EdgeKind::Upper, k, m.upper_vertex(k - 1), m.upper_vertex(k), {1, k - g - 1},
                        m.xs_[k] - m.xs_[k - 1]});
  }

  // The census must agree with the primitive-vector geometry.
  for (const auto& e : m.edges_) {
    const auto& a = m.vertices_[e.tail];
    const auto& b = m.vertices_[e.head];
    if (!(e.weight > Rational(0)) || b.x - a.x != e.weight * Rational(e.xi[0]) ||
        b.y - a.y != e.weight * Rational(e.xi[1])) {
      throw FalsificationError("edge geometry disagrees with its weight", "{\"C\":\"" + C.str() + "\"}");
    }
  }
  return m;
}

Rational CurveModel::height(const Rational& X) const {
  Rational best = Rational(g_ + 1) * X;
  for (int j = 0; j <= g_; ++j) best = min(best, Rational(j) * X + c_.at(j));
  return best;
}

int CurveModel::cycle_sign(int edge, int i) const {
  const auto& e = edges_.at(static_cast<std::size_t>(edge));
  switch (e.kind) {
    case EdgeKind::Vertical:
      return e.k == i ? 1 : (e.k == i - 1 ? -1 : 0);
    case EdgeKind::Lower:
      return e.k == i ? 1 : 0;
    case EdgeKind::Upper:
      return e.k == i ? -1 : 0;
  }
  return 0;
}

std::vector<std::pair<int, int>> CurveModel::cycle(int i) const {
  if (i < 1 || i > g_) throw DomainError("cycle index out of range");
  return {{vertical_edge(i), 1}, {upper_edge(i), -1}, {vertical_edge(i - 1), -1}, {lower_edge(i), 1}};
}

bool CurveModel::contains(const Rational& X, const Rational& Y) const {
  if (X < Rational(0) || X > xs_.back()) return false;
  std::vector<Rational> terms;
  terms.push_back(Rational(2) * Y);
  terms.push_back(Rational(g_ + 1) * X + Y);
  for (int j = g_; j >= 0; --j) terms.push_back(Rational(j) * X + Y + c_.at(j));
  terms.push_back(total());
  return trop_min(terms).is_tie();
}

std::optional<GraphPoint> CurveModel::try_locate(const Rational& X, const Rational& Y) const {
  // Edges are scanned in id order, so a vertex resolves to its smallest
  // incident edge; on a fixed edge the offset is determined.
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const auto& e = edges_[id];
    const auto& a = vertices_[e.tail];
    const auto& b = vertices_[e.head];
    if (e.kind == EdgeKind::Vertical) {
      if (X == a.x && a.y <= Y && Y <= b.y) return GraphPoint{static_cast<int>(id), Y - a.y, X, Y};
    } else if (a.x <= X && X <= b.x) {
      const Rational off = X - a.x;
      if (Y == a.y + off * Rational(e.xi[1])) return GraphPoint{static_cast<int>(id), off, X, Y};
    }
  }
  return std::nullopt;
}

GraphPoint CurveModel::locate(const Rational& X, const Rational& Y) const {
  if (auto p = try_locate(X, Y)) return *p;
  throw DomainError("point (" + X.str() + "," + Y.str() + ") is not on the curve " + c_.str());
}

std::array<Rational, 2> CurveModel::coords(int edge, const Rational& offset) const {
  const auto& e = edges_.at(static_cast<std::size_t>(edge));
  if (offset < Rational(0) || offset > e.weight) {
    throw DomainError("offset " + offset.str() + " outside edge " + std::to_string(edge));
  }
  const auto& a = vertices_[e.tail];
  return {a.x + offset * Rational(e.xi[0]), a.y + offset * Rational(e.xi[1])};
}

GraphPoint CurveModel::point(int edge, const Rational& offset) const {
  const auto xy = coords(edge, offset);
  return locate(xy[0], xy[1]);
}

GraphPoint CurveModel::vertex_point(int v) const {
  const auto& vx = vertices_.at(static_cast<std::size_t>(v));
  return locate(vx.x, vx.y);
}

std::optional<int> CurveModel::vertex_of(const GraphPoint& p) const {
  const auto& e = edges_.at(static_cast<std::size_t>(p.edge));
  if (p.offset == Rational(0)) return e.tail;
  if (p.offset == e.weight) return e.head;
  return std::nullopt;
}

std::vector<int> CurveModel::cycles_through(const GraphPoint& p) const {
  std::vector<int> out;
  const auto v = vertex_of(p);
  for (int i = 1; i <= g_; ++i) {
    bool on = cycle_sign(p.edge, i) != 0;
    for (std::size_t id = 0; !on && v && id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      on = (e.tail == *v || e.head == *v) && cycle_sign(static_cast<int>(id), i) != 0;
    }
    if (on) out.push_back(i);
  }
  return out;
}

std::vector<std::array<int, 2>> CurveModel::outgoing(int v) const {
  std::vector<std::array<int, 2>> out;
  for (const auto& e : edges_) {
    if (e.tail == v) out.push_back(e.xi);
    if (e.head == v) out.push_back({-e.xi[0], -e.xi[1]});
  }
  if (v == lower_vertex(0)) out.push_back({-1, -(g_ + 1)});
  if (v == upper_vertex(0)) out.push_back({-1, g_ + 1});
  if (v == lower_vertex(g_) || v == upper_vertex(g_)) out.push_back({1, 0});
  return out;
}

std::optional<std::string> CurveModel::balance_violation() const {
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
    const auto xi = outgoing(v);
    std::ostringstream where;
    where << "vertex " << v << " (" << vertices_[v].x << "," << vertices_[v].y << ")";
    if (xi.size() != 3) return where.str() + " is not 3-valent";
    int sx = 0;
    int sy = 0;
    for (const auto& d : xi) {
      sx += d[0];
      sy += d[1];
    }
    if (sx != 0 || sy != 0) return where.str() + ": primitive vectors do not sum to zero";
    for (std::size_t a = 0; a < xi.size(); ++a) {
      for (std::size_t b = a + 1; b < xi.size(); ++b) {
        const int wedge = xi[a][0] * xi[b][1] - xi[a][1] * xi[b][0];
        if (wedge != 1 && wedge != -1) return where.str() + ": |xi ^ xi'| != 1";
      }
    }
  }
  return std::nullopt;
}

}  // namespace troplab
