#include "troplab/jacobian.hpp"

#include "troplab/errors.hpp"

#include <algorithm>
#include <functional>

namespace troplab {

Rational pairing(const CurveModel& curve, const Path& path, int i) {
  if (i < 1 || i > curve.genus()) throw DomainError("cycle index out of range");
  Rational total;
  for (std::size_t s = 0; s < path.size(); ++s) {
    const auto& seg = path[s];
    if (s + 1 < path.size() && curve.coords(seg.edge, seg.to) != curve.coords(path[s + 1].edge, path[s + 1].from)) {
      throw DomainError("disconnected path at segment " + std::to_string(s));
    }
    total += Rational(curve.cycle_sign(seg.edge, i)) * (seg.to - seg.from);
  }
  return total;
}

Vec pairing_vector(const CurveModel& curve, const Path& path) {
  Vec v;
  for (int i = 1; i <= curve.genus(); ++i) v.push_back(pairing(curve, path, i));
  return v;
}

Path cycle_path(const CurveModel& curve, int i) {
  Path p;
  for (const auto& [edge, sign] : curve.cycle(i)) {
    const Rational& w = curve.edges()[static_cast<std::size_t>(edge)].weight;
    if (sign > 0) {
      p.push_back({edge, Rational(0), w});
    } else {
      p.push_back({edge, w, Rational(0)});
    }
  }
  return p;
}

Path root_path(const CurveModel& curve, const GraphPoint& p) {
  const auto full = [&](int edge) {
    return PathSegment{edge, Rational(0), curve.edges()[static_cast<std::size_t>(edge)].weight};
  };
  const auto& e = curve.edges().at(static_cast<std::size_t>(p.edge));
  Path path;
  switch (e.kind) {
    case EdgeKind::Lower:
      for (int m = 1; m < e.k; ++m) path.push_back(full(curve.lower_edge(m)));
      break;
    case EdgeKind::Vertical:
      for (int m = 1; m <= e.k; ++m) path.push_back(full(curve.lower_edge(m)));
      break;
    case EdgeKind::Upper:
      path.push_back(full(curve.vertical_edge(0)));
      for (int m = 1; m < e.k; ++m) path.push_back(full(curve.upper_edge(m)));
      break;
  }
  path.push_back({p.edge, Rational(0), p.offset});
  return path;
}

Path tree_path(const CurveModel& curve, const GraphPoint& s, const GraphPoint& p) {
  Path back = root_path(curve, s);
  std::reverse(back.begin(), back.end());
  for (auto& seg : back) std::swap(seg.from, seg.to);
  Path fwd = root_path(curve, p);
  back.insert(back.end(), fwd.begin(), fwd.end());
  return back;
}

Vec iota(const CurveModel& curve, const GraphPoint& s, const GraphPoint& p) {
  return pairing_vector(curve, tree_path(curve, s, p));
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::K:
      return "K";
    case Basis::Lambda:
      return "Lambda";
    case Basis::A:
      return "A";
  }
  return "?";
}

Basis basis_from_string(const std::string& s) {
  if (s == "K") return Basis::K;
  if (s == "Lambda") return Basis::Lambda;
  if (s == "A") return Basis::A;
  throw DomainError("unknown basis '" + s + "' (expected K, Lambda or A)");
}

PeriodData PeriodData::of(const CurveModel& curve) {
  const auto g = static_cast<std::size_t>(curve.genus());
  PeriodData d;
  d.K = Matrix(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    const Path a = cycle_path(curve, static_cast<int>(i) + 1);
    for (std::size_t j = 0; j < g; ++j) d.K(i, j) = pairing(curve, a, static_cast<int>(j) + 1);
  }
  const Matrix L = Matrix::lower_ones(g);
  d.Lambda = L * d.K * L.transpose();
  Matrix ones(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) ones(i, j) = curve.total();
  d.A = d.Lambda - ones;
  d.detK = d.K.det();
  d.detLambda = d.Lambda.det();
  d.detA = d.A.det();
  return d;
}

const Matrix& PeriodData::matrix(Basis b) const {
  switch (b) {
    case Basis::K:
      return K;
    case Basis::Lambda:
      return Lambda;
    case Basis::A:
      return A;
  }
  return K;
}

Jacobian::Jacobian(CurveModel curve)
    : curve_(std::move(curve)),
      periods_(PeriodData::of(curve_)),
      lower_(Matrix::lower_ones(static_cast<std::size_t>(curve_.genus()))) {}

JacPoint Jacobian::reduce(const Vec& z, Basis b) const {
  const Matrix& m = periods_.matrix(b);
  Vec t = m.solve(z);
  for (auto& x : t) x = x.frac();
  return JacPoint{m * t, b};
}

bool Jacobian::equal(const Vec& z1, const Vec& z2, Basis b) const {
  for (const auto& t : periods_.matrix(b).solve(z1 - z2))
    if (!t.is_integer()) return false;
  return true;
}

Vec Jacobian::convert(const Vec& z, Basis from, Basis to) const {
  const bool from_k = from == Basis::K;
  const bool to_k = to == Basis::K;
  if (from_k == to_k) return z;
  return from_k ? lower_ * z : lower_.solve(z);
}

JacPoint Jacobian::eta(const Divisor& d, const GraphPoint& p0) const {
  Vec z(static_cast<std::size_t>(genus()));
  for (const auto& p : d) z = z + iota(curve_, p0, p);
  return reduce(z, Basis::K);
}

JacPoint Jacobian::eta(const Divisor& d) const { return eta(d, curve_.vertex_point(curve_.lower_vertex(0))); }

Vec Jacobian::translation(Translation t, Basis b) const {
  const auto g = static_cast<std::size_t>(genus());
  if (t == Translation::Nu) return convert(Vec(g, curve_.total()), Basis::Lambda, b);
  Vec v(g);
  for (std::size_t i = 0; i < g; ++i) v[i] = curve_.lambda_at(static_cast<int>(i) + 1) - curve_.lambda_at(static_cast<int>(i));
  return convert(v, Basis::K, b);
}

JacPoint Jacobian::translate(const JacPoint& p, Translation t) const {
  return reduce(p.z + translation(t, p.basis), p.basis);
}

JacPoint Jacobian::to_Jprime(const JacPoint& p) const {
  return reduce(convert(p.z, p.basis, Basis::A), Basis::A);
}

std::int64_t Jacobian::lattice_point_count(Basis b) const {
  const Matrix& m = periods_.matrix(b);
  if (!m.is_integral()) throw DomainError("lattice point count needs an integral period matrix");
  const auto d = periods_.matrix(b).det().abs().to_int64();
  if (!d) throw DomainError("determinant too large");
  return *d;
}

std::vector<Vec> Jacobian::representatives(Basis b) const {
  const Matrix h = hermite_normal_form(periods_.matrix(b));
  const auto g = static_cast<std::size_t>(genus());
  std::vector<std::int64_t> bound(g);
  for (std::size_t i = 0; i < g; ++i) bound[i] = *h(i, i).to_int64();
  std::vector<Vec> out;
  std::vector<std::int64_t> x(g, 0);
  for (;;) {
    Vec v;
    for (auto c : x) v.emplace_back(static_cast<long long>(c));
    out.push_back(std::move(v));
    std::size_t i = g;
    while (i > 0) {
      --i;
      if (++x[i] < bound[i]) break;
      x[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool Jacobian::in_Dg(const Divisor& d) const {
  const int g = genus();
  if (static_cast<int>(d.size()) != g) return false;
  for (int k = 1; k <= g - 1; ++k) {
    const Rational& w = curve_.edges()[static_cast<std::size_t>(curve_.vertical_edge(k))].weight;
    int inside = 0;
    for (const auto& p : d)
      if (p.edge == curve_.vertical_edge(k) && p.offset > Rational(0) && p.offset < w) ++inside;
    if (inside > 1) return false;
  }

  // Bipartite matching of points to cycles (Kuhn's augmenting paths).
  std::vector<std::vector<int>> adj;
  for (const auto& p : d) adj.push_back(curve_.cycles_through(p));
  std::vector<int> owner(static_cast<std::size_t>(g + 1), -1);
  std::function<bool(int, std::vector<bool>&)> augment = [&](int pt, std::vector<bool>& seen) {
    for (int c : adj[static_cast<std::size_t>(pt)]) {
      if (seen[static_cast<std::size_t>(c)]) continue;
      seen[static_cast<std::size_t>(c)] = true;
      if (owner[static_cast<std::size_t>(c)] < 0 || augment(owner[static_cast<std::size_t>(c)], seen)) {
        owner[static_cast<std::size_t>(c)] = pt;
        return true;
      }
    }
    return false;
  };
  for (int pt = 0; pt < g; ++pt) {
    std::vector<bool> seen(static_cast<std::size_t>(g + 1), false);
    if (!augment(pt, seen)) return false;
  }
  return true;
}

}  // namespace troplab
