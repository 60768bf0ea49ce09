#include "troplab/eigenmap.hpp"

#include "troplab/errors.hpp"
#include "troplab/minplus.hpp"

#include <algorithm>
#include <sstream>

namespace troplab {

namespace {

using R = Rational;

struct G3Data {
  R x[3];
  R a1, a2, a3, b1, b3;
  bool c1[4];
  bool c2[4];
  bool c3[4];
};

G3Data g3_data(const TodaState& s) {
  const R &Q2 = s.Q(2), &Q3 = s.Q(3), &Q4 = s.Q(4);
  const R &W1 = s.W(1), &W2 = s.W(2), &W3 = s.W(3);
  G3Data d;
  d.x[0] = tmin({Q2, Q3, Q4, W1, W2, W3});
  d.x[1] = tmin({Q2 + Q3, Q3 + Q4, Q2 + Q4, W1 + W2, W2 + W3, W1 + W3, Q4 + W1, Q4 + W2, Q2 + W3, Q3 + W1}) - d.x[0];
  d.x[2] = tmin({Q2 + Q3 + Q4, W1 + Q3 + Q4, W1 + W2 + Q4, W1 + W2 + W3}) - (d.x[0] + d.x[1]);
  d.a1 = min(Q2, W1);
  d.a2 = min(Q3, W2);
  d.a3 = min(Q4, W3);
  d.b1 = tmin({Q3 + Q4, W2 + W3, Q4 + W2});
  d.b3 = tmin({Q2 + Q3, W1 + W2, Q3 + W1});
  const R& X2 = d.x[1];
  const R& X3 = d.x[2];
  d.c1[1] = d.a1 <= min(d.a2, d.a3);
  d.c1[2] = d.a2 <= min(d.a3, d.a1);
  d.c1[3] = d.a3 <= min(d.a1, d.a2);
  d.c2[1] = X2 + min(d.a2, d.a3) < d.b1;
  d.c2[2] = (d.a1 < X2 && X2 < d.a3) || (d.a3 < X2 && X2 < d.a1);
  d.c2[3] = X2 + min(d.a1, d.a2) < d.b3;
  d.c3[1] = X3 + min(d.a2, d.a3) > d.b1;
  d.c3[2] = X3 > max(d.a1, d.a3);
  d.c3[3] = X3 + min(d.a1, d.a2) > d.b3;
  return d;
}

R g3_y(const TodaState& s, const R& total, int which, const R& X) {
  const R &Q1 = s.Q(1), &Q2 = s.Q(2), &Q3 = s.Q(3), &Q4 = s.Q(4);
  const R &W1 = s.W(1), &W2 = s.W(2), &W3 = s.W(3), &W4 = s.W(4);
  switch (which) {
    case 1:
      return Q1 + W1 + tmin({R(2) * X, X + tmin({Q3, Q4, W2, W3}), tmin({Q3 + Q4, W2 + W3, Q4 + W2})});
    case 2:
      return Q1 + W1 + Q2 + W2 + tmin({Q4, W3, X}) - tmin({Q2, W1, X});
    default:
      return total - (Q4 + W4 + tmin({R(2) * X, X + tmin({Q2, Q3, W1, W2}), tmin({Q2 + Q3, W1 + W2, Q3 + W1})}));
  }
}

std::vector<PlanarPoint> g3_points(const TodaState& s, const R& total, const G3Data& d, const std::array<int, 3>& sel) {
  std::vector<PlanarPoint> pts;
  for (int i = 0; i < 3; ++i) pts.push_back({d.x[i], g3_y(s, total, sel[static_cast<std::size_t>(i)], d.x[i])});
  std::sort(pts.begin(), pts.end());
  return pts;
}

// Resolution of rule (ii) for a fixed s_1: (level, s_2, s_3).
std::array<int, 3> g3_resolve(const G3Data& d, int s1) {
  std::vector<int> rest;
  for (int k = 1; k <= 3; ++k)
    if (k != s1) rest.push_back(k);
  std::vector<int> c2o;
  std::vector<int> c3o;
  for (int k : rest) {
    if (d.c2[k]) c2o.push_back(k);
    if (d.c3[k]) c3o.push_back(k);
  }
  const auto other = [&](int k) { return rest[0] == k ? rest[1] : rest[0]; };
  if (c2o.size() == 1) return {0, c2o[0], other(c2o[0])};
  if (c2o.empty() && c3o.size() == 1) return {1, other(c3o[0]), c3o[0]};
  if (!c2o.empty()) return {2, c2o[0], other(c2o[0])};
  if (!c3o.empty()) return {3, other(c3o[0]), c3o[0]};
  return {4, rest[0], rest[1]};
}

void check_conserved(const CurveModel& curve, const TodaState& s) {
  if (s.genus() != curve.genus()) throw DomainError("state genus does not match the curve");
  const auto C = conserved(s);
  if (!(C == curve.C())) {
    throw DomainError("conserved(s) = " + C.str() + " differs from the curve's C = " + curve.C().str());
  }
}

}  // namespace

std::string BranchTrace::str() const {
  std::ostringstream os;
  if (genus == 2) {
    os << (first_branch ? "[Q2,W1]<=[Q3,W2]" : "[Q3,W2]<[Q2,W1]") << (x_tie ? " X1=X2" : "");
  } else if (genus == 3) {
    os << "s=(" << s[0] << ',' << s[1] << ',' << s[2] << ") level " << level;
  } else {
    os << "g=" << genus;
  }
  return os.str();
}

std::vector<PlanarPoint> psi_points(const TodaState& s, const Rational& total, BranchTrace* trace) {
  BranchTrace local;
  BranchTrace& t = trace ? *trace : local;
  t = BranchTrace{};
  t.genus = s.genus();
  switch (s.genus()) {
    case 1:
      return {{min(s.Q(2), s.W(1)), s.Q(1) + s.W(1)}};
    case 2: {
      const R &Q1 = s.Q(1), &Q2 = s.Q(2), &Q3 = s.Q(3);
      const R &W1 = s.W(1), &W2 = s.W(2), &W3 = s.W(3);
      const R X1 = tmin({Q2, Q3, W1, W2});
      const R X2 = tmin({Q2 + Q3, W1 + W2, Q3 + W1}) - X1;
      const R a = min(Q2, W1);
      const R b = min(Q3, W2);
      t.first_branch = a <= b;
      t.x_tie = X1 == X2;
      std::vector<PlanarPoint> pts;
      if (t.first_branch) {
        pts = {{X1, Q1 + W1 + a}, {X2, total - (Q3 + W3 + a)}};
      } else {
        pts = {{X1, total - (Q3 + W3 + b)}, {X2, Q1 + W1 + b}};
      }
      std::sort(pts.begin(), pts.end());
      return pts;
    }
    case 3: {
      const G3Data d = g3_data(s);
      std::array<int, 4> best{5, 0, 0, 0};
      for (int s1 = 1; s1 <= 3; ++s1) {
        if (!d.c1[s1]) continue;
        const auto r = g3_resolve(d, s1);
        if (r[0] < best[0]) best = {r[0], s1, r[1], r[2]};
      }
      if (best[0] == 5) throw FalsificationError("no s_1 satisfies rule (i)", "{\"state\":\"" + s.tuple_str() + "\"}");
      t.level = best[0];
      t.s = {best[1], best[2], best[3]};
      return g3_points(s, total, d, t.s);
    }
    default:
      throw UnsupportedError("psi is only available for g = 1, 2, 3 (got g = " + std::to_string(s.genus()) + ")");
  }
}

std::vector<G3Selection> g3_selections(const TodaState& s, const Rational& total) {
  if (s.genus() != 3) throw DomainError("g3_selections needs a g = 3 state");
  const G3Data d = g3_data(s);
  std::vector<G3Selection> out;
  for (int s1 = 1; s1 <= 3; ++s1) {
    if (!d.c1[s1]) continue;
    const int level = g3_resolve(d, s1)[0];
    std::vector<int> rest;
    for (int k = 1; k <= 3; ++k)
      if (k != s1) rest.push_back(k);
    std::vector<std::array<int, 2>> pairs;
    for (int k : rest)
      if (d.c2[k]) pairs.push_back({k, rest[0] == k ? rest[1] : rest[0]});
    if (pairs.empty()) {
      for (int k : rest)
        if (d.c3[k]) pairs.push_back({rest[0] == k ? rest[1] : rest[0], k});
    }
    if (pairs.empty()) pairs = {{rest[0], rest[1]}, {rest[1], rest[0]}};
    for (const auto& p : pairs) {
      const std::array<int, 3> sel{s1, p[0], p[1]};
      out.push_back({sel, level, g3_points(s, total, d, sel)});
    }
  }
  return out;
}

PsiResult psi(const CurveModel& curve, const TodaState& s) {
  if (s.genus() > 3) throw UnsupportedError("psi is only available for g = 1, 2, 3 (got g = " + std::to_string(s.genus()) + ")");
  check_conserved(curve, s);
  PsiResult r;
  r.points = psi_points(s, curve.total(), &r.trace);
  for (const auto& p : r.points) {
    auto gp = curve.try_locate(p.x, p.y);
    if (!gp) {
      throw FalsificationError("psi image point (" + p.x.str() + "," + p.y.str() + ") is off the curve",
                               "{\"C\":\"" + curve.C().str() + "\",\"state\":\"" + s.tuple_str() + "\"}");
    }
    r.divisor.push_back(*gp);
  }
  return r;
}

TodaState psi_inverse(const Jacobian& jac, const Divisor& d) {
  const CurveModel& curve = jac.curve();
  const int g = curve.genus();
  if (g == 3) throw UnsupportedError("psi_inverse is not available for g = 3");
  if (g > 3) throw UnsupportedError("psi_inverse is only available for g = 1, 2");
  if (!jac.in_Dg(d)) throw DomainError("divisor is not in D^g");
  const R& C = curve.total();
  const R& C0 = curve.C().at(0);

  if (g == 1) {
    const R& X = d[0].x;
    const R& Y = d[0].y;
    const R q1 = min(C0, Y) - X;
    const R q2 = X + min(C, C0 + Y) - tmin({C, C0 + Y, R(2) * Y});
    return TodaState({q1, q2}, {Y - q1, C - Y - q2});
  }

  std::vector<PlanarPoint> pts{{d[0].x, d[0].y}, {d[1].x, d[1].y}};
  std::sort(pts.begin(), pts.end());
  const R &X1 = pts[0].x, &Y1 = pts[0].y, &X2 = pts[1].x, &Y2 = pts[1].y;
  const R U1 = min(X1 + Y1, X2 + Y2);
  const R U2 = min(X1 + Y2, X2 + Y1);
  const R my = min(Y1, Y2);
  const R q1 = min(C0 + X1, U2) - (R(2) * X1 + X2);
  const R q2 = R(2) * X1 + tmin({C + U1, Y1 + Y2 + U2, C0 + min(X1 + Y1 + Y2, X2 + R(2) * my)}) - my -
               tmin({C + R(2) * X1, C0 + X1 + U2, R(2) * U2});
  const R q3 = X1 + X2 + my + min(C + U1, C0 + X1 + Y1 + Y2) -
               tmin({C + R(2) * U1, C0 + X1 + Y1 + Y2 + U1, R(2) * X1 + R(2) * Y1 + R(2) * Y2});
  const R w1 = my - X1 - q1;
  const R w2 = Y1 + Y2 + R(2) * X1 - R(2) * my - q2;
  const R w3 = C - (q1 + q2 + q3 + w1 + w2);
  return TodaState({q1, q2, q3}, {w1, w2, w3});
}

JacPoint pi(const Jacobian& jac, const TodaState& s, const GraphPoint& p0) {
  return jac.eta(psi(jac.curve(), s).divisor, p0);
}

JacPoint pi(const Jacobian& jac, const TodaState& s) { return jac.eta(psi(jac.curve(), s).divisor); }

}  // namespace troplab
