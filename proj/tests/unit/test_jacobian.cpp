#include "oracles.hpp"
#include "troplab/eigenmap.hpp"
#include "troplab/jacobian.hpp"
#include "troplab/verify.hpp"

#include <doctest.h>

#include <random>
#include <set>

using troplab::Basis;
using troplab::ConservedVector;
using troplab::CurveModel;
using troplab::Jacobian;
using troplab::Rational;
using troplab::Vec;

namespace {

ConservedVector cv(std::vector<long long> c) { return ConservedVector(std::vector<Rational>(c.begin(), c.end())); }

bool in_lattice(const troplab::Matrix& M, const Vec& v) {
  for (const auto& x : M.solve(v))
    if (!x.is_integer()) return false;
  return true;
}

}  // namespace

TEST_CASE("period matrices of the benchmark curves") {
  const Jacobian j1(CurveModel::build(cv({8, 3, 0})));
  CHECK(j1.periods().K.str() == "[[16]]");
  const Jacobian j2(CurveModel::build(cv({7, 3, 1, 0})));
  CHECK(j2.periods().K.str() == "[[12,-3],[-3,6]]");
  CHECK(j2.periods().detLambda == Rational(63));
  CHECK(j2.periods().detA == Rational(21));
  const Jacobian j3(CurveModel::build(cv({13, 6, 3, 1, 0})));
  CHECK(j3.periods().K.str() == "[[22,-7,0],[-7,12,-3],[0,-3,6]]");
  CHECK(j3.periods().detA == Rational(273));
}

TEST_CASE("K and determinants against closed forms") {
  std::mt19937_64 rng(41);
  for (int g = 1; g <= 6; ++g) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto C = troplab::random_generic_C(g, rng);
      const Jacobian jac(CurveModel::build(C));
      const auto& P = jac.periods();
      const auto lam = C.lambda();
      const auto p = C.p();
      for (int i = 1; i <= g; ++i) {
        const Rational prev_p = i == 1 ? C.at(-1) : p[static_cast<std::size_t>(i - 2)];
        const Rational prev_l = i == 1 ? Rational(0) : lam[static_cast<std::size_t>(i - 2)];
        const auto ii = static_cast<std::size_t>(i - 1);
        CHECK(P.K(ii, ii) == prev_p + p[ii] + Rational(2) * (lam[ii] - prev_l));
        if (i < g) CHECK(P.K(ii, ii + 1) == -p[ii]);
        for (int j = i + 2; j <= g; ++j) CHECK(P.K(ii, static_cast<std::size_t>(j - 1)) == Rational(0));
      }
      CHECK(P.K.is_symmetric());
      CHECK(P.K.is_positive_definite());
      const auto closed = oracle::det_lambda_closed_form(C);
      CHECK(P.detK == closed);
      CHECK(P.detLambda == closed);
      CHECK(P.detA * Rational(g + 1) == closed);
    }
  }
}

TEST_CASE("eta does not depend on the path") {
  std::mt19937_64 rng(1234);
  for (const auto& C : troplab::benchmark_curves()) {
    const auto curve = CurveModel::build(C);
    const auto& K = troplab::PeriodData::of(curve).K;
    const auto pts = troplab::grid_points(curve, 3);
    for (int trial = 0; trial < 300; ++trial) {
      const auto& s = pts[rng() % pts.size()];
      const auto& p = pts[rng() % pts.size()];
      const auto a = troplab::pairing_vector(curve, oracle::random_path(curve, s, p, rng));
      const auto b = troplab::pairing_vector(curve, oracle::random_path(curve, s, p, rng));
      CHECK(in_lattice(K, a - b));
      CHECK(in_lattice(K, a - troplab::iota(curve, s, p)));
    }
  }
}

TEST_CASE("closed cycles pair to the columns of K") {
  for (const auto& C : troplab::benchmark_curves()) {
    const auto curve = CurveModel::build(C);
    const auto& K = troplab::PeriodData::of(curve).K;
    for (int i = 1; i <= curve.genus(); ++i)
      CHECK(troplab::pairing_vector(curve, troplab::cycle_path(curve, i)) == K.column(static_cast<std::size_t>(i - 1)));
  }
}

TEST_CASE("lattice representatives") {
  const Jacobian j1(CurveModel::build(cv({8, 3, 0})));
  CHECK(oracle::box_classes(j1, Basis::K, 16) == 16);
  CHECK(j1.representatives(Basis::K).size() == 16);
  const Jacobian j2(CurveModel::build(cv({7, 3, 1, 0})));
  CHECK(oracle::box_classes(j2, Basis::K, 63) == 63);
  CHECK(oracle::box_classes(j2, Basis::A, 21) == 21);
  CHECK(j2.lattice_point_count(Basis::Lambda) == 63);
  const Jacobian j3(CurveModel::build(cv({13, 6, 3, 1, 0})));
  for (auto b : {Basis::K, Basis::Lambda, Basis::A}) {
    const auto reps = j3.representatives(b);
    CHECK(static_cast<std::int64_t>(reps.size()) == j3.lattice_point_count(b));
    std::set<Vec> canon;
    for (const auto& r : reps) canon.insert(j3.reduce(r, b).z);
    CHECK(canon.size() == reps.size());
  }
}

TEST_CASE("reduce and coordinate changes") {
  const Jacobian jac(CurveModel::build(cv({7, 3, 1, 0})));
  const Vec z{Rational(40), Rational(-17)};
  const auto r = jac.reduce(z, Basis::K);
  CHECK(jac.equal(z, r.z, Basis::K));
  CHECK(jac.reduce(r.z, Basis::K) == r);
  const auto zl = jac.convert(z, Basis::K, Basis::Lambda);
  CHECK(jac.convert(zl, Basis::Lambda, Basis::K) == z);
  CHECK(jac.translation(troplab::Translation::Nu, Basis::Lambda) == Vec{Rational(7), Rational(7)});
  CHECK(jac.translation(troplab::Translation::V, Basis::K) == Vec{Rational(1), Rational(1)});
}

TEST_CASE("shift acts on pi as minus nu") {
  const Jacobian jac(CurveModel::build(cv({7, 3, 1, 0})));
  const auto nu = jac.translation(troplab::Translation::Nu, Basis::K);
  for (const auto& s : troplab::enumerate_isolevel(jac.curve().C())) {
    const auto a = troplab::pi(jac, s);
    const auto b = troplab::pi(jac, troplab::shift(s));
    CHECK(jac.equal(b.z + nu, a.z, Basis::K));
  }
}

TEST_CASE("in_Dg") {
  const CurveModel c = CurveModel::build(cv({7, 3, 1, 0}));
  const Jacobian jac(c);
  // Two distinct points inside the shared vertical edge break D^g.
  CHECK_FALSE(jac.in_Dg({c.point(c.vertical_edge(1), Rational(1)), c.point(c.vertical_edge(1), Rational(2))}));
  CHECK(jac.in_Dg({c.point(c.vertical_edge(1), Rational(1)), c.point(c.vertical_edge(2), Rational(0))}));
  CHECK_FALSE(jac.in_Dg({c.point(c.vertical_edge(0), Rational(1)), c.point(c.vertical_edge(0), Rational(2))}));
  CHECK(jac.in_Dg({c.point(c.vertical_edge(0), Rational(1)), c.point(c.lower_edge(2), Rational(0))}));
}
