#include "troplab/eigenmap.hpp"
#include "troplab/errors.hpp"
#include "troplab/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using troplab::ConservedVector;
using troplab::CurveModel;
using troplab::Jacobian;
using troplab::Rational;
using troplab::TodaState;

namespace {

ConservedVector cv(std::vector<long long> c) { return ConservedVector(std::vector<Rational>(c.begin(), c.end())); }

TodaState st(std::vector<long long> q, std::vector<long long> w) {
  std::vector<Rational> rq(q.begin(), q.end()), rw(w.begin(), w.end());
  return TodaState(rq, rw);
}

}  // namespace

TEST_CASE("psi round trip on every integer state, g = 1 and 2") {
  for (const auto& C : {cv({8, 3, 0}), cv({7, 3, 1, 0}), cv({20, 7, 2, 0})}) {
    const Jacobian jac(CurveModel::build(C));
    for (const auto& s : troplab::enumerate_isolevel(C)) {
      const auto r = troplab::psi(jac.curve(), s);
      CHECK(r.divisor.size() == static_cast<std::size_t>(C.genus()));
      CHECK(jac.in_Dg(r.divisor));
      CHECK(troplab::psi_inverse(jac, r.divisor) == s);
    }
  }
}

TEST_CASE("psi round trip on random rational states") {
  std::mt19937_64 rng(77);
  for (int g = 1; g <= 2; ++g) {
    int tested = 0;
    while (tested < 300) {
      const auto s = troplab::random_state(g, rng);
      const auto C = troplab::conserved(s);
      if (!C.is_generic()) continue;
      const Jacobian jac(CurveModel::build(C));
      const auto r = troplab::psi(jac.curve(), s);
      for (const auto& p : r.points) CHECK(jac.curve().contains(p.x, p.y));
      CHECK(troplab::psi_inverse(jac, r.divisor) == s);
      ++tested;
    }
  }
}

TEST_CASE("genus three psi lands in D^g and pi is injective") {
  const auto C = cv({13, 6, 3, 1, 0});
  const Jacobian jac(CurveModel::build(C));
  std::set<troplab::JacPoint> images;
  for (const auto& s : troplab::enumerate_isolevel(C)) {
    const auto r = troplab::psi(jac.curve(), s);
    CHECK(jac.in_Dg(r.divisor));
    const auto sel = troplab::g3_selections(s, C.at(-1));
    const auto chosen = std::find_if(sel.begin(), sel.end(), [&](const auto& x) { return x.s == r.trace.s; });
    REQUIRE(chosen != sel.end());
    CHECK(chosen->points == r.points);
    for (const auto& other : sel) CHECK(other.level >= chosen->level);
    images.insert(jac.eta(r.divisor));
  }
  CHECK(images.size() == 1092);
  CHECK_THROWS_AS(troplab::psi_inverse(jac, troplab::psi(jac.curve(), st({0, 1, 2, 3}, {1, 2, 3, 1})).divisor),
                  troplab::UnsupportedError);
}

TEST_CASE("pi is injective for the smaller benchmarks") {
  for (const auto& C : {cv({8, 3, 0}), cv({7, 3, 1, 0})}) {
    const Jacobian jac(CurveModel::build(C));
    std::set<troplab::JacPoint> images;
    const auto states = troplab::enumerate_isolevel(C);
    for (const auto& s : states) images.insert(troplab::pi(jac, s));
    CHECK(images.size() == states.size());
    CHECK(static_cast<std::int64_t>(images.size()) == jac.lattice_point_count(troplab::Basis::K));
  }
}

TEST_CASE("psi rejects a state from another isolevel set") {
  const auto curve = CurveModel::build(cv({8, 3, 0}));
  CHECK_THROWS_AS(troplab::psi(curve, st({0, 1}, {2, 3})), troplab::DomainError);
  CHECK_THROWS_AS(troplab::psi_points(st({0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}), Rational(45)), troplab::UnsupportedError);
}
