#include "troplab/curve.hpp"
#include "troplab/errors.hpp"
#include "troplab/verify.hpp"

#include <doctest.h>

#include <random>

using troplab::ConservedVector;
using troplab::CurveModel;
using troplab::EdgeKind;
using troplab::Rational;

namespace {

ConservedVector cv(std::vector<long long> c) { return ConservedVector(std::vector<Rational>(c.begin(), c.end())); }

}  // namespace

TEST_CASE("genus one curve") {
  const auto c = CurveModel::build(cv({8, 3, 0}));
  CHECK(c.genus() == 1);
  CHECK(c.vertices().size() == 4);
  CHECK(c.edges().size() == 4);
  CHECK(c.p() == std::vector<Rational>{2});
  CHECK(c.edges()[0].weight == Rational(8));
  CHECK(c.edges()[1].weight == Rational(2));
  CHECK(c.edges()[2].weight == Rational(3));
  CHECK(c.edges()[3].weight == Rational(3));
}

TEST_CASE("genus two curve geometry") {
  const auto c = CurveModel::build(cv({20, 7, 2, 0}));
  CHECK(c.lambda() == std::vector<Rational>{2, 5});
  CHECK(c.p() == std::vector<Rational>{12, 6});
  const std::vector<std::pair<long long, long long>> expect = {{0, 0}, {2, 4}, {5, 7}, {0, 20}, {2, 16}, {5, 13}};
  REQUIRE(c.vertices().size() == expect.size());
  for (std::size_t v = 0; v < expect.size(); ++v) {
    CHECK(c.vertices()[v].x == Rational(expect[v].first));
    CHECK(c.vertices()[v].y == Rational(expect[v].second));
  }
  CHECK(c.height(Rational(1)) == Rational(2));
  CHECK(c.height(Rational(4)) == Rational(6));
  CHECK(c.contains(Rational(2), Rational(10)));
  CHECK(c.contains(Rational(7) / Rational(2), Rational(11) / Rational(2)));
  CHECK_FALSE(c.contains(Rational(1), Rational(3)));
  CHECK_FALSE(c.contains(Rational(6), Rational(8)));
}

TEST_CASE("non-generic curves are rejected") {
  CHECK_THROWS_AS(CurveModel::build(cv({6, 3, 0})), troplab::DomainError);
  CHECK_THROWS_AS(CurveModel::build(cv({7, 3, 2, 0})), troplab::DomainError);
  CHECK_THROWS_AS(CurveModel::build(cv({9, 4, 1})), troplab::DomainError);
}

TEST_CASE("edge weights in lattice length and planar coordinates") {
  std::mt19937_64 rng(3);
  for (int g = 1; g <= 6; ++g) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto c = CurveModel::build(troplab::random_generic_C(g, rng));
      CHECK_FALSE(c.balance_violation().has_value());
      for (const auto& e : c.edges()) {
        const auto& a = c.vertices()[static_cast<std::size_t>(e.tail)];
        const auto& b = c.vertices()[static_cast<std::size_t>(e.head)];
        CHECK(b.x - a.x == e.weight * Rational(e.xi[0]));
        CHECK(b.y - a.y == e.weight * Rational(e.xi[1]));
        CHECK(e.weight > Rational(0));
      }
      for (int k = 1; k <= g; ++k) CHECK(c.edges()[static_cast<std::size_t>(k)].weight == c.p()[static_cast<std::size_t>(k - 1)]);
    }
  }
}

TEST_CASE("locate and coords are inverse") {
  const auto c = CurveModel::build(cv({13, 6, 3, 1, 0}));
  for (const auto& p : troplab::grid_points(c, 2)) {
    const auto xy = c.coords(p.edge, p.offset);
    CHECK(c.contains(xy[0], xy[1]));
    CHECK(c.locate(xy[0], xy[1]) == p);
  }
  CHECK_FALSE(c.try_locate(Rational(100), Rational(0)).has_value());
}

TEST_CASE("cycles") {
  const auto c = CurveModel::build(cv({7, 3, 1, 0}));
  // alpha_1 runs through vertical 0 and 1 and both first chains.
  CHECK(c.cycle_sign(c.vertical_edge(1), 1) == 1);
  CHECK(c.cycle_sign(c.vertical_edge(0), 1) == -1);
  CHECK(c.cycle_sign(c.lower_edge(1), 1) == 1);
  CHECK(c.cycle_sign(c.upper_edge(1), 1) == -1);
  CHECK(c.cycle_sign(c.lower_edge(2), 1) == 0);
  CHECK(c.cycle_sign(c.vertical_edge(1), 2) == -1);
  for (int i = 1; i <= 2; ++i) {
    Rational dx, dy;
    for (const auto& [edge, sign] : c.cycle(i)) {
      const auto& e = c.edges()[static_cast<std::size_t>(edge)];
      dx += Rational(sign) * e.weight * Rational(e.xi[0]);
      dy += Rational(sign) * e.weight * Rational(e.xi[1]);
    }
    CHECK(dx == Rational(0));
    CHECK(dy == Rational(0));
  }
  const auto mid = c.point(c.vertical_edge(1), Rational(1));
  CHECK(c.cycles_through(mid) == std::vector<int>{1, 2});
  CHECK(c.cycles_through(c.point(c.vertical_edge(0), Rational(1))) == std::vector<int>{1});
}
