#include "troplab/minplus.hpp"
#include "troplab/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using troplab::Rational;

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-2/4").str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("2/-4"), std::invalid_argument);
  CHECK(Rational::parse("0.25").str() == "1/4");
  CHECK(Rational::parse("-1.5").str() == "-3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("10/5").str() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third = Rational(1) / Rational(3);
  CHECK(third + third + third == Rational(1));
  CHECK((Rational(7) / Rational(2)).floor() == 3);
  CHECK((Rational(-7) / Rational(2)).floor() == -4);
  CHECK((Rational(-7) / Rational(2)).frac() == Rational(1) / Rational(2));
  CHECK(Rational(-3).abs() == Rational(3));
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(5).to_int64() == 5);
  CHECK_FALSE(third.to_int64().has_value());
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational string round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<long long>(rng() % 20001) - 10000;
    const auto d = static_cast<long long>(rng() % 999) + 1;
    const Rational r = Rational(n) / Rational(d);
    CHECK(Rational::parse(r.str()) == r);
    CHECK(r.num() * d == r.den() * n);
  }
}

TEST_CASE("trop_min values and ties") {
  auto r = troplab::trop_min({Rational(3), Rational(1), Rational(2)});
  CHECK(r.value == Rational(1));
  CHECK(r.argmins == std::vector<std::size_t>{1});
  r = troplab::trop_min({Rational(5), Rational(5), Rational(7)});
  CHECK(r.value == Rational(5));
  CHECK(r.argmins == std::vector<std::size_t>{0, 1});
  CHECK(r.is_tie());
  r = troplab::trop_min({Rational(0)});
  CHECK(r.argmins == std::vector<std::size_t>{0});
  const std::vector<Rational> none;
  CHECK_THROWS_WITH(troplab::trop_min(std::span<const Rational>(none)), "empty tropical sum");
}

TEST_CASE("trop_min is invariant under permutation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> terms;
    for (int i = 0; i < 8; ++i) terms.emplace_back(static_cast<long long>(rng() % 5));
    std::vector<std::size_t> perm(terms.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Rational> shuffled;
    for (auto p : perm) shuffled.push_back(terms[p]);
    const auto a = troplab::trop_min(terms);
    const auto b = troplab::trop_min(shuffled);
    CHECK(a.value == b.value);
    std::vector<std::size_t> mapped;
    for (auto i : b.argmins) mapped.push_back(perm[i]);
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == a.argmins);
    for (auto i : a.argmins) CHECK(terms[i] == a.value);
  }
}
