#include "oracles.hpp"
#include "troplab/bbs.hpp"
#include "troplab/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using troplab::BBSState;
using troplab::Rational;

namespace {

std::string tuple(const BBSState& b) { return troplab::beta(b).tuple_str(); }

}  // namespace

TEST_CASE("evolution rows of the two worked orbits") {
  const std::vector<std::string> first = {"00111000", "00000111", "11100000", "00011100", "10000011", "01110000"};
  BBSState b(first[0]);
  for (std::size_t t = 1; t < first.size(); ++t) {
    b = troplab::bbs_evolve(b);
    CHECK(b.str() == first[t]);
  }
  const std::vector<std::string> second = {"0100110", "1010001", "0101100", "0010011", "1101000", "0010110"};
  BBSState c(second[0]);
  for (std::size_t t = 1; t < second.size(); ++t) {
    c = troplab::bbs_evolve(c);
    CHECK(c.str() == second[t]);
  }
}

TEST_CASE("beta column of the seven-box orbit") {
  CHECK(tuple(BBSState("0100110")) == "(0,1,2,1,2,1)");
  CHECK(tuple(BBSState("1010001")) == "(1,1,1,1,3,0)");
  CHECK(tuple(BBSState("0101100")) == "(0,1,2,1,1,2)");
  CHECK(tuple(BBSState("0010011")) == "(0,1,2,2,2,0)");
  CHECK(tuple(BBSState("1101000")) == "(2,1,0,1,3,0)");
  CHECK(tuple(BBSState("0010110")) == "(0,1,2,2,1,1)");
  CHECK(tuple(BBSState("00111000")) == "(0,3,2,3)");
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(BBSState("0110"), troplab::DomainError);
  CHECK_THROWS_AS(BBSState("01a0"), troplab::DomainError);
  CHECK_THROWS_WITH_AS(BBSState::parse("0102"), doctest::Contains("3"), std::invalid_argument);
  CHECK_THROWS_AS(troplab::beta(BBSState("0000")), troplab::DomainError);
}

TEST_CASE("rho inverts beta on every word of small length") {
  for (std::size_t L = 3; L <= 12; ++L) {
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << L); ++m) {
      std::string w(L, '0');
      for (std::size_t i = 0; i < L; ++i)
        if (m >> i & 1u) w[i] = '1';
      if (2 * static_cast<std::size_t>(std::count(w.begin(), w.end(), '1')) >= L) continue;
      const BBSState b(w);
      const auto s = troplab::beta(b);
      CHECK(troplab::in_T0(s));
      CHECK(troplab::rho(s) == b);
    }
  }
}

TEST_CASE("invariants agree with ten-elimination") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t L = 5 + rng() % 20;
    std::string w(L, '0');
    const std::size_t balls = 1 + rng() % ((L - 1) / 2);
    for (std::size_t k = 0; k < balls; ++k) w[k] = '1';
    std::shuffle(w.begin(), w.end(), rng);
    const BBSState b(w);
    const auto inv = troplab::invariants_of(b);
    const auto lam = oracle::ten_elimination(w);
    CHECK(inv.lambda == std::vector<Rational>(lam.begin(), lam.end()));
    CHECK(inv.C.at(-1) == Rational(static_cast<long long>(L)));
    CHECK(troplab::invariants_of(troplab::bbs_evolve(b)).C == inv.C);
  }
}

TEST_CASE("evolution does not depend on the order balls are moved") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t L = 6 + rng() % 14;
    std::string w(L, '0');
    const std::size_t balls = 1 + rng() % ((L - 1) / 2);
    for (std::size_t k = 0; k < balls; ++k) w[k] = '1';
    std::shuffle(w.begin(), w.end(), rng);
    const BBSState b(w);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < L; ++i)
      if (b.occupied(i)) order.push_back(i);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(troplab::bbs_evolve_ordered(b, order) == troplab::bbs_evolve(b));
  }
}

TEST_CASE("enumerate_bbs agrees with a 2^L scan") {
  const std::vector<std::pair<std::size_t, std::vector<int>>> cases = {
      {8, {3}}, {7, {1, 2}}, {13, {1, 2, 3}}, {11, {1, 3}}};
  for (const auto& [L, lam] : cases) {
    const std::vector<std::int64_t> l64(lam.begin(), lam.end());
    const auto words = troplab::enumerate_bbs(L, l64);
    CHECK(words.size() == oracle::bbs_count(L, lam));
    CHECK(std::is_sorted(words.begin(), words.end()));
  }
  const std::vector<std::int64_t> lam{1, 2, 3};
  CHECK(troplab::enumerate_bbs(13, lam).size() == 273);
}
