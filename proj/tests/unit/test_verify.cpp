#include "troplab/errors.hpp"
#include "troplab/verify.hpp"

#include <doctest.h>

#include <random>

using troplab::CheckParams;
using troplab::Verdict;

TEST_CASE("every check passes on the benchmark curves") {
  CheckParams params;
  params.trials = 200;
  for (const auto& name : troplab::check_names()) {
    CAPTURE(name);
    const auto r = troplab::run_check(name, params);
    CHECK(r.name == name);
    CHECK(r.verdict == Verdict::Pass);
    CHECK_FALSE(r.summary.empty());
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  CheckParams params;
  params.trials = 50;
  params.seed = 9;
  const auto a = troplab::to_json(troplab::run_check("conservation", params));
  const auto b = troplab::to_json(troplab::run_check("conservation", params));
  CHECK(a == b);
}

TEST_CASE("unknown check names are rejected") {
  CHECK_THROWS_AS(troplab::run_check("no-such-check"), troplab::DomainError);
}

TEST_CASE("random generic curves are generic and normalized") {
  std::mt19937_64 rng(1);
  for (int g = 1; g <= 6; ++g)
    for (int i = 0; i < 50; ++i) {
      const auto C = troplab::random_generic_C(g, rng);
      CHECK(C.is_generic());
      CHECK(C.is_normalized());
      CHECK(C.is_integral());
    }
}
