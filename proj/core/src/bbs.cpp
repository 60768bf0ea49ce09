#include "troplab/bbs.hpp"

#include "toda_formulas.hpp"
#include "troplab/errors.hpp"
#include "troplab/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace troplab {

namespace {

struct Runs {
  std::vector<std::int64_t> q;
  std::vector<std::int64_t> w;
};

// Integer beta; shared by the public map and the enumeration hot loop.
// Returns false for a word without balls.
bool beta_runs(std::string_view cells, Runs& out) {
  out.q.clear();
  out.w.clear();
  std::vector<std::int64_t> ones;
  std::vector<std::int64_t> zeros;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    (cells[i] == '1' ? ones : zeros).push_back(static_cast<std::int64_t>(j - i));
    i = j;
  }
  if (ones.empty()) return false;
  const bool starts_one = cells.front() == '1';
  const bool ends_one = cells.back() == '1';
  std::size_t g = ones.size();
  if (starts_one) {
    if (ends_one) g -= 1;  // the first and last runs form one cluster
    out.q = ones;
  } else {
    out.q.push_back(0);
    out.q.insert(out.q.end(), ones.begin(), ones.end());
  }
  out.w = zeros;
  out.q.resize(g + 1, 0);
  out.w.resize(g + 1, 0);
  return true;
}

TodaState to_state(const Runs& r) {
  std::vector<Rational> q;
  std::vector<Rational> w;
  for (auto v : r.q) q.emplace_back(static_cast<long long>(v));
  for (auto v : r.w) w.emplace_back(static_cast<long long>(v));
  return TodaState(std::move(q), std::move(w));
}

}  // namespace

BBSState::BBSState(std::string cells) : cells_(std::move(cells)) {
  std::size_t ones = 0;
  for (char c : cells_) {
    if (c != '0' && c != '1') throw DomainError("box states must be 0 or 1");
    ones += c == '1';
  }
  if (2 * ones >= cells_.size()) {
    throw DomainError("need 2 * balls < L, got " + std::to_string(ones) + " balls in " +
                      std::to_string(cells_.size()) + " boxes");
  }
}

BBSState BBSState::parse(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("invalid box state '" + std::string(1, text[i]) + "' at position " +
                                  std::to_string(i));
    }
  }
  try {
    return BBSState(std::string(text));
  } catch (const DomainError& e) {
    throw std::invalid_argument(e.what());
  }
}

std::size_t BBSState::balls() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), '1'));
}

BBSState bbs_evolve_ordered(const BBSState& b, std::span<const std::size_t> order) {
  const std::size_t L = b.length();
  if (order.size() != b.balls()) throw DomainError("ball order must list every ball once");
  std::vector<bool> filled(L, false);
  std::vector<bool> used(L, false);
  std::string out(L, '0');
  for (std::size_t p : order) {
    if (p >= L || !b.occupied(p) || used[p]) throw DomainError("ball order is not a permutation of the balls");
    used[p] = true;
    std::size_t q = (p + 1) % L;
    while (b.occupied(q) || filled[q]) q = (q + 1) % L;
    filled[q] = true;
    out[q] = '1';
  }
  return BBSState(std::move(out));
}

BBSState bbs_evolve(const BBSState& b) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < b.length(); ++i)
    if (b.occupied(i)) order.push_back(i);
  return bbs_evolve_ordered(b, order);
}

TodaState beta(const BBSState& b) {
  Runs r;
  if (!beta_runs(b.str(), r)) throw DomainError("beta needs at least one ball");
  TodaState s = to_state(r);
  if (!in_T0(s)) {
    throw FalsificationError("beta(" + b.str() + ") = " + s.tuple_str() + " is not in T^0",
                             "{\"check\":\"beta\",\"bbs\":\"" + b.str() + "\"}");
  }
  return s;
}

BBSState rho(const TodaState& s) {
  if (!s.is_integral()) throw DomainError("rho needs an integer state, got " + s.tuple_str());
  for (int i = 1; i <= s.period(); ++i) {
    if (s.Q(i) < Rational(0) || s.W(i) < Rational(0)) {
      throw DomainError("rho needs non-negative entries, got " + s.tuple_str());
    }
  }
  if (!in_T0(s)) throw DomainError("rho needs a state in T^0, got " + s.tuple_str());
  const auto n = [](const Rational& r) { return static_cast<std::size_t>(*r.to_int64()); };
  std::string out;
  const int g = s.genus();
  if (s.Q(1) == Rational(0)) {
    out.append(n(s.W(1)), '0');
    for (int i = 2; i <= g + 1; ++i) {
      out.append(n(s.Q(i)), '1');
      out.append(n(s.W(i)), '0');
    }
  } else {
    for (int i = 1; i <= g + 1; ++i) {
      out.append(n(s.Q(i)), '1');
      out.append(n(s.W(i)), '0');
    }
  }
  return BBSState(std::move(out));
}

BBSInvariants invariants_of(const BBSState& b) {
  auto C = conserved(beta(b));
  BBSInvariants inv{C.genus(), C.lambda(), C};
  return inv;
}

std::vector<BBSState> enumerate_bbs(std::size_t L, std::span<const std::int64_t> lambda) {
  if (lambda.empty()) throw DomainError("lambda must be non-empty");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0 || (i > 0 && lambda[i] <= lambda[i - 1])) {
      throw DomainError("lambda must be positive and strictly increasing");
    }
    total += lambda[i];
  }
  if (2 * total >= static_cast<std::int64_t>(L)) throw DomainError("need 2 * |lambda| < L");
  if (L > 40) throw DomainError("L too large for exhaustive enumeration");

  const std::size_t g = lambda.size();
  const std::size_t high_bits = std::min<std::size_t>(L, 8);
  const std::size_t low_bits = L - high_bits;
  const auto chunk = [&](std::size_t high) {
    std::vector<BBSState> found;
    std::string cells(L, '0');
    Runs r;
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << low_bits); ++low) {
      const std::uint64_t word = (static_cast<std::uint64_t>(high) << low_bits) | low;
      if (std::popcount(word) != total) continue;
      for (std::size_t i = 0; i < L; ++i) cells[i] = ((word >> (L - 1 - i)) & 1u) ? '1' : '0';
      beta_runs(cells, r);
      if (r.q.size() != g + 1) continue;
      const auto C = detail::conserved_values<std::int64_t>(r.q, r.w);
      bool match = true;
      // lambda_i = C_{g-i} - C_{g-i+1}, with C_j stored at C[j + 1].
      for (std::size_t i = 1; i <= g && match; ++i) match = C[g - i + 1] - C[g - i + 2] == lambda[i - 1];
      if (match) found.emplace_back(cells);
    }
    return found;
  };
  return parallel_chunks<BBSState>(std::size_t{1} << high_bits, chunk);
}

}  // namespace troplab
