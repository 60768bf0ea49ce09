#include "troplab/toda.hpp"

#include "toda_formulas.hpp"
#include "troplab/errors.hpp"
#include "troplab/parallel.hpp"

#include <cstdint>
#include <functional>
#include <sstream>

namespace troplab {

TodaState::TodaState(std::vector<Rational> q, std::vector<Rational> w)
    : q_(std::move(q)), w_(std::move(w)) {
  if (q_.size() != w_.size()) throw DomainError("Q and W must have the same length");
  if (q_.size() < 2) throw DomainError("a Toda state needs g+1 >= 2 sites");
}

Rational TodaState::sum_q() const {
  Rational s;
  for (const auto& v : q_) s += v;
  return s;
}

Rational TodaState::sum_w() const {
  Rational s;
  for (const auto& v : w_) s += v;
  return s;
}

bool TodaState::in_phase_space() const { return sum_q() < sum_w(); }

bool TodaState::is_integral() const {
  for (std::size_t i = 0; i < q_.size(); ++i)
    if (!q_[i].is_integer() || !w_[i].is_integer()) return false;
  return true;
}

std::string TodaState::tuple_str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < q_.size(); ++i) os << (i ? "," : "") << q_[i];
  for (const auto& v : w_) os << ',' << v;
  os << ')';
  return os.str();
}

ConservedVector::ConservedVector(std::vector<Rational> values) : c_(std::move(values)) {
  if (c_.size() < 3) throw DomainError("a conserved vector needs C_{-1}, C_0, ..., C_g with g >= 1");
}

const Rational& ConservedVector::at(int k) const {
  if (k < -1 || k > genus()) throw std::out_of_range("conserved index out of range");
  return c_[static_cast<std::size_t>(k + 1)];
}

std::optional<std::string> ConservedVector::genericity_violation() const {
  const int g = genus();
  if (!(at(-1) > Rational(2) * at(0))) return "C_{-1} > 2 C_0 fails";
  for (int i = 0; i <= g - 2; ++i) {
    if (!(at(i) + at(i + 2) > Rational(2) * at(i + 1))) {
      return "C_" + std::to_string(i) + " + C_" + std::to_string(i + 2) + " > 2 C_" +
             std::to_string(i + 1) + " fails";
    }
  }
  if (!(at(g - 1) > Rational(2) * at(g))) {
    return "C_" + std::to_string(g - 1) + " > 2 C_" + std::to_string(g) + " fails";
  }
  return std::nullopt;
}

bool ConservedVector::is_integral() const {
  for (const auto& v : c_)
    if (!v.is_integer()) return false;
  return true;
}

std::vector<Rational> ConservedVector::lambda() const {
  const int g = genus();
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(g));
  for (int i = 1; i <= g; ++i) out.push_back(at(g - i) - at(g - i + 1));
  return out;
}

std::vector<Rational> ConservedVector::p() const {
  const auto lam = lambda();
  std::vector<Rational> out;
  out.reserve(lam.size());
  for (const auto& li : lam) {
    Rational s;
    for (const auto& lj : lam) s += min(li, lj);
    out.push_back(at(-1) - Rational(2) * s);
  }
  return out;
}

std::string ConservedVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

TodaState evolve(const TodaState& s) {
  if (!s.in_phase_space()) {
    throw DomainError("not in 𝒯: sum Q = " + s.sum_q().str() + " >= sum W = " + s.sum_w().str() +
                      " for " + s.tuple_str());
  }
  std::vector<Rational> q;
  std::vector<Rational> w;
  detail::evolve_into<Rational>(s.q(), s.w(), q, w);
  return TodaState(std::move(q), std::move(w));
}

ConservedVector conserved(const TodaState& s) {
  return ConservedVector(detail::conserved_values<Rational>(s.q(), s.w()));
}

TodaState shift(const TodaState& s, int times) {
  const int n = s.period();
  const int k = ((times % n) + n) % n;
  std::vector<Rational> q(s.q().size());
  std::vector<Rational> w(s.w().size());
  for (int i = 0; i < n; ++i) {
    q[static_cast<std::size_t>(i)] = s.q()[static_cast<std::size_t>((i + k) % n)];
    w[static_cast<std::size_t>(i)] = s.w()[static_cast<std::size_t>((i + k) % n)];
  }
  return TodaState(std::move(q), std::move(w));
}

bool in_T0(const TodaState& s) {
  const int g = s.genus();
  return s.W(1) > Rational(0) && (s.Q(1) == Rational(0) || s.W(g + 1) == Rational(0));
}

std::vector<int> t_cover_indices(const TodaState& s) {
  std::vector<int> out;
  for (int i = 0; i <= s.genus(); ++i)
    if (in_T0(shift(s, -i))) out.push_back(i);
  return out;
}

int t0_membership(const TodaState& s) {
  const auto C = conserved(s);
  if (!C.is_normalized()) throw DomainError("t0_membership needs C_g = 0, got " + C.str());
  if (auto bad = C.genericity_violation()) throw DomainError("non-generic C " + C.str() + ": " + *bad);
  const auto idx = t_cover_indices(s);
  if (idx.size() != 1) {
    throw FalsificationError(
        idx.empty() ? "state lies in no T^i" : "state lies in several T^i",
        "{\"check\":\"t-cover\",\"state\":\"" + s.tuple_str() + "\"}");
  }
  return idx.front();
}

std::vector<TodaState> enumerate_isolevel(const ConservedVector& C) {
  if (!C.is_integral()) throw DomainError("enumerate_isolevel needs integer C, got " + C.str());
  if (!C.is_normalized()) throw DomainError("enumerate_isolevel needs C_g = 0, got " + C.str());
  if (auto bad = C.genericity_violation()) throw DomainError("non-generic C " + C.str() + ": " + *bad);

  const int g = C.genus();
  const int n = g + 1;
  const int parts = 2 * n;
  const auto total_opt = C.at(-1).to_int64();
  if (!total_opt) throw DomainError("C_{-1} too large to enumerate");
  const std::int64_t total = *total_opt;
  std::vector<std::int64_t> target;
  for (const auto& v : C.values()) target.push_back(*v.to_int64());

  // C_g = 0 forces every entry >= 0, so states are compositions of C_{-1}
  // into 2(g+1) non-negative parts. Chunk on Q_1 to keep lexicographic order.
  const auto chunk = [&](std::size_t first) {
    std::vector<TodaState> found;
    std::vector<std::int64_t> comp(static_cast<std::size_t>(parts), 0);
    comp[0] = static_cast<std::int64_t>(first);
    std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t remaining) {
      if (pos == parts - 1) {
        comp[static_cast<std::size_t>(pos)] = remaining;
        std::int64_t sq = 0;
        std::int64_t mn = remaining;
        for (int i = 0; i < n; ++i) sq += comp[static_cast<std::size_t>(i)];
        for (auto v : comp) mn = std::min(mn, v);
        if (mn != 0 || 2 * sq >= total) return;
        const std::span<const std::int64_t> q(comp.data(), static_cast<std::size_t>(n));
        const std::span<const std::int64_t> w(comp.data() + n, static_cast<std::size_t>(n));
        if (detail::conserved_values<std::int64_t>(q, w) != target) return;
        std::vector<Rational> qr;
        std::vector<Rational> wr;
        for (int i = 0; i < n; ++i) {
          qr.emplace_back(static_cast<long long>(comp[static_cast<std::size_t>(i)]));
          wr.emplace_back(static_cast<long long>(comp[static_cast<std::size_t>(n + i)]));
        }
        found.emplace_back(std::move(qr), std::move(wr));
        return;
      }
      for (std::int64_t v = 0; v <= remaining; ++v) {
        comp[static_cast<std::size_t>(pos)] = v;
        rec(pos + 1, remaining - v);
      }
    };
    rec(1, total - static_cast<std::int64_t>(first));
    return found;
  };
  return parallel_chunks<TodaState>(static_cast<std::size_t>(total + 1), chunk);
}

}  // namespace troplab
