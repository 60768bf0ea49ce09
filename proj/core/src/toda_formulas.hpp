#pragma once

// Scalar-generic forms of the UD-pToda evolution and conserved quantities.
// Instantiated with Rational for the public API and with int64 inside the
// isolevel enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace troplab::detail {

template <class S>
void evolve_into(std::span<const S> q, std::span<const S> w, std::vector<S>& q_out,
                 std::vector<S>& w_out) {
  const int n = static_cast<int>(q.size());
  const auto at = [n](int i) { return static_cast<std::size_t>(((i % n) + n) % n); };
  q_out.resize(q.size());
  w_out.resize(w.size());
  for (int i = 0; i < n; ++i) {
    // X_i = min_{k=0..g} sum_{l=1..k} (W_{i-l} - Q_{i-l}); the k = 0 term is 0.
    S partial{0};
    S x{0};
    for (int l = 1; l < n; ++l) {
      partial = partial + (w[at(i - l)] - q[at(i - l)]);
      if (partial < x) x = partial;
    }
    const S candidate = q[at(i)] - x;
    q_out[at(i)] = w[at(i)] < candidate ? w[at(i)] : candidate;
  }
  for (int i = 0; i < n; ++i) w_out[at(i)] = q[at(i + 1)] + w[at(i)] - q_out[at(i)];
}

/// Returns (C_{-1}, C_0, ..., C_g).
///
/// For a fixed Q-index set S the admissible W-indices are those j with
/// j != i and j != i-1 for every i in S, and the cheapest T of a given size is
/// the set of smallest admissible W's. So each C_{g-k} is a minimum over the
/// 2^{g+1} choices of S only.
template <class S>
std::vector<S> conserved_values(std::span<const S> q, std::span<const S> w) {
  const int n = static_cast<int>(q.size());
  const int g = n - 1;
  const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);

  std::vector<S> out(static_cast<std::size_t>(g + 2));
  std::vector<bool> seen(static_cast<std::size_t>(g + 2), false);
  S total{0};
  for (int i = 0; i < n; ++i) total = total + q[i] + w[i];
  out[0] = total;

  std::vector<S> admissible;
  std::vector<S> prefix;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    // index i in S forbids W_i and W_{i-1}.
    const std::uint32_t forbidden = (mask | (mask >> 1) | (mask << (n - 1))) & full;
    S sum_q{0};
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sum_q = sum_q + q[i];

    admissible.clear();
    for (int j = 0; j < n; ++j)
      if (!(forbidden & (1u << j))) admissible.push_back(w[j]);
    std::sort(admissible.begin(), admissible.end());
    prefix.assign(1, S{0});
    for (const auto& v : admissible) prefix.push_back(prefix.back() + v);

    for (int k = std::max(0, size - 1); k <= g; ++k) {
      const int t_size = k + 1 - size;
      if (t_size < 0 || t_size > static_cast<int>(admissible.size())) continue;
      const S cand = sum_q + prefix[static_cast<std::size_t>(t_size)];
      // C_{g-k} sits at out[1 + g - k].
      const auto slot = static_cast<std::size_t>(1 + g - k);
      if (!seen[slot] || cand < out[slot]) {
        out[slot] = cand;
        seen[slot] = true;
      }
    }
    if (mask == full) break;
  }
  return out;
}

}  // namespace troplab::detail
