#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <thread>
#include <vector>

namespace troplab {

/// Worker cap: TROPLAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(chunk) for chunk in [0, chunks) on up to worker_count() threads
/// and concatenates the per-chunk outputs in chunk order, so the result does
/// not depend on scheduling.
template <class T>
std::vector<T> parallel_chunks(std::size_t chunks,
                               const std::function<std::vector<T>(std::size_t)>& body) {
  std::vector<std::vector<T>> parts(chunks);
  const std::size_t workers = std::min(worker_count(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) parts[c] = body(c);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) parts[c] = body(c);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

}  // namespace troplab
