#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace tribq {

/// Worker count: TRIBQ_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
[[nodiscard]] unsigned thread_count();

/// Splits [begin, end) into contiguous chunks, maps each chunk with
/// map(lo, hi) -> R on its own thread and folds the results in chunk order
/// with combine(R, R) -> R. Deterministic for any thread count as long as
/// combine is associative.
template <class R, class Map, class Combine>
R parallel_reduce(std::uint64_t begin, std::uint64_t end, R init, Map map, Combine combine) {
  if (end <= begin) {
    return init;
  }
  const std::uint64_t span = end - begin;
  const std::uint64_t workers = std::min<std::uint64_t>(thread_count(), span);
  if (workers <= 1) {
    return combine(std::move(init), map(begin, end));
  }
  std::vector<R> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + span * w / workers;
    const std::uint64_t hi = begin + span * (w + 1) / workers;
    pool.emplace_back([&partial, &map, w, lo, hi] { partial[w] = map(lo, hi); });
  }
  for (auto& t : pool) {
    t.join();
  }
  R acc = std::move(init);
  for (auto& p : partial) {
    acc = combine(std::move(acc), std::move(p));
  }
  return acc;
}

}  // namespace tribq
