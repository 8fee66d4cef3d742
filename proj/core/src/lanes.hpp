#ifndef MJB_SRC_LANES_HPP
#define MJB_SRC_LANES_HPP

#include <algorithm>
#include <thread>
#include <vector>

#include "mjb/indexed_matrix.hpp"

namespace mjb::detail {

/// Runs fn(lane) for lane in [first, last]. Lanes must write disjoint
/// output slices. Parallel mode splits lanes round-robin over threads.
template <class Fn>
void for_each_lane(int first, int last, const BuildOptions& opts, Fn&& fn) {
  const int count = last - first + 1;
  if (count <= 0) return;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = opts.parallel ? std::min<int>(static_cast<int>(hw), count) : 1;
  if (workers <= 1) {
    for (int lane = first; lane <= last; ++lane) fn(lane);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int lane = first + w; lane <= last; lane += workers) fn(lane);
    });
  }
}

inline void count_steps(const BuildOptions& opts, std::uint64_t steps, std::uint64_t seeds) {
  if (opts.stats == nullptr) return;
  opts.stats->recurrence_steps.fetch_add(steps, std::memory_order_relaxed);
  opts.stats->seed_entries.fetch_add(seeds, std::memory_order_relaxed);
}

}  // namespace mjb::detail

#endif  // MJB_SRC_LANES_HPP
