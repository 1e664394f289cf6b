#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "zetalab/summation.hpp"

namespace zetalab {

// Execution options for block-parallel work.
//
// `shards` splits an index range into that many contiguous partitions whose
// partial sums are merged in ascending order. `threads` caps the worker pool;
// 0 means hardware concurrency, further capped by the ZETALAB_THREADS
// environment variable. Because every reduction is exact, neither value
// changes a computed sum.
struct Parallel {
  unsigned shards = 1;
  unsigned threads = 0;
};

unsigned resolve_threads(const Parallel& par);

// Runs body(task) for every task in [0, ntasks) on a pool of workers. The
// first exception thrown by any task is rethrown after all workers join.
void run_tasks(std::size_t ntasks, const Parallel& par,
               const std::function<void(std::size_t)>& body);

inline constexpr std::int64_t kBlockSize = 512;

// Sums term(i) over the inclusive index range [first, last]. `term` returns
// std::array<double, K>; each component is reduced independently.
template <std::size_t K, class Term>
std::array<double, K> parallel_sum(std::int64_t first, std::int64_t last,
                                   const Parallel& par, Term&& term) {
  std::array<double, K> out{};
  if (last < first) return out;

  struct Task {
    std::int64_t lo, hi;
    std::size_t shard;
  };
  const std::int64_t count = last - first + 1;
  const auto shards = static_cast<std::int64_t>(par.shards == 0 ? 1 : par.shards);
  std::vector<Task> tasks;
  for (std::int64_t s = 0; s < shards; ++s) {
    const std::int64_t lo = first + count * s / shards;
    const std::int64_t hi = first + count * (s + 1) / shards - 1;
    for (std::int64_t b = lo; b <= hi; b += kBlockSize)
      tasks.push_back({b, std::min(hi, b + kBlockSize - 1), static_cast<std::size_t>(s)});
  }

  std::vector<std::array<ExactSum, K>> partial(tasks.size());
  run_tasks(tasks.size(), par, [&](std::size_t i) {
    auto& acc = partial[i];
    for (std::int64_t j = tasks[i].lo; j <= tasks[i].hi; ++j) {
      const std::array<double, K> v = term(j);
      for (std::size_t c = 0; c < K; ++c) acc[c].add(v[c]);
    }
  });

  std::vector<std::array<ExactSum, K>> per_shard(static_cast<std::size_t>(shards));
  for (std::size_t i = 0; i < tasks.size(); ++i)
    for (std::size_t c = 0; c < K; ++c) per_shard[tasks[i].shard][c].merge(partial[i][c]);
  std::array<ExactSum, K> total;
  for (const auto& s : per_shard)
    for (std::size_t c = 0; c < K; ++c) total[c].merge(s[c]);
  for (std::size_t c = 0; c < K; ++c) out[c] = total[c].value();
  return out;
}

template <class Term>
double parallel_sum1(std::int64_t first, std::int64_t last, const Parallel& par,
                     Term&& term) {
  return parallel_sum<1>(first, last, par, [&](std::int64_t i) {
    return std::array<double, 1>{term(i)};
  })[0];
}

// values[i] = f(first + i) for the inclusive range [first, last].
template <class T, class F>
std::vector<T> parallel_map(std::int64_t first, std::int64_t last, const Parallel& par,
                            F&& f) {
  if (last < first) return {};
  std::vector<T> values(static_cast<std::size_t>(last - first + 1));
  const std::size_t nblocks = (values.size() + kBlockSize - 1) / kBlockSize;
  run_tasks(nblocks, par, [&](std::size_t b) {
    const std::size_t lo = b * kBlockSize;
    const std::size_t hi = std::min(values.size(), lo + kBlockSize);
    for (std::size_t i = lo; i < hi; ++i)
      values[i] = f(first + static_cast<std::int64_t>(i));
  });
  return values;
}

}  // namespace zetalab
