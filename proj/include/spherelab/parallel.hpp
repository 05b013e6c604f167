// Copyright (c) 2026 sphere-lab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "spherelab/rng.hpp"

namespace spherelab {

/// Samples per work unit; large enough to amortize thread scheduling, small
/// enough to balance uneven per-sample cost.
inline constexpr std::int64_t kChunkSize = 256;

/// Fills values[k] = fn(stream(seed, k)) for k in [0, count) using `workers`
/// threads. Each sample owns stream_id = k, so the output is a pure function
/// of (count, seed, fn) and never depends on the worker count.
template <class Fn>
std::vector<double> generate_by_stream(std::int64_t count, std::uint64_t seed, int workers,
                                       Fn&& fn) {
  if (count < 1) throw std::domain_error("generate_by_stream: count must be >= 1");
  if (workers < 1) throw std::domain_error("generate_by_stream: workers must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(count));
  const std::int64_t n_chunks = (count + kChunkSize - 1) / kChunkSize;
  const int n_threads = static_cast<int>(std::min<std::int64_t>(workers, n_chunks));
  if (n_threads == 1) {
    for (std::int64_t k = 0; k < count; ++k) {
      PhiloxStream rng(RngStreamSpec{seed, static_cast<std::uint64_t>(k)});
      values[static_cast<std::size_t>(k)] = fn(rng);
    }
    return values;
  }
  std::atomic<std::int64_t> next_chunk{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) return;
      const std::int64_t lo = c * kChunkSize;
      const std::int64_t hi = std::min(lo + kChunkSize, count);
      for (std::int64_t k = lo; k < hi; ++k) {
        PhiloxStream rng(RngStreamSpec{seed, static_cast<std::uint64_t>(k)});
        values[static_cast<std::size_t>(k)] = fn(rng);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return values;
}

}  // namespace spherelab
