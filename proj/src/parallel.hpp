#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace gf2p::detail {

/// Runs fn(begin, end) over `chunks` equal slices of [0, count) on up to
/// `jobs` threads. Results come back in slice order regardless of scheduling.
template <class Partial, class Fn>
std::vector<Partial> run_partitioned(std::size_t count, std::size_t chunks, unsigned jobs, Fn fn) {
  chunks = std::max<std::size_t>(1, std::min(chunks, count));
  std::vector<Partial> results(chunks);
  auto slice = [&](std::size_t c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    results[c] = fn(begin, end);
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) slice(c);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) slice(c);
    });
  }
  pool.clear();
  return results;
}

}  // namespace gf2p::detail
