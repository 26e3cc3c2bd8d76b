#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace tomolab {

/// Evaluate body(i) for i in [0, n) across a worker pool. Callers index
/// preallocated output by i, so results do not depend on scheduling.
template <typename Body>
void parallel_for(long n, Body&& body, unsigned workers = 0) {
  if (n <= 0) return;
  unsigned w = workers ? workers : std::thread::hardware_concurrency();
  w = std::max(1u, std::min<unsigned>(w, static_cast<unsigned>(n)));
  if (w == 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(w);
  const long chunk = (n + w - 1) / w;
  for (unsigned t = 0; t < w; ++t) {
    const long lo = t * chunk;
    const long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (long i = lo; i < hi; ++i) body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

/// Block-structured parallel reduction with a scheduling-independent result:
/// the index range is cut into a fixed number of blocks, each block is
/// accumulated sequentially, and block partials are combined in index order.
template <typename Acc, typename MakeZero, typename Accumulate, typename Combine>
Acc parallel_block_reduce(long n, MakeZero&& make_zero, Accumulate&& accumulate, Combine&& combine,
                          int n_blocks = 64) {
  n_blocks = std::max(1, std::min<int>(n_blocks, n > 0 ? static_cast<int>(std::min<long>(n, 1 << 16)) : 1));
  std::vector<Acc> partials;
  partials.reserve(n_blocks);
  for (int b = 0; b < n_blocks; ++b) partials.push_back(make_zero());
  const long chunk = (n + n_blocks - 1) / n_blocks;
  parallel_for(n_blocks, [&](long b) {
    const long lo = b * chunk;
    const long hi = std::min(n, lo + chunk);
    for (long i = lo; i < hi; ++i) accumulate(partials[b], i);
  });
  Acc total = make_zero();
  for (int b = 0; b < n_blocks; ++b) combine(total, partials[b]);
  return total;
}

/// Deterministic map over [0, n): values land in a vector indexed by i.
template <typename Fn>
std::vector<double> parallel_map_values(long n, Fn&& fn, unsigned workers = 0) {
  std::vector<double> out(static_cast<std::size_t>(n));
  parallel_for(
      n, [&](long i) { out[static_cast<std::size_t>(i)] = fn(i); }, workers);
  return out;
}

struct MeanStats {
  double mean = 0;
  double sd = 0;
  double se = 0;
  long n = 0;
};

inline MeanStats mean_stats(const std::vector<double>& values) {
  MeanStats s;
  s.n = static_cast<long>(values.size());
  if (s.n == 0) return s;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / s.n;
  double ss = 0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.sd = s.n > 1 ? std::sqrt(ss / (s.n - 1)) : 0.0;
  s.se = s.n > 0 ? s.sd / std::sqrt(double(s.n)) : 0.0;
  return s;
}

}  // namespace tomolab
