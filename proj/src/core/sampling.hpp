#pragma once

#include <cmath>
#include <cstdint>

#include "mirrorbench/rng.hpp"

namespace mirrorbench::detail {

/// Number of Bernoulli(p) failures before the next success, 0 < p < 1.
inline std::uint64_t geometric_skip(Rng& rng, double log_q) {
  const double skip = std::floor(std::log(rng.uniform_open_zero()) / log_q);
  return skip >= 1.8e19 ? UINT64_MAX / 2 : static_cast<std::uint64_t>(skip);
}

/// Calls visit(i, j), i < j < count, for each unordered pair kept with
/// probability p. Geometric skipping keeps the cost proportional to the
/// number of successes.
template <typename Visit>
void sample_pairs_within(std::uint64_t count, double p, Rng& rng, Visit&& visit) {
  if (count < 2 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < count; ++i)
      for (std::uint64_t j = i + 1; j < count; ++j) visit(i, j);
    return;
  }
  const double log_q = std::log1p(-p);
  // Pairs (v, w) with w < v, walked row by row.
  std::uint64_t v = 1;
  std::uint64_t w = 0;
  std::uint64_t skip = geometric_skip(rng, log_q);
  for (;;) {
    w += skip;
    while (v < count && w >= v) {
      w -= v;
      ++v;
    }
    if (v >= count) return;
    visit(w, v);
    ++w;
    skip = geometric_skip(rng, log_q);
  }
}

/// Calls visit(i, j) for each pair of the rows x cols grid kept with
/// probability p.
template <typename Visit>
void sample_pairs_between(std::uint64_t rows, std::uint64_t cols, double p, Rng& rng,
                          Visit&& visit) {
  if (rows == 0 || cols == 0 || p <= 0.0) return;
  const std::uint64_t total = rows * cols;
  if (p >= 1.0) {
    for (std::uint64_t k = 0; k < total; ++k) visit(k / cols, k % cols);
    return;
  }
  const double log_q = std::log1p(-p);
  std::uint64_t k = 0;
  for (;;) {
    const std::uint64_t skip = geometric_skip(rng, log_q);
    if (skip >= total - k) return;
    k += skip;
    visit(k / cols, k % cols);
    if (++k >= total) return;
  }
}

}  // namespace mirrorbench::detail
