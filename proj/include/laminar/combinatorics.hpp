#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace laminar {

/// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

/// C(n, k) as a big integer; zero for k > n.
mpz_class binomial(unsigned long n, unsigned long k);

/// Colex rank of a strictly increasing tuple of 0-based points:
/// sum_i C(points[i], i + 1). Caller guarantees the result fits.
std::uint64_t colex_rank(std::span<const int> zero_based_points);

/// Calls fn(span<const int>) for every k-element sub-tuple of `items`
/// (items in increasing order gives increasing sub-tuples).
template <typename Fn>
void for_each_subset(std::span<const int> items, std::size_t k, Fn&& fn) {
  const std::size_t n = items.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::vector<int> chosen(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = items[idx[i]];
    fn(std::span<const int>(chosen));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace laminar
