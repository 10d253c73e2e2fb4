#include "laminar/combinatorics.hpp"

namespace laminar {

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::uint64_t colex_rank(std::span<const int> zero_based_points) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < zero_based_points.size(); ++i)
    r += binomial_u64(static_cast<std::uint64_t>(zero_based_points[i]), i + 1);
  return r;
}

}  // namespace laminar
