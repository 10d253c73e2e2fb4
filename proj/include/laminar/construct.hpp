#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "laminar/design.hpp"
#include "laminar/family.hpp"
#include "laminar/rational.hpp"

namespace laminar {

/// Thrown when a family would be too large to hold in memory.
class ScaleError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Replaces every block K of a t-packing by a t-laminar family on |K| points.
/// Point i of the replacement maps to the i-th smallest point of K. The union
/// is deduplicated. Throws std::invalid_argument when the packing is invalid
/// or a replacement has the wrong ground size or is not t-laminar.
Family nested(const Design& packing, std::span<const Family> replacements);
/// Same replacement for every block.
Family nested(const Design& packing, const Family& replacement);

struct TowerReport {
  int t = 2;
  int r = 0;
  std::size_t n = 0;
  BigInt count_geq_t;  // members of size >= t, universe included
  BigInt count_total;  // all nonempty members
  Rat formula_value;   // closed-form count of members of size >= t
  Rat ratio;           // count_geq_t / C(n, t)
  std::optional<Family> family;
  /// How the materialized family was certified t-laminar: "pairwise",
  /// "chain-index", or empty when not checked.
  std::string verification;
};

struct TowerOptions {
  bool materialize = false;
  /// Permit the n = 2401 (Fano) level, about 4 million sets.
  bool allow_large = false;
  /// Check t-laminarity of the materialized family (pairwise up to n = 49,
  /// through the chain index beyond).
  bool verify = true;
};

/// Level 0: all nonempty sets of size <= 2 of [7], the Fano lines and [7].
/// Level r: the affine plane of order 7^(2^(r-1)) with every line replaced by
/// the level r-1 family, plus the universe. n = 7^(2^r).
TowerReport fano_tower(int r, const TowerOptions& options = {});

/// 1 + 1/C(3,2) + 1/C(7,2) + sum_{i=1..r} 1/C(7^(2^i), 2).
Rat seven_series(int r);

/// Level 0: every nonempty subset of [10] of size <= 3, the 30 circles of the
/// 3-(10,4,1) circle geometry and [10]. Level r: the circle geometry with
/// q = 3^(2^r) (n = q^2 + 1) with every circle replaced by level r-1.
TowerReport circle_tower(int r, const TowerOptions& options = {});

/// The three-wise series next to the circle-tower counts.
struct ThreeSeriesReport {
  int r = 0;
  std::size_t n = 0;
  /// 1 + sum_{j=0..r} 1/C(m_j, 3) over the block sizes m_j = 3^(2^j) + 1
  /// used up to level r.
  Rat bracket;
  /// 1 + n + C(n,2) + C(n,3) * bracket, and its size->=3 part.
  Rat formula_total;
  Rat formula_geq3;
  /// Counts from the tower recursion.
  BigInt recursive_total;
  BigInt recursive_geq3;
  bool counts_agree = false;
  /// The claimed asymptotic constant 1.5083 and the limit of the bracket.
  Rat claimed_constant;
  Rat bracket_limit;
  bool constant_discrepancy = false;
};
ThreeSeriesReport three_series_report(int r);

/// b * g(k) + 1 for a valid 2-(n, k, 1) packing with b blocks, all of size k,
/// k < n. Throws std::invalid_argument otherwise.
BigInt general_n_lower_bound(std::size_t n, std::size_t k, const Design& packing, const BigInt& g_k);

}  // namespace laminar
