#include "laminar/construct.hpp"

#include <vector>

#include "laminar/combinatorics.hpp"
#include "laminar/setfam.hpp"

namespace laminar {

namespace {

constexpr std::size_t kPairwiseLimit = 5000;

BigInt ipow(unsigned long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

std::size_t to_size(const BigInt& v) {
  if (!v.fits_ulong_p()) throw std::out_of_range("ground size does not fit in a machine word");
  return v.get_ui();
}

void check_replacement(const Family& rep, std::size_t block_size, int t) {
  if (rep.ground_size() != block_size)
    throw std::invalid_argument("replacement over " + std::to_string(rep.ground_size()) +
                                " points for a block of size " + std::to_string(block_size));
  if (!is_t_laminar(rep, t)) throw std::invalid_argument("replacement family is not t-laminar");
}

void check_packing(const Design& packing) {
  if (packing.lambda != 1) throw std::invalid_argument("nesting needs a packing with lambda = 1");
  if (!is_packing(packing)) throw std::invalid_argument("block system is not a t-packing");
}

template <typename ReplacementFor>
Family nest_blocks(const Design& packing, ReplacementFor&& replacement_for) {
  const std::size_t n = packing.v;
  std::vector<Block> sets;
  std::vector<std::vector<int>> rep_points;
  const Family* last_rep = nullptr;
  for (std::size_t i = 0; i < packing.blocks.size(); ++i) {
    const std::vector<int> block_points = packing.blocks[i].points();
    const Family& rep = replacement_for(i);
    if (&rep != last_rep) {
      rep_points = rep.to_lists();
      last_rep = &rep;
    }
    for (const auto& members : rep_points) {
      Block b(n);
      for (int p : members) b.insert(block_points[static_cast<std::size_t>(p - 1)]);
      sets.push_back(std::move(b));
    }
  }
  return Family::deduplicated(n, std::move(sets));
}

Family all_small_subsets(std::size_t n, std::size_t max_size) {
  std::vector<Block> sets;
  std::vector<int> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = static_cast<int>(i + 1);
  for (std::size_t s = 1; s <= max_size; ++s)
    for_each_subset(pts, s, [&](std::span<const int> sub) { sets.push_back(Block::from_points(n, sub)); });
  return Family(n, std::move(sets));
}

Family merged(const Family& a, const Family& b) {
  std::vector<Block> sets(a.begin(), a.end());
  sets.insert(sets.end(), b.begin(), b.end());
  return Family::deduplicated(a.ground_size(), std::move(sets));
}

std::string certify(const Family& f, int t) {
  if (f.size() <= kPairwiseLimit) {
    if (!is_t_laminar(f, t)) throw std::logic_error("tower family failed the pairwise laminarity check");
    return "pairwise";
  }
  if (!unique_chain_check(f, t)) throw std::logic_error("tower family failed the chain-index laminarity check");
  return "chain-index";
}

}  // namespace

Family nested(const Design& packing, std::span<const Family> replacements) {
  check_packing(packing);
  if (replacements.size() != packing.blocks.size())
    throw std::invalid_argument("need one replacement family per block");
  for (std::size_t i = 0; i < replacements.size(); ++i) {
    if (i > 0 && replacements[i] == replacements[i - 1]) continue;
    check_replacement(replacements[i], packing.blocks[i].size(), packing.t);
  }
  return nest_blocks(packing, [&](std::size_t i) -> const Family& { return replacements[i]; });
}

Family nested(const Design& packing, const Family& replacement) {
  check_packing(packing);
  for (const auto& b : packing.blocks)
    if (b.size() != replacement.ground_size())
      throw std::invalid_argument("replacement over " + std::to_string(replacement.ground_size()) +
                                  " points for a block of size " + std::to_string(b.size()));
  if (!is_t_laminar(replacement, packing.t)) throw std::invalid_argument("replacement family is not t-laminar");
  return nest_blocks(packing, [&](std::size_t) -> const Family& { return replacement; });
}

Rat seven_series(int r) {
  if (r < 0) throw std::out_of_range("tower level must be >= 0");
  Rat sum = Rat(1) + Rat(1, 3) + Rat(1, 21);
  for (int i = 1; i <= r; ++i) {
    const BigInt n = ipow(7, 1UL << i);
    sum += make_rat(2, n * (n - 1));
  }
  return sum;
}

TowerReport fano_tower(int r, const TowerOptions& options) {
  if (r < 0) throw std::out_of_range("tower level must be >= 0");
  if (r > 4) throw std::out_of_range("fano tower ground size exceeds a machine word beyond level 4");
  TowerReport rep;
  rep.t = 2;
  rep.r = r;
  BigInt n = 7;
  BigInt count = 29;
  for (int i = 1; i <= r; ++i) {
    const BigInt m = n;
    n = m * m;
    count = m * (m + 1) * count + 1;
  }
  rep.n = to_size(n);
  rep.count_geq_t = count;
  rep.count_total = count + n;
  const Rat pairs = Rat(binomial(rep.n, 2));
  rep.formula_value = pairs * seven_series(r);
  rep.ratio = Rat(count) / pairs;
  if (!options.materialize) return rep;

  if (rep.n > 2401 || (rep.n == 2401 && !options.allow_large))
    throw ScaleError("materializing the fano tower at n = " + std::to_string(rep.n) + " is not supported" +
                     (rep.n == 2401 ? " without the large-scale opt-in" : ""));

  Family family = merged(all_small_subsets(7, 2), projective_plane(2).blocks).with(Block::universe(7));
  for (int i = 1; i <= r; ++i) {
    const Design plane = affine_plane(family.ground_size());
    family = nested(plane, family).with(Block::universe(plane.v));
  }
  if (BigInt(static_cast<unsigned long>(family.count_at_least(2))) != count)
    throw std::logic_error("materialized fano tower count disagrees with the recursion");
  if (options.verify) rep.verification = certify(family, 2);
  rep.family = std::move(family);
  return rep;
}

TowerReport circle_tower(int r, const TowerOptions& options) {
  if (r < 0) throw std::out_of_range("tower level must be >= 0");
  if (r > 3) throw std::out_of_range("circle tower ground size exceeds the supported range beyond level 3");
  TowerReport rep;
  rep.t = 3;
  rep.r = r;
  BigInt q = 3;
  BigInt count = 151;
  for (int i = 1; i <= r; ++i) {
    q = q * q;
    count = q * (q * q + 1) * count + 1;
  }
  const BigInt n = q * q + 1;
  rep.n = to_size(n);
  rep.count_geq_t = count;
  rep.count_total = count + n + binomial(rep.n, 2);
  const Rat triples = Rat(binomial(rep.n, 3));
  rep.formula_value = 1 + triples * three_series_report(r).bracket;
  rep.ratio = Rat(count) / triples;
  if (!options.materialize) return rep;

  if (rep.n > 82) throw ScaleError("materializing the circle tower at n = " + std::to_string(rep.n) + " is not supported");
  Family family = merged(all_small_subsets(10, 3), circle_geometry(3).blocks).with(Block::universe(10));
  std::uint64_t qi = 3;
  for (int i = 1; i <= r; ++i) {
    qi *= qi;
    const Design circles = circle_geometry(qi);
    family = nested(circles, family).with(Block::universe(circles.v));
  }
  if (BigInt(static_cast<unsigned long>(family.count_at_least(3))) != count)
    throw std::logic_error("materialized circle tower count disagrees with the recursion");
  if (options.verify) rep.verification = certify(family, 3);
  rep.family = std::move(family);
  return rep;
}

ThreeSeriesReport three_series_report(int r) {
  if (r < 0 || r > 3) throw std::out_of_range("three-wise series level must be in [0, 3]");
  ThreeSeriesReport out;
  out.r = r;
  auto term = [](int j) {
    const BigInt m = ipow(3, 1UL << j) + 1;
    return make_rat(6, m * (m - 1) * (m - 2));
  };
  out.bracket = 1;
  for (int j = 0; j <= r; ++j) out.bracket += term(j);

  BigInt q = 3;
  BigInt count = 151;
  for (int i = 1; i <= r; ++i) {
    q = q * q;
    count = q * (q * q + 1) * count + 1;
  }
  const BigInt n = q * q + 1;
  out.n = to_size(n);
  const BigInt pairs = binomial(out.n, 2);
  out.formula_geq3 = 1 + Rat(binomial(out.n, 3)) * out.bracket;
  out.formula_total = out.formula_geq3 + Rat(n) + Rat(pairs);
  out.recursive_geq3 = count;
  out.recursive_total = count + n + pairs;
  out.counts_agree = out.formula_geq3 == Rat(count) && out.formula_total == Rat(out.recursive_total);

  out.claimed_constant = Rat(15083, 10000);
  out.bracket_limit = 1;
  for (int j = 0; j <= 5; ++j) out.bracket_limit += term(j);  // remainder < 1e-40
  out.constant_discrepancy = abs(out.claimed_constant - out.bracket_limit) > Rat(1, 1000);
  return out;
}

BigInt general_n_lower_bound(std::size_t n, std::size_t k, const Design& packing, const BigInt& g_k) {
  if (packing.v != n || packing.t != 2 || packing.lambda != 1)
    throw std::invalid_argument("expected a 2-(n, k, 1) packing on n points");
  if (k >= n) throw std::invalid_argument("block size must be smaller than n (the universe is counted separately)");
  for (const auto& b : packing.blocks)
    if (b.size() != k) throw std::invalid_argument("every packing block must have size k");
  if (!is_packing(packing)) throw std::invalid_argument("block system is not a 2-packing");
  return BigInt(static_cast<unsigned long>(packing.blocks.size())) * g_k + 1;
}

}  // namespace laminar
