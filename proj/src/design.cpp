#include "laminar/design.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "laminar/combinatorics.hpp"
#include "laminar/field.hpp"

namespace laminar {

namespace {

constexpr std::uint64_t kMaxSubsetTable = 200'000'000;

// Number of blocks through each t-subset, indexed by colex rank; nullopt when
// a block is smaller than t.
std::optional<std::vector<std::uint32_t>> subset_counts(const Design& d) {
  if (d.t < 1) throw std::invalid_argument("design strength must be >= 1");
  const auto t = static_cast<std::size_t>(d.t);
  if (d.blocks.ground_size() != d.v) throw std::invalid_argument("block ground size differs from v");
  const std::uint64_t subsets = binomial_u64(d.v, t);
  if (subsets > kMaxSubsetTable) throw std::length_error("too many t-subsets to validate exhaustively");
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(subsets), 0);
  std::vector<int> pts;
  for (const auto& b : d.blocks) {
    if (b.size() < t) return std::nullopt;
    pts = b.points();
    for (auto& p : pts) --p;
    for_each_subset(pts, t, [&](std::span<const int> sub) { ++counts[colex_rank(sub)]; });
  }
  return counts;
}

FiniteField field_for(std::uint64_t q) { return FiniteField::of_order(q); }

// Colex unranking of a k-subset of {0..n-1}, increasing order.
std::vector<int> colex_unrank(std::uint64_t rank, std::size_t k, std::size_t n) {
  std::vector<int> out(k);
  std::uint64_t c = n;
  for (std::size_t i = k; i >= 1; --i) {
    do {
      --c;
    } while (binomial_u64(c, i) > rank);
    out[i - 1] = static_cast<int>(c);
    rank -= binomial_u64(c, i);
  }
  return out;
}

}  // namespace

std::string to_string(DesignKind kind) { return kind == DesignKind::design ? "design" : "packing"; }

DesignKind design_kind_from_string(const std::string& s) {
  if (s == "design") return DesignKind::design;
  if (s == "packing") return DesignKind::packing;
  throw std::invalid_argument("unknown design kind '" + s + "'");
}

std::vector<std::size_t> Design::block_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.size());
  return out;
}

bool is_design(const Design& d) {
  auto counts = subset_counts(d);
  if (!counts) return false;
  const auto lambda = static_cast<std::uint32_t>(d.lambda);
  return std::all_of(counts->begin(), counts->end(), [&](std::uint32_t c) { return c == lambda; });
}

bool is_packing(const Design& d) {
  auto counts = subset_counts(d);
  if (!counts) return false;
  const auto lambda = static_cast<std::uint32_t>(d.lambda);
  return std::all_of(counts->begin(), counts->end(), [&](std::uint32_t c) { return c <= lambda; });
}

Design affine_plane(std::uint64_t q) {
  const FiniteField f = field_for(q);
  const std::size_t v = q * q;
  auto point = [q](FieldElem x, FieldElem y) { return static_cast<int>(x.code * q + y.code + 1); };
  std::vector<Block> blocks;
  blocks.reserve(q * q + q);
  for (std::uint32_t m = 0; m < q; ++m) {
    for (std::uint32_t b = 0; b < q; ++b) {
      Block line(v);
      for (std::uint32_t x = 0; x < q; ++x) {
        const FieldElem y = f.add(f.mul({m}, {x}), {b});
        line.insert(point({x}, y));
      }
      blocks.push_back(std::move(line));
    }
  }
  for (std::uint32_t c = 0; c < q; ++c) {
    Block line(v);
    for (std::uint32_t y = 0; y < q; ++y) line.insert(point({c}, {y}));
    blocks.push_back(std::move(line));
  }
  return Design{2, v, 1, DesignKind::design, Family(v, std::move(blocks))};
}

Design projective_plane(std::uint64_t q) {
  const FiniteField f = field_for(q);
  using Vec = std::array<FieldElem, 3>;
  // Normalized: first nonzero coordinate is 1. Lexicographic on codes.
  std::vector<Vec> points;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        const Vec v{FieldElem{a}, FieldElem{b}, FieldElem{c}};
        const auto lead = std::find_if(v.begin(), v.end(), [](FieldElem e) { return e.code != 0; });
        if (lead != v.end() && lead->code == 1) points.push_back(v);
      }
  const std::size_t v = points.size();
  std::vector<Block> blocks;
  blocks.reserve(v);
  for (const Vec& line : points) {
    Block b(v);
    for (std::size_t i = 0; i < v; ++i) {
      FieldElem dot = f.zero();
      for (int j = 0; j < 3; ++j) dot = f.add(dot, f.mul(line[j], points[i][j]));
      if (dot == f.zero()) b.insert(static_cast<int>(i + 1));
    }
    blocks.push_back(std::move(b));
  }
  return Design{2, v, 1, DesignKind::design, Family(v, std::move(blocks))};
}

Design circle_geometry(std::uint64_t q) {
  if (!prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  const FiniteField f = field_for(q * q);
  const std::uint32_t big = f.order();
  const std::size_t v = static_cast<std::size_t>(big) + 1;
  const int infinity = static_cast<int>(v);

  std::vector<FieldElem> subline;
  for (std::uint32_t code = 0; code < big; ++code)
    if (f.pow({code}, q) == FieldElem{code}) subline.push_back({code});
  if (subline.size() != q) throw std::logic_error("subfield enumeration failed");

  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Block> blocks;
  auto emit = [&](FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
    Block img(v);
    img.insert(c == f.zero() ? infinity : static_cast<int>(f.div(a, c).code) + 1);
    for (FieldElem s : subline) {
      const FieldElem den = f.add(f.mul(c, s), d);
      if (den == f.zero()) {
        img.insert(infinity);
      } else {
        img.insert(static_cast<int>(f.div(f.add(f.mul(a, s), b), den).code) + 1);
      }
    }
    std::vector<std::uint64_t> key(img.words().begin(), img.words().end());
    if (seen.insert(std::move(key)).second) blocks.push_back(std::move(img));
  };
  // One representative per projective class: (a b; 0 1) and (a b; 1 d).
  for (std::uint32_t a = 1; a < big; ++a)
    for (std::uint32_t b = 0; b < big; ++b) emit({a}, {b}, f.zero(), f.one());
  for (std::uint32_t a = 0; a < big; ++a)
    for (std::uint32_t b = 0; b < big; ++b)
      for (std::uint32_t d = 0; d < big; ++d)
        if (f.mul({a}, {d}) != FieldElem{b}) emit({a}, {b}, f.one(), {d});

  if (blocks.size() != q * (q * q + 1)) throw std::logic_error("unexpected circle geometry block count");
  return Design{3, v, 1, DesignKind::design, Family(v, std::move(blocks))};
}

Design greedy_packing(std::size_t n, std::size_t k, int t, std::uint64_t seed) {
  if (t < 1) throw std::invalid_argument("packing strength must be >= 1");
  const auto tt = static_cast<std::size_t>(t);
  if (tt > k || k > n) throw std::invalid_argument("greedy_packing requires t <= k <= n");
  const std::uint64_t pair_space = binomial_u64(n, tt);
  if (pair_space > kMaxSubsetTable) throw std::length_error("too many t-subsets for greedy packing");

  std::mt19937_64 rng(seed);
  std::vector<bool> covered(static_cast<std::size_t>(pair_space), false);
  std::vector<Block> blocks;

  auto try_block = [&](const std::vector<int>& pts) {
    bool ok = true;
    for_each_subset(pts, tt, [&](std::span<const int> sub) {
      if (covered[colex_rank(sub)]) ok = false;
    });
    if (!ok) return;
    for_each_subset(pts, tt, [&](std::span<const int> sub) { covered[colex_rank(sub)] = true; });
    Block b(n);
    for (int p : pts) b.insert(p + 1);
    blocks.push_back(std::move(b));
  };

  const std::uint64_t candidates = binomial_u64(n, k);
  constexpr std::uint64_t kExhaustiveLimit = 4'000'000;
  if (candidates <= kExhaustiveLimit) {
    std::vector<std::uint64_t> order(static_cast<std::size_t>(candidates));
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (auto r : order) try_block(colex_unrank(r, k, n));
  } else {
    std::uniform_int_distribution<std::uint64_t> pick(0, candidates - 1);
    for (std::uint64_t round = 0; round < kExhaustiveLimit; ++round) try_block(colex_unrank(pick(rng), k, n));
  }
  return Design{t, n, 1, DesignKind::packing, Family(n, std::move(blocks))};
}

}  // namespace laminar
