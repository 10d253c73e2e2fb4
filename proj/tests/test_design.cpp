#include <doctest.h>

#include <map>

#include "laminar/design.hpp"
#include "support.hpp"

using namespace laminar;

namespace {

// Every t-subset of [v] lies in exactly (or at most) lambda blocks.
bool reference_design(const Design& d, bool exact) {
  const oracle::Sets blocks = d.blocks.to_lists();
  std::vector<int> s;
  bool ok = true;
  auto rec = [&](auto&& self, int start) -> void {
    if (!ok) return;
    if (static_cast<int>(s.size()) == d.t) {
      int hits = 0;
      for (const auto& b : blocks) hits += oracle::includes(b, s) ? 1 : 0;
      ok = exact ? hits == d.lambda : hits <= d.lambda;
      return;
    }
    for (int p = start; p <= static_cast<int>(d.v); ++p) {
      s.push_back(p);
      self(self, p + 1);
      s.pop_back();
    }
  };
  rec(rec, 1);
  return ok;
}

}  // namespace

TEST_CASE("affine planes") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Design d = affine_plane(q);
    CHECK(d.v == q * q);
    CHECK(d.blocks.size() == q * q + q);
    CHECK(d.t == 2);
    for (auto s : d.block_sizes()) CHECK(s == q);
    CHECK(is_design(d));
    if (q <= 5) CHECK(reference_design(d, true));
  }
  CHECK_THROWS_AS(affine_plane(6), std::invalid_argument);
}

TEST_CASE("projective planes") {
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    CAPTURE(q);
    const Design d = projective_plane(q);
    CHECK(d.v == q * q + q + 1);
    CHECK(d.blocks.size() == q * q + q + 1);
    CHECK(is_design(d));
    if (q <= 4) CHECK(reference_design(d, true));
  }
  CHECK_THROWS_AS(projective_plane(10), std::invalid_argument);
}

TEST_CASE("circle geometries") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const Design d = circle_geometry(q);
    CHECK(d.t == 3);
    CHECK(d.v == q * q + 1);
    CHECK(d.blocks.size() == q * (q * q + 1));
    for (auto s : d.block_sizes()) CHECK(s == q + 1);
    CHECK(is_design(d));
    CHECK(reference_design(d, true));
  }
}

TEST_CASE("validators reject broken systems") {
  Design d = projective_plane(2);
  Design missing = d;
  missing.blocks = d.blocks.without(d.blocks[0]);
  CHECK_FALSE(is_design(missing));
  CHECK(is_packing(missing));
  CHECK(reference_design(missing, false));
  Design extra = d;
  extra.blocks = d.blocks.with(Block::from_points(7, {1, 2, 3, 4}));
  CHECK_FALSE(is_packing(extra));
  CHECK_FALSE(reference_design(extra, false));
  Design tiny = d;
  tiny.blocks = d.blocks.with(Block::from_points(7, {1}));
  CHECK_FALSE(is_design(tiny));
}

TEST_CASE("greedy packings are packings and reproducible") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const Design d = greedy_packing(12, 4, 2, seed);
    CHECK(d.kind == DesignKind::packing);
    CHECK(is_packing(d));
    CHECK(reference_design(d, false));
    CHECK(d.blocks.size() >= 6);
    CHECK(greedy_packing(12, 4, 2, seed) == d);
  }
  const Design big = greedy_packing(40, 5, 2, 7);
  CHECK(is_packing(big));
  CHECK(big.blocks.size() > 20);
}

TEST_CASE("design kind names") {
  CHECK(to_string(DesignKind::packing) == "packing");
  CHECK(design_kind_from_string("design") == DesignKind::design);
  CHECK_THROWS(design_kind_from_string("cover"));
}
