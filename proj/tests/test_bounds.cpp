#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "laminar/bounds.hpp"
#include "laminar/combinatorics.hpp"
#include "support.hpp"

using namespace laminar;

namespace {

const BoundTable& table_2000() {
  static const BoundTable t = obf_table(2000);
  return t;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("laminar_test_" + name)).string();
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  for (const auto& l : lines) out << l << '\n';
}

}  // namespace

TEST_CASE("base values") {
  const BoundTable t;
  CHECK(t.max_n() == 3);
  CHECK(t.obf(2) == 1);
  CHECK(t.obf(3) == 4);
  CHECK(t.frontier().critical_indices() == std::vector<int>{1, 2, 3});
}

TEST_CASE("table matches the frozen reference computation") {
  const auto rows = oracle::frozen_obf();
  REQUIRE(rows.size() == 399);
  const BoundTable& t = table_2000();
  for (const auto& row : rows) {
    CAPTURE(row.n);
    CHECK(t.obf(row.n) == row.value);
    CHECK(t.argmax(row.n) == row.argmax);
  }
  CHECK(t.obf(4) == 8);
  CHECK(t.obf(8) == make_rat(115, 3));
}

TEST_CASE("primal and dual agree exactly") {
  const BoundTable t = obf_table(60);
  for (int n = 4; n <= 60; ++n) {
    Rat best = -1;
    for (int m = 2; m < n; ++m) {
      const Rat dual = lp_dual_value(n, m, t);
      const PrimalSolution primal = lp_primal_oracle(n, m, t);
      REQUIRE(dual == primal.value);
      // the profile is feasible and attains the value
      Rat pairs = 0, value = 0;
      for (const auto& [k, b] : primal.profile) {
        CHECK(b >= 0);
        pairs += Rat(binomial(static_cast<unsigned long>(k), 2)) * b;
        value += t.obf(k) * b;
      }
      CHECK(value == primal.value);
      CHECK(pairs <= Rat(binomial(static_cast<unsigned long>(n), 2)));
      best = std::max(best, dual);
    }
    CHECK(t.obf(n) == best + 1);
  }
  CHECK_THROWS_AS(lp_dual_value(10, 10, t), std::out_of_range);
  CHECK_THROWS_AS(lp_primal_oracle(80, 70, t), std::out_of_range);
}

TEST_CASE("prefilter reproduces the exact scan") {
  ObfOptions exact;
  exact.prefilter = false;
  const BoundTable e = obf_table(2000, exact);
  const BoundTable& p = table_2000();
  for (int n = 2; n <= 2000; ++n) {
    REQUIRE(e.obf(n) == p.obf(n));
    REQUIRE(e.argmax(n) == p.argmax(n));
  }
  CHECK(e.frontier_log() == p.frontier_log());
}

TEST_CASE("frontier vertices are feasible for every halfspace so far") {
  const BoundTable& t = table_2000();
  std::vector<int> stages;
  for (int n = 3; n <= 300; ++n) stages.push_back(n);
  for (int n = 350; n <= 2000; n += 50) stages.push_back(n);
  for (int n : stages) {
    const Frontier& f = t.frontier_at(n);
    for (const auto& v : f.vertices) {
      REQUIRE(v.x >= 0);
      for (int k = 2; k <= n; ++k) REQUIRE(Halfspace::for_index(k, t.obf(k)).contains(v));
    }
  }
}

TEST_CASE("frontier matches brute-force vertex enumeration") {
  const BoundTable& t = table_2000();
  for (int n = 3; n <= 50; ++n) {
    std::vector<Halfspace> hs = {Halfspace::nonnegative_x()};
    for (int k = 2; k <= n; ++k) hs.push_back(Halfspace::for_index(k, t.obf(k)));
    std::vector<Point> brute;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        const Rat det = Rat(hs[i].a * hs[j].b - hs[j].a * hs[i].b);
        if (det == 0) continue;
        const Point p = boundary_intersection(hs[i], hs[j]);
        bool ok = true;
        for (const auto& h : hs) ok = ok && h.contains(p);
        if (ok && std::find(brute.begin(), brute.end(), p) == brute.end()) brute.push_back(p);
      }
    }
    std::sort(brute.begin(), brute.end(), [](const Point& a, const Point& b) { return a.x > b.x; });
    CAPTURE(n);
    CHECK(brute == t.frontier_at(n).vertices);
  }
}

TEST_CASE("every critical halfspace is needed") {
  const BoundTable& t = table_2000();
  for (int n : {3, 7, 42, 43, 500, 1806, 1807, 2000}) {
    const Frontier& f = t.frontier_at(n);
    for (std::size_t i = 0; i < f.critical.size(); ++i) {
      const Halfspace& h = f.critical[i];
      std::vector<Point> on;
      for (const auto& v : f.vertices)
        if (h.lhs(v) == h.c) on.push_back(v);
      Point witness;
      if (on.size() == 2) {
        witness = {(on[0].x + on[1].x) / 2, (on[0].y + on[1].y) / 2};
      } else {
        REQUIRE(on.size() == 1);
        // unbounded edges: y = 1 runs to the right, x = 0 runs upward
        witness = h.k == 1 ? Point{on[0].x, on[0].y + 1} : Point{on[0].x + 1, on[0].y};
      }
      CAPTURE(n);
      CAPTURE(h.k);
      CHECK(h.lhs(witness) == h.c);
      for (std::size_t j = 0; j < f.critical.size(); ++j)
        if (j != i) CHECK(f.critical[j].lhs(witness) > f.critical[j].c);
    }
  }
}

TEST_CASE("critical sets and the change log") {
  const BoundTable& t = table_2000();
  const auto& log = t.frontier_log();
  REQUIRE(log.size() >= 5);
  CHECK(log[0] == FrontierChange{2, {1, 2}});
  CHECK(log[1] == FrontierChange{3, {1, 2, 3}});
  CHECK(log[2] == FrontierChange{7, {1, 2, 3, 7}});
  CHECK(log[3] == FrontierChange{42, {1, 2, 3, 7, 42}});
  CHECK(log[4] == FrontierChange{43, {1, 2, 3, 7, 43}});
  CHECK(log.back() == FrontierChange{1807, {1, 2, 3, 7, 43, 1807}});
  CHECK(t.frontier().critical_indices() == std::vector<int>{1, 2, 3, 7, 43, 1807});
  CHECK(t.frontier_at(100).critical_indices() == std::vector<int>{1, 2, 3, 7, 43});
  // the y-axis corner sits at the projective series value
  CHECK(t.frontier().vertices.back() == Point{0, projective_series(4)});
}

TEST_CASE("frontier update preconditions") {
  Frontier f = Frontier::initial();
  CHECK_THROWS(frontier_update_in_place(f, 5, Rat(13)));
  CHECK(frontier_update_in_place(f, 3, Rat(4)));
  CHECK(f.critical_indices() == std::vector<int>{1, 2, 3});
  // a halfspace that every vertex already satisfies is dropped
  const Frontier g = frontier_update(f, 4, Rat(1));
  CHECK(g.critical_indices() == f.critical_indices());
  CHECK(g.n == 4);
}

TEST_CASE("series and limits") {
  CHECK(tail_sum(4) == make_rat(1, 2));
  std::vector<BigInt> idx = projective_indices(5);
  CHECK(idx == std::vector<BigInt>{3, 7, 43, 1807, 3263443});
  CHECK(projective_series(1) == make_rat(4, 3));
  CHECK(projective_series(2) == make_rat(29, 21));
  CHECK(projective_series(4) == make_rat(2255137, 1631721));
  const BoundTable& t = table_2000();
  const UpperLimit u = upper_limit_report(t, 4);
  CHECK(u.obf_N == 8);
  CHECK(u.ratio == make_rat(4, 3));
  CHECK(u.upper == make_rat(11, 6));
  for (int n = 2; n <= 2000; n += (n < 400 ? 1 : 97)) CHECK(rec_bound_check(t, n));
}

TEST_CASE("cache round trip and idempotent extension") {
  const std::string path = temp_path("roundtrip.tsv");
  std::filesystem::remove(path);
  const BoundTable t = obf_table(300);
  save_cache(t, path);
  const BoundTable loaded = load_cache(path);
  REQUIRE(loaded.max_n() == 300);
  for (int n = 2; n <= 300; ++n) CHECK(loaded.obf(n) == t.obf(n));
  CHECK(loaded.frontier_log() == t.frontier_log());

  const auto before = std::filesystem::file_size(path);
  save_cache(t, path);
  CHECK(std::filesystem::file_size(path) == before);

  BoundTable extended = load_cache(path);
  extend_table(extended, 320);
  save_cache(extended, path);
  const BoundTable again = load_cache(path);
  CHECK(again.max_n() == 320);
  CHECK(again.obf(320) == obf_table(320).obf(320));
  std::filesystem::remove(path);
}

TEST_CASE("cache corruption is reported with the failing line") {
  const std::string path = temp_path("corrupt.tsv");
  auto expect_error = [&](const std::vector<std::string>& lines, std::size_t line) {
    write_lines(path, lines);
    try {
      (void)load_cache(path);
      FAIL("corrupt cache accepted");
    } catch (const CacheError& e) {
      CHECK(e.line() == line);
      CHECK_FALSE(e.expected().empty());
      CHECK_FALSE(e.found().empty());
    }
  };
  expect_error({"2\t1/1", "3 4/1"}, 2);               // no tab
  expect_error({"2\t1/1", "4\t8/1"}, 2);              // gap
  expect_error({"2\t2/1"}, 1);                        // wrong base value
  expect_error({"2\t1/1", "3\t4/1", "4\t13/1"}, 3);   // above 2 C(n,2)
  expect_error({"2\t1/1", "3\t4/1", "4\t3/1"}, 3);    // not monotone
  expect_error({"2\t1/1", "3\t4/1", "4\tx/1"}, 3);    // bad fraction
  std::filesystem::remove(path);
  CHECK_THROWS(load_cache(path));
}

TEST_CASE("monotonicity, checked rather than assumed") {
  const BoundTable& t = table_2000();
  // obf itself increases strictly
  for (int n = 3; n <= 2000; ++n) REQUIRE(t.obf(n) > t.obf(n - 1));
  // the normalized ratio does not: it dips right after n = 4 and climbs again by n = 7
  auto ratio = [&](int n) -> Rat { return t.obf(n) / Rat(binomial(static_cast<unsigned long>(n), 2)); };
  CHECK(ratio(5) < ratio(4));
  CHECK(ratio(7) > ratio(6));
  int dips = 0, dips_400 = 0;
  for (int n = 3; n <= 2000; ++n) {
    dips += ratio(n) < ratio(n - 1) ? 1 : 0;
    if (n == 400) dips_400 = dips;
  }
  // same count from the frozen oracle values
  const auto rows = oracle::frozen_obf();
  int oracle_dips = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const Rat a = rows[i - 1].value / Rat(binomial(static_cast<unsigned long>(rows[i - 1].n), 2));
    const Rat b = rows[i].value / Rat(binomial(static_cast<unsigned long>(rows[i].n), 2));
    oracle_dips += b < a ? 1 : 0;
  }
  CHECK(dips_400 == oracle_dips);
  CHECK(dips_400 == 217);
  MESSAGE("ratio decreases at " << dips << " of the steps up to n = 2000");
  CHECK(dips > 0);
}
