#include <doctest.h>

#include <random>
#include <sstream>

#include "laminar/io.hpp"
#include "support.hpp"

using namespace laminar;

namespace {

FamilyDocument parse(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

std::size_t error_line(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 9999;
}

}  // namespace

TEST_CASE("text format") {
  const FamilyDocument d = parse("# a comment\n\nn=5 t=2\n1 2 3\n  4 5\n# another\n1 2\n");
  CHECK(d.family.ground_size() == 5);
  CHECK(d.t == 2);
  CHECK(d.family == Family::from_lists(5, {{1, 2, 3}, {4, 5}, {1, 2}}));
  CHECK_FALSE(d.design.has_value());
  CHECK_FALSE(parse("n=3\n").t.has_value());
}

TEST_CASE("text parse errors carry line numbers") {
  CHECK(error_line("n=4\n1 2\n2 1\n") == 3);
  CHECK(error_line("n=4\n1 5\n") == 2);
  CHECK(error_line("n=4\n1 x\n") == 2);
  CHECK(error_line("# c\nm=4\n") == 2);
  CHECK(error_line("n=4 t=0\n") == 1);
  CHECK(error_line("n=4\n1 2\n\n1 2\n") == 4);
  CHECK(error_line("1 2\n") == 1);
  CHECK(error_line("") == 1);
  CHECK(error_line("n=4\n1 1\n") == 2);
}

TEST_CASE("json format") {
  const FamilyDocument d = parse(R"({"n": 4, "t": 3, "sets": [[1,2,3],[4]]})");
  CHECK(d.family == Family::from_lists(4, {{1, 2, 3}, {4}}));
  CHECK(d.t == 3);
  CHECK_THROWS_AS(parse(R"({"n": 4, "sets": [[3,2]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 4, "sets": [[5]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"sets": []})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 4, "sets": [[1],[1]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n": 4, )"), ParseError);
}

TEST_CASE("designs keep their header") {
  const Design plane = projective_plane(3);
  const FamilyDocument doc = design_document(plane);
  std::ostringstream out;
  write_family_text(out, doc);
  CHECK(out.str().rfind("# design t=2 v=13 lambda=1 kind=design\nn=13 t=2\n", 0) == 0);
  const FamilyDocument back = parse(out.str());
  CHECK(back == doc);
  CHECK(design_from_document(back) == plane);
  const FamilyDocument jback = family_from_json(family_to_json(doc));
  CHECK(design_from_document(jback) == plane);
  CHECK_THROWS_AS(design_from_document(parse("n=3\n1 2\n")), ParseError);
  CHECK(error_line("# design t=2 v=9 lambda=1 kind=design\nn=8\n") == 0);
  CHECK(error_line("# design t=2 v=9 lambda=1 kind=cover\nn=9\n") == 1);
}

TEST_CASE("random families survive both formats unchanged") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rng() % 9;
    FamilyDocument doc;
    doc.family = oracle::to_family(n, oracle::random_family(rng, n, 15));
    if (rng() & 1U) doc.t = 1 + static_cast<int>(rng() % 3);
    std::ostringstream text;
    write_family_text(text, doc);
    CHECK(parse(text.str()) == doc);
    CHECK(parse(family_to_json(doc).dump()) == doc);
  }
}

TEST_CASE("report json") {
  const nlohmann::json t = tower_report_json(fano_tower(1));
  CHECK(t["t"] == 2);
  CHECK(t["r"] == 1);
  CHECK(t["n"] == 49);
  CHECK(t["count_geq_t"] == "1625");
  CHECK(t["formula_value"] == "1625/1");
  CHECK(t["ratio_decimal"] == "1.3818027210884353741");

  const BoundTable table = obf_table(10);
  const nlohmann::json o = obf_report_json(table, 4);
  CHECK(o["N"] == 4);
  CHECK(o["obf_N"] == "8/1");
  CHECK(o["tail"] == "1/2");
  CHECK(o["upper_limit"] == "11/6");
  CHECK(o["critical"] == std::vector<int>{1, 2, 3});
  CHECK(o["frontier_log"].size() == 2);
  CHECK(obf_report_json(table, 10)["frontier_log"].size() == 3);

  const nlohmann::json s = three_series_json(three_series_report(0));
  CHECK(s["counts_agree"] == true);
  CHECK(s["constant_discrepancy"] == true);
  CHECK(s["formula_total"] == "206/1");
}
