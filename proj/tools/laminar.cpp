// laminar: construct, verify, search and bound t-laminar set families.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "laminar/bounds.hpp"
#include "laminar/combinatorics.hpp"
#include "laminar/construct.hpp"
#include "laminar/design.hpp"
#include "laminar/field.hpp"
#include "laminar/io.hpp"
#include "laminar/search.hpp"
#include "laminar/setfam.hpp"

using namespace laminar;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kResource = 3, kCorrupt = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  int t = 2;
  int r = 0;
  std::uint64_t q = 0;
  std::uint64_t seed = 1;
  std::string cache_path;
  double budget_seconds = 60.0;
  bool materialize = false;
  bool allow_large = false;
  bool all_layers = false;
  bool prefilter = true;
  bool json = false;
  std::string out;
  std::string kind;
  std::string file;
  std::string convention = "f";
  bool t_given = false;
};

std::string resolve_cache(const RunConfig& cfg) {
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* env = std::getenv("LAMINAR_CACHE"); env != nullptr && *env != '\0') return env;
  return "obf_cache.tsv";
}

void print_lines(const json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      print_lines(*it, prefix + it.key() + ".");
    } else if (it->is_string()) {
      std::cout << prefix << it.key() << ": " << it->get<std::string>() << '\n';
    } else {
      std::cout << prefix << it.key() << ": " << it->dump() << '\n';
    }
  }
}

void emit(const RunConfig& cfg, const json& report) {
  if (cfg.json)
    std::cout << report.dump(2) << '\n';
  else
    print_lines(report);
}

BoundTable load_or_empty(const std::string& path, bool& had_cache) {
  had_cache = std::filesystem::exists(path);
  if (!had_cache) return BoundTable{};
  return load_cache(path);
}

int cmd_obf(const RunConfig& cfg) {
  if (cfg.n < 2) throw UsageError("obf needs --N >= 2");
  const std::string path = resolve_cache(cfg);
  bool had_cache = false;
  BoundTable table = load_or_empty(path, had_cache);
  if (had_cache) std::clog << "obf: loaded " << path << " up to n=" << table.max_n() << '\n';
  if (table.max_n() < cfg.n) {
    const auto start = std::chrono::steady_clock::now();
    ObfOptions opts;
    opts.prefilter = cfg.prefilter;
    opts.progress_every = 1000;
    opts.progress = [&](int n, const BoundTable&) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::clog << "obf: n=" << n << "/" << cfg.n << " (" << secs << " s)\n";
    };
    extend_table(table, cfg.n, opts);
    save_cache(table, path);
  }
  json report = obf_report_json(table, cfg.n);
  report["cache"] = path;
  emit(cfg, report);
  return kOk;
}

FamilyDocument tower_document(const TowerReport& rep, bool all_layers) {
  FamilyDocument doc;
  doc.t = rep.t;
  if (all_layers) {
    doc.family = *rep.family;
  } else {
    std::vector<Block> sets;
    for (const auto& b : *rep.family)
      if (b.size() >= static_cast<std::size_t>(rep.t)) sets.push_back(b);
    doc.family = Family(rep.n, std::move(sets));
  }
  return doc;
}

void write_document(const RunConfig& cfg, const FamilyDocument& doc) {
  write_family_file(cfg.out, doc, cfg.out.size() > 5 && cfg.out.ends_with(".json"));
  // every written file must read back to the same value
  if (!(read_family_file(cfg.out) == doc)) throw std::logic_error("written file does not read back identically");
}

int cmd_construct(const RunConfig& cfg) {
  const std::string& kind = cfg.kind;
  if (kind == "fano-tower" || kind == "circle-tower") {
    TowerOptions opts;
    opts.materialize = cfg.materialize || !cfg.out.empty();
    opts.allow_large = cfg.allow_large;
    const bool fano = kind == "fano-tower";
    if (cfg.r < 0) throw UsageError("--r must be >= 0");
    const TowerReport rep = fano ? fano_tower(cfg.r, opts) : circle_tower(cfg.r, opts);
    json report = tower_report_json(rep);
    if (!fano) report["three_series"] = three_series_json(three_series_report(cfg.r));
    if (rep.family && !cfg.out.empty()) {
      const FamilyDocument doc = tower_document(rep, cfg.all_layers);
      write_document(cfg, doc);
      report["file"] = cfg.out;
      report["sets_written"] = doc.family.size();
    }
    emit(cfg, report);
    return kOk;
  }
  if (kind != "affine" && kind != "projective" && kind != "circle")
    throw UsageError("unknown construction '" + kind + "'");
  if (cfg.q < 2 || !prime_power(cfg.q)) throw UsageError("--q must be a prime power, got " + std::to_string(cfg.q));
  const Design d = kind == "affine" ? affine_plane(cfg.q) : kind == "projective" ? projective_plane(cfg.q) : circle_geometry(cfg.q);
  if (!is_design(d)) throw std::logic_error("generated block system failed design validation");
  const FamilyDocument doc = design_document(d);
  json report = {{"kind", kind},
                 {"q", cfg.q},
                 {"t", d.t},
                 {"v", d.v},
                 {"block_size", d.blocks.empty() ? 0 : d.blocks[0].size()},
                 {"lambda", d.lambda},
                 {"blocks", d.blocks.size()},
                 {"valid", true}};
  if (!cfg.out.empty()) {
    write_document(cfg, doc);
    report["file"] = cfg.out;
    emit(cfg, report);
  } else if (cfg.json) {
    report["design"] = family_to_json(doc);
    emit(cfg, report);
  } else {
    write_family_text(std::cout, doc);
  }
  return kOk;
}

std::string set_string(const Block& b) {
  std::string s = "{";
  for (int p : b.points()) s += (s.size() > 1 ? " " : "") + std::to_string(p);
  return s + "}";
}

int cmd_verify(const RunConfig& cfg) {
  FamilyDocument doc;
  try {
    doc = read_family_file(cfg.file);
  } catch (const ParseError& e) {
    std::cerr << cfg.file << ": " << e.what() << '\n';
    return kUsage;
  }
  int t = cfg.t;
  if (!cfg.t_given) {
    if (!doc.t) throw UsageError("no t in the file header; pass --t");
    t = *doc.t;
  }
  if (t < 1) throw UsageError("--t must be >= 1");
  const Family& f = doc.family;
  constexpr std::size_t kPairwiseLimit = 20000;
  const bool small = f.size() <= kPairwiseLimit;

  json report = {{"file", cfg.file}, {"n", f.ground_size()}, {"t", t}, {"sets", f.size()}};
  std::optional<bool> pairwise, matrix, chain;
  std::optional<std::pair<Block, Block>> witness;
  std::optional<ConfigEmbedding> embedding;
  if (small) {
    witness = laminarity_witness(f, t);
    pairwise = !witness.has_value();
    embedding = find_config(incidence_matrix(f), forbidden_matrix(t));
    matrix = !embedding.has_value();
  }
  chain = unique_chain_check(f, t);
  report["pairwise"] = pairwise ? json(*pairwise) : json("skipped");
  report["forbidden_matrix_avoided"] = matrix ? json(*matrix) : json("skipped");
  report["unique_chain"] = *chain;
  const bool agree = !small || (*pairwise == *matrix && *matrix == *chain);
  report["routes_agree"] = agree;
  const bool laminar = *chain && (!small || (*pairwise && *matrix));
  report["t_laminar"] = laminar;
  if (witness) {
    report["witness"] = {set_string(witness->first), set_string(witness->second)};
  }
  if (embedding) {
    report["submatrix_rows"] = embedding->rows;
    json cols = json::array();
    for (auto c : embedding->cols) cols.push_back(c + 1);  // as point labels
    report["submatrix_columns"] = cols;
    report["submatrix_sets"] = {set_string(f[embedding->rows[0]]), set_string(f[embedding->rows[1]])};
  }
  emit(cfg, report);
  if (!agree) {
    std::cerr << "verify: the three characterizations disagree\n";
    return kCorrupt;
  }
  return laminar ? kOk : kFails;
}

int cmd_search(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("search needs --n >= 1");
  if (cfg.t < 1) throw UsageError("--t must be >= 1");
  SearchOptions opts;
  opts.budget_seconds = cfg.budget_seconds;
  if (cfg.convention == "f")
    opts.convention = SizeConvention::f_convention;
  else if (cfg.convention == "at-least-t")
    opts.convention = SizeConvention::at_least_t;
  else
    throw UsageError("--convention must be f or at-least-t");
  if (cfg.n > 9) throw UsageError("exact search supports n <= 9");
  const SearchResult res = max_laminar_exact(static_cast<std::size_t>(cfg.n), cfg.t, opts);
  json report = search_report_json(res, cfg.t);
  report["convention"] = cfg.convention;
  if (cfg.t == 2 && cfg.n >= 2 && opts.convention == SizeConvention::f_convention) {
    const BoundTable table = obf_table(std::max(cfg.n, 3));
    report["obf"] = fraction_string(table.obf(cfg.n));
    report["below_obf"] = Rat(static_cast<unsigned long>(res.size)) <= table.obf(cfg.n);
  }
  if (!cfg.out.empty()) {
    FamilyDocument doc;
    doc.family = res.witness;
    doc.t = cfg.t;
    write_document(cfg, doc);
    report["file"] = cfg.out;
  }
  emit(cfg, report);
  if (!res.exact) std::clog << "search: budget exhausted; size is a lower bound\n";
  return kOk;
}

int cmd_summary(const RunConfig& cfg) {
  if (cfg.r < 0 || cfg.r > 4) throw UsageError("--r must be in [0, 4]");
  const TowerReport tower = fano_tower(cfg.r);
  json report;
  report["construction"] = {{"tower_level", cfg.r},
                            {"n", tower.n},
                            {"count", tower.count_geq_t.get_str()},
                            {"ratio", fraction_string(tower.ratio)},
                            {"ratio_decimal", decimal_string(tower.ratio)}};
  const Rat series = projective_series(4);
  report["projective_series"] = {{"terms", 4}, {"value", fraction_string(series)}, {"decimal", decimal_string(series)}};
  json bracket = {{"lower", fraction_string(tower.ratio)}, {"lower_decimal", decimal_string(tower.ratio)}};

  const std::string path = resolve_cache(cfg);
  if (std::filesystem::exists(path)) {
    const BoundTable table = load_cache(path);
    const int N = table.max_n();
    if (N >= 2) {
      const UpperLimit u = upper_limit_report(table, N);
      report["bound"] = {{"cache", path},
                         {"N", N},
                         {"obf_N", fraction_string(u.obf_N)},
                         {"ratio", fraction_string(u.ratio)},
                         {"ratio_decimal", decimal_string(u.ratio)},
                         {"tail", fraction_string(u.tail)}};
      bracket["upper"] = fraction_string(u.upper);
      bracket["upper_decimal"] = decimal_string(u.upper);
    }
  } else {
    std::clog << "summary: no cache at " << path << "; reporting the construction side only\n";
  }
  report["bracket"] = bracket;
  emit(cfg, report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructions, verification, exact search and LP bounds for t-laminar families"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "JSON report on stdout");
    sub->add_option("--out", cfg.out, "Write the family or design here (.json selects JSON)");
  };

  auto* obf = app.add_subcommand("obf", "Recursive LP bound up to N, extending the cache");
  obf->add_option("--N,--n", cfg.n, "Largest n")->required();
  obf->add_option("--cache", cfg.cache_path, "Cache file (default $LAMINAR_CACHE, else obf_cache.tsv)");
  obf->add_flag("--prefilter,!--no-prefilter", cfg.prefilter, "Rank m in floating point first (default on)");
  obf->add_flag("--json", cfg.json, "JSON report on stdout");

  auto* construct = app.add_subcommand("construct", "Build a design or tower family");
  construct->add_option("kind", cfg.kind, "fano-tower | circle-tower | affine | projective | circle")->required();
  construct->add_option("--r", cfg.r, "Tower level");
  construct->add_option("--q", cfg.q, "Order of the plane or geometry");
  construct->add_option("--seed", cfg.seed, "Seed for randomized steps");
  construct->add_flag("--materialize", cfg.materialize, "Build the tower family explicitly");
  construct->add_flag("--allow-large", cfg.allow_large, "Permit the 2401-point fano tower level");
  construct->add_flag("--all-layers", cfg.all_layers, "Also write members smaller than t");
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "Check t-laminarity three ways");
  verify->add_option("file", cfg.file, "Family file (text or JSON)")->required();
  verify->add_option("--t", cfg.t, "Strength (default: from the file header)");
  verify->add_flag("--json", cfg.json, "JSON report on stdout");

  auto* search = app.add_subcommand("search", "Exact maximum t-laminar family by clique search");
  search->add_option("--n,--N", cfg.n, "Ground set size")->required();
  search->add_option("--t", cfg.t, "Strength");
  search->add_option("--budget", cfg.budget_seconds, "Time budget in seconds");
  search->add_option("--convention", cfg.convention, "f (sizes >= max(t,2)) or at-least-t");
  add_common(search);

  auto* summary = app.add_subcommand("summary", "Reconcile construction and bound");
  summary->add_option("--cache", cfg.cache_path, "Cache file (default $LAMINAR_CACHE, else obf_cache.tsv)");
  summary->add_option("--r", cfg.r, "Fano tower level for the construction side");
  summary->add_flag("--json", cfg.json, "JSON report on stdout");
  cfg.r = 0;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  cfg.t_given = verify->count("--t") > 0;
  if (*summary && summary->count("--r") == 0) cfg.r = 2;

  try {
    if (*obf) return cmd_obf(cfg);
    if (*construct) return cmd_construct(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*search) return cmd_search(cfg);
    return cmd_summary(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CacheError& e) {
    std::cerr << "error: corrupt cache at line " << e.line() << "\n  expected: " << e.expected()
              << "\n  found:    " << e.found() << '\n';
    return kCorrupt;
  } catch (const ScaleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  }
}
