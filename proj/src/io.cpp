#include "laminar/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace laminar {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_int(const std::string& s, std::size_t line, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer for " + what + ", found '" + s + "'");
  }
  if (used != s.size()) throw ParseError(line, "expected an integer for " + what + ", found '" + s + "'");
  return v;
}

// key=value tokens; unknown keys are rejected.
std::vector<std::pair<std::string, std::string>> key_values(const std::string& text, std::size_t line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(line, "expected key=value, found '" + tok + "'");
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return out;
}

DesignHeader parse_design_header(const std::string& body, std::size_t line) {
  DesignHeader h;
  bool seen_v = false;
  for (const auto& [k, v] : key_values(body, line)) {
    if (k == "t") {
      h.t = static_cast<int>(parse_int(v, line, "t"));
    } else if (k == "v") {
      h.v = static_cast<std::size_t>(parse_int(v, line, "v"));
      seen_v = true;
    } else if (k == "lambda") {
      h.lambda = static_cast<int>(parse_int(v, line, "lambda"));
    } else if (k == "kind") {
      try {
        h.kind = design_kind_from_string(v);
      } catch (const std::exception&) {
        throw ParseError(line, "unknown design kind '" + v + "'");
      }
    } else {
      throw ParseError(line, "unknown design header key '" + k + "'");
    }
  }
  if (!seen_v) throw ParseError(line, "design header lacks v=");
  return h;
}

Block parse_point_list(const std::string& text, std::size_t n, std::size_t line) {
  std::istringstream ss(text);
  std::string tok;
  std::vector<int> pts;
  while (ss >> tok) {
    const long p = parse_int(tok, line, "a point");
    if (p < 1 || static_cast<std::size_t>(p) > n)
      throw ParseError(line, "point " + tok + " outside [1, " + std::to_string(n) + "]");
    if (!pts.empty() && p <= pts.back()) throw ParseError(line, "points must be strictly increasing");
    pts.push_back(static_cast<int>(p));
  }
  return Block::from_points(n, pts);
}

std::string design_header_line(const DesignHeader& h) {
  return "# design t=" + std::to_string(h.t) + " v=" + std::to_string(h.v) +
         " lambda=" + std::to_string(h.lambda) + " kind=" + to_string(h.kind);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

FamilyDocument parse_family_text(std::istream& in) {
  FamilyDocument doc;
  std::optional<std::size_t> n;
  std::vector<Block> sets;
  std::vector<std::size_t> set_lines;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s[0] == '#') {
      const std::string body = trim(s.substr(1));
      if (body.rfind("design", 0) == 0 && (body.size() == 6 || body[6] == ' ')) {
        if (n) throw ParseError(line, "design header must precede the n= line");
        doc.design = parse_design_header(body.substr(6), line);
      }
      continue;
    }
    if (!n) {
      for (const auto& [k, v] : key_values(s, line)) {
        if (k == "n") {
          const long val = parse_int(v, line, "n");
          if (val < 0) throw ParseError(line, "n must be >= 0");
          n = static_cast<std::size_t>(val);
        } else if (k == "t") {
          const long val = parse_int(v, line, "t");
          if (val < 1) throw ParseError(line, "t must be >= 1");
          doc.t = static_cast<int>(val);
        } else {
          throw ParseError(line, "unknown header key '" + k + "'");
        }
      }
      if (!n) throw ParseError(line, "header line lacks n=");
      continue;
    }
    sets.push_back(parse_point_list(s, *n, line));
    set_lines.push_back(line);
  }
  if (!n) throw ParseError(line + 1, "missing header line 'n=<int>'");
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (sets[i] == sets[j])
        throw ParseError(set_lines[i], "duplicate of the set on line " + std::to_string(set_lines[j]));
  if (doc.design && doc.design->v != *n) throw ParseError(0, "design header v differs from n");
  doc.family = Family(*n, std::move(sets));
  return doc;
}

void write_family_text(std::ostream& out, const FamilyDocument& doc) {
  if (doc.design) out << design_header_line(*doc.design) << '\n';
  out << "n=" << doc.family.ground_size();
  if (doc.t) out << " t=" << *doc.t;
  out << '\n';
  for (const auto& b : doc.family) {
    bool first = true;
    for (int p : b.points()) {
      out << (first ? "" : " ") << p;
      first = false;
    }
    out << '\n';
  }
}

FamilyDocument family_from_json(const json& j) {
  try {
    FamilyDocument doc;
    const auto n = j.at("n").get<std::size_t>();
    if (j.contains("t")) doc.t = j.at("t").get<int>();
    if (doc.t && *doc.t < 1) throw ParseError(0, "t must be >= 1");
    std::vector<Block> sets;
    for (const auto& s : j.at("sets")) {
      std::vector<int> pts = s.get<std::vector<int>>();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] < 1 || static_cast<std::size_t>(pts[i]) > n)
          throw ParseError(0, "set " + std::to_string(sets.size() + 1) + ": point outside [1, n]");
        if (i > 0 && pts[i] <= pts[i - 1])
          throw ParseError(0, "set " + std::to_string(sets.size() + 1) + ": points must be strictly increasing");
      }
      sets.push_back(Block::from_points(n, pts));
    }
    if (j.contains("design")) {
      const auto& d = j.at("design");
      DesignHeader h;
      h.t = d.at("t").get<int>();
      h.v = d.at("v").get<std::size_t>();
      h.lambda = d.at("lambda").get<int>();
      h.kind = design_kind_from_string(d.at("kind").get<std::string>());
      if (h.v != n) throw ParseError(0, "design v differs from n");
      doc.design = h;
    }
    doc.family = Family(n, std::move(sets));
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed family JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

json family_to_json(const FamilyDocument& doc) {
  json j;
  j["n"] = doc.family.ground_size();
  if (doc.t) j["t"] = *doc.t;
  j["sets"] = doc.family.to_lists();
  if (doc.design)
    j["design"] = {{"t", doc.design->t},
                   {"v", doc.design->v},
                   {"lambda", doc.design->lambda},
                   {"kind", to_string(doc.design->kind)}};
  return j;
}

FamilyDocument parse_family(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(0, std::string("malformed JSON: ") + e.what());
    }
    return family_from_json(j);
  }
  std::istringstream ss(text);
  return parse_family_text(ss);
}

FamilyDocument read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_family(in);
}

void write_family_file(const std::string& path, const FamilyDocument& doc, bool as_json) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (as_json)
    out << family_to_json(doc).dump() << '\n';
  else
    write_family_text(out, doc);
  if (!out) throw std::runtime_error("write failed for " + path);
}

FamilyDocument design_document(const Design& d) {
  FamilyDocument doc;
  doc.family = d.blocks;
  doc.t = d.t;
  doc.design = DesignHeader{d.t, d.v, d.lambda, d.kind};
  return doc;
}

Design design_from_document(const FamilyDocument& doc) {
  if (!doc.design) throw ParseError(0, "file has no design header");
  Design d;
  d.t = doc.design->t;
  d.v = doc.design->v;
  d.lambda = doc.design->lambda;
  d.kind = doc.design->kind;
  d.blocks = doc.family;
  return d;
}

json tower_report_json(const TowerReport& rep) {
  json j;
  j["t"] = rep.t;
  j["r"] = rep.r;
  j["n"] = rep.n;
  j["count_geq_t"] = rep.count_geq_t.get_str();
  j["count_total"] = rep.count_total.get_str();
  j["formula_value"] = fraction_string(rep.formula_value);
  j["ratio"] = fraction_string(rep.ratio);
  j["ratio_decimal"] = decimal_string(rep.ratio);
  if (!rep.verification.empty()) j["verification"] = rep.verification;
  return j;
}

json three_series_json(const ThreeSeriesReport& rep) {
  return {{"r", rep.r},
          {"n", rep.n},
          {"bracket", fraction_string(rep.bracket)},
          {"bracket_decimal", decimal_string(rep.bracket)},
          {"formula_geq3", fraction_string(rep.formula_geq3)},
          {"formula_total", fraction_string(rep.formula_total)},
          {"recursive_geq3", rep.recursive_geq3.get_str()},
          {"recursive_total", rep.recursive_total.get_str()},
          {"counts_agree", rep.counts_agree},
          {"claimed_constant_decimal", decimal_string(rep.claimed_constant)},
          {"bracket_limit_decimal", decimal_string(rep.bracket_limit)},
          {"constant_discrepancy", rep.constant_discrepancy}};
}

json obf_report_json(const BoundTable& table, int N) {
  const UpperLimit u = upper_limit_report(table, N);
  json log = json::array();
  for (const auto& c : table.frontier_log()) {
    if (c.n > N) break;
    log.push_back(json::array({c.n, c.critical}));
  }
  return {{"N", N},
          {"obf_N", fraction_string(u.obf_N)},
          {"ratio", fraction_string(u.ratio)},
          {"ratio_decimal", decimal_string(u.ratio)},
          {"tail", fraction_string(u.tail)},
          {"upper_limit", fraction_string(u.upper)},
          {"upper_limit_decimal", decimal_string(u.upper)},
          {"critical", table.frontier_at(N).critical_indices()},
          {"frontier_log", log}};
}

json search_report_json(const SearchResult& res, int t) {
  return {{"n", res.witness.ground_size()},
          {"t", t},
          {"size", res.size},
          {"exact", res.exact},
          {"nodes", res.nodes},
          {"witness", res.witness.to_lists()}};
}

json gap_report_json(const GapReport& rep) {
  json j = {{"n", rep.n},
            {"t", rep.t},
            {"construction", rep.construction.get_str()},
            {"search", rep.search},
            {"search_exact", rep.search_exact},
            {"holds", rep.holds}};
  j["obf"] = rep.obf ? json(fraction_string(*rep.obf)) : json(nullptr);
  return j;
}

}  // namespace laminar
