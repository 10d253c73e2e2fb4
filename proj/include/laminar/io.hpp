#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "laminar/bounds.hpp"
#include "laminar/construct.hpp"
#include "laminar/design.hpp"
#include "laminar/family.hpp"
#include "laminar/search.hpp"

namespace laminar {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  /// 1-based; 0 when the error is not tied to a line (JSON input).
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The (t, v, lambda, kind) header of a serialized design.
struct DesignHeader {
  int t = 2;
  std::size_t v = 0;
  int lambda = 1;
  DesignKind kind = DesignKind::design;
  friend bool operator==(const DesignHeader&, const DesignHeader&) = default;
};

struct FamilyDocument {
  Family family;
  std::optional<int> t;
  std::optional<DesignHeader> design;
  friend bool operator==(const FamilyDocument&, const FamilyDocument&) = default;
};

/// Text form:
///   # design t=2 v=7 lambda=1 kind=design      (designs only)
///   n=7 t=2
///   1 2 4
///   ...
/// Lines starting with '#' other than the design header are ignored, as are
/// blank lines.
FamilyDocument parse_family_text(std::istream& in);
void write_family_text(std::ostream& out, const FamilyDocument& doc);

/// {"n": 7, "t": 2, "sets": [[1,2,4], ...], "design": {...}}
FamilyDocument family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const FamilyDocument& doc);

/// Chooses JSON when the first non-blank character is '{'.
FamilyDocument parse_family(std::istream& in);
FamilyDocument read_family_file(const std::string& path);
void write_family_file(const std::string& path, const FamilyDocument& doc, bool json);

FamilyDocument design_document(const Design& d);
/// Throws ParseError when the document lacks a design header.
Design design_from_document(const FamilyDocument& doc);

nlohmann::json tower_report_json(const TowerReport& rep);
nlohmann::json three_series_json(const ThreeSeriesReport& rep);
nlohmann::json obf_report_json(const BoundTable& table, int N);
nlohmann::json search_report_json(const SearchResult& res, int t);
nlohmann::json gap_report_json(const GapReport& rep);

}  // namespace laminar
