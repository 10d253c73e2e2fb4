#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "laminar/bounds.hpp"
#include "laminar/construct.hpp"
#include "laminar/design.hpp"
#include "laminar/search.hpp"
#include "laminar/setfam.hpp"

namespace py = pybind11;
using namespace laminar;

namespace {

using Lists = std::vector<std::vector<int>>;

py::object to_fraction(const Rat& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(fraction_string(r));
}

py::object to_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

Family family(std::size_t n, const Lists& sets) { return Family::from_lists(n, sets); }

py::dict design_dict(const Design& d) {
  py::dict out;
  out["t"] = d.t;
  out["v"] = d.v;
  out["lambda"] = d.lambda;
  out["kind"] = to_string(d.kind);
  out["blocks"] = d.blocks.to_lists();
  return out;
}

Design design_from(int t, std::size_t v, int lambda, const Lists& blocks) {
  Design d;
  d.t = t;
  d.v = v;
  d.lambda = lambda;
  d.blocks = Family::from_lists(v, blocks);
  return d;
}

py::dict tower_dict(const TowerReport& rep) {
  py::dict out;
  out["t"] = rep.t;
  out["r"] = rep.r;
  out["n"] = rep.n;
  out["count_geq_t"] = to_int(rep.count_geq_t);
  out["count_total"] = to_int(rep.count_total);
  out["formula_value"] = to_fraction(rep.formula_value);
  out["ratio"] = to_fraction(rep.ratio);
  out["verification"] = rep.verification;
  if (rep.family) out["family"] = rep.family->to_lists();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "t-laminar set families: constructions, verification, exact search and LP bounds";

  m.def("is_t_laminar", [](std::size_t n, const Lists& sets, int t) { return is_t_laminar(family(n, sets), t); },
        py::arg("n"), py::arg("sets"), py::arg("t"));
  m.def(
      "laminarity_witness",
      [](std::size_t n, const Lists& sets, int t) -> py::object {
        const auto w = laminarity_witness(family(n, sets), t);
        if (!w) return py::none();
        return py::make_tuple(w->first.points(), w->second.points());
      },
      py::arg("n"), py::arg("sets"), py::arg("t"));
  m.def(
      "contains_forbidden",
      [](std::size_t n, const Lists& sets, int t) {
        return contains_config(incidence_matrix(family(n, sets)), forbidden_matrix(t));
      },
      py::arg("n"), py::arg("sets"), py::arg("t"));
  m.def("unique_chain_check", [](std::size_t n, const Lists& sets, int t) { return unique_chain_check(family(n, sets), t); },
        py::arg("n"), py::arg("sets"), py::arg("t"));

  m.def("affine_plane", [](std::uint64_t q) { return design_dict(affine_plane(q)); }, py::arg("q"));
  m.def("projective_plane", [](std::uint64_t q) { return design_dict(projective_plane(q)); }, py::arg("q"));
  m.def("circle_geometry", [](std::uint64_t q) { return design_dict(circle_geometry(q)); }, py::arg("q"));
  m.def("greedy_packing", [](std::size_t n, std::size_t k, int t, std::uint64_t seed) {
    return design_dict(greedy_packing(n, k, t, seed));
  }, py::arg("n"), py::arg("k"), py::arg("t"), py::arg("seed") = 1);
  m.def("is_design", [](int t, std::size_t v, int lambda, const Lists& blocks) {
    return is_design(design_from(t, v, lambda, blocks));
  }, py::arg("t"), py::arg("v"), py::arg("lambda_"), py::arg("blocks"));

  m.def("fano_tower", [](int r, bool materialize) {
    TowerOptions o;
    o.materialize = materialize;
    return tower_dict(fano_tower(r, o));
  }, py::arg("r"), py::arg("materialize") = false);
  m.def("circle_tower", [](int r, bool materialize) {
    TowerOptions o;
    o.materialize = materialize;
    return tower_dict(circle_tower(r, o));
  }, py::arg("r"), py::arg("materialize") = false);
  m.def("seven_series", [](int r) { return to_fraction(seven_series(r)); }, py::arg("r"));
  m.def("three_series_report", [](int r) {
    const ThreeSeriesReport s = three_series_report(r);
    py::dict out;
    out["r"] = s.r;
    out["n"] = s.n;
    out["bracket"] = to_fraction(s.bracket);
    out["formula_geq3"] = to_fraction(s.formula_geq3);
    out["formula_total"] = to_fraction(s.formula_total);
    out["recursive_geq3"] = to_int(s.recursive_geq3);
    out["recursive_total"] = to_int(s.recursive_total);
    out["counts_agree"] = s.counts_agree;
    out["claimed_constant"] = to_fraction(s.claimed_constant);
    out["bracket_limit"] = to_fraction(s.bracket_limit);
    out["constant_discrepancy"] = s.constant_discrepancy;
    return out;
  }, py::arg("r"));

  py::class_<BoundTable>(m, "BoundTable")
      .def_property_readonly("max_n", &BoundTable::max_n)
      .def("obf", [](const BoundTable& t, int n) { return to_fraction(t.obf(n)); }, py::arg("n"))
      .def("argmax", &BoundTable::argmax, py::arg("n"))
      .def("critical_indices", [](const BoundTable& t, int n) { return t.frontier_at(n).critical_indices(); },
           py::arg("n"))
      .def("frontier_log", [](const BoundTable& t) {
        std::vector<std::pair<int, std::vector<int>>> out;
        for (const auto& c : t.frontier_log()) out.emplace_back(c.n, c.critical);
        return out;
      })
      .def("extend", [](BoundTable& t, int N, bool prefilter) {
        ObfOptions o;
        o.prefilter = prefilter;
        py::gil_scoped_release release;
        extend_table(t, N, o);
      }, py::arg("N"), py::arg("prefilter") = true)
      .def("upper_limit", [](const BoundTable& t, int N) {
        const UpperLimit u = upper_limit_report(t, N);
        py::dict out;
        out["N"] = u.N;
        out["obf_N"] = to_fraction(u.obf_N);
        out["ratio"] = to_fraction(u.ratio);
        out["tail"] = to_fraction(u.tail);
        out["upper"] = to_fraction(u.upper);
        return out;
      }, py::arg("N"))
      .def("save", [](const BoundTable& t, const std::string& path) { save_cache(t, path); }, py::arg("path"));
  m.def("obf_table", [](int N, bool prefilter) {
    ObfOptions o;
    o.prefilter = prefilter;
    py::gil_scoped_release release;
    return obf_table(N, o);
  }, py::arg("N"), py::arg("prefilter") = true);
  m.def("load_cache", &load_cache, py::arg("path"));
  m.def("lp_dual_value", [](int n, int mm, const BoundTable& t) { return to_fraction(lp_dual_value(n, mm, t)); },
        py::arg("n"), py::arg("m"), py::arg("table"));
  m.def("lp_primal_value", [](int n, int mm, const BoundTable& t) { return to_fraction(lp_primal_oracle(n, mm, t).value); },
        py::arg("n"), py::arg("m"), py::arg("table"));
  m.def("projective_series", [](int terms) { return to_fraction(projective_series(terms)); }, py::arg("terms"));

  m.def("max_laminar_exact", [](std::size_t n, int t, double budget, bool f_convention) {
    SearchOptions o;
    o.budget_seconds = budget;
    o.convention = f_convention ? SizeConvention::f_convention : SizeConvention::at_least_t;
    SearchResult r;
    {
      py::gil_scoped_release release;
      r = max_laminar_exact(n, t, o);
    }
    py::dict out;
    out["size"] = r.size;
    out["exact"] = r.exact;
    out["witness"] = r.witness.to_lists();
    return out;
  }, py::arg("n"), py::arg("t") = 2, py::arg("budget") = 60.0, py::arg("f_convention") = true);
  m.def("max_laminar_classic", [](std::size_t n) { return max_laminar_classic(n); }, py::arg("n"));

  py::register_exception<CacheError>(m, "CacheError", PyExc_ValueError);
  py::register_exception<ScaleError>(m, "ScaleError", PyExc_MemoryError);
}
