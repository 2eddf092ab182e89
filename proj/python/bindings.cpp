#include <pybind11/pybind11.h>

#include "qbundle/io.hpp"

namespace py = pybind11;
using namespace qb;

namespace {

// a builtin cover name or a JSON document
CoverDescription cover_arg(const std::string& s) {
  return s.find('{') == std::string::npos ? named_cover(s) : cover_from_json(s);
}

std::string one(const std::string& command, const Report& r) { return reports_to_json(command, {r}); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact differential calculi on finite quantum principal bundles. Every function returns a JSON string.";
  m.attr("SCHEMA") = kSchema;

  m.def("builtins", [] {
    Catalog c = builtins();
    Report r;
    r.title = "builtins";
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
      return s;
    };
    r.fact("groups", join(c.groups));
    r.fact("hopf", join(c.hopf));
    r.fact("matched-pairs", join(c.matched_pairs));
    r.fact("covers", join(c.covers));
    r.fact("ideal-families", join(c.ideal_families));
    return one("builtins", r);
  });
  m.def("hopf_check", [](const std::string& name) { return one("hopf", hopf_report(name, builtin_hopf(name))); },
        py::arg("name"));
  m.def("hopf_dump", [](const std::string& name) { return hopf_to_json(builtin_hopf(name)); }, py::arg("name"));
  m.def(
      "h1",
      [](const std::string& cover) {
        Report r;
        r.title = "Čech H¹";
        r.fact("H1", long(h1(nerve_from_cover(cover_arg(cover))).dim));
        return one("cohomology", r);
      },
      py::arg("cover"));
  m.def(
      "moduli",
      [](const std::string& cover, int order) {
        ModuliResult res = moduli_zero_curvature(nerve_from_cover(cover_arg(cover)), order);
        Report r;
        r.title = "flat μ_k connections";
        r.fact("gauge classes", long(res.classes));
        r.check("biconditional", res.biconditional);
        return one("cohomology", r);
      },
      py::arg("cover"), py::arg("order"));
  m.def("gamma_dim", [](const std::string& pair) { return one("bicross", gamma_space_report(pair)); },
        py::arg("pair"));
  m.def(
      "bicross_example",
      [](const std::string& g1, const std::string& g2) {
        Scalar a = parse_scalar(g1), b = parse_scalar(g2);
        return reports_to_json("bicross", {example_universal_fibre(a, b), example_zero_fibre(a, b)});
      },
      py::arg("gamma1"), py::arg("gamma2"));
  m.def(
      "bundle_suite", [](std::uint64_t seed, int count) { return one("bundle", trivial_bundle_suite(seed, count)); },
      py::arg("seed") = 20240601, py::arg("count") = 10);
  m.def(
      "qmonopole_dims",
      [](const std::string& family, int degree, int slack) {
        return one("qmonopole", qmonopole_dims(builtin_ideal_family(family), degree, slack));
      },
      py::arg("family"), py::arg("degree") = 6, py::arg("slack") = 2);
}
