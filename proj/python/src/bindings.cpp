#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hompoisson/catalog.hpp"
#include "hompoisson/cli.hpp"
#include "hompoisson/constructions.hpp"
#include "hompoisson/error.hpp"
#include "hompoisson/hom_power.hpp"
#include "hompoisson/report.hpp"
#include "hompoisson/spec_file.hpp"
#include "hompoisson/witnesses.hpp"

namespace py = pybind11;
using namespace hompoisson;

namespace {

using Rows = std::vector<std::vector<std::string>>;
using Entries = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::string>>;

py::object to_python(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object report(const CheckReport& r, const std::vector<std::string>& basis) { return to_python(report_to_json(r, basis)); }

Entries entries(const Trilinear& t) {
  Entries out;
  t.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    out.emplace_back(i, j, k, to_string(v));
  });
  return out;
}

Rows rows(const LinearMap& m) {
  Rows out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r].push_back(to_string(m.at(r, c)));
  return out;
}

LinearMap map_from_rows(const Rows& rows) {
  const std::size_t n = rows.size();
  std::vector<Rational> flat;
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionMismatch("matrix rows", n, row.size());
    for (const auto& s : row) flat.push_back(parse_rational(s));
  }
  return LinearMap::from_rows(n, std::move(flat));
}

CatalogParams params_from(const std::map<std::string, std::string>& raw) {
  CatalogParams out;
  for (const auto& [k, v] : raw) out.emplace(k, parse_rational(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification of Hom-Poisson algebras";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", error.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());
  py::register_exception<NotInvertible>(m, "NotInvertible", error.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());

  py::class_<HomAlgebra>(m, "HomAlgebra")
      .def_property_readonly("dim", &HomAlgebra::dim)
      .def_property_readonly("basis", &HomAlgebra::basis)
      .def("mu_entries", [](const HomAlgebra& a) { return entries(a.mu()); })
      .def("alpha_rows", [](const HomAlgebra& a) { return rows(a.alpha()); })
      .def("to_spec", [](const HomAlgebra& a) { return emit_spec_text(a); })
      .def("__eq__", [](const HomAlgebra& a, const HomAlgebra& b) { return a == b; });

  py::class_<HomPoissonAlgebra>(m, "HomPoissonAlgebra")
      .def_property_readonly("dim", &HomPoissonAlgebra::dim)
      .def_property_readonly("basis", &HomPoissonAlgebra::basis)
      .def_property_readonly("commutative", &HomPoissonAlgebra::commutative)
      .def("mu_entries", [](const HomPoissonAlgebra& a) { return entries(a.mu()); })
      .def("bracket_entries", [](const HomPoissonAlgebra& a) { return entries(a.bracket()); })
      .def("alpha_rows", [](const HomPoissonAlgebra& a) { return rows(a.alpha()); })
      .def("product_algebra", &HomPoissonAlgebra::product_algebra)
      .def("to_spec", [](const HomPoissonAlgebra& a) { return emit_spec_text(a); })
      .def("__eq__", [](const HomPoissonAlgebra& a, const HomPoissonAlgebra& b) { return a == b; });

  m.def("parse_spec", [](const std::string& text) -> py::object {
    AlgebraSpec spec = parse_spec_text(text);
    if (spec.kind == SpecKind::algebra) return py::cast(spec.product_algebra());
    return py::cast(std::move(spec.algebra));
  }, py::arg("text"));

  m.def("catalog", [](const std::string& name, const std::map<std::string, std::string>& params) {
    return build_catalog_algebra(name, params_from(params));
  }, py::arg("name"), py::arg("params") = std::map<std::string, std::string>{});
  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
  });
  m.def("matrix_algebra", &matrix_algebra, py::arg("n"));
  m.def("heisenberg_morphism", [](const std::string& a11, const std::string& a12, const std::string& a21,
                                  const std::string& a22, const std::string& a31, const std::string& a32) {
    return rows(heisenberg_morphism(parse_rational(a11), parse_rational(a12), parse_rational(a21),
                                    parse_rational(a22), parse_rational(a31), parse_rational(a32)));
  });

  m.def("check_hom_poisson", [](const HomPoissonAlgebra& a) { return report(check_hom_poisson(a), a.basis()); });
  m.def("check_multiplicative", [](const HomPoissonAlgebra& a) { return report(check_multiplicative(a), a.basis()); });
  m.def("check_admissible", [](const HomAlgebra& a) { return report(check_admissible(a), a.basis()); });
  m.def("check_hom_flexible", [](const HomAlgebra& a) { return report(check_hom_flexible(a), a.basis()); });
  m.def("check_hom_associative", [](const HomAlgebra& a) { return report(check_hom_associative(a), a.basis()); });
  m.def("check_morphism", [](const Rows& f, const HomPoissonAlgebra& a, const HomPoissonAlgebra& b, bool weak) {
    return report(check_morphism(map_from_rows(f), a, b, weak), a.basis());
  }, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("weak") = false);

  m.def("commutator_poisson", &commutator_poisson);
  m.def("twist", [](const HomPoissonAlgebra& a, const Rows& beta) { return twist(a, map_from_rows(beta)); });
  m.def("yau_twist", [](const HomPoissonAlgebra& a, const Rows& beta) { return yau_twist(a, map_from_rows(beta)); });
  m.def("tensor", &tensor);
  m.def("polarize", &polarize);
  m.def("depolarize", &depolarize);

  m.def("check_nth_power_assoc", [](const HomAlgebra& a, unsigned n) {
    return report(check_nth_power_assoc(a, n), a.basis());
  });
  m.def("check_criterion_34", [](const HomAlgebra& a) { return report(check_criterion_34(a), a.basis()); });

  m.def("run_witness", [](const std::string& name, const std::map<std::string, std::string>& params) {
    ReplayResult r = run_witness(name, params_from(params));
    py::dict out;
    out["name"] = r.name;
    out["passed"] = r.passed;
    py::dict values;
    for (const auto& [k, v] : r.values) values[py::str(k)] = v;
    out["values"] = values;
    py::list reports;
    for (const auto& rep : r.reports) reports.append(report(rep, r.basis));
    out["reports"] = reports;
    return out;
  }, py::arg("name"), py::arg("params") = std::map<std::string, std::string>{});

  m.def("run_command", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
