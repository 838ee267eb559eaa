#include "rfisher/molecules.hpp"
#include "rfisher/quadrature.hpp"
#include "rfisher/relative_fisher.hpp"
#include "rfisher/report.hpp"
#include "rfisher/specfun.hpp"
#include "rfisher/systems.hpp"
#include "rfisher/wavefunctions.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rfisher;

namespace {

void export_specfun(py::module_& m) {
  py::class_<specfun::PolyEval>(m, "PolyEval")
      .def_readonly("value", &specfun::PolyEval::value)
      .def_readonly("derivative", &specfun::PolyEval::derivative)
      .def("__repr__", [](const specfun::PolyEval& p) {
        return "PolyEval(value=" + std::to_string(p.value) + ", derivative=" + std::to_string(p.derivative) + ")";
      });
  m.def("hermite", &specfun::hermite, py::arg("n"), py::arg("x"));
  m.def("assoc_laguerre", &specfun::assoc_laguerre, py::arg("n"), py::arg("alpha"), py::arg("x"));
  m.def("gegenbauer", &specfun::gegenbauer, py::arg("n"), py::arg("alpha"), py::arg("x"));
  m.def("ln_gamma", &specfun::ln_gamma, py::arg("x"));
}

void export_systems(py::module_& m) {
  py::enum_<Space>(m, "Space").value("position", Space::position).value("momentum", Space::momentum);
  py::enum_<SystemKind>(m, "SystemKind")
      .value("qho1d", SystemKind::qho1d)
      .value("qho3d", SystemKind::qho3d)
      .value("hydrogen", SystemKind::hydrogen)
      .value("php", SystemKind::php);

  py::class_<Pseudoharmonic>(m, "Pseudoharmonic")
      .def(py::init([](double mu, double De, double re) { return Pseudoharmonic{mu, De, re}; }),
           py::arg("mu"), py::arg("De"), py::arg("re"))
      .def_readonly("mu", &Pseudoharmonic::mu)
      .def_readonly("De", &Pseudoharmonic::De)
      .def_readonly("re", &Pseudoharmonic::re);

  py::class_<QuantumState>(m, "QuantumState")
      .def_static("qho1d", &QuantumState::qho1d, py::arg("omega"), py::arg("n"), py::arg("space"))
      .def_static("qho3d", &QuantumState::qho3d, py::arg("omega"), py::arg("nr"), py::arg("l"), py::arg("space"))
      .def_static("hydrogenic", &QuantumState::hydrogenic, py::arg("Z"), py::arg("n"), py::arg("l"), py::arg("space"))
      .def_static("pseudoharmonic", &QuantumState::pseudoharmonic, py::arg("params"), py::arg("nr"), py::arg("l"),
                  py::arg("space"))
      .def_readonly("space", &QuantumState::space)
      .def_readonly("n", &QuantumState::n)
      .def_readonly("l", &QuantumState::l)
      .def_property_readonly("kind", &QuantumState::kind)
      .def("radial_nodes", &QuantumState::radial_nodes)
      .def("in_space", &QuantumState::in_space)
      .def("__eq__", [](const QuantumState& a, const QuantumState& b) { return a == b; })
      .def("__repr__", [](const QuantumState& s) {
        return "QuantumState(" + to_string(s.kind()) + ", " + to_string(s.space) + ", " + numbers_label(s) + ", " +
               params_digest(s.system) + ")";
      });

  py::class_<PhpDerived>(m, "PhpDerived")
      .def_readonly("gamma_l", &PhpDerived::gamma_l)
      .def_readonly("lambda_", &PhpDerived::lambda);
  m.def("reference_state", &reference_state, py::arg("target"));
  m.def("php_derived", &php_derived, py::arg("params"), py::arg("l"));
  m.def("hydrogen_energy", &hydrogen_energy, py::arg("Z"), py::arg("n"));
}

void export_numerics(py::module_& m) {
  py::enum_<quadrature::Domain>(m, "Domain")
      .value("half_line", quadrature::Domain::half_line)
      .value("full_line", quadrature::Domain::full_line);
  py::class_<quadrature::QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("domain", &quadrature::QuadratureSpec::domain)
      .def_readwrite("rel_tol", &quadrature::QuadratureSpec::rel_tol)
      .def_readwrite("abs_tol", &quadrature::QuadratureSpec::abs_tol)
      .def_readwrite("max_refinements", &quadrature::QuadratureSpec::max_refinements)
      .def_readwrite("scale", &quadrature::QuadratureSpec::scale)
      .def_readwrite("initial_panels", &quadrature::QuadratureSpec::initial_panels)
      .def_readwrite("max_evaluations", &quadrature::QuadratureSpec::max_evaluations);
  py::class_<quadrature::QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &quadrature::QuadratureResult::value)
      .def_readonly("error_estimate", &quadrature::QuadratureResult::error_estimate)
      .def_readonly("evaluations", &quadrature::QuadratureResult::evaluations)
      .def_readonly("converged", &quadrature::QuadratureResult::converged);
  m.def(
      "integrate",
      [](const std::function<double(double)>& f, const quadrature::QuadratureSpec& spec) {
        return quadrature::integrate(f, spec);
      },
      py::arg("f"), py::arg("spec") = quadrature::QuadratureSpec{});

  py::class_<WaveSample>(m, "WaveSample")
      .def_readonly("value", &WaveSample::value)
      .def_readonly("derivative", &WaveSample::derivative);
  m.def("eval_1d_qho", &eval_1d_qho, py::arg("n"), py::arg("omega"), py::arg("space"), py::arg("x"));
  m.def("eval_radial", &eval_radial, py::arg("state"), py::arg("s"));
  m.def("normalization_defect", &normalization_defect, py::arg("state"),
        py::arg("spec") = quadrature::QuadratureSpec{});

  py::class_<IRResult>(m, "IRResult")
      .def_readonly("closed_form", &IRResult::closed_form)
      .def_readonly("numeric", &IRResult::numeric)
      .def_readonly("abs_diff", &IRResult::abs_diff)
      .def_readonly("rel_diff", &IRResult::rel_diff)
      .def_readonly("quadrature", &IRResult::quadrature);
  py::class_<IrMaximum>(m, "IrMaximum")
      .def_readonly("n_star", &IrMaximum::n_star)
      .def_readonly("value", &IrMaximum::value);
  py::class_<HydrogenAsymptotics>(m, "HydrogenAsymptotics")
      .def_readonly("ir_position", &HydrogenAsymptotics::ir_position)
      .def_readonly("ir_momentum", &HydrogenAsymptotics::ir_momentum);

  m.def("closed_form_ir", &closed_form_ir, py::arg("target"));
  m.def("numeric_ir", &numeric_ir, py::arg("target"), py::arg("spec") = quadrature::QuadratureSpec{});
  m.def(
      "ir_spacing",
      [](const QuantumState& like, Space space) { return ir_spacing(like.system, space); },
      py::arg("state"), py::arg("space"), "Spacing for the system of `state`.");
  m.def("ir_product", &ir_product, py::arg("target"));
  m.def("hydrogen_ir_max", &hydrogen_ir_max, py::arg("l"));
  m.def("hydrogen_asymptotics", &hydrogen_asymptotics, py::arg("n"), py::arg("l"), py::arg("Z"));
}

void export_molecules(py::module_& m) {
  py::class_<MoleculeRecord>(m, "MoleculeRecord")
      .def_readonly("name", &MoleculeRecord::name)
      .def_readonly("state_label", &MoleculeRecord::state_label)
      .def_readonly("mu_amu", &MoleculeRecord::mu_amu)
      .def_readonly("de_ev", &MoleculeRecord::de_ev)
      .def_readonly("re_angstrom", &MoleculeRecord::re_angstrom)
      .def_readonly("source", &MoleculeRecord::source);
  py::enum_<ConstantsProfile>(m, "ConstantsProfile")
      .value("paper", ConstantsProfile::paper)
      .value("modern", ConstantsProfile::modern);
  m.def("registry", &registry, py::return_value_policy::copy);
  m.def(
      "find_molecule", [](const std::string& name) { return find_molecule(name); }, py::arg("name"));
  m.def("to_atomic_units", &to_atomic_units, py::arg("record"), py::arg("profile") = ConstantsProfile::paper);
  m.def(
      "table3_csv", [](int digits) { return report::to_csv(report::table3(digits)); }, py::arg("digits") = 6);
  m.def(
      "table1_csv", [](int digits) { return report::to_csv(report::table1(digits)); }, py::arg("digits") = 12);
}

} // namespace

PYBIND11_MODULE(_rfisher, m) {
  m.doc() = "Relative Fisher information of exactly solvable quantum systems";
  py::register_exception<UnsupportedFamily>(m, "UnsupportedFamily", PyExc_ValueError);
  py::register_exception<MoleculeNotFound>(m, "MoleculeNotFound", PyExc_KeyError);
  export_specfun(m);
  export_systems(m);
  export_numerics(m);
  export_molecules(m);
}
