#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qbilliard/billiard.hpp"
#include "qbilliard/nodal.hpp"
#include "qbilliard/plane_wave.hpp"
#include "qbilliard/spectral_class.hpp"
#include "qbilliard/verify.hpp"

namespace py = pybind11;
using namespace qbilliard;

namespace {

std::string repr(const EigenfunctionSpec& s) {
  std::ostringstream os;
  os << "EigenfunctionSpec(" << to_string(s.kind) << ", " << to_string(s.family) << ", m="
     << s.qn.m << ", n=" << s.qn.n << ", energy=" << s.energy << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(qbilliard, m) {
  m.doc() = "Closed-form triangle billiard eigenstates, ladder operators and nodal domains";

  static py::exception<BilliardError> error(m, "BilliardError", PyExc_ValueError);
  // Raised with args (code, message), code being e.g. "INVALID_QN".
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BilliardError& e) {
      py::object args = py::make_tuple(std::string(to_string(e.code())), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::enum_<BilliardKind>(m, "BilliardKind")
      .value("ISO", BilliardKind::kRightIsosceles)
      .value("EQUI", BilliardKind::kEquilateral);
  py::enum_<SymmetryFamily>(m, "SymmetryFamily")
      .value("DEFAULT", SymmetryFamily::kDefault)
      .value("COS", SymmetryFamily::kCosine)
      .value("SIN", SymmetryFamily::kSine);
  py::enum_<Reduction>(m, "Reduction")
      .value("HALF_RE", Reduction::kHalfReal)
      .value("HALF_IM", Reduction::kHalfImag);

  py::class_<EigenfunctionSpec>(m, "EigenfunctionSpec")
      .def_readonly("kind", &EigenfunctionSpec::kind)
      .def_readonly("family", &EigenfunctionSpec::family)
      .def_property_readonly("m", [](const EigenfunctionSpec& s) { return s.qn.m; })
      .def_property_readonly("n", [](const EigenfunctionSpec& s) { return s.qn.n; })
      .def_readonly("energy", &EigenfunctionSpec::energy)
      .def("__eq__", [](const EigenfunctionSpec& a, const EigenfunctionSpec& b) { return a == b; })
      .def("__repr__", &repr);

  py::class_<PlaneWaveTerm>(m, "PlaneWaveTerm")
      .def_readonly("sign", &PlaneWaveTerm::sign)
      .def_readonly("a", &PlaneWaveTerm::a)
      .def_readonly("b", &PlaneWaveTerm::b)
      .def_readonly("shift_a", &PlaneWaveTerm::shift_a)
      .def_readonly("shift_b", &PlaneWaveTerm::shift_b);

  py::class_<PlaneWaveSum>(m, "PlaneWaveSum")
      .def_readonly("kind", &PlaneWaveSum::kind)
      .def_readonly("family", &PlaneWaveSum::family)
      .def_readonly("reduction", &PlaneWaveSum::reduction)
      .def_readonly("terms", &PlaneWaveSum::terms)
      .def("__eq__", [](const PlaneWaveSum& a, const PlaneWaveSum& b) { return a == b; });

  py::class_<EquivalenceClass>(m, "EquivalenceClass")
      .def_readonly("n", &EquivalenceClass::n)
      .def_readonly("k", &EquivalenceClass::k)
      .def_readonly("c", &EquivalenceClass::c)
      .def_property_readonly("modulus", &EquivalenceClass::modulus);

  py::class_<NodalReport>(m, "NodalReport")
      .def_readonly("resolution", &NodalReport::resolution)
      .def_readonly("domain_count", &NodalReport::domain_count)
      .def_readonly("domain_sizes", &NodalReport::domain_sizes)
      .def_readonly("resolution_suspect", &NodalReport::resolution_suspect);

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("h", &ResidualReport::h)
      .def_readonly("points", &ResidualReport::points)
      .def_readonly("max_relative_residual", &ResidualReport::max_relative_residual)
      .def_readonly("order", &ResidualReport::order);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("evaluated", &CheckResult::evaluated)
      .def_readonly("failed", &CheckResult::failed)
      .def_readonly("worst", &CheckResult::worst)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def_property_readonly("passed", &CheckResult::passed);

  py::class_<SuiteReport>(m, "SuiteReport")
      .def_readonly("checks", &SuiteReport::checks)
      .def_readonly("total_evaluated", &SuiteReport::total_evaluated)
      .def_readonly("vacuous", &SuiteReport::vacuous)
      .def_property_readonly("passed", &SuiteReport::passed)
      .def("__str__", &format_report);

  m.def("make_state", &make_state, py::arg("kind"), py::arg("family"), py::arg("m"), py::arg("n"));
  m.def("eval_point",
        [](const EigenfunctionSpec& s, double x, double y) { return eval_point(s, {x, y}); },
        py::arg("spec"), py::arg("x"), py::arg("y"));
  m.def("contains", [](BilliardKind kind, double x, double y) { return contains(kind, {x, y}); },
        py::arg("kind"), py::arg("x"), py::arg("y"));

  m.def("plane_wave_rep", &plane_wave_rep, py::arg("spec"));
  m.def("ladder_shift", &ladder_shift, py::arg("sum"), py::arg("p"));
  m.def("reduce", [](const PlaneWaveSum& s, double x, double y) { return reduce(s, {x, y}); },
        py::arg("sum"), py::arg("x"), py::arg("y"));
  m.def("canonical_state_of", &canonical_state_of, py::arg("sum"));

  m.def("class_index", &class_index, py::arg("spec"));
  m.def("lowest_in_class", &lowest_in_class, py::arg("kind"), py::arg("family"), py::arg("n"),
        py::arg("c"));
  m.def("tower", &tower, py::arg("kind"), py::arg("family"), py::arg("n"), py::arg("c"),
        py::arg("count"));
  m.def("step", &step, py::arg("spec"), py::arg("p"));

  m.def("nodal_report", &nodal_report, py::arg("spec"), py::arg("resolution") = 512,
        py::call_guard<py::gil_scoped_release>());

  m.def("helmholtz_convergence", &helmholtz_convergence, py::arg("spec"), py::arg("h") = 1e-3);
  m.def("boundary_residual",
        py::overload_cast<const EigenfunctionSpec&, int>(&boundary_residual), py::arg("spec"),
        py::arg("count") = 1000);
  m.def("ladder_identity_check", &ladder_identity_check, py::arg("spec"), py::arg("p"),
        py::arg("resolution") = 201);
  m.def(
      "run_suite",
      [](BilliardKind kind, SymmetryFamily family, int n_max, int m_span, int p_max) {
        SuiteRanges ranges;
        ranges.n_max = n_max;
        ranges.m_span = m_span;
        ranges.p_max = p_max;
        return run_suite(kind, family, ranges);
      },
      py::arg("kind"), py::arg("family"), py::arg("n_max") = 6, py::arg("m_span") = 12,
      py::arg("p_max") = 3, py::call_guard<py::gil_scoped_release>());
}
