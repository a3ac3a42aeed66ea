// Copyright 2026 The trispec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trispec/cli.hpp"
#include "trispec/eig.hpp"
#include "trispec/experiments.hpp"
#include "trispec/geometry.hpp"
#include "trispec/json_io.hpp"
#include "trispec/laurent.hpp"
#include "trispec/numrange.hpp"
#include "trispec/witness.hpp"

namespace py = pybind11;
using namespace trispec;

PYBIND11_MODULE(_trispec, m) {
  m.doc() = "Numerical ranges and spectra of tridiagonal operators over symbol sequences";

  py::register_exception<WitnessError>(m, "WitnessError", PyExc_RuntimeError);

  py::class_<SymbolSequence>(m, "SymbolSequence")
      .def(py::init([](const std::string& text) { return SymbolSequence::parse(text); }), py::arg("spec"))
      .def("entry", &SymbolSequence::entry, py::arg("k"))
      .def("window", &SymbolSequence::window, py::arg("i"), py::arg("j"))
      .def("shift", &SymbolSequence::shift, py::arg("n"))
      .def_property_readonly("text", &SymbolSequence::text)
      .def_property_readonly("shift_offset", &SymbolSequence::shift_offset)
      .def_property_readonly("alphabet", [](const SymbolSequence& s) { return s.alphabet().symbols(); })
      .def("__repr__", [](const SymbolSequence& s) { return "SymbolSequence('" + s.text() + "')"; });

  py::class_<SupportedVector>(m, "SupportedVector")
      .def(py::init<std::int64_t, std::vector<Complex>>(), py::arg("offset"), py::arg("values"))
      .def_property_readonly("offset", &SupportedVector::offset)
      .def_property_readonly("values", &SupportedVector::values)
      .def("norm", &SupportedVector::norm)
      .def("normalized", &SupportedVector::normalized)
      .def("shifted", &SupportedVector::shifted, py::arg("k"));

  py::class_<TridiagMatrix>(m, "TridiagMatrix")
      .def_readonly("diag", &TridiagMatrix::diag)
      .def_readonly("sub", &TridiagMatrix::sub)
      .def_readonly("sup", &TridiagMatrix::sup)
      .def_property_readonly("size", &TridiagMatrix::size)
      .def("dense", &TridiagMatrix::dense)
      .def("to_json", [](const TridiagMatrix& t) { return dump(to_json(t)); });

  m.def("rayleigh", &rayleigh, py::arg("seq"), py::arg("x"));
  m.def(
      "truncate",
      [](const SymbolSequence& s, std::int64_t n, bool periodic) {
        return truncate(s, n, periodic ? Boundary::Periodic : Boundary::Open);
      },
      py::arg("seq"), py::arg("n"), py::arg("periodic") = false);
  m.def(
      "section",
      [](const SymbolSequence& s, std::int64_t first, std::size_t size, bool periodic) {
        return section(s, first, size, periodic ? Boundary::Periodic : Boundary::Open);
      },
      py::arg("seq"), py::arg("first"), py::arg("size"), py::arg("periodic") = false);

  py::class_<RangePolygon>(m, "RangePolygon")
      .def_readonly("angles", &RangePolygon::angles)
      .def_readonly("support_values", &RangePolygon::support_values)
      .def_readonly("inner_vertices", &RangePolygon::inner_vertices)
      .def_readonly("hull", &RangePolygon::hull)
      .def("outer_contains", &RangePolygon::outer_contains, py::arg("z"), py::arg("slack") = 0.0);
  m.def(
      "range_polygon",
      [](const TridiagMatrix& t, int angles, bool adaptive) {
        RangeOptions o;
        o.angles = angles;
        o.adaptive = adaptive;
        return range_polygon(t, o);
      },
      py::arg("matrix"), py::arg("angles") = 360, py::arg("adaptive") = true);
  m.def("hausdorff", [](const std::vector<Complex>& p, const std::vector<Complex>& q) { return hausdorff(p, q); });

  m.def("symm_tridiag_eigs", [](const std::vector<double>& d, const std::vector<double>& e) {
    return symm_tridiag_eigs(RealSymTridiag{d, e});
  });
  m.def("smallest_singular_value", &smallest_singular_value, py::arg("matrix"), py::arg("z"));

  m.def("gamma_contains", &gamma_contains, py::arg("z"), py::arg("tol") = 1e-9);
  m.def("gamma_boundary_samples", &gamma_boundary_samples, py::arg("m"));
  m.def("convex_hull", [](const std::vector<Complex>& p) { return convex_hull(p); });

  py::class_<WitnessVector>(m, "WitnessVector")
      .def_readonly("vector", &WitnessVector::vector)
      .def_readonly("target", &WitnessVector::target)
      .def_property_readonly("kind", [](const WitnessVector& w) { return to_string(w.kind); })
      .def_property_readonly("k0", [](const WitnessVector& w) { return w.params.k0; })
      .def_property_readonly("t0", [](const WitnessVector& w) { return w.params.t0; })
      .def_property_readonly("j0", [](const WitnessVector& w) { return w.params.j0; })
      .def("to_json", [](const WitnessVector& w) { return dump(to_json(w)); });
  m.def("choose_k0", &choose_k0, py::arg("r"));
  m.def("solve_t0", &solve_t0, py::arg("r"), py::arg("k0"));
  m.def("run_witness", &run_witness, py::arg("seq"), py::arg("lam"), py::arg("symbol") = 0,
        py::arg("N") = kDefaultWitnessWindow);
  m.def("disk_witness", &disk_witness, py::arg("lam"), py::arg("tol") = 1e-12);
  m.def("convex_witness", &convex_witness, py::arg("seq"), py::arg("z"), py::arg("N") = kDefaultWitnessWindow);

  m.def("symbol_curve", [](Complex a, int n) { return symbol_curve(a, n).samples; }, py::arg("a"), py::arg("m"));
  m.def("periodic_spectrum", [](const std::vector<Complex>& w, int n) { return periodic_spectrum(w, n).points; },
        py::arg("word"), py::arg("m"));
  m.def("constants_hull",
        [](const std::vector<Complex>& alphabet, int n) { return constants_hull(Alphabet(alphabet), n); },
        py::arg("alphabet"), py::arg("m"));

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command; returns (exit_code, stdout, stderr).");
}
