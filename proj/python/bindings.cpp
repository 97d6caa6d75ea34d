// Copyright 2026 The qutrit-resources Authors
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

#include "qres/app.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qres;

namespace {

DensityMatrix to_state(const ComplexMatrix& m) { return DensityMatrix::from_matrix(m); }

EvolutionMode parse_mode(const std::string& name) {
  if (name == "lindblad") return EvolutionMode::lindblad;
  if (name == "unitary") return EvolutionMode::unitary;
  throw DomainError("mode must be 'lindblad' or 'unitary'");
}

py::array_t<Complex> stack(const std::vector<DensityMatrix>& states) {
  const py::ssize_t n = static_cast<py::ssize_t>(states.size());
  const py::ssize_t d = states.empty() ? 0 : states.front().dim();
  py::array_t<Complex> out({n, d, d});
  auto view = out.mutable_unchecked<3>();
  for (py::ssize_t k = 0; k < n; ++k)
    for (py::ssize_t i = 0; i < d; ++i)
      for (py::ssize_t j = 0; j < d; ++j) view(k, i, j) = states[k].matrix()(i, j);
  return out;
}

py::dict series_dict(const MeasureSeries& s) {
  py::dict d;
  d["tau"] = s.tau;
  d["log_negativity"] = s.log_negativity;
  d["l1_coherence"] = s.l1_coherence;
  d["trace_distance"] = s.trace_distance_to_initial;
  d["fidelity"] = s.fidelity_to_initial;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two capacitively coupled transmon qutrits in Markovian baths";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "Error");

  py::class_<CircuitParams>(m, "CircuitParams")
      .def(py::init<>())
      .def_readwrite("e_c", &CircuitParams::e_c)
      .def_readwrite("e_j", &CircuitParams::e_j)
      .def_readwrite("gamma", &CircuitParams::gamma)
      .def_readwrite("fock_dim", &CircuitParams::fock_dim)
      .def_property(
          "basis", [](const CircuitParams& p) { return p.basis == BasisMode::numeric ? "numeric" : "perturbative"; },
          [](CircuitParams& p, const std::string& v) {
            if (v == "numeric")
              p.basis = BasisMode::numeric;
            else if (v == "perturbative")
              p.basis = BasisMode::perturbative;
            else
              throw DomainError("basis must be 'numeric' or 'perturbative'");
          })
      .def_property_readonly("omega0", &CircuitParams::omega0)
      .def_property_readonly("n_zpf", &CircuitParams::n_zpf)
      .def_property_readonly("phi_zpf", &CircuitParams::phi_zpf);

  py::class_<BathParams>(m, "BathParams")
      .def(py::init<>())
      .def_readwrite("kappa", &BathParams::kappa)
      .def_readwrite("beta", &BathParams::beta)
      .def_readwrite("cutoff", &BathParams::cutoff)
      .def_static("defaults", &BathParams::defaults, py::arg("omega01"));

  m.def("spectral_density", &spectral_density, py::arg("omega"), py::arg("params"), py::arg("omega01"));
  m.def("transition_rate", &transition_rate, py::arg("omega"), py::arg("params"), py::arg("omega01"));

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def("set", &RunConfig::set, py::arg("key"), py::arg("value"))
      .def("validate", &RunConfig::validate)
      .def("entries", &RunConfig::entries)
      .def_readwrite("gamma", &RunConfig::gamma)
      .def_readwrite("t_max", &RunConfig::t_max)
      .def_readwrite("dt", &RunConfig::dt)
      .def_readwrite("stride", &RunConfig::stride)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("initial_state", &RunConfig::initial_state)
      .def("circuit", &RunConfig::circuit);

  m.def("parse_config_text", &parse_config_text, py::arg("text"));
  m.def(
      "initial_state", [](const RunConfig& c) { return initial_state(c).matrix(); }, py::arg("config"));

  py::class_<Setup>(m, "System")
      .def(py::init([](const RunConfig& c) { return build_setup(c); }), py::arg("config") = RunConfig{})
      .def_property_readonly("h_s", [](const Setup& s) { return s.system.h_s; })
      .def_property_readonly("energies", [](const Setup& s) { return RealVector(s.system.spectrum.values); })
      .def_property_readonly("omega01", [](const Setup& s) { return s.system.omega01; })
      .def_property_readonly("anharmonicity", [](const Setup& s) { return s.system.transmon.anharmonicity; })
      .def_property_readonly("bath1", [](const Setup& s) { return s.bath1; })
      .def_property_readonly("bath2", [](const Setup& s) { return s.bath2; })
      .def("liouvillian", [](const Setup& s) { return liouvillian_superoperator(s.system, s.channels); })
      .def(
          "rhs", [](const Setup& s, const ComplexMatrix& rho) { return gksl_rhs(rho, s.system, s.channels); },
          py::arg("rho"));

  m.def(
      "evolve",
      [](const Setup& s, const ComplexMatrix& rho0, double t_max, double dt, const std::string& mode, int stride) {
        EvolveOptions eo;
        eo.stride = stride;
        Trajectory t;
        {
          py::gil_scoped_release release;
          t = evolve(to_state(rho0), s.system, s.channels, t_max, dt, parse_mode(mode), eo);
        }
        py::dict d;
        d["tau"] = t.tau;
        d["states"] = stack(t.states);
        d["trace_deviation"] = t.trace_deviation;
        d["min_eigenvalue"] = t.min_eigenvalue;
        d["substeps"] = t.substeps;
        return d;
      },
      py::arg("system"), py::arg("rho0"), py::arg("t_max"), py::arg("dt") = 1e-3, py::arg("mode") = "lindblad",
      py::arg("stride") = 10);

  m.def(
      "steady_state", [](const Setup& s) { return steady_state(s.system, s.channels).matrix(); }, py::arg("system"));

  m.def(
      "simulate",
      [](const RunConfig& c) {
        SimulationOutput out;
        {
          py::gil_scoped_release release;
          out = run_simulate(c, "");
        }
        py::dict d = series_dict(out.series);
        d["invariants_ok"] = out.invariants_ok;
        return d;
      },
      py::arg("config"));

  m.def(
      "generating_power",
      [](const std::vector<double>& tau, const std::vector<double>& ln, double horizon) {
        MeasureSeries s;
        s.tau = tau;
        s.log_negativity = ln;
        const PowerReport r = generating_power(s, horizon);
        py::dict d;
        d["e_value"] = r.e_value;
        d["ln_max"] = r.ln_max;
        d["threshold"] = r.threshold;
        d["intervals"] = r.intervals;
        return d;
      },
      py::arg("tau"), py::arg("log_negativity"), py::arg("horizon"));

  m.def(
      "sample_separable",
      [](std::uint64_t seed, const std::string& kind, int mix_terms) {
        const auto k = parse_sample_kind(kind);
        if (!k) throw DomainError("unknown sample kind '" + kind + "'");
        return sample_separable(seed, *k, mix_terms).state.matrix();
      },
      py::arg("seed"), py::arg("kind") = "pure_product_qubit", py::arg("mix_terms") = 2);

  m.def(
      "log_negativity", [](const ComplexMatrix& rho) { return log_negativity(to_state(rho)); }, py::arg("rho"));
  m.def(
      "negativity", [](const ComplexMatrix& rho) { return negativity(to_state(rho)); }, py::arg("rho"));
  m.def(
      "l1_coherence", [](const ComplexMatrix& rho) { return l1_coherence(to_state(rho)); }, py::arg("rho"));
  m.def(
      "trace_distance",
      [](const ComplexMatrix& a, const ComplexMatrix& b) { return trace_distance(to_state(a), to_state(b)); },
      py::arg("rho"), py::arg("sigma"));
  m.def(
      "fidelity", [](const ComplexMatrix& a, const ComplexMatrix& b) { return fidelity(to_state(a), to_state(b)); },
      py::arg("rho"), py::arg("sigma"));
}
