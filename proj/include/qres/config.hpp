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

#pragma once

#include "qres/bath.hpp"
#include "qres/circuit.hpp"
#include "qres/dynamics.hpp"
#include "qres/errors.hpp"
#include "qres/state.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qres {

/// Process exit codes; each configuration failure class has its own.
enum class ExitCode : int {
  ok = 0,
  missing_file = 2,
  syntax = 3,
  invalid_value = 4,
  output = 5,
  integration = 6,
  invariant = 7,
};

class ConfigError : public Error {
 public:
  ConfigError(ExitCode code, const std::string& what) : Error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

/// Every knob of a run. Rates are relative to omega01 of the coupled system,
/// energies to E_C, times to hbar/E_C.
struct RunConfig {
  double ej_over_ec = 100.0;
  double gamma = 0.2;
  int fock_dim = 10;
  BasisMode basis = BasisMode::numeric;
  double kappa1 = 1.0 / 20.0;  // x omega01
  double kappa2 = 1.0 / 20.0;
  double beta1 = 5.0;  // x 1/(hbar omega01)
  double beta2 = 5.0;
  double cutoff_factor = 50.0;  // x omega01
  double t_max = 100.0;
  double dt = 1e-3;
  std::string initial_state = "00";
  std::vector<Complex> custom_amplitudes;
  std::string state_file;
  EvolutionMode mode = EvolutionMode::lindblad;
  std::uint64_t seed = 2023;
  int stride = 10;
  /// Optional capacitive description of the coupling; when all three are
  /// set gamma is derived from them.
  std::optional<double> c_g, c_1, c_2;
  double capacitance_scale = CapacitanceUnits{}.scale;

  /// Sets one field from its textual key/value form. Throws ConfigError.
  void set(const std::string& key, const std::string& value);
  void validate() const;

  /// Ordered key/value pairs, exact enough to reproduce the run.
  std::vector<std::pair<std::string, std::string>> entries() const;

  CircuitParams circuit() const;
  /// Absolute bath parameters for bath 1 or 2 given the system's omega01.
  BathParams bath(int index, double omega01) const;
};

const std::vector<std::string>& config_keys();

/// Parses `key = value` lines; '#' starts a comment. Unknown keys are errors.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Reconstructs the RunConfig recorded in the '#'-prefixed header of an
/// output file.
RunConfig read_metadata(const std::string& path);

/// Resolves the named or explicit initial state.
DensityMatrix initial_state(const RunConfig& config);

/// "1", "-0.5", "0.3+0.2i", "-1e-3-2j", "0.7i"
Complex parse_complex(const std::string& text);

std::string format_double(double x);

}  // namespace qres
