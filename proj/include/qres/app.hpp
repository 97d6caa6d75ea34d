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

#include "qres/config.hpp"
#include "qres/measures.hpp"
#include "qres/power.hpp"

#include <string>
#include <vector>

namespace qres {

inline constexpr const char* kVersion = "0.1.0";

/// Physical objects derived from a RunConfig.
struct Setup {
  CompositeSystem system;
  BathParams bath1, bath2;
  ChannelSets channels;
};

Setup build_setup(const RunConfig& config);

/// Tolerances a trajectory must meet for a run to count as clean.
inline constexpr double kTraceInvariantTol = 1e-7;
inline constexpr double kPositivityInvariantTol = 1e-7;

bool trajectory_invariants_hold(const Trajectory& trajectory);

struct SimulationOutput {
  Trajectory trajectory;
  MeasureSeries series;
  bool invariants_ok = true;
};

/// Evolves the configured initial state and, when `out_path` is non-empty,
/// writes the measure time series with a metadata header.
SimulationOutput run_simulate(const RunConfig& config, const std::string& out_path);

struct SweepRow {
  double gamma = 0.0;
  double max_log_negativity = 0.0;
  double steady_log_negativity = 0.0;  // value at the end of the horizon
  double max_l1_coherence = 0.0;
  double steady_l1_coherence = 0.0;
  bool invariants_ok = true;
};

std::vector<SweepRow> run_sweep_gamma(const RunConfig& config, const std::vector<double>& gammas,
                                      const std::string& out_path, unsigned threads = 0);

struct OptimizeOutput {
  OptimizationResult result;
  PowerEvaluation best;
};

/// Random search over separable initial states plus a full dump of the
/// best trajectory. Either path may be empty to skip writing it.
OptimizeOutput run_optimize(const RunConfig& config, std::size_t n_samples, const std::vector<SampleKind>& kinds,
                            const std::string& report_path, const std::string& trajectory_path,
                            unsigned threads = 0);

/// Generating power of the configured initial state, with its trajectory.
PowerEvaluation run_eval_state(const RunConfig& config, const std::string& out_path);

/// Header used by every output file: '@' lines are run facts, the rest is
/// the RunConfig.
std::string metadata_header(const RunConfig& config, const std::string& command,
                            const std::vector<std::pair<std::string, std::string>>& extra = {});

}  // namespace qres
