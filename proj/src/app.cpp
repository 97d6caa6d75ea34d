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

#include "parallel.hpp"

#include <fstream>
#include <sstream>

namespace qres {
namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError(ExitCode::output, "cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw ConfigError(ExitCode::output, "failed writing output file: " + path);
}

std::string series_table(const Trajectory& traj, const MeasureSeries& s) {
  std::ostringstream os;
  os << "tau,log_negativity,l1_coherence,trace_distance,fidelity,trace_dev,min_eig\n";
  for (std::size_t k = 0; k < s.size(); ++k) {
    os << format_double(s.tau[k]) << ',' << format_double(s.log_negativity[k]) << ','
       << format_double(s.l1_coherence[k]) << ',' << format_double(s.trace_distance_to_initial[k]) << ','
       << format_double(s.fidelity_to_initial[k]) << ',' << format_double(traj.trace_deviation[k]) << ','
       << format_double(traj.min_eigenvalue[k]) << '\n';
  }
  return os.str();
}

std::string intervals_text(const PowerReport& r) {
  std::string s;
  for (const auto& [a, b] : r.intervals) s += (s.empty() ? "" : " ") + format_double(a) + ":" + format_double(b);
  return s.empty() ? "none" : s;
}

std::vector<std::pair<std::string, std::string>> power_facts(const PowerReport& r) {
  return {{"e_value", format_double(r.e_value)},
          {"ln_max", format_double(r.ln_max)},
          {"threshold", format_double(r.threshold)},
          {"horizon", format_double(r.horizon)},
          {"intervals", intervals_text(r)}};
}

}  // namespace

Setup build_setup(const RunConfig& config) {
  config.validate();
  Setup s;
  s.system = composite_hamiltonian(config.circuit());
  s.bath1 = config.bath(1, s.system.omega01);
  s.bath2 = config.bath(2, s.system.omega01);
  s.channels = {jump_channels(s.system, 1, s.bath1), jump_channels(s.system, 2, s.bath2)};
  return s;
}

bool trajectory_invariants_hold(const Trajectory& t) {
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t.trace_deviation[k] > kTraceInvariantTol) return false;
    if (t.min_eigenvalue[k] < -kPositivityInvariantTol) return false;
  }
  return true;
}

std::string metadata_header(const RunConfig& config, const std::string& command,
                            const std::vector<std::pair<std::string, std::string>>& extra) {
  std::ostringstream os;
  os << "# @program = qres\n# @version = " << kVersion << "\n# @command = " << command << '\n';
  for (const auto& [k, v] : extra) os << "# @" << k << " = " << v << '\n';
  for (const auto& [k, v] : config.entries()) os << "# " << k << " = " << v << '\n';
  return os.str();
}

SimulationOutput run_simulate(const RunConfig& config, const std::string& out_path) {
  const Setup setup = build_setup(config);
  const DensityMatrix rho0 = initial_state(config);
  EvolveOptions eo;
  eo.stride = config.stride;
  SimulationOutput out;
  out.trajectory = evolve(rho0, setup.system, setup.channels, config.t_max, config.dt, config.mode, eo);
  out.series = measure_trajectory(out.trajectory);
  out.invariants_ok = trajectory_invariants_hold(out.trajectory);
  if (!out_path.empty()) {
    write_file(out_path, metadata_header(config, "simulate",
                                         {{"omega01", format_double(setup.system.omega01)},
                                          {"substeps", std::to_string(out.trajectory.substeps)}}) +
                             series_table(out.trajectory, out.series));
  }
  return out;
}

std::vector<SweepRow> run_sweep_gamma(const RunConfig& config, const std::vector<double>& gammas,
                                      const std::string& out_path, unsigned threads) {
  if (gammas.empty()) throw ConfigError(ExitCode::invalid_value, "sweep-gamma: empty gamma list");
  for (double g : gammas)
    if (!(g >= 0.0)) throw ConfigError(ExitCode::invalid_value, "sweep-gamma: gamma values must be non-negative");
  config.validate();
  const DensityMatrix rho0 = initial_state(config);

  std::vector<SweepRow> rows(gammas.size());
  std::vector<std::string> errors(gammas.size());
  detail::parallel_for(gammas.size(), threads, [&](std::size_t i) {
    try {
      RunConfig c = config;
      c.gamma = gammas[i];
      c.c_g.reset();
      c.c_1.reset();
      c.c_2.reset();
      const Setup setup = build_setup(c);
      EvolveOptions eo;
      eo.stride = c.stride;
      const Trajectory traj = evolve(rho0, setup.system, setup.channels, c.t_max, c.dt, c.mode, eo);
      SweepRow& r = rows[i];
      r.gamma = gammas[i];
      for (const DensityMatrix& rho : traj.states) {
        r.max_log_negativity = std::max(r.max_log_negativity, log_negativity(rho));
        r.max_l1_coherence = std::max(r.max_l1_coherence, l1_coherence(rho));
      }
      r.steady_log_negativity = log_negativity(traj.states.back());
      r.steady_l1_coherence = l1_coherence(traj.states.back());
      r.invariants_ok = trajectory_invariants_hold(traj);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) throw Error("sweep-gamma: gamma = " + format_double(gammas[i]) + ": " + errors[i]);
  }

  if (!out_path.empty()) {
    std::string list;
    for (double g : gammas) list += (list.empty() ? "" : ",") + format_double(g);
    std::ostringstream os;
    os << metadata_header(config, "sweep-gamma", {{"gammas", list}});
    os << "gamma,max_log_negativity,steady_log_negativity,max_l1_coherence,steady_l1_coherence\n";
    for (const SweepRow& r : rows) {
      os << format_double(r.gamma) << ',' << format_double(r.max_log_negativity) << ','
         << format_double(r.steady_log_negativity) << ',' << format_double(r.max_l1_coherence) << ','
         << format_double(r.steady_l1_coherence) << '\n';
    }
    write_file(out_path, os.str());
  }
  return rows;
}

OptimizeOutput run_optimize(const RunConfig& config, std::size_t n_samples, const std::vector<SampleKind>& kinds,
                            const std::string& report_path, const std::string& trajectory_path, unsigned threads) {
  if (n_samples < 1) throw ConfigError(ExitCode::invalid_value, "optimize-power: need at least one sample");
  const Setup setup = build_setup(config);
  PowerOptions po;
  po.mode = config.mode;
  po.stride = config.stride;
  po.threads = threads;

  OptimizeOutput out;
  out.result = optimize_power(setup.system, setup.channels, n_samples, config.t_max, config.dt, kinds, config.seed, po);
  out.best = evaluate_power(out.result.best.state, setup.system, setup.channels, config.t_max, config.dt, po, true);

  std::string kind_list;
  for (SampleKind k : kinds) kind_list += (kind_list.empty() ? "" : ",") + std::string(to_string(k));
  auto facts = power_facts(out.result.best_report);
  facts.insert(facts.begin(), {{"n_samples", std::to_string(n_samples)},
                               {"kinds", kind_list},
                               {"mixed_state_measure", "hilbert_schmidt"},
                               {"omega01", format_double(setup.system.omega01)},
                               {"best_index", std::to_string(out.result.best_index)},
                               {"best_kind", to_string(out.result.best.kind)},
                               {"best_seed", std::to_string(out.result.best.seed)}});

  if (!report_path.empty()) {
    std::ostringstream os;
    os << metadata_header(config, "optimize-power", facts);
    os << "sample_index,kind,seed,ln_max,e_value\n";
    for (const SampleRecord& r : out.result.all_values) {
      os << r.index << ',' << to_string(r.kind) << ',' << r.seed << ',' << (r.ok ? format_double(r.ln_max) : "nan")
         << ',' << (r.ok ? format_double(r.e_value) : "nan") << '\n';
    }
    write_file(report_path, os.str());
  }
  if (!trajectory_path.empty()) {
    write_file(trajectory_path, metadata_header(config, "optimize-power", facts) +
                                    series_table(out.best.trajectory, out.best.series));
  }
  return out;
}

PowerEvaluation run_eval_state(const RunConfig& config, const std::string& out_path) {
  const Setup setup = build_setup(config);
  const DensityMatrix rho0 = initial_state(config);
  PowerOptions po;
  po.mode = config.mode;
  po.stride = config.stride;
  PowerEvaluation ev = evaluate_power(rho0, setup.system, setup.channels, config.t_max, config.dt, po, true);
  if (!out_path.empty()) {
    auto facts = power_facts(ev.report);
    facts.insert(facts.begin(), {"omega01", format_double(setup.system.omega01)});
    write_file(out_path, metadata_header(config, "eval-state", facts) + series_table(ev.trajectory, ev.series));
  }
  return ev;
}

}  // namespace qres
