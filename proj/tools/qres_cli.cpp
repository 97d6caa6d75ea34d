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

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using qres::ExitCode;

std::string flag_name(std::string key) {
  for (char& c : key)
    if (c == '_') c = '-';
  return "--" + key;
}

std::string default_output(const std::string& file) {
  const char* dir = std::getenv("QRES_OUTPUT_DIR");
  if (!dir || !*dir) return file;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / file).string();
}

struct Common {
  std::string config_path;
  std::map<std::string, std::string> overrides;
  std::string output;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("-c,--config", common.config_path, "key = value configuration file");
  sub->add_option("-o,--output", common.output, "output file (default under $QRES_OUTPUT_DIR)");
  for (const std::string& key : qres::config_keys()) {
    sub->add_option_function<std::string>(
        flag_name(key), [&common, key](const std::string& v) { common.overrides[key] = v; },
        "override '" + key + "'");
  }
}

qres::RunConfig load(const Common& common) {
  qres::RunConfig cfg = common.config_path.empty() ? qres::parse_config_text("")
                                                   : qres::parse_config_file(common.config_path);
  for (const auto& [k, v] : common.overrides) cfg.set(k, v);
  cfg.validate();
  return cfg;
}

int finish(bool invariants_ok) {
  if (!invariants_ok) {
    std::cerr << "qres: trace or positivity invariant violated during integration\n";
    return static_cast<int>(ExitCode::invariant);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open-system dynamics and entanglement generation of two coupled transmon qutrits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qres::kVersion);

  Common sim_opts, sweep_opts, opt_opts, eval_opts;

  CLI::App* simulate = app.add_subcommand("simulate", "evolve one initial state and write its measure series");
  add_common(simulate, sim_opts);

  CLI::App* sweep = app.add_subcommand("sweep-gamma", "maximum and long-time resources versus coupling gamma");
  add_common(sweep, sweep_opts);
  std::vector<double> gammas{0.0, 0.05, 0.1, 0.15, 0.2};
  sweep->add_option("--gammas", gammas, "comma-separated coupling values (E_C/hbar)")->delimiter(',');
  unsigned sweep_threads = 0;
  sweep->add_option("--threads", sweep_threads, "worker threads (0 = all cores)");

  CLI::App* optimize = app.add_subcommand("optimize-power", "random search for the best separable initial state");
  add_common(optimize, opt_opts);
  std::size_t n_samples = 2000;
  std::vector<std::string> kind_names;
  std::string best_output;
  bool unitary = false;
  unsigned opt_threads = 0;
  optimize->add_option("-n,--samples", n_samples, "number of sampled initial states")->check(CLI::PositiveNumber);
  optimize->add_option("--kinds", kind_names, "sample kinds (default: all four)")->delimiter(',');
  optimize->add_option("--trajectory-output", best_output, "trajectory dump for the best sample");
  optimize->add_flag("--unitary", unitary, "evolve without baths");
  optimize->add_option("--threads", opt_threads, "worker threads (0 = all cores)");

  CLI::App* eval = app.add_subcommand("eval-state", "generating power of the configured initial state");
  add_common(eval, eval_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      const qres::RunConfig cfg = load(sim_opts);
      const std::string out = sim_opts.output.empty() ? default_output("simulate.csv") : sim_opts.output;
      const auto result = qres::run_simulate(cfg, out);
      std::cout << "wrote " << out << " (" << result.series.size() << " rows)\n";
      return finish(result.invariants_ok);
    }
    if (sweep->parsed()) {
      const qres::RunConfig cfg = load(sweep_opts);
      const std::string out = sweep_opts.output.empty() ? default_output("sweep_gamma.csv") : sweep_opts.output;
      const auto rows = qres::run_sweep_gamma(cfg, gammas, out, sweep_threads);
      bool ok = true;
      for (const auto& r : rows) ok = ok && r.invariants_ok;
      std::cout << "wrote " << out << " (" << rows.size() << " rows)\n";
      return finish(ok);
    }
    if (optimize->parsed()) {
      qres::RunConfig cfg = load(opt_opts);
      if (unitary) cfg.mode = qres::EvolutionMode::unitary;
      std::vector<qres::SampleKind> kinds;
      for (const std::string& name : kind_names) {
        const auto k = qres::parse_sample_kind(name);
        if (!k) {
          std::cerr << "qres: unknown sample kind '" << name << "'\n";
          return static_cast<int>(ExitCode::invalid_value);
        }
        kinds.push_back(*k);
      }
      if (kinds.empty()) kinds = qres::all_sample_kinds();
      const std::string report = opt_opts.output.empty() ? default_output("optimize_report.csv") : opt_opts.output;
      const std::string best = best_output.empty() ? default_output("optimize_best.csv") : best_output;
      const auto out = qres::run_optimize(cfg, n_samples, kinds, report, best, opt_threads);
      std::cout << "best sample " << out.result.best_index << " (" << qres::to_string(out.result.best.kind)
                << "): e_value = " << out.result.best_report.e_value << ", ln_max = " << out.result.best_report.ln_max
                << "\nwrote " << report << " and " << best << '\n';
      return finish(qres::trajectory_invariants_hold(out.best.trajectory));
    }
    if (eval->parsed()) {
      const qres::RunConfig cfg = load(eval_opts);
      const std::string out = eval_opts.output.empty() ? default_output("eval_state.csv") : eval_opts.output;
      const auto ev = qres::run_eval_state(cfg, out);
      std::cout << "e_value = " << ev.report.e_value << ", ln_max = " << ev.report.ln_max << ", intervals = "
                << ev.report.intervals.size() << "\nwrote " << out << '\n';
      return finish(qres::trajectory_invariants_hold(ev.trajectory));
    }
  } catch (const qres::ConfigError& e) {
    std::cerr << "qres: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const qres::StepSizeError& e) {
    std::cerr << "qres: " << e.what() << '\n';
    return static_cast<int>(ExitCode::integration);
  } catch (const qres::Error& e) {
    std::cerr << "qres: " << e.what() << '\n';
    return static_cast<int>(ExitCode::integration);
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "qres: " << e.what() << '\n';
    return static_cast<int>(ExitCode::output);
  }
  return 0;
}
