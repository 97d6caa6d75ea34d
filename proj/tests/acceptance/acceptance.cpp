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

// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any fail.

#include "qres/app.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <unistd.h>

namespace {

using namespace qres;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  criterion %2d  %s  [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(const std::string& text) {
  std::printf("      info          %s\n", text.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct Model {
  Setup setup;
  RunConfig config;
};

Model default_model(EvolutionMode mode = EvolutionMode::lindblad, double gamma = 0.2) {
  Model m;
  m.config = parse_config_text("");
  m.config.mode = mode;
  m.config.gamma = gamma;
  m.setup = build_setup(m.config);
  return m;
}

DensityMatrix preset(const std::string& name) {
  RunConfig c;
  c.initial_state = name;
  return initial_state(c);
}

Trajectory run(const Model& m, const DensityMatrix& rho0, double t_max = 100.0) {
  EvolveOptions eo;
  eo.stride = m.config.stride;
  return evolve(rho0, m.setup.system, m.setup.channels, t_max, m.config.dt, m.config.mode, eo);
}

std::vector<double> ln_series(const Trajectory& t) {
  std::vector<double> out;
  for (const DensityMatrix& rho : t.states) out.push_back(log_negativity(rho));
  return out;
}

void criterion_1() {
  const auto start = Clock::now();
  const double r2 = 1.0 / std::sqrt(2.0);
  using testing::product_ket;
  const double bell = log_negativity(DensityMatrix::pure(r2 * (product_ket(0, 1) + product_ket(1, 0))));
  const double max3 = log_negativity(
      DensityMatrix::pure((product_ket(0, 0) + product_ket(1, 1) + product_ket(2, 2)) / std::sqrt(3.0)));
  const double c00 = l1_coherence(DensityMatrix::pure(product_ket(0, 0)));
  const double cflat = l1_coherence(DensityMatrix::pure(ComplexVector::Ones(9) / 3.0));
  const double elapsed = seconds_since(start);
  const bool ok = std::abs(bell - 1.0) <= 1e-9 && std::abs(max3 - std::log2(3.0)) <= 1e-9 && c00 == 0.0 &&
                  std::abs(cflat - 1.0) <= 1e-12 && elapsed < 1.0;
  std::ostringstream d;
  d << "LN(bell01)-1 = " << bell - 1.0 << ", LN(max3)-log2(3) = " << max3 - std::log2(3.0) << ", C(00) = " << c00
    << ", C(flat)-1 = " << cflat - 1.0 << ", " << fmt("%.4f s", elapsed);
  report(1, ok, "measure oracle suite", d.str());
}

void criterion_2() {
  const auto start = Clock::now();
  const Model m = default_model();
  const ComplexMatrix l = liouvillian_superoperator(m.setup.system, m.setup.channels);
  std::mt19937_64 rng(10);
  double worst = 0.0;
  for (const DensityMatrix& rho0 : {preset("00"), DensityMatrix::from_matrix(testing::random_density(rng, 9))}) {
    const Trajectory t = run(m, rho0, 10.0);
    const ComplexMatrix exact = testing::propagate_exact(l, rho0.matrix(), 10.0);
    worst = std::max(worst, testing::max_abs_diff(t.states.back().matrix(), exact));
  }
  const double elapsed = seconds_since(start);
  report(2, worst <= 1e-6 && elapsed < 30.0, "stepping integrator vs 81x81 matrix exponential at tau = 10",
         fmt("max |diff| = %.3e", worst) + fmt(", %.2f s", elapsed));
}

void criterion_3() {
  const Model m = default_model();
  const Trajectory t = run(m, preset("00"));
  double dev = 0.0, min_eig = 1.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    dev = std::max(dev, t.trace_deviation[k]);
    min_eig = std::min(min_eig, t.min_eigenvalue[k]);
  }
  report(3, dev <= 1e-7 && min_eig >= -1e-7, "trace and positivity over tau in [0, 100] from |00>",
         fmt("max |Tr-1| = %.2e", dev) + fmt(", min eigenvalue = %.2e", min_eig) +
             ", points = " + std::to_string(t.size()));
}

void criterion_4() {
  CircuitParams p;
  p.basis = BasisMode::perturbative;
  const TransmonBasis b = transmon_eigenbasis(p);
  const bool ok = b.anharmonicity >= -1.2 && b.anharmonicity <= -0.8 && p.omega0() == 20.0 * std::sqrt(2.0);
  report(4, ok, "anharmonicity and oscillator energy (perturbative basis)",
         fmt("anharmonicity = %.6f E_C", b.anharmonicity) + fmt(", omega0 - 20 sqrt2 = %.1e", p.omega0() - 20.0 * std::sqrt(2.0)));
  p.basis = BasisMode::numeric;
  const TransmonBasis nb = transmon_eigenbasis(p);
  info(fmt("numerically diagonalised basis (fock_dim 10): anharmonicity = %.6f E_C", nb.anharmonicity));
}

void criterion_5() {
  const Model m = default_model(EvolutionMode::unitary);
  const Trajectory t = run(m, preset("00"));
  const std::vector<double> ln = ln_series(t);
  const auto peak = std::max_element(ln.begin(), ln.end());
  // First local maximum, then the smallest value after it.
  std::size_t first = 1;
  while (first + 1 < ln.size() && !(ln[first] >= ln[first - 1] && ln[first] > ln[first + 1])) ++first;
  const double after = *std::min_element(ln.begin() + static_cast<long>(first), ln.end());
  const bool ok_00 = std::abs(ln.front()) <= 1e-12 && *peak > 0.05 && after < 0.1 * *peak;
  std::ostringstream d;
  d << "LN(0) = " << ln.front() << fmt(", max = %.5f ebits", *peak)
    << fmt(" at tau = %.2f", t.tau[static_cast<std::size_t>(peak - ln.begin())])
    << fmt(", min after first peak = %.2e", after);

  const std::vector<double> lb = ln_series(run(m, preset("bell01")));
  const double mean = std::accumulate(lb.begin(), lb.end(), 0.0) / static_cast<double>(lb.size());
  double var = 0.0;
  for (double x : lb) var += (x - mean) * (x - mean);
  const double cv = std::sqrt(var / static_cast<double>(lb.size())) / mean;
  d << fmt("; bell01 CV = %.2e", cv);
  report(5, ok_00 && cv < 0.15, "unitary collapse/revival from |00>, max > 0.05 ebits, bell01 steady", d.str());
}

void criterion_6() {
  const Model m = default_model();
  const Trajectory t = run(m, preset("00"));
  const std::vector<double> ln = ln_series(t);
  const std::size_t arg = static_cast<std::size_t>(std::max_element(ln.begin(), ln.end()) - ln.begin());
  const double rhs = max_abs(gksl_rhs(t.states.back().matrix(), m.setup.system, m.setup.channels));
  const DensityMatrix ss = steady_state(m.setup.system, m.setup.channels);
  const double ln_ss = log_negativity(ss);
  // 5 % relative, with a 1e-12 absolute floor for a vanishing steady value.
  const bool settles = std::abs(ln.back() - ln_ss) <= 0.05 * std::abs(ln_ss) + 1e-12;
  const bool ok_00 = arg > 0 && arg + 1 < ln.size() && ln[arg] > 0.0 && rhs < 1e-4 && settles;
  std::ostringstream d;
  d << fmt("|00>: max %.5f", ln[arg]) << fmt(" at tau = %.2f", t.tau[arg]) << fmt(", |rhs(end)| = %.1e", rhs)
    << fmt(", LN(100) = %.3e", ln.back()) << fmt(", LN(steady) = %.3e", ln_ss);

  const std::vector<double> lb = ln_series(run(m, preset("bell01")));
  const double peak_b = *std::max_element(lb.begin(), lb.end());
  const bool ok_b = lb.back() < lb.front() && peak_b <= 1.05 * lb.front();
  d << fmt("; bell01: LN(0) = %.4f", lb.front()) << fmt(", LN(100) = %.3e", lb.back())
    << fmt(", max/LN(0) = %.4f", peak_b / lb.front());
  report(6, ok_00 && ok_b, "open-system rise, settling and bell01 decay", d.str());
}

double r_squared(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  return sxy * sxy / (sxx * syy);
}

void criterion_7() {
  const auto start = Clock::now();
  const std::vector<double> gammas{0.05, 0.10, 0.15, 0.20};
  RunConfig cfg = parse_config_text("");
  const std::vector<SweepRow> rows = run_sweep_gamma(cfg, gammas, "", 0);
  std::vector<double> y;
  bool increasing = true;
  for (const SweepRow& r : rows) {
    if (!y.empty() && !(r.max_log_negativity > y.back())) increasing = false;
    y.push_back(r.max_log_negativity);
  }
  const double r2 = r_squared(gammas, y);
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << "max LN =";
  for (double v : y) d << fmt(" %.5f", v);
  d << fmt(", R^2 = %.5f", r2) << fmt(", %.1f s", elapsed);
  report(7, increasing && r2 >= 0.95 && elapsed < 300.0, "max LN versus gamma with baths", d.str());

  cfg.mode = EvolutionMode::unitary;
  std::ostringstream u;
  u << "closed system max LN =";
  for (const SweepRow& r : run_sweep_gamma(cfg, gammas, "", 0)) u << fmt(" %.5f", r.max_log_negativity);
  info(u.str());
}

void criterion_8() {
  const Model m = default_model();
  const double beta = m.setup.bath1.beta;
  double worst = 0.0;
  std::size_t count = 0;
  for (const ChannelList& list : m.setup.channels) {
    for (const JumpChannel& ch : list) {
      if (ch.kind != ChannelKind::transition) continue;
      worst = std::max(worst, std::abs(ch.rate_up / ch.rate_down - std::exp(-beta * ch.omega)));
      ++count;
    }
  }
  const double s0 = transition_rate(0.0, m.setup.bath1, m.setup.system.omega01);
  const double s0_err = std::abs(s0 - 0.01 * m.setup.system.omega01);
  report(8, worst <= 1e-12 && s0_err <= 1e-12 && count > 0, "detailed balance and S(0)",
         std::to_string(count) + fmt(" transition channels, max ratio error = %.1e", worst) +
             fmt(", |S(0) - 0.01 omega01| = %.1e", s0_err));
}

// Generating power of the fig5opt preset under the defaults, pinned at first computation.
constexpr double kFig5Pin = 0.006166031199828789;
// Published optimum, matched only to within a factor of 3.
constexpr double kReferencePower = 0.01433;

void criterion_9() {
  const auto start = Clock::now();
  const Model m = default_model();
  PowerOptions po;
  po.stride = m.config.stride;
  const PowerEvaluation ref =
      evaluate_power(preset("fig5opt"), m.setup.system, m.setup.channels, 100.0, m.config.dt, po);
  const double e_ref = ref.report.e_value;
  const OptimizationResult opt = optimize_power(m.setup.system, m.setup.channels, 200, 100.0, m.config.dt,
                                                {SampleKind::pure_product_qubit}, m.config.seed, po);
  double best = 0.0;
  std::size_t above = 0;
  for (const SampleRecord& r : opt.all_values) {
    best = std::max(best, r.e_value);
    if (r.e_value > 1.2 * e_ref) ++above;
  }
  const double ratio = kReferencePower / e_ref;
  const double elapsed = seconds_since(start);
  const bool pinned = std::abs(e_ref - kFig5Pin) <= 1e-9 * kFig5Pin;
  const bool ok = e_ref > 0.0 && above == 0 && ratio <= 3.0 && ratio >= 1.0 / 3.0 && pinned && elapsed < 1800.0;
  std::ostringstream d;
  d << fmt("E(fig5opt) = %.6f", e_ref) << (pinned ? " (matches pin)" : " (pin mismatch)")
    << fmt(", reference/E = %.3f", ratio) << fmt(", best of 200 = %.6f", best) << fmt(" (%.2fx)", best / e_ref)
    << ", " << above << " samples above 1.2x" << fmt(", %.0f s", elapsed);
  report(9, ok, "optimisation regression against the fig5opt state", d.str());

  // Same amplitudes with the |1> sign of qutrit 1 flipped, i.e. the state the
  // preset describes if the coupling sign convention were opposite.
  ComplexVector a(3), b(3);
  a << Complex(-0.256, -0.492), -Complex(-0.479, 0.680), 0.0;
  b << Complex(-0.395, 0.392), Complex(-0.768, -0.316), 0.0;
  const DensityMatrix flipped = product_state(DensityMatrix::pure(a), DensityMatrix::pure(b));
  const double e_flip =
      evaluate_power(flipped, m.setup.system, m.setup.channels, 100.0, m.config.dt, po).report.e_value;
  info(fmt("fig5opt with qutrit-1 |1> sign flipped: E = %.6f", e_flip) +
       fmt(" (%.2fx best sample)", e_flip / best));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_10() {
  const auto dir = std::filesystem::temp_directory_path() / ("qres_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  RunConfig cfg = parse_config_text("t_max = 20\nseed = 4242\n");
  const auto p = [&](const char* name) { return (dir / name).string(); };
  run_optimize(cfg, 8, all_sample_kinds(), p("a.csv"), p("ta.csv"), 1);
  run_optimize(cfg, 8, all_sample_kinds(), p("b.csv"), p("tb.csv"), 4);
  const bool same = slurp(p("a.csv")) == slurp(p("b.csv")) && slurp(p("ta.csv")) == slurp(p("tb.csv")) &&
                    !slurp(p("a.csv")).empty();
  std::filesystem::remove_all(dir);
  report(10, same, "optimize-power determinism", "8 samples, all kinds, 1 vs 4 threads, byte comparison");
}

}  // namespace

int main() {
  qres::set_warning_handler([](const std::string&) {});
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
