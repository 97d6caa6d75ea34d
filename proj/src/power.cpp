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

#include "qres/power.hpp"

#include "qres/errors.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qres {

PowerReport generating_power(const MeasureSeries& series, double horizon) {
  const auto& t = series.tau;
  const auto& f = series.log_negativity;
  if (t.size() != f.size() || t.size() < 2) throw DomainError("generating_power: need at least two samples");
  if (!(horizon > 0.0)) throw DomainError("generating_power: horizon must be positive");
  const double slack = 1e-9 * std::max(1.0, horizon);
  if (t.front() > slack || t.back() < horizon - slack) {
    throw DomainError("generating_power: series does not cover [0, horizon]");
  }

  std::size_t last = 0;
  double ln_max = 0.0;
  for (std::size_t i = 0; i < t.size() && t[i] <= horizon + slack; ++i) {
    if (f[i] < -1e-12) throw DomainError("generating_power: negative log-negativity in series");
    if (i > 0 && !(t[i] > t[i - 1])) throw DomainError("generating_power: tau must be strictly increasing");
    ln_max = std::max(ln_max, f[i]);
    last = i;
  }

  PowerReport r;
  r.horizon = horizon;
  r.ln_max = ln_max;
  r.threshold = 0.5 * ln_max;
  if (ln_max <= 0.0) return r;
  const double thr = r.threshold;

  bool open = false;
  double start = 0.0;
  auto close = [&](double end) {
    if (end > start) r.intervals.emplace_back(start, end);
    open = false;
  };
  if (f[0] >= thr) {
    open = true;
    start = t[0];
  }
  for (std::size_t i = 0; i < last; ++i) {
    const double t0 = t[i], t1 = t[i + 1], f0 = f[i], f1 = f[i + 1];
    const bool in0 = f0 >= thr, in1 = f1 >= thr;
    if (in0 && in1) {
      r.e_value += 0.5 * (f0 + f1) * (t1 - t0);
    } else if (in0 != in1) {
      const double tc = t0 + (thr - f0) / (f1 - f0) * (t1 - t0);
      if (in0) {
        r.e_value += 0.5 * (f0 + thr) * (tc - t0);
        close(tc);
      } else {
        r.e_value += 0.5 * (thr + f1) * (t1 - tc);
        open = true;
        start = tc;
      }
    }
    if (!in0 && !in1 && open) close(t0);
  }
  if (open) close(t[last]);
  return r;
}

const char* to_string(SampleKind kind) {
  switch (kind) {
    case SampleKind::pure_product_qubit: return "pure_product_qubit";
    case SampleKind::pure_product_qutrit: return "pure_product_qutrit";
    case SampleKind::mixed_product: return "mixed_product";
    case SampleKind::mixed_separable: return "mixed_separable";
  }
  return "unknown";
}

std::optional<SampleKind> parse_sample_kind(const std::string& name) {
  for (SampleKind k : all_sample_kinds())
    if (name == to_string(k)) return k;
  return std::nullopt;
}

std::vector<SampleKind> all_sample_kinds() {
  return {SampleKind::pure_product_qubit, SampleKind::pure_product_qutrit, SampleKind::mixed_product,
          SampleKind::mixed_separable};
}

namespace {

ComplexVector gaussian_vector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (int k = 0; k < dim; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = Complex(re, im);
  }
  return v;
}

ComplexVector haar(std::mt19937_64& rng, int dim) {
  ComplexVector v;
  do {
    v = gaussian_vector(rng, dim);
  } while (v.norm() == 0.0);
  return v / v.norm();
}

ComplexVector embed_qubit(const ComplexVector& v) {
  ComplexVector out = ComplexVector::Zero(3);
  out.head(2) = v;
  return out;
}

// Partial trace of a Haar pure state on C^d (x) C^d, i.e. G G^dag / Tr with G Ginibre.
DensityMatrix hilbert_schmidt_state(std::mt19937_64& rng, int dim) {
  ComplexMatrix g(dim, dim);
  for (int c = 0; c < dim; ++c) g.col(c) = gaussian_vector(rng, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::assume_valid(hermitize(rho));
}

DensityMatrix pure_product(const ComplexVector& a, const ComplexVector& b) {
  return product_state(DensityMatrix::pure(a), DensityMatrix::pure(b));
}

}  // namespace

ComplexVector haar_vector(std::uint64_t seed, int dim) {
  std::mt19937_64 rng(seed);
  return haar(rng, dim);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  // splitmix64 finaliser over (master, counter)
  std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SeparableSample sample_separable(std::uint64_t seed, SampleKind kind, int mix_terms) {
  std::mt19937_64 rng(seed);
  SeparableSample s;
  s.kind = kind;
  s.seed = seed;
  switch (kind) {
    case SampleKind::pure_product_qubit: {
      const ComplexVector a = embed_qubit(haar(rng, 2));
      const ComplexVector b = embed_qubit(haar(rng, 2));
      s.state = pure_product(a, b);
      break;
    }
    case SampleKind::pure_product_qutrit: {
      const ComplexVector a = haar(rng, 3);
      const ComplexVector b = haar(rng, 3);
      s.state = pure_product(a, b);
      break;
    }
    case SampleKind::mixed_product: {
      const DensityMatrix a = hilbert_schmidt_state(rng, 3);
      const DensityMatrix b = hilbert_schmidt_state(rng, 3);
      s.state = product_state(a, b);
      break;
    }
    case SampleKind::mixed_separable: {
      if (mix_terms < 1 || mix_terms > 4) throw DomainError("sample_separable: mix_terms must lie in [1, 4]");
      std::exponential_distribution<double> expo(1.0);
      std::vector<double> w(mix_terms);
      double total = 0.0;
      for (double& x : w) total += (x = expo(rng));
      ComplexMatrix rho = ComplexMatrix::Zero(9, 9);
      for (int k = 0; k < mix_terms; ++k) {
        const ComplexVector a = haar(rng, 3);
        const ComplexVector b = haar(rng, 3);
        rho += (w[k] / total) * pure_product(a, b).matrix();
      }
      s.state = DensityMatrix::assume_valid(hermitize(rho));
      break;
    }
  }
  return s;
}

PowerEvaluation evaluate_power(const DensityMatrix& initial, const CompositeSystem& system,
                               const ChannelSets& channel_sets, double horizon, double dt,
                               const PowerOptions& options, bool full_measures) {
  EvolveOptions eo;
  eo.stride = options.stride;
  PowerEvaluation out;
  out.trajectory = evolve(initial, system, channel_sets, horizon, dt, options.mode, eo);
  out.series = full_measures ? measure_trajectory(out.trajectory) : log_negativity_series(out.trajectory);
  out.report = generating_power(out.series, out.trajectory.tau.back());
  out.report.horizon = horizon;
  out.report.initial_state = initial;
  return out;
}

namespace {

int mix_terms_for(std::size_t index) { return 2 + static_cast<int>(index % 3); }

}  // namespace

OptimizationResult optimize_power(const CompositeSystem& system, const ChannelSets& channel_sets,
                                  std::size_t n_samples, double horizon, double dt,
                                  const std::vector<SampleKind>& kinds, std::uint64_t master_seed,
                                  const PowerOptions& options) {
  if (n_samples < 1) throw DomainError("optimize_power: need at least one sample");
  if (kinds.empty()) throw DomainError("optimize_power: no sample kinds requested");

  std::vector<SampleRecord> records(n_samples);
  std::vector<PowerReport> reports(n_samples);

  detail::parallel_for(n_samples, options.threads, [&](std::size_t i) {
    SampleRecord& rec = records[i];
    rec.index = i;
    rec.kind = kinds[i % kinds.size()];
    rec.seed = derive_seed(master_seed, i);
    try {
      const SeparableSample sample = sample_separable(rec.seed, rec.kind, mix_terms_for(i));
      PowerEvaluation ev = evaluate_power(sample.state, system, channel_sets, horizon, dt, options);
      rec.ln_max = ev.report.ln_max;
      rec.e_value = ev.report.e_value;
      rec.ok = true;
      reports[i] = std::move(ev.report);
    } catch (const Error& e) {
      rec.ok = false;
      rec.error = e.what();
    }
  });

  OptimizationResult result;
  bool found = false;
  for (const SampleRecord& rec : records) {
    if (!rec.ok) {
      std::ostringstream os;
      os << "optimize_power: sample " << rec.index << " skipped: " << rec.error;
      warn(os.str());
      continue;
    }
    if (!found || rec.e_value > records[result.best_index].e_value) {
      result.best_index = rec.index;
      found = true;
    }
  }
  if (!found) throw Error("optimize_power: every sample failed to integrate");

  result.best = sample_separable(records[result.best_index].seed, records[result.best_index].kind,
                                 mix_terms_for(result.best_index));
  result.best_report = std::move(reports[result.best_index]);
  result.all_values = std::move(records);
  return result;
}

}  // namespace qres
