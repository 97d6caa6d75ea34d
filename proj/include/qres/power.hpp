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

#include "qres/dynamics.hpp"
#include "qres/measures.hpp"
#include "qres/state.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qres {

/// Entanglement-generating power of one trajectory.
///
/// `intervals` are the maximal runs where the log-negativity is at least
/// half its maximum; `e_value` integrates the log-negativity over them, in
/// ebit * hbar/E_C.
struct PowerReport {
  double e_value = 0.0;
  double ln_max = 0.0;
  double threshold = 0.0;
  std::vector<std::pair<double, double>> intervals;
  double horizon = 0.0;
  DensityMatrix initial_state;
};

/// Integrates the piecewise-linear log-negativity over the above-threshold
/// runs of [0, horizon]. Threshold crossings are located by linear
/// interpolation; a grid value equal to the threshold counts as inside.
PowerReport generating_power(const MeasureSeries& series, double horizon);

enum class SampleKind { pure_product_qubit, pure_product_qutrit, mixed_product, mixed_separable };

const char* to_string(SampleKind kind);
std::optional<SampleKind> parse_sample_kind(const std::string& name);
std::vector<SampleKind> all_sample_kinds();

struct SeparableSample {
  DensityMatrix state;
  SampleKind kind = SampleKind::pure_product_qubit;
  std::uint64_t seed = 0;
};

/// Draws one separable two-qutrit state, deterministic in `seed`.
///
/// Pure kinds tensor two Haar-random local states (on span{|0>,|1>} for the
/// qubit kind). mixed_product tensors two Hilbert-Schmidt random local
/// states. mixed_separable is a flat-Dirichlet mixture of `mix_terms` pure
/// qutrit products.
SeparableSample sample_separable(std::uint64_t seed, SampleKind kind, int mix_terms = 2);

/// Haar-random unit vector in C^dim.
ComplexVector haar_vector(std::uint64_t seed, int dim);

/// Seed for sample `index` of a search started from `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

struct PowerOptions {
  EvolutionMode mode = EvolutionMode::lindblad;
  /// Grid points between stored states (measures are evaluated on those).
  int stride = 10;
  /// Worker threads; 0 picks hardware concurrency.
  unsigned threads = 0;
};

struct PowerEvaluation {
  Trajectory trajectory;
  MeasureSeries series;
  PowerReport report;
};

/// Evolves one initial state over [0, horizon] and scores it.
PowerEvaluation evaluate_power(const DensityMatrix& initial, const CompositeSystem& system,
                               const ChannelSets& channel_sets, double horizon, double dt,
                               const PowerOptions& options = {}, bool full_measures = false);

struct SampleRecord {
  std::size_t index = 0;
  SampleKind kind = SampleKind::pure_product_qubit;
  std::uint64_t seed = 0;
  double ln_max = 0.0;
  double e_value = 0.0;
  bool ok = false;
  std::string error;
};

struct OptimizationResult {
  SeparableSample best;
  PowerReport best_report;
  std::size_t best_index = 0;
  std::vector<SampleRecord> all_values;
};

/// Random search for the separable initial state of largest generating
/// power. Sample i uses kind kinds[i % kinds.size()] and seed
/// derive_seed(master_seed, i). Integration failures are recorded and
/// skipped; ties go to the lowest index.
OptimizationResult optimize_power(const CompositeSystem& system, const ChannelSets& channel_sets,
                                  std::size_t n_samples, double horizon, double dt,
                                  const std::vector<SampleKind>& kinds, std::uint64_t master_seed,
                                  const PowerOptions& options = {});

}  // namespace qres
