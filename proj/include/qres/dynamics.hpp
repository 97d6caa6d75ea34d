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
#include "qres/state.hpp"

#include <vector>

namespace qres {

/// Channel lists, one per bath.
using ChannelSets = std::vector<ChannelList>;

enum class EvolutionMode { lindblad, unitary };

/// Time series of states on a uniform grid (tau = t E_C / hbar).
struct Trajectory {
  std::vector<double> tau;
  std::vector<DensityMatrix> states;
  std::vector<double> trace_deviation;
  std::vector<double> min_eigenvalue;
  /// Integrator steps per grid interval dt.
  int substeps = 1;

  std::size_t size() const { return tau.size(); }
};

struct EvolveOptions {
  /// Keep every `stride`-th grid point; the final point is always kept.
  int stride = 1;
  /// Split each dt into the fewest equal substeps with h * max|L_kk| <= phase_limit.
  bool auto_substep = true;
  double phase_limit = 0.05;
  /// |Tr rho - 1| above this aborts with StepSizeError.
  double trace_abort = 1e-6;
};

/// -i [H_s, rho] + sum over baths of the dissipator, in the product basis.
ComplexMatrix gksl_rhs(const ComplexMatrix& rho, const CompositeSystem& system, const ChannelSets& channel_sets);

/// 81x81 generator acting on column-stacked rho.
ComplexMatrix liouvillian_superoperator(const CompositeSystem& system, const ChannelSets& channel_sets);

/// Integrates from rho0 on the grid t = k dt, k = 0..round(t_max/dt).
///
/// Lindblad mode uses classic RK4, re-Hermitising after every step; the
/// trace is never renormalised. Unitary mode applies exp(-i H_s t) exactly
/// through the spectral decomposition and ignores `channel_sets`.
Trajectory evolve(const DensityMatrix& rho0, const CompositeSystem& system, const ChannelSets& channel_sets,
                  double t_max, double dt, EvolutionMode mode, const EvolveOptions& options = {});

struct SteadyStateOptions {
  /// Singular values below null_tol * sigma_max count as null directions.
  double null_tol = 1e-9;
};

/// Normalised null vector of the Liouvillian.
DensityMatrix steady_state(const CompositeSystem& system, const ChannelSets& channel_sets,
                           const SteadyStateOptions& options = {});

}  // namespace qres
