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
#include "qres/state.hpp"

#include <vector>

namespace qres {

/// Normalised l1 coherence in the |ij> product basis: sum_{i != j} |rho_ij| / (d - 1).
double l1_coherence(const DensityMatrix& rho);

/// Sum of |negative eigenvalues| of the partial transpose on transmon 1.
double negativity(const DensityMatrix& rho, BipartiteDims dims = {});

/// (||rho^{T_A}||_1 - 1) / 2; agrees with negativity() for unit-trace input.
double negativity_trace_norm(const DensityMatrix& rho, BipartiteDims dims = {});

/// log2(2 N + 1), in ebits.
double log_negativity(const DensityMatrix& rho, BipartiteDims dims = {});

/// (1/2) ||rho - sigma||_1
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, evaluated as the squared nuclear
/// norm of sqrt(rho) sqrt(sigma).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

struct MeasureSeries {
  std::vector<double> tau;
  std::vector<double> log_negativity;
  std::vector<double> l1_coherence;
  std::vector<double> trace_distance_to_initial;
  std::vector<double> fidelity_to_initial;

  std::size_t size() const { return tau.size(); }
};

/// All four measures along a trajectory, relative to its first state.
MeasureSeries measure_trajectory(const Trajectory& trajectory);

/// Only the log-negativity column (the other columns are left empty).
MeasureSeries log_negativity_series(const Trajectory& trajectory);

}  // namespace qres
