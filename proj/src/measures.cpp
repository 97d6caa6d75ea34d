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

#include "qres/measures.hpp"

#include "qres/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace qres {
namespace {

constexpr double kClamp = DensityMatrix::kNegativeEigTol;

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("measures: states have different dimensions");
}

RealVector pt_eigenvalues(const DensityMatrix& rho, BipartiteDims dims) {
  const ComplexMatrix pt = partial_transpose(rho.matrix(), dims, Subsystem::A);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(pt), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

double l1_coherence(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  const int d = rho.dim();
  if (d < 2) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) sum += std::abs(m(i, j));
  return sum / (d - 1);
}

double negativity(const DensityMatrix& rho, BipartiteDims dims) {
  const RealVector ev = pt_eigenvalues(rho, dims);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < ev.size(); ++k)
    if (ev(k) < 0.0) sum -= ev(k);
  return sum;
}

double negativity_trace_norm(const DensityMatrix& rho, BipartiteDims dims) {
  return 0.5 * (trace_norm(partial_transpose(rho.matrix(), dims, Subsystem::A)) - 1.0);
}

double log_negativity(const DensityMatrix& rho, BipartiteDims dims) {
  return std::log2(2.0 * negativity(rho, dims) + 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma);
  const ComplexMatrix a = psd_sqrt(rho.matrix(), kClamp);
  const ComplexMatrix b = psd_sqrt(sigma.matrix(), kClamp);
  Eigen::JacobiSVD<ComplexMatrix> svd(a * b);
  const double root = svd.singularValues().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

MeasureSeries measure_trajectory(const Trajectory& trajectory) {
  MeasureSeries s;
  const std::size_t n = trajectory.size();
  s.tau = trajectory.tau;
  s.log_negativity.reserve(n);
  s.l1_coherence.reserve(n);
  s.trace_distance_to_initial.reserve(n);
  s.fidelity_to_initial.reserve(n);
  if (n == 0) return s;
  const DensityMatrix& first = trajectory.states.front();
  for (const DensityMatrix& rho : trajectory.states) {
    s.log_negativity.push_back(log_negativity(rho));
    s.l1_coherence.push_back(l1_coherence(rho));
    s.trace_distance_to_initial.push_back(trace_distance(rho, first));
    s.fidelity_to_initial.push_back(fidelity(first, rho));
  }
  return s;
}

MeasureSeries log_negativity_series(const Trajectory& trajectory) {
  MeasureSeries s;
  s.tau = trajectory.tau;
  s.log_negativity.reserve(trajectory.size());
  for (const DensityMatrix& rho : trajectory.states) s.log_negativity.push_back(log_negativity(rho));
  return s;
}

}  // namespace qres
