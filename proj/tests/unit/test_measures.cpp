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

#include "qres/errors.hpp"
#include "qres/measures.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <Eigen/SVD>

#include <cmath>

namespace qres {
namespace {

using testing::product_ket;

// Pure-state negativity from the Schmidt coefficients: ((sum s_k)^2 - 1) / 2.
double schmidt_negativity(const ComplexVector& psi) {
  ComplexMatrix c(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c(i, j) = psi(3 * i + j);
  c /= psi.norm();
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  const double s = svd.singularValues().sum();
  return 0.5 * (s * s - 1.0);
}

ComplexMatrix swap_ab() {
  ComplexMatrix s = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s(3 * j + i, 3 * i + j) = 1.0;
  return s;
}

TEST(Measures, BellAndMaximallyEntangledStates) {
  const ComplexVector bell01 = (product_ket(0, 1) + product_ket(1, 0)) / std::sqrt(2.0);
  EXPECT_NEAR(log_negativity(DensityMatrix::pure(bell01)), 1.0, 1e-9);
  const ComplexVector bell12 = (product_ket(1, 2) + product_ket(2, 1)) / std::sqrt(2.0);
  EXPECT_NEAR(log_negativity(DensityMatrix::pure(bell12)), 1.0, 1e-9);
  const ComplexVector max3 = (product_ket(0, 0) + product_ket(1, 1) + product_ket(2, 2)) / std::sqrt(3.0);
  EXPECT_NEAR(log_negativity(DensityMatrix::pure(max3)), std::log2(3.0), 1e-9);
  EXPECT_NEAR(negativity(DensityMatrix::pure(max3)), 1.0, 1e-9);
}

TEST(Measures, ProductAndMixedStatesHaveNoEntanglement) {
  EXPECT_NEAR(log_negativity(DensityMatrix::pure(product_ket(0, 0))), 0.0, 1e-12);
  EXPECT_NEAR(log_negativity(DensityMatrix::maximally_mixed(9)), 0.0, 1e-12);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix a = DensityMatrix::from_matrix(testing::random_density(rng, 3));
    const DensityMatrix b = DensityMatrix::from_matrix(testing::random_density(rng, 3));
    EXPECT_NEAR(log_negativity(product_state(a, b)), 0.0, 1e-12);
  }
}

TEST(Measures, PureStatesMatchSchmidtOracle) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    const ComplexVector psi = testing::random_ket(rng, 9);
    EXPECT_NEAR(negativity(DensityMatrix::pure(psi)), schmidt_negativity(psi), 1e-10);
  }
}

TEST(Measures, NegativityFormulasAgree) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const DensityMatrix rho = DensityMatrix::from_matrix(testing::random_density(rng, 9));
    EXPECT_NEAR(negativity(rho), negativity_trace_norm(rho), 1e-10);
  }
}

TEST(Measures, LocalUnitaryAndSwapInvariance) {
  std::mt19937_64 rng(4);
  const ComplexMatrix s = swap_ab();
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix rho = k % 2 ? testing::random_density(rng, 9)
                                    : testing::ket_projector(testing::random_ket(rng, 9));
    const ComplexMatrix u = tensor_product(testing::random_unitary(rng, 3), testing::random_unitary(rng, 3));
    const double base = log_negativity(DensityMatrix::from_matrix(rho));
    EXPECT_NEAR(log_negativity(DensityMatrix::from_matrix(u * rho * u.adjoint())), base, 1e-10);
    EXPECT_NEAR(log_negativity(DensityMatrix::from_matrix(s * rho * s)), base, 1e-10);
  }
}

TEST(Measures, L1Coherence) {
  EXPECT_DOUBLE_EQ(l1_coherence(DensityMatrix::pure(product_ket(0, 0))), 0.0);
  EXPECT_DOUBLE_EQ(l1_coherence(DensityMatrix::maximally_mixed(9)), 0.0);
  const ComplexVector flat = ComplexVector::Ones(9) / 3.0;
  EXPECT_NEAR(l1_coherence(DensityMatrix::pure(flat)), 1.0, 1e-12);
  // Local phases leave the moduli alone.
  ComplexVector phased = flat;
  for (int k = 0; k < 9; ++k) phased(k) *= std::exp(kI * (0.7 * k));
  EXPECT_NEAR(l1_coherence(DensityMatrix::pure(phased)), 1.0, 1e-12);
  const ComplexVector two = (product_ket(0, 0) + product_ket(2, 2)) / std::sqrt(2.0);
  EXPECT_NEAR(l1_coherence(DensityMatrix::pure(two)), 1.0 / 8.0, 1e-12);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const double c = l1_coherence(DensityMatrix::pure(testing::random_ket(rng, 9)));
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0 + 1e-12);
  }
}

TEST(Measures, TraceDistance) {
  const DensityMatrix a = DensityMatrix::pure(product_ket(0, 0));
  const DensityMatrix b = DensityMatrix::pure(product_ket(1, 1));
  EXPECT_NEAR(trace_distance(a, b), 1.0, 1e-12);
  EXPECT_NEAR(trace_distance(a, a), 0.0, 1e-12);
  std::mt19937_64 rng(6);
  for (int k = 0; k < 20; ++k) {
    const ComplexVector psi = testing::random_ket(rng, 9);
    const ComplexVector phi = testing::random_ket(rng, 9);
    const double overlap = std::norm(psi.dot(phi));
    const DensityMatrix p = DensityMatrix::pure(psi), q = DensityMatrix::pure(phi);
    EXPECT_NEAR(trace_distance(p, q), std::sqrt(1.0 - overlap), 1e-10);
    EXPECT_NEAR(trace_distance(p, q), trace_distance(q, p), 1e-12);
    const DensityMatrix r = DensityMatrix::from_matrix(testing::random_density(rng, 9));
    EXPECT_LE(trace_distance(p, q), trace_distance(p, r) + trace_distance(r, q) + 1e-12);
  }
  EXPECT_THROW(trace_distance(a, DensityMatrix::maximally_mixed(3)), DimensionError);
}

TEST(Measures, Fidelity) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const ComplexVector psi = testing::random_ket(rng, 9);
    const ComplexVector phi = testing::random_ket(rng, 9);
    EXPECT_NEAR(fidelity(DensityMatrix::pure(psi), DensityMatrix::pure(phi)), std::norm(psi.dot(phi)), 1e-8);
    const DensityMatrix r = DensityMatrix::from_matrix(testing::random_density(rng, 9));
    const DensityMatrix s = DensityMatrix::from_matrix(testing::random_density(rng, 9));
    EXPECT_NEAR(fidelity(r, r), 1.0, 1e-10);
    EXPECT_NEAR(fidelity(r, s), fidelity(s, r), 1e-10);
    // Fuchs-van de Graaf.
    const double f = fidelity(r, s), t = trace_distance(r, s);
    EXPECT_LE(1.0 - std::sqrt(f), t + 1e-10);
    EXPECT_LE(t, std::sqrt(1.0 - f) + 1e-10);
  }
  // Commuting states: classical fidelity (sum sqrt(p q))^2.
  ComplexMatrix p = ComplexMatrix::Zero(3, 3), q = ComplexMatrix::Zero(3, 3);
  p.diagonal() << 0.5, 0.3, 0.2;
  q.diagonal() << 0.1, 0.6, 0.3;
  const double bc = std::sqrt(0.05) + std::sqrt(0.18) + std::sqrt(0.06);
  EXPECT_NEAR(fidelity(DensityMatrix::from_matrix(p), DensityMatrix::from_matrix(q)), bc * bc, 1e-12);
}

TEST(Measures, TrajectorySeries) {
  Trajectory traj;
  const DensityMatrix a = DensityMatrix::pure(product_ket(0, 0));
  const DensityMatrix b = DensityMatrix::pure((product_ket(0, 1) + product_ket(1, 0)) / std::sqrt(2.0));
  traj.tau = {0.0, 1.0};
  traj.states = {a, b};
  const MeasureSeries s = measure_trajectory(traj);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s.log_negativity[1], 1.0, 1e-9);
  EXPECT_NEAR(s.l1_coherence[1], 1.0 / 8.0, 1e-12);
  EXPECT_NEAR(s.trace_distance_to_initial[0], 0.0, 1e-12);
  EXPECT_NEAR(s.trace_distance_to_initial[1], 1.0, 1e-12);
  EXPECT_NEAR(s.fidelity_to_initial[1], 0.0, 1e-10);
  const MeasureSeries ln = log_negativity_series(traj);
  EXPECT_EQ(ln.log_negativity, s.log_negativity);
  EXPECT_TRUE(ln.l1_coherence.empty());
}

}  // namespace
}  // namespace qres
