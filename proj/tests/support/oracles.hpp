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

// Test-only reference computations. Nothing here calls into the integrator
// or the measure implementations it is used to check.

#include "qres/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <random>

namespace qres::testing {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(n(rng), n(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  const ComplexMatrix g = random_matrix(rng, dim, dim);
  return 0.5 * (g + g.adjoint());
}

/// Hilbert-Schmidt random full-rank density matrix.
inline ComplexMatrix random_density(std::mt19937_64& rng, int dim) {
  const ComplexMatrix g = random_matrix(rng, dim, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

inline ComplexVector random_ket(std::mt19937_64& rng, int dim) {
  ComplexVector v = random_matrix(rng, dim, 1);
  return v / v.norm();
}

/// Haar unitary from the QR decomposition of a Ginibre matrix, phases fixed.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, int dim) {
  const ComplexMatrix g = random_matrix(rng, dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return q;
}

inline ComplexMatrix ket_projector(const ComplexVector& v) { return v * v.adjoint(); }

/// Index of |ij> in the 3x3 product basis.
inline int idx(int i, int j) { return 3 * i + j; }

inline ComplexVector product_ket(int i, int j) {
  ComplexVector v = ComplexVector::Zero(9);
  v(idx(i, j)) = 1.0;
  return v;
}

/// exp(L t) applied to column-stacked rho0.
inline ComplexMatrix propagate_exact(const ComplexMatrix& liouvillian, const ComplexMatrix& rho0, double t) {
  const ComplexMatrix prop = (liouvillian * t).exp();
  const ComplexVector v = prop * Eigen::Map<const ComplexVector>(rho0.data(), rho0.size());
  return Eigen::Map<const ComplexMatrix>(v.data(), rho0.rows(), rho0.cols());
}

/// Brute-force eigenvalues via the generic (non-Hermitian) complex solver.
inline Eigen::VectorXd generic_real_eigenvalues(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
  Eigen::VectorXd out = es.eigenvalues().real();
  std::sort(out.data(), out.data() + out.size());
  return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace qres::testing
