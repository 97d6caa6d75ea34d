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

#include <Eigen/Dense>

#include <complex>

namespace qres {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Spectral decomposition of a Hermitian matrix.
///
/// Eigenvalues are ascending and `vectors` holds the matching orthonormal
/// eigenvectors as columns. Each eigenvector is phase-fixed so that its
/// largest-modulus component is real and positive (first index wins ties).
struct Spectrum {
  RealVector values;
  ComplexMatrix vectors;

  int dim() const { return static_cast<int>(values.size()); }
  /// V diag(f(lambda)) V^dagger
  template <typename F>
  ComplexMatrix apply(F&& f) const {
    RealVector mapped = values.unaryExpr(f);
    return vectors * mapped.asDiagonal() * vectors.adjoint();
  }
};

enum class Subsystem { A, B };

struct BipartiteDims {
  int a = 3;
  int b = 3;
};

/// Largest entry modulus.
double max_abs(const ComplexMatrix& m);

bool is_square(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

/// (m + m^dagger) / 2
ComplexMatrix hermitize(const ComplexMatrix& m);

/// Annihilation operator c = sum_j sqrt(j+1) |j><j+1| on a `dim`-level Fock space.
ComplexMatrix ladder_operator(int dim);

/// Kronecker product; the left factor carries the slow index.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transposes the block index of one tensor factor.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteDims dims, Subsystem subsystem);

/// Hermitian eigendecomposition. Rejects inputs that are not Hermitian to
/// within `tol` relative to the largest entry.
Spectrum eig_hermitian(const ComplexMatrix& a, double tol = 1e-10);

/// Sum of singular values. Hermitian inputs take the eigenvalue route.
double trace_norm(const ComplexMatrix& a);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-clamp_tol, 0) are treated as zero; anything more
/// negative raises InvalidStateError.
ComplexMatrix psd_sqrt(const ComplexMatrix& a, double clamp_tol);

/// Column-stacking vectorisation and its inverse.
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, int dim);

}  // namespace qres
