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

#include "qres/state.hpp"

#include "qres/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace qres {

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  if (!is_square(m) || m.rows() == 0) throw DimensionError("density matrix must be square and non-empty");
  const double herm = max_abs(m - m.adjoint());
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (max deviation " << herm << ")";
    throw InvalidStateError(os.str());
  }
  DensityMatrix out(hermitize(m));
  const double tr = out.trace_deviation();
  if (tr > kTraceTol) {
    std::ostringstream os;
    os << "density matrix trace differs from 1 by " << tr;
    throw InvalidStateError(os.str());
  }
  const double lo = out.min_eigenvalue();
  if (lo < -kNegativeEigTol) {
    std::ostringstream os;
    os << "density matrix has eigenvalue " << lo;
    throw InvalidStateError(os.str());
  }
  return out;
}

DensityMatrix DensityMatrix::assume_valid(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw InvalidStateError("pure state vector has zero norm");
  const ComplexVector u = psi / norm;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::trace_deviation() const { return std::abs(mat_.trace() - Complex(1.0, 0.0)); }

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(mat_), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::assume_valid(tensor_product(a.matrix(), b.matrix()));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims, Subsystem keep) {
  if (rho.rows() != dims.a * dims.b || rho.cols() != dims.a * dims.b) {
    throw DimensionError("partial_trace: dimension mismatch");
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dims.a, dims.a);
    for (int i = 0; i < dims.a; ++i)
      for (int j = 0; j < dims.a; ++j)
        for (int k = 0; k < dims.b; ++k) out(i, j) += rho(i * dims.b + k, j * dims.b + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dims.b, dims.b);
  for (int k = 0; k < dims.b; ++k)
    for (int l = 0; l < dims.b; ++l)
      for (int i = 0; i < dims.a; ++i) out(k, l) += rho(i * dims.b + k, i * dims.b + l);
  return out;
}

}  // namespace qres
