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

#include "qres/linalg.hpp"

#include "qres/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace qres {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols(); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!is_square(m)) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!is_square(m)) return false;
  return max_abs(m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

ComplexMatrix ladder_operator(int dim) {
  if (dim < 2) throw DimensionError("ladder_operator: dimension must be at least 2, got " + std::to_string(dim));
  ComplexMatrix c = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j + 1 < dim; ++j) c(j, j + 1) = std::sqrt(static_cast<double>(j + 1));
  return c;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteDims dims, Subsystem subsystem) {
  const int n = dims.a * dims.b;
  if (dims.a < 1 || dims.b < 1 || rho.rows() != n || rho.cols() != n) {
    throw DimensionError("partial_transpose: matrix is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + ", expected " + std::to_string(n) + "x" + std::to_string(n));
  }
  ComplexMatrix out(n, n);
  // row = i*db + k, col = j*db + l
  for (int i = 0; i < dims.a; ++i)
    for (int k = 0; k < dims.b; ++k)
      for (int j = 0; j < dims.a; ++j)
        for (int l = 0; l < dims.b; ++l) {
          const Complex v = rho(i * dims.b + k, j * dims.b + l);
          if (subsystem == Subsystem::A)
            out(j * dims.b + k, i * dims.b + l) = v;
          else
            out(i * dims.b + l, j * dims.b + k) = v;
        }
  return out;
}

Spectrum eig_hermitian(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) throw DimensionError("eig_hermitian: matrix is not square");
  const double scale = std::max(1.0, max_abs(a));
  const double asym = max_abs(a - a.adjoint());
  if (asym > tol * scale) {
    throw ContractError("eig_hermitian: input is not Hermitian (max |A - A^dagger| = " + std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(a));
  if (solver.info() != Eigen::Success) throw Error("eig_hermitian: eigensolver did not converge");

  Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < s.vectors.cols(); ++k) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < s.vectors.rows(); ++r) {
      const double m = std::abs(s.vectors(r, k));
      if (m > best * (1.0 + 1e-12)) {
        best = m;
        arg = r;
      }
    }
    const Complex pivot = s.vectors(arg, k);
    if (std::abs(pivot) > 0.0) s.vectors.col(k) *= std::conj(pivot) / std::abs(pivot);
  }
  return s;
}

double trace_norm(const ComplexMatrix& a) {
  if (!is_square(a)) throw DimensionError("trace_norm: matrix is not square");
  if (is_hermitian(a, 1e-14 * std::max(1.0, max_abs(a)))) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(a), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues().sum();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a, double clamp_tol) {
  const Spectrum s = eig_hermitian(a, 1e-8);
  if (s.values.size() > 0 && s.values(0) < -clamp_tol) {
    throw InvalidStateError("psd_sqrt: eigenvalue " + std::to_string(s.values(0)) + " below -" +
                            std::to_string(clamp_tol));
  }
  // Eigenvalues at round-off level carry no information; their square roots would.
  const double floor = 1e-14 * std::max(1.0, s.values.cwiseAbs().maxCoeff());
  return s.apply([floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
}

ComplexVector vec(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvec(const ComplexVector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) throw DimensionError("unvec: length mismatch");
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

}  // namespace qres
