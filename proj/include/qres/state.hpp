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

#include "qres/linalg.hpp"

namespace qres {

/// Hermitian, unit-trace, positive semidefinite matrix.
///
/// `from_matrix` validates; `assume_valid` is for states produced by the
/// integrator, whose deviations are tracked separately as diagnostics.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-9;
  static constexpr double kTraceTol = 1e-9;
  static constexpr double kNegativeEigTol = 1e-8;

  DensityMatrix() = default;

  static DensityMatrix from_matrix(const ComplexMatrix& m);
  static DensityMatrix assume_valid(ComplexMatrix m);
  /// |psi><psi| / <psi|psi>
  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(int dim);

  const ComplexMatrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  double trace_deviation() const;
  double min_eigenvalue() const;
  double purity() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Kronecker product of two local states (transmon 1 on the left).
DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state of one factor of a bipartite state.
ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims, Subsystem keep);

}  // namespace qres
