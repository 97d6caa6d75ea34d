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

#include "qres/circuit.hpp"

#include "qres/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qres {

void CircuitParams::validate() const {
  if (!(e_c > 0.0)) throw DomainError("circuit: e_c must be positive");
  if (!(e_j > 0.0)) throw DomainError("circuit: e_j must be positive");
  if (!(gamma >= 0.0)) throw DomainError("circuit: gamma must be non-negative");
  if (fock_dim < 6) throw DomainError("circuit: fock_dim must be at least 6");
  if (e_j / e_c < 50.0) {
    std::ostringstream os;
    os << "circuit: E_J/E_C = " << e_j / e_c << " is outside the transmon regime (< 50)";
    warn(os.str());
  }
}

double CircuitParams::omega0() const { return std::sqrt(8.0 * e_c * e_j); }
double CircuitParams::n_zpf() const { return std::pow(e_j / (32.0 * e_c), 0.25); }
double CircuitParams::phi_zpf() const { return std::pow(2.0 * e_c / e_j, 0.25); }

ComplexMatrix transmon_hamiltonian(double omega0, double quartic, int fock_dim) {
  const int big = fock_dim + 4;
  const ComplexMatrix c = ladder_operator(big);
  const ComplexMatrix x = c + c.adjoint();
  const ComplexMatrix x2 = x * x;
  const ComplexMatrix x4 = (x2 * x2).topLeftCorner(fock_dim, fock_dim);

  ComplexMatrix h = -quartic * x4;
  for (int n = 0; n < fock_dim; ++n) h(n, n) += omega0 * (n + 0.5);
  return hermitize(h);
}

ComplexMatrix single_transmon_hamiltonian(const CircuitParams& params) {
  params.validate();
  return transmon_hamiltonian(params.omega0(), params.e_c / 12.0, params.fock_dim);
}

ComplexMatrix charge_operator(const CircuitParams& params, int dim) {
  const ComplexMatrix c = ladder_operator(dim);
  return kI * params.n_zpf() * (c.adjoint() - c);
}

namespace {

struct Projected {
  std::array<double, 3> energies;
  ComplexMatrix charge;
};

Projected project_lowest_three(const CircuitParams& params, int fock_dim) {
  const ComplexMatrix h = transmon_hamiltonian(params.omega0(), params.e_c / 12.0, fock_dim);
  const Spectrum s = eig_hermitian(h);
  const ComplexMatrix v = s.vectors.leftCols(3);
  Projected p;
  for (int k = 0; k < 3; ++k) p.energies[k] = s.values(k);
  p.charge = hermitize(v.adjoint() * charge_operator(params, fock_dim) * v);
  return p;
}

}  // namespace

TransmonBasis transmon_eigenbasis(const CircuitParams& params) {
  params.validate();
  TransmonBasis b;
  if (params.basis == BasisMode::perturbative) {
    for (int n = 0; n < 3; ++n) {
      b.energies[n] = params.omega0() * (n + 0.5) - params.e_c / 12.0 * (6.0 * n * n + 6.0 * n + 3.0);
    }
    b.charge_op = charge_operator(params, 3);
  } else {
    const Projected p = project_lowest_three(params, params.fock_dim);
    const Projected wider = project_lowest_three(params, params.fock_dim + 2);
    double shift = 0.0;
    for (int k = 0; k < 3; ++k) shift = std::max(shift, std::abs(p.energies[k] - wider.energies[k]));
    if (shift > 1e-6 * params.e_c) {
      std::ostringstream os;
      os << "circuit: transmon levels not converged at fock_dim = " << params.fock_dim << " (shift " << shift
         << " E_C when adding two levels)";
      warn(os.str());
    }
    b.energies = p.energies;
    b.charge_op = p.charge;
  }
  b.anharmonicity = (b.energies[2] - b.energies[1]) - (b.energies[1] - b.energies[0]);
  return b;
}

const ComplexMatrix& CompositeSystem::bath_operator(int index) const {
  if (index == 1) return q1;
  if (index == 2) return q2;
  throw DomainError("bath index must be 1 or 2");
}

CompositeSystem composite_hamiltonian(const CircuitParams& params) {
  CompositeSystem sys;
  sys.params = params;
  sys.transmon = transmon_eigenbasis(params);

  ComplexMatrix h1 = ComplexMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) h1(k, k) = sys.transmon.energies[k];
  const ComplexMatrix id3 = ComplexMatrix::Identity(3, 3);

  sys.n1 = tensor_product(sys.transmon.charge_op, id3);
  sys.n2 = tensor_product(id3, sys.transmon.charge_op);
  sys.h_s = hermitize(tensor_product(h1, id3) + tensor_product(id3, h1) + params.gamma * sys.n1 * sys.n2);
  sys.spectrum = eig_hermitian(sys.h_s);

  const ComplexMatrix& v = sys.spectrum.vectors;
  sys.q1 = hermitize(v.adjoint() * sys.n1 * v);
  sys.q2 = hermitize(v.adjoint() * sys.n2 * v);
  sys.omega01 = sys.spectrum.values(1) - sys.spectrum.values(0);
  return sys;
}

double coupling_from_capacitances(double c_g, double c_1, double c_2, CapacitanceUnits units) {
  if (!(c_g > 0.0) || !(c_1 > 0.0) || !(c_2 > 0.0)) {
    throw DomainError("coupling_from_capacitances: capacitances must be positive");
  }
  if (!(units.scale > 0.0)) throw DomainError("coupling_from_capacitances: unit scale must be positive");
  if (c_g > 0.1 * std::min(c_1, c_2)) {
    warn("coupling_from_capacitances: C_g is not small compared to C_1, C_2; the weak-coupling form is inaccurate");
  }
  return units.scale * 4.0 * c_g / (c_1 * c_2);
}

}  // namespace qres
