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

#include <array>

namespace qres {

/// How the three retained transmon levels are obtained.
enum class BasisMode {
  /// Diagonalise the quartic transmon Hamiltonian in an extended Fock space.
  numeric,
  /// First-order energies and the harmonic-oscillator charge matrix elements.
  perturbative,
};

/// Electrical parameters of the two identical transmons and their coupling.
/// Energies are in units of E_C, frequencies in E_C/hbar (hbar = 1).
struct CircuitParams {
  double e_c = 1.0;
  double e_j = 100.0;
  double gamma = 0.2;
  int fock_dim = 10;
  BasisMode basis = BasisMode::numeric;

  /// Throws DomainError on invalid values; warns outside the transmon regime.
  void validate() const;

  double omega0() const;  // sqrt(8 E_C E_J)
  double n_zpf() const;   // (E_J / 32 E_C)^(1/4)
  double phi_zpf() const; // (2 E_C / E_J)^(1/4)
};

/// Harmonic oscillator plus a negative quartic correction in the number basis:
/// omega0 (c^dag c + 1/2) - quartic (c^dag + c)^4.
///
/// The quartic operator is formed in a larger space and then restricted, so
/// every retained matrix element is exact.
ComplexMatrix transmon_hamiltonian(double omega0, double quartic, int fock_dim);

/// fock_dim x fock_dim transmon Hamiltonian with quartic coefficient E_C/12.
/// The constant -E_J is dropped.
ComplexMatrix single_transmon_hamiltonian(const CircuitParams& params);

/// Charge operator i n_zpf (c^dag - c) on a `dim`-level Fock space.
ComplexMatrix charge_operator(const CircuitParams& params, int dim);

struct TransmonBasis {
  std::array<double, 3> energies{};
  ComplexMatrix charge_op;  // 3x3, in the retained eigenbasis
  double anharmonicity = 0.0;
};

TransmonBasis transmon_eigenbasis(const CircuitParams& params);

struct CompositeSystem {
  CircuitParams params;
  TransmonBasis transmon;
  ComplexMatrix h_s;       // 9x9 in the |ij> product basis, i = transmon 1
  Spectrum spectrum;       // of h_s
  ComplexMatrix n1, n2;    // n_1 (x) I and I (x) n_2 in the product basis
  ComplexMatrix q1, q2;    // the same operators in the h_s eigenbasis
  double omega01 = 0.0;

  int dim() const { return static_cast<int>(h_s.rows()); }
  /// Charge operator coupled to bath `index` (1 or 2), eigenbasis.
  const ComplexMatrix& bath_operator(int index) const;
};

CompositeSystem composite_hamiltonian(const CircuitParams& params);

/// Maps 4 C_g / (C_1 C_2) onto gamma in E_C/hbar. `scale` is e^2 / hbar
/// expressed in E_C/hbar per inverse capacitance unit; with capacitances
/// measured in units of the transmon's total capacitance C this is
/// e^2 / C = 2 E_C, hence the default.
struct CapacitanceUnits {
  double scale = 2.0;
};

double coupling_from_capacitances(double c_g, double c_1, double c_2, CapacitanceUnits units = {});

}  // namespace qres
