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

#include "qres/circuit.hpp"
#include "qres/linalg.hpp"

#include <vector>

namespace qres {

/// Ohmic bath with a Drude-type cutoff. kappa and cutoff are in E_C/hbar,
/// beta in 1/E_C (k_B = 1).
struct BathParams {
  double kappa = 0.0;
  double beta = 1.0;
  double cutoff = 1.0;

  void validate() const;

  /// kappa = omega01/20, beta = 5/omega01, cutoff = 50 omega01.
  static BathParams defaults(double omega01);
};

/// J(w) = (kappa w / omega01) / (1 + (w/cutoff)^2)^2, odd in w.
double spectral_density(double omega, const BathParams& params, double omega01);

/// S(w) = J(w) / (1 - exp(-beta w)); S(0) is the analytic limit kappa / (omega01 beta).
double transition_rate(double omega, const BathParams& params, double omega01);

enum class ChannelKind { transition, dephasing };

/// One Lindblad channel Pi_nm = q_nm |n><m| in the product basis.
struct JumpChannel {
  ChannelKind kind = ChannelKind::transition;
  int lower = 0;  // n
  int upper = 0;  // m
  double omega = 0.0;
  ComplexMatrix op;
  double rate_down = 0.0;  // S(omega), attached to Pi
  double rate_up = 0.0;    // S(-omega), attached to Pi^dagger; zero for dephasing
};

using ChannelList = std::vector<JumpChannel>;

struct ChannelOptions {
  double q_tol = 1e-10;
  /// Gaps below this are treated as degenerate and get no transition channel.
  double omega_tol = 1e-9;
};

/// Lindblad channels induced by the bath attached to transmon `bath_index`.
ChannelList jump_channels(const CompositeSystem& system, int bath_index, const BathParams& params,
                          const ChannelOptions& options = {});

/// The GKSL dissipator sum over `channels` applied to rho.
ComplexMatrix dissipator(const ComplexMatrix& rho, const ChannelList& channels);

}  // namespace qres
