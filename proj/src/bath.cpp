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

#include "qres/bath.hpp"

#include "qres/errors.hpp"

#include <cmath>
#include <sstream>

namespace qres {

void BathParams::validate() const {
  if (!(kappa >= 0.0)) throw DomainError("bath: kappa must be non-negative");
  if (!(beta > 0.0)) throw DomainError("bath: beta must be positive");
  if (!(cutoff > 0.0)) throw DomainError("bath: cutoff must be positive");
}

BathParams BathParams::defaults(double omega01) {
  return BathParams{omega01 / 20.0, 5.0 / omega01, 50.0 * omega01};
}

double spectral_density(double omega, const BathParams& params, double omega01) {
  const double x = omega / params.cutoff;
  const double d = 1.0 + x * x;
  return params.kappa * omega / omega01 / (d * d);
}

double transition_rate(double omega, const BathParams& params, double omega01) {
  if (omega == 0.0) return params.kappa / (omega01 * params.beta);
  return spectral_density(omega, params, omega01) / -std::expm1(-params.beta * omega);
}

ChannelList jump_channels(const CompositeSystem& system, int bath_index, const BathParams& params,
                          const ChannelOptions& options) {
  params.validate();
  const ComplexMatrix& q = system.bath_operator(bath_index);
  const ComplexMatrix& v = system.spectrum.vectors;
  const RealVector& w = system.spectrum.values;
  const int d = system.dim();
  const double omega01 = system.omega01;

  ChannelList out;
  double worst_ratio = 0.0;
  for (int n = 0; n < d; ++n) {
    for (int m = 0; m < d; ++m) {
      const double omega = w(m) - w(n);
      if (!(omega > options.omega_tol)) continue;
      const Complex qnm = q(n, m);
      if (std::abs(qnm) <= options.q_tol) continue;
      JumpChannel ch;
      ch.kind = ChannelKind::transition;
      ch.lower = n;
      ch.upper = m;
      ch.omega = omega;
      ch.op = qnm * v.col(n) * v.col(m).adjoint();
      ch.rate_down = transition_rate(omega, params, omega01);
      ch.rate_up = transition_rate(-omega, params, omega01);
      worst_ratio = std::max(worst_ratio, ch.rate_down / omega);
      out.push_back(std::move(ch));
    }
  }
  const double s0 = transition_rate(0.0, params, omega01);
  for (int n = 0; n < d; ++n) {
    const double qnn = q(n, n).real();
    if (std::abs(qnn) <= options.q_tol) continue;
    JumpChannel ch;
    ch.kind = ChannelKind::dephasing;
    ch.lower = n;
    ch.upper = n;
    ch.omega = 0.0;
    ch.op = qnn * v.col(n) * v.col(n).adjoint();
    ch.rate_down = s0;
    ch.rate_up = 0.0;
    out.push_back(std::move(ch));
  }

  if (out.empty()) warn("bath: no jump channel survived the q tolerance for bath " + std::to_string(bath_index));
  if (worst_ratio >= 0.1) {
    std::ostringstream os;
    os << "bath " << bath_index << ": max S(w)/w = " << worst_ratio << " leaves the weak-coupling regime";
    warn(os.str());
  }
  return out;
}

namespace {

// rate * (A rho A^dag - 1/2 {A^dag A, rho})
void add_lindblad_term(ComplexMatrix& acc, const ComplexMatrix& rho, const ComplexMatrix& a, double rate) {
  if (rate == 0.0) return;
  const ComplexMatrix ad = a.adjoint();
  const ComplexMatrix ada = ad * a;
  acc += rate * (a * rho * ad - 0.5 * (ada * rho + rho * ada));
}

}  // namespace

ComplexMatrix dissipator(const ComplexMatrix& rho, const ChannelList& channels) {
  ComplexMatrix acc = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const JumpChannel& ch : channels) {
    if (ch.op.rows() != rho.rows()) throw DimensionError("dissipator: channel and state dimensions differ");
    add_lindblad_term(acc, rho, ch.op, ch.rate_down);
    if (ch.kind == ChannelKind::transition) add_lindblad_term(acc, rho, ch.op.adjoint(), ch.rate_up);
  }
  return acc;
}

}  // namespace qres
