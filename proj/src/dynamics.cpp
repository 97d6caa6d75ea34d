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

#include "qres/dynamics.hpp"

#include "qres/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <Eigen/SparseCore>

#include <cmath>
#include <sstream>

namespace qres {
namespace {

// Dense column-stacking Liouvillian for H and rate-weighted jump operators
// given in the same basis: vec(A X B) = (B^T (x) A) vec(X).
ComplexMatrix build_liouvillian(const ComplexMatrix& h, const ChannelSets& channel_sets,
                                const ComplexMatrix* basis) {
  const int d = static_cast<int>(h.rows());
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix l = -kI * (tensor_product(id, h) - tensor_product(h.transpose(), id));

  auto add = [&](const ComplexMatrix& a, double rate) {
    if (rate == 0.0) return;
    const ComplexMatrix ada = a.adjoint() * a;
    l += rate * (tensor_product(a.conjugate(), a) - 0.5 * tensor_product(id, ada) -
                 0.5 * tensor_product(ada.transpose(), id));
  };
  for (const ChannelList& channels : channel_sets) {
    for (const JumpChannel& ch : channels) {
      const ComplexMatrix op = basis ? ComplexMatrix(basis->adjoint() * ch.op * *basis) : ch.op;
      add(op, ch.rate_down);
      if (ch.kind == ChannelKind::transition) add(op.adjoint(), ch.rate_up);
    }
  }
  return l;
}

using SparseMatrix = Eigen::SparseMatrix<Complex>;

SparseMatrix sparsify(const ComplexMatrix& dense) {
  const double cut = 1e-14 * std::max(1.0, max_abs(dense));
  return dense.sparseView(1.0, cut);
}

void check_grid(double t_max, double dt) {
  if (!(dt > 0.0)) throw DomainError("evolve: dt must be positive");
  if (!(t_max >= dt)) throw DomainError("evolve: t_max must be at least dt");
}

struct Grid {
  long steps;
  std::vector<long> samples;
};

Grid make_grid(double t_max, double dt, int stride) {
  if (stride < 1) throw DomainError("evolve: stride must be at least 1");
  Grid g;
  g.steps = static_cast<long>(std::floor(t_max / dt + 1e-9));
  for (long k = 0; k <= g.steps; k += stride) g.samples.push_back(k);
  if (g.samples.back() != g.steps) g.samples.push_back(g.steps);
  return g;
}

void record(Trajectory& traj, double tau, ComplexMatrix rho) {
  traj.tau.push_back(tau);
  traj.trace_deviation.push_back(std::abs(rho.trace() - Complex(1.0, 0.0)));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
  traj.min_eigenvalue.push_back(solver.eigenvalues()(0));
  traj.states.push_back(DensityMatrix::assume_valid(std::move(rho)));
}

}  // namespace

ComplexMatrix gksl_rhs(const ComplexMatrix& rho, const CompositeSystem& system, const ChannelSets& channel_sets) {
  if (rho.rows() != system.dim() || rho.cols() != system.dim()) throw DimensionError("gksl_rhs: state dimension");
  ComplexMatrix out = -kI * (system.h_s * rho - rho * system.h_s);
  for (const ChannelList& channels : channel_sets) out += dissipator(rho, channels);
  return out;
}

ComplexMatrix liouvillian_superoperator(const CompositeSystem& system, const ChannelSets& channel_sets) {
  return build_liouvillian(system.h_s, channel_sets, nullptr);
}

Trajectory evolve(const DensityMatrix& rho0, const CompositeSystem& system, const ChannelSets& channel_sets,
                  double t_max, double dt, EvolutionMode mode, const EvolveOptions& options) {
  check_grid(t_max, dt);
  const int d = system.dim();
  if (rho0.dim() != d) throw DimensionError("evolve: initial state dimension does not match the system");
  const Grid grid = make_grid(t_max, dt, options.stride);

  const ComplexMatrix& v = system.spectrum.vectors;
  const RealVector& energies = system.spectrum.values;
  // All stepping happens in the H_s eigenbasis, where the generator is sparse.
  const ComplexMatrix x0 = v.adjoint() * rho0.matrix() * v;

  Trajectory traj;
  traj.tau.reserve(grid.samples.size());
  traj.states.reserve(grid.samples.size());

  if (mode == EvolutionMode::unitary) {
    for (long k : grid.samples) {
      const double t = static_cast<double>(k) * dt;
      ComplexMatrix x(d, d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) x(a, b) = x0(a, b) * std::exp(-kI * ((energies(a) - energies(b)) * t));
      record(traj, t, v * x * v.adjoint());
    }
    return traj;
  }

  ComplexMatrix h_diag = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a) h_diag(a, a) = energies(a);
  const ComplexMatrix dense = build_liouvillian(h_diag, channel_sets, &v);
  const SparseMatrix gen = sparsify(dense);

  int substeps = 1;
  if (options.auto_substep) {
    const double fastest = dense.diagonal().cwiseAbs().maxCoeff();
    substeps = std::max(1, static_cast<int>(std::ceil(dt * fastest / options.phase_limit - 1e-12)));
  }
  traj.substeps = substeps;
  const double h = dt / substeps;

  ComplexVector x = vec(x0);
  ComplexVector k1(x.size()), k2(x.size()), k3(x.size()), k4(x.size());
  auto hermitize_vec = [d](ComplexVector& y) {
    Eigen::Map<ComplexMatrix> m(y.data(), d, d);
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    m = sym;
  };
  auto trace_of = [d](const ComplexVector& y) {
    Complex tr = 0.0;
    for (int a = 0; a < d; ++a) tr += y(a * d + a);
    return tr;
  };

  std::size_t next = 0;
  for (long step = 0; step <= grid.steps; ++step) {
    if (next < grid.samples.size() && grid.samples[next] == step) {
      record(traj, static_cast<double>(step) * dt, v * unvec(x, d) * v.adjoint());
      ++next;
    }
    if (step == grid.steps) break;
    for (int s = 0; s < substeps; ++s) {
      k1.noalias() = gen * x;
      k2.noalias() = gen * (x + 0.5 * h * k1);
      k3.noalias() = gen * (x + 0.5 * h * k2);
      k4.noalias() = gen * (x + h * k3);
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      hermitize_vec(x);
    }
    const double dev = std::abs(trace_of(x) - Complex(1.0, 0.0));
    // Coherences are invisible to the trace, so a runaway step is also caught
    // by an entry no density matrix can have.
    const double largest = x.cwiseAbs().maxCoeff();
    if (!(dev <= options.trace_abort) || !(largest <= 1.0 + options.trace_abort)) {
      const double t = static_cast<double>(step + 1) * dt;
      std::ostringstream os;
      if (!(dev <= options.trace_abort)) {
        os << "evolve: trace deviation " << dev << " at t = " << t << " exceeds " << options.trace_abort;
      } else {
        os << "evolve: state entry of modulus " << largest << " at t = " << t;
      }
      os << "; reduce dt (currently " << dt << " with " << substeps << " substeps)";
      throw StepSizeError(os.str(), t, dev);
    }
  }
  return traj;
}

DensityMatrix steady_state(const CompositeSystem& system, const ChannelSets& channel_sets,
                           const SteadyStateOptions& options) {
  bool any_rate = false;
  for (const ChannelList& channels : channel_sets)
    for (const JumpChannel& ch : channels) any_rate = any_rate || ch.rate_down > 0.0 || ch.rate_up > 0.0;
  if (!any_rate) throw ContractError("steady_state: no dissipative channel has a nonzero rate");

  const int d = system.dim();
  const ComplexMatrix l = liouvillian_superoperator(system, channel_sets);
  Eigen::JacobiSVD<ComplexMatrix> svd(l, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();  // descending
  const double cut = options.null_tol * sv(0);
  int nullity = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) nullity += sv(k) <= cut ? 1 : 0;
  if (nullity != 1) {
    std::ostringstream os;
    os << "steady_state: Liouvillian null space has dimension " << nullity;
    throw MultiplicityError(os.str(), nullity);
  }
  ComplexMatrix rho = hermitize(unvec(svd.matrixV().col(sv.size() - 1), d));
  rho /= rho.trace();
  rho = hermitize(rho);

  const double residual = max_abs(gksl_rhs(rho, system, channel_sets));
  if (residual > 1e-9) {
    std::ostringstream os;
    os << "steady_state: residual " << residual << " exceeds 1e-9";
    warn(os.str());
  }
  return DensityMatrix::assume_valid(std::move(rho));
}

}  // namespace qres
