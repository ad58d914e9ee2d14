// Copyright 2026 The relstate-logic Authors
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

#include "rql/relstate.hpp"

#include <cmath>
#include <stdexcept>

namespace rql {

namespace {

void require_complete_basis(std::span<const StateVector> basis, Index dim, const char* what,
                            const Tolerances& tol) {
  if (static_cast<Index>(basis.size()) != dim) {
    throw std::invalid_argument(std::string(what) + ": basis size does not match dimension");
  }
  for (const auto& b : basis) {
    if (b.dim() != dim) throw std::invalid_argument(std::string(what) + ": basis vector dimension mismatch");
  }
  require_orthonormal(basis, what, tol);
}

Amplitudes flatten(const Operator& a) {
  Amplitudes v(a.size());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  }
  return v;
}

}  // namespace

BipartiteState BipartiteState::from_amplitudes(Operator amps, const Tolerances& tol) {
  if (amps.rows() <= 0 || amps.cols() <= 0) throw std::invalid_argument("BipartiteState: empty amplitude matrix");
  if (!amps.allFinite()) throw std::invalid_argument("BipartiteState: non-finite amplitude");
  if (std::abs(amps.squaredNorm() - 1.0) > tol.norm) {
    throw std::invalid_argument("BipartiteState: amplitudes are not normalized");
  }
  return BipartiteState(std::move(amps));
}

BipartiteState BipartiteState::from_joint(const StateVector& joint, Index dim_s, Index dim_e) {
  if (joint.is_zero()) throw std::invalid_argument("BipartiteState: zero joint vector");
  if (dim_s <= 0 || dim_e <= 0 || joint.dim() != dim_s * dim_e) {
    throw std::invalid_argument("BipartiteState: joint dimension mismatch");
  }
  Operator a(dim_s, dim_e);
  for (Index i = 0; i < dim_s; ++i) {
    for (Index j = 0; j < dim_e; ++j) a(i, j) = joint[i * dim_e + j];
  }
  return BipartiteState(std::move(a));
}

BipartiteState BipartiteState::product(const StateVector& system, const StateVector& environment) {
  return from_joint(tensor_product(system, environment), system.dim(), environment.dim());
}

StateVector BipartiteState::joint() const {
  return StateVector::normalized(flatten(amps_));
}

BipartiteState RelativeStateDecomposition::reassemble() const {
  const Index ds = dim_s();
  const Index de = dim_e();
  Operator a = Operator::Zero(ds, de);
  for (Index i = 0; i < ds; ++i) {
    if (!defined_mask[static_cast<std::size_t>(i)]) continue;
    const auto& phi = basis[static_cast<std::size_t>(i)].amplitudes();
    const auto& r = rel_states[static_cast<std::size_t>(i)].amplitudes();
    a += weights[static_cast<std::size_t>(i)] * phi * r.transpose();
  }
  return BipartiteState::from_amplitudes(std::move(a), Tolerances{.norm = 1e-9});
}

RelativeStateDecomposition decompose(const BipartiteState& state, std::span<const StateVector> basis_s,
                                     const Tolerances& tol) {
  require_complete_basis(basis_s, state.dim_s(), "decompose", tol);
  // Coefficients of Psi in the product basis phi_i (x) E_j.
  const Operator coeffs = as_columns(basis_s).adjoint() * state.amplitudes();

  RelativeStateDecomposition out;
  out.basis.assign(basis_s.begin(), basis_s.end());
  for (Index i = 0; i < coeffs.rows(); ++i) {
    const Amplitudes row = coeffs.row(i).transpose();
    const double w2 = row.squaredNorm();
    if (w2 < tol.zero) {
      out.weights.push_back(0.0);
      out.rel_states.push_back(StateVector::zero(state.dim_e()));
      out.defined_mask.push_back(false);
    } else {
      const double w = std::sqrt(w2);
      out.weights.push_back(w);
      out.rel_states.push_back(StateVector::normalized(row / w));
      out.defined_mask.push_back(true);
    }
  }
  return out;
}

DensityMatrix reduced_density_system(const BipartiteState& state) {
  const Operator& a = state.amplitudes();
  Operator rho = a * a.adjoint();
  return DensityMatrix::from_operator(0.5 * (rho + rho.adjoint()), Tolerances{.norm = 1e-9});
}

DensityMatrix reduced_density_environment(const BipartiteState& state) {
  const Operator& a = state.amplitudes();
  Operator rho = a.transpose() * a.conjugate();
  return DensityMatrix::from_operator(0.5 * (rho + rho.adjoint()), Tolerances{.norm = 1e-9});
}

double entanglement_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix(), tol)) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  const double cap = std::log2(static_cast<double>(rho.dim()));
  return std::clamp(s, 0.0, cap);
}

std::pair<double, double> entropy_symmetry_check(const BipartiteState& state, const Tolerances& tol) {
  return {entanglement_entropy(reduced_density_system(state), tol),
          entanglement_entropy(reduced_density_environment(state), tol)};
}

Operator premeasurement_unitary(std::span<const StateVector> basis_s, std::span<const StateVector> targets,
                                const StateVector& ready, const Tolerances& tol) {
  if (basis_s.empty()) throw std::invalid_argument("premeasurement_unitary: empty system basis");
  const Index ds = basis_s.front().dim();
  const Index de = ready.dim();
  require_complete_basis(basis_s, ds, "premeasurement_unitary", tol);
  if (targets.size() != basis_s.size()) {
    throw std::invalid_argument("premeasurement_unitary: one target per system basis vector required");
  }
  if (ready.is_zero()) throw std::invalid_argument("premeasurement_unitary: zero ready state");
  for (const auto& t : targets) {
    if (t.is_zero() || t.dim() != de) throw std::invalid_argument("premeasurement_unitary: target dimension mismatch");
  }

  StateList in, out;
  for (std::size_t i = 0; i < basis_s.size(); ++i) {
    in.push_back(tensor_product(basis_s[i], ready));
    out.push_back(tensor_product(basis_s[i], targets[i]));
  }
  const Operator w_in = unitary_completion(in, tol);
  const Operator w_out = unitary_completion(out, tol);
  return w_out * w_in.adjoint();
}

BipartiteState evolve(const StateVector& initial_s, const StateVector& ready, const Operator& u,
                      const Tolerances& tol) {
  const Index n = initial_s.dim() * ready.dim();
  if (u.rows() != n || u.cols() != n) throw std::invalid_argument("evolve: dimension mismatch");
  if (!is_unitary(u, tol)) throw std::invalid_argument("evolve: operator is not unitary");
  const StateVector psi0 = tensor_product(initial_s, ready);
  const StateVector out = StateVector::normalized(u * psi0.amplitudes());
  return BipartiteState::from_joint(out, initial_s.dim(), ready.dim());
}

PartialRelativeFamily PartialRelativeFamily::make(std::span<const StateVector> basis_f,
                                                  std::span<const StateVector> basis_x, const StateVector& psi0,
                                                  std::vector<StateList> rel_states, const Tolerances& tol) {
  const Index ds = psi0.dim();
  require_complete_basis(basis_f, ds, "PartialRelativeFamily", tol);
  require_complete_basis(basis_x, ds, "PartialRelativeFamily", tol);
  const Operator f = as_columns(basis_f);
  const Operator x = as_columns(basis_x);
  return PartialRelativeFamily{std::move(rel_states), x.adjoint() * f, f.adjoint() * psi0.amplitudes()};
}

BipartiteState two_stage_state(const PartialRelativeFamily& family, std::span<const StateVector> basis_x,
                               const Tolerances& tol) {
  const Index dx = family.transition.rows();
  const Index ds = family.transition.cols();
  require_complete_basis(basis_x, dx, "two_stage_state", tol);
  if (family.initial.size() != ds || static_cast<Index>(family.rel_states.size()) != dx) {
    throw std::invalid_argument("two_stage_state: family dimensions are inconsistent");
  }
  if (!is_unitary(family.transition, Tolerances{.idem = 1e-9})) {
    throw std::invalid_argument("two_stage_state: transition matrix is not unitary");
  }
  Index de = -1;
  for (const auto& row : family.rel_states) {
    if (static_cast<Index>(row.size()) != ds) throw std::invalid_argument("two_stage_state: ragged rel_states");
    for (const auto& r : row) {
      if (r.is_zero()) throw std::invalid_argument("two_stage_state: zero partial relative state");
      if (de < 0) de = r.dim();
      if (r.dim() != de) throw std::invalid_argument("two_stage_state: environment dimension mismatch");
    }
  }

  Operator a = Operator::Zero(dx, de);
  for (Index j = 0; j < dx; ++j) {
    Amplitudes env = Amplitudes::Zero(de);
    for (Index i = 0; i < ds; ++i) {
      env += family.transition(j, i) * family.initial(i) *
             family.rel_states[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].amplitudes();
    }
    a += basis_x[static_cast<std::size_t>(j)].amplitudes() * env.transpose();
  }
  return BipartiteState::from_amplitudes(std::move(a), tol);
}

}  // namespace rql
