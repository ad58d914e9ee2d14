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

#pragma once

/**
 * @file relstate.hpp
 * @brief Bipartite states, relative-state decomposition and premeasurement.
 *
 * A bipartite state is the amplitude matrix a(i, j) = <phi_i E_j|Psi> over a
 * system of dimension dim_s and an environment of dimension dim_e. Expanding
 * it in a system basis gives
 *
 *   |Psi> = sum_i a_i |phi_i> |R_i>,   |R_i> = sum_j (a_ij / a_i) |E_j>,
 *
 * where the weights a_i are stored as the non-negative moduli |a_i| and the
 * phase is carried by |R_i>. Rows with a_i = 0 have no relative state and are
 * masked.
 */

#include <utility>
#include <vector>

#include "rql/hilbert.hpp"
#include "rql/measures.hpp"

namespace rql {

class BipartiteState {
 public:
  /// amps is dim_s x dim_e with unit Frobenius norm (within tol.norm).
  static BipartiteState from_amplitudes(Operator amps, const Tolerances& tol = {});
  /// Reshape a joint vector of length dim_s * dim_e (system index outer).
  static BipartiteState from_joint(const StateVector& joint, Index dim_s, Index dim_e);
  static BipartiteState product(const StateVector& system, const StateVector& environment);

  Index dim_s() const { return amps_.rows(); }
  Index dim_e() const { return amps_.cols(); }
  const Operator& amplitudes() const { return amps_; }
  Complex amplitude(Index i, Index j) const { return amps_(i, j); }
  /// Flattened joint vector, index i * dim_e + j.
  StateVector joint() const;

 private:
  explicit BipartiteState(Operator amps) : amps_(std::move(amps)) {}
  Operator amps_;
};

struct RelativeStateDecomposition {
  StateList basis;                  ///< system basis |phi_i>
  std::vector<double> weights;      ///< |a_i|
  StateList rel_states;             ///< |R_i>; zero variant where masked
  std::vector<bool> defined_mask;   ///< false where |a_i| is (numerically) zero

  Index dim_s() const { return static_cast<Index>(basis.size()); }
  Index dim_e() const { return rel_states.front().dim(); }
  /// sum_i a_i |phi_i> (x) |R_i>.
  BipartiteState reassemble() const;
};

/// Relative states of `state` with respect to an orthonormal complete system
/// basis. A row is masked when its squared norm is below tol.zero.
RelativeStateDecomposition decompose(const BipartiteState& state, std::span<const StateVector> basis_s,
                                     const Tolerances& tol = {});

/// rho_S = Tr_E |Psi><Psi| = a a^dagger.
DensityMatrix reduced_density_system(const BipartiteState& state);
/// rho_E = Tr_S |Psi><Psi| = a^T conj(a).
DensityMatrix reduced_density_environment(const BipartiteState& state);

/// von Neumann entropy in bits, -sum lambda log2 lambda with 0 log 0 = 0.
double entanglement_entropy(const DensityMatrix& rho, const Tolerances& tol = {});

/// (S(rho_S), S(rho_E)); the two agree for any pure bipartite state.
std::pair<double, double> entropy_symmetry_check(const BipartiteState& state, const Tolerances& tol = {});

/**
 * Joint-space unitary with U (|phi_i> (x) |ready>) = |phi_i> (x) |target_i>.
 *
 * Targets need only be normalized. The defining map is an isometry from
 * span{phi_i (x) ready} onto span{phi_i (x) target_i}; both sides are
 * completed with unitary_completion and U = W_out W_in^dagger, so targets
 * equal to `ready` give the identity.
 */
Operator premeasurement_unitary(std::span<const StateVector> basis_s, std::span<const StateVector> targets,
                                const StateVector& ready, const Tolerances& tol = {});

/// U (psi_0 (x) ready).
BipartiteState evolve(const StateVector& initial_s, const StateVector& ready, const Operator& u,
                      const Tolerances& tol = {});

/**
 * Partial relative states produced by two successive premeasurements, first
 * in basis phi and then in basis chi:
 *
 *   Psi(t2) = sum_ij <chi_j|phi_i><phi_i|psi_0> |chi_j> (x) |R_ji>.
 */
struct PartialRelativeFamily {
  std::vector<StateList> rel_states;  ///< rel_states[j][i] = |R_ji>
  Operator transition;                ///< transition(j, i) = <chi_j|phi_i>
  Amplitudes initial;                 ///< initial(i) = <phi_i|psi_0>

  /// Builds transition and initial from the two bases and psi_0.
  static PartialRelativeFamily make(std::span<const StateVector> basis_f, std::span<const StateVector> basis_x,
                                    const StateVector& psi0, std::vector<StateList> rel_states,
                                    const Tolerances& tol = {});
};

/// Assembles Psi(t2). Throws if the result is not normalized within
/// tol.norm, which happens when the R_ji cannot come from a unitary.
BipartiteState two_stage_state(const PartialRelativeFamily& family, std::span<const StateVector> basis_x,
                               const Tolerances& tol = {});

}  // namespace rql
