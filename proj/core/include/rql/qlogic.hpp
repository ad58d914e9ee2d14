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
 * @file qlogic.hpp
 * @brief Propositions about conjugate bases, their ordered conjunction,
 * disjunction over relative states, conditioning, and ternary truth values.
 *
 * Conjunction is ordered: in phi_i AND chi_j the left-hand proposition is
 * measured first, so
 *
 *   P(phi_i AND chi_j) = |<chi_j|phi_i>|^2 |<phi_i|psi_0>|^2,
 *   P(chi_j AND phi_i) = |<phi_i|chi_j>|^2 |<chi_j|psi_0>|^2,
 *
 * and the two differ in general while
 * P(phi_i AND chi_j) P(chi_j) = P(chi_j AND phi_i) P(phi_i) always holds.
 */

#include <optional>
#include <string_view>

#include "rql/hilbert.hpp"
#include "rql/measures.hpp"
#include "rql/relstate.hpp"

namespace rql {

enum class TernaryValue { True, False, Uncertain };

std::string_view to_string(TernaryValue v);

/// Two orthonormal complete bases of the same space. first() is indexed by
/// i, second() by j.
class ConjugatePair {
 public:
  static ConjugatePair make(StateList first, StateList second, const Tolerances& tol = {});
  /// sigma_z eigenbasis paired with the sigma_x eigenbasis.
  static ConjugatePair qubit_zx();
  /// Computational basis paired with the discrete Fourier basis.
  static ConjugatePair fourier(Index dim);

  Index dim() const { return first_.front().dim(); }
  const StateList& first() const { return first_; }
  const StateList& second() const { return second_; }
  /// <chi_j|phi_i>.
  Complex overlap(Index j, Index i) const { return overlaps_(j, i); }
  /// Matrix of <chi_j|phi_i> (row j, column i); unitary.
  const Operator& overlaps() const { return overlaps_; }

 private:
  ConjugatePair(StateList f, StateList x, Operator o)
      : first_(std::move(f)), second_(std::move(x)), overlaps_(std::move(o)) {}

  StateList first_;
  StateList second_;
  Operator overlaps_;
};

enum class ConjunctionOrder {
  FirstThenSecond,  ///< phi_i AND chi_j: phi measured first
  SecondThenFirst,  ///< chi_j AND phi_i: chi measured first
};

double conjunction_probability(const StateVector& psi0, const ConjugatePair& pair, Index i, Index j,
                               ConjunctionOrder order);

/**
 * Effect F_ji on the system for the ordered conjunction phi_i AND chi_j,
 * compressed from I_S (x) |R_ji><R_ji| through V = sum_ij |chi_j>|R_ji>
 * <chi_j|phi_i><phi_i|.
 *
 * `env_overlaps` is the Gram matrix <R_{j'i'}|R_{ji}> of the partial relative
 * states, indexed by the flattened pair j * dim + i. Identity gives
 * |phi_i><phi_i|chi_j><chi_j|phi_i><phi_i|; delta_{j'j} gives |chi_j><chi_j|;
 * all ones gives I_S.
 */
Operator conjunction_povm_element(const ConjugatePair& pair, Index i, Index j, const Operator& env_overlaps,
                                  const Tolerances& tol = {});

/// P(phi_i AND chi_j) P(chi_j) == P(chi_j AND phi_i) P(phi_i) within `eps`.
bool conjunction_identity_check(const StateVector& psi0, const ConjugatePair& pair, Index i, Index j,
                                double eps = 1e-10);

/**
 * I_S (x) P with P the projector onto span{R_i}. Identical relative states
 * give I_S (x) |R><R|, whose probability on the corresponding product state
 * is 1.
 */
Operator disjunction_projector(std::span<const StateVector> rel_states, Index dim_s,
                               const Tolerances& tol = {});

/// Normalized Pi Psi, or nullopt when ||Pi Psi||^2 < tol.zero.
std::optional<StateVector> conditional_state(const StateVector& psi, const Operator& projector,
                                             const Tolerances& tol = {});
std::optional<BipartiteState> conditional_state(const BipartiteState& joint, const Operator& projector,
                                                const Tolerances& tol = {});

/// P(X | Y): Born probability of px on the state conditioned on py; 0 when
/// the conditioning projector annihilates the state.
double conditional_probability(const StateVector& psi, const Operator& px, const Operator& py,
                               const Tolerances& tol = {});
double conditional_probability(const BipartiteState& joint, const Operator& px, const Operator& py,
                               const Tolerances& tol = {});

/**
 * P(phi_k | R_i) = |a_k|^2 |<R_i|R_k>|^2 / sum_i' |a_i'|^2 |<R_i|R_i'>|^2,
 * the chance of finding system state k once the environment is found in the
 * relative state of system state i. Throws if R_i is masked.
 */
double system_given_environment(const RelativeStateDecomposition& decomp, Index k, Index i);

struct DistributiveReport {
  double lhs = 0.0;           ///< P([phi_1 OR phi_2] AND chi_j)
  double rhs_sum = 0.0;       ///< P(phi_1 AND chi_j) + P(phi_2 AND chi_j)
  double interference = 0.0;  ///< 2 |Z| cos(theta) s
  double z_modulus = 0.0;
  double z_phase = 0.0;
  double overlap = 0.0;       ///< s = <R_1|R_2>
};

/**
 * Distributivity of conjunction over disjunction for a qubit with the
 * environment recording the first basis at overlap s = <R_1|R_2>.
 *
 * The environment vectors are R_1 = e_1 and R_2 = s e_1 + sqrt(1 - s^2) e_2.
 * lhs is obtained by premeasuring psi_0, conditioning on phi_1 OR phi_2 and
 * measuring chi_j; rhs_sum adds the two ordered conjunctions. The gap is the
 * interference term 2 Re(Z) s with
 * Z = <psi_0|phi_1><phi_1|chi_j><chi_j|phi_2><phi_2|psi_0>.
 */
DistributiveReport distributive_analysis(const StateVector& psi0, const ConjugatePair& pair, Index j,
                                         double overlap_s, const Tolerances& tol = {});

bool is_true(double p, const Tolerances& tol = {});
bool is_false(double p, const Tolerances& tol = {});
bool is_uncertain(double p, const Tolerances& tol = {});

/// True for p >= 1 - tol.truth, False for p <= tol.truth, Uncertain otherwise.
TernaryValue truth_value(double p, const Tolerances& tol = {});

/// T(X OR NOT X): the disjunction of complementary elements has probability
/// P(X) + (1 - P(X)).
TernaryValue excluded_middle(double p_x, const Tolerances& tol = {});

/// Product of two commuting projectors, the joint element XY. Throws when
/// the projectors do not commute; conjugate propositions use the ordered
/// conjunction instead.
Operator commuting_conjunction(const Operator& px, const Operator& py, const Tolerances& tol = {});

/// Truth of X => Y from the regularized conditional P(Y|X); a false
/// antecedent (P(X) = 0) gives P(Y|X) = 0 and hence False.
TernaryValue implication_truth(const StateVector& psi, const Operator& px, const Operator& py,
                               const Tolerances& tol = {});
TernaryValue implication_truth(const BipartiteState& joint, const Operator& px, const Operator& py,
                               const Tolerances& tol = {});

}  // namespace rql
