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
 * @file measures.hpp
 * @brief Projection-valued and positive operator-valued measures.
 *
 * A Pvm is built from an orthonormal basis {phi_i}, i in Lambda, and assigns
 * to every index set X the projector sum_{i in X} |phi_i><phi_i|. A partition
 * of Lambda picks out the outcomes used when the measure is compressed or
 * sampled. A Povm is a plain list of PSD effects summing to the identity.
 *
 * naimark_compress goes from a PVM on system (x) environment down to the
 * POVM it induces on the system alone, given the coupling unitary and the
 * environment's ready state.
 */

#include <set>
#include <vector>

#include "rql/hilbert.hpp"

namespace rql {

struct RelativeStateDecomposition;

using IndexSet = std::set<std::size_t>;

/// Hermitian, PSD, unit-trace operator.
class DensityMatrix {
 public:
  /// Validates Hermiticity (tol.herm), PSD (min eigenvalue >= -tol.herm)
  /// and unit trace (1e-10).
  static DensityMatrix from_operator(Operator m, const Tolerances& tol = {});
  static DensityMatrix pure(const StateVector& psi);

  Index dim() const { return m_.rows(); }
  const Operator& matrix() const { return m_; }

 private:
  explicit DensityMatrix(Operator m) : m_(std::move(m)) {}
  Operator m_;
};

class Pvm {
 public:
  Index dim() const { return basis_.rows(); }
  /// |Lambda|, the number of basis vectors.
  std::size_t label_count() const { return static_cast<std::size_t>(basis_.cols()); }
  const std::vector<IndexSet>& partition() const { return partition_; }
  std::size_t outcome_count() const { return partition_.size(); }
  /// Element for the k-th partition cell.
  const Operator& outcome(std::size_t k) const { return outcomes_.at(k); }

  /// Pi_X = sum_{i in X} |phi_i><phi_i|. The empty set maps to 0, Lambda to I.
  /// Throws std::out_of_range for labels outside Lambda.
  Operator element(const IndexSet& x) const;

 private:
  friend Pvm pvm_from_basis(std::span<const StateVector>, std::vector<IndexSet>, const Tolerances&);
  Pvm(Operator basis, std::vector<IndexSet> partition, std::vector<Operator> outcomes)
      : basis_(std::move(basis)), partition_(std::move(partition)), outcomes_(std::move(outcomes)) {}

  Operator basis_;
  std::vector<IndexSet> partition_;
  std::vector<Operator> outcomes_;
};

class Povm {
 public:
  /// Validates each effect (Hermitian, min eigenvalue >= -tol.herm) and
  /// completeness (sum = I within 1e-9).
  static Povm from_elements(std::vector<Operator> elements, const Tolerances& tol = {});

  Index dim() const { return elements_.front().rows(); }
  std::size_t size() const { return elements_.size(); }
  const Operator& element(std::size_t k) const { return elements_.at(k); }
  const std::vector<Operator>& elements() const { return elements_; }

 private:
  explicit Povm(std::vector<Operator> e) : elements_(std::move(e)) {}
  std::vector<Operator> elements_;
};

struct ProjectorDiagnostics {
  bool self_adjoint = false;
  bool idempotent = false;
  double hermiticity_defect = 0.0;  ///< ||M - M^dagger||_inf
  double idempotency_defect = 0.0;  ///< ||M^2 - M||_inf
};

/// Requires an orthonormal complete basis and a partition covering Lambda
/// disjointly.
Pvm pvm_from_basis(std::span<const StateVector> basis, std::vector<IndexSet> partition,
                   const Tolerances& tol = {});

/// Pi_X Pi_Y, which equals Pi_{X n Y}.
Operator element_product(const Pvm& p, const IndexSet& x, const IndexSet& y);
/// Pi_X + Pi_Y - Pi_{X n Y}, which equals Pi_{X u Y}.
Operator element_union(const Pvm& p, const IndexSet& x, const IndexSet& y);
/// I - Pi_X.
Operator element_complement(const Pvm& p, const IndexSet& x);

/**
 * Born rule <psi|E|psi>.
 *
 * E must be Hermitian with spectrum in [-tol.herm, 1 + tol.herm]. An
 * imaginary residue above 1e-9 is reported as an error; the real part is
 * clamped to [0, 1].
 */
double born_probability(const StateVector& psi, const Operator& e, const Tolerances& tol = {});
/// Tr[rho E]; agrees with the pure-state overload for rho = |psi><psi|.
double born_probability(const DensityMatrix& rho, const Operator& e, const Tolerances& tol = {});

/// Raw matrix element <xi|E|eta> for an arbitrary pair of states.
Complex matrix_element(const StateVector& xi, const Operator& e, const StateVector& eta);

/**
 * Orthogonal projector onto the span of possibly non-orthogonal vectors:
 * P = sum_ij |v_i> (A^-1)_ij <v_j| with A_ij = <v_i|v_j>.
 *
 * A rank-deficient A is handled by the spectral pseudo-inverse, which still
 * gives the projector onto the span. Every input is a fixed point of P.
 */
Operator general_projector(std::span<const StateVector> vectors, const Tolerances& tol = {});

ProjectorDiagnostics check_projector(const Operator& m, const Tolerances& tol = {});

/**
 * POVM on the system induced by a PVM on system (x) environment:
 * F_k = V^dagger Pi_k V with V = U (I_S (x) |ready>), one effect per
 * partition cell of `pvm_joint`.
 */
Povm naimark_compress(const Pvm& pvm_joint, const Operator& u, const StateVector& ready, Index dim_s,
                      const Tolerances& tol = {});

/// The isometry V = U (I_S (x) |ready>) used by naimark_compress.
Operator naimark_isometry(const Operator& u, const StateVector& ready, Index dim_s,
                          const Tolerances& tol = {});

/**
 * Probability of the joint element I_S (x) env_element written through
 * relative states: sum_i |a_i|^2 <R_i|env_element|R_i>. Masked (undefined)
 * relative states carry zero weight and are skipped.
 */
double relative_state_probability(const RelativeStateDecomposition& decomp, const Operator& env_element,
                                  const Tolerances& tol = {});

}  // namespace rql
