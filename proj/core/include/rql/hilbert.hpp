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
 * @file hilbert.hpp
 * @brief Dense complex linear algebra on finite-dimensional Hilbert spaces.
 *
 * Everything else in the library is built on the handful of types and
 * functions declared here. Operators are plain Eigen complex matrices; state
 * vectors are wrapped so that the normalization invariant is enforced at
 * construction.
 *
 * Bipartite indices are flattened row-major, system index outer and
 * environment index inner: amplitude a(i, j) lives at i * dim_e + j.
 */

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace rql {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Operator = Eigen::MatrixXcd;
using Amplitudes = Eigen::VectorXcd;

/// Numerical tolerances shared by every module. Each must lie in [0, 1e-3].
struct Tolerances {
  double norm = 1e-10;   ///< deviation of a state norm from 1
  double herm = 1e-10;   ///< sup-norm of M - M^dagger
  double idem = 1e-10;   ///< sup-norm of M^2 - M, U^dagger U - I
  double rank = 1e-10;   ///< eigen/singular values below this count as zero
  double zero = 1e-12;   ///< squared norms below this count as vanishing
  double truth = 1e-9;   ///< width of the True/False probability bands

  /// Throws std::invalid_argument if any field is negative, NaN or > 1e-3.
  void validate() const;
};

/**
 * A state vector over a finite basis.
 *
 * Regular instances are normalized within Tolerances::norm. The zero vector
 * exists as a distinct variant (StateVector::zero) for the few places that
 * need a placeholder, e.g. masked relative states; operations that require
 * a physical state reject it.
 */
class StateVector {
 public:
  /// Validates finiteness and normalization; does not rescale.
  static StateVector from_amplitudes(Amplitudes amps, const Tolerances& tol = {});
  /// Rescales to unit norm. Throws if the input is (numerically) zero.
  static StateVector normalized(Amplitudes amps);
  /// Convenience for literal amplitudes; rescales like normalized().
  static StateVector normalized(std::initializer_list<Complex> amps);
  /// Standard basis vector e_k.
  static StateVector basis(Index dim, Index k);
  static StateVector zero(Index dim);

  Index dim() const { return amps_.size(); }
  bool is_zero() const { return zero_; }
  const Amplitudes& amplitudes() const { return amps_; }
  Complex operator[](Index k) const { return amps_(k); }

 private:
  StateVector(Amplitudes amps, bool zero) : amps_(std::move(amps)), zero_(zero) {}

  Amplitudes amps_;
  bool zero_ = false;
};

using StateList = std::vector<StateVector>;

/// <u|v>, conjugate-linear in u.
Complex inner_product(const StateVector& u, const StateVector& v);

/// u (x) v with u outer. Throws on a zero-variant input.
StateVector tensor_product(const StateVector& u, const StateVector& v);

/// |u><v|, entries u_k conj(v_l).
Operator outer_product(const StateVector& u, const StateVector& v);

/// Kronecker product A (x) B with A acting on the outer factor.
Operator kron(const Operator& a, const Operator& b);

/// Column matrix whose k-th column is vectors[k].
Operator as_columns(std::span<const StateVector> vectors);

/// Sup-norm (largest entry modulus).
double sup_norm(const Operator& m);
double hermiticity_defect(const Operator& m);
double idempotency_defect(const Operator& m);
/// sup-norm of U^dagger U - I.
double unitarity_defect(const Operator& u);

bool is_hermitian(const Operator& m, const Tolerances& tol = {});
bool is_unitary(const Operator& u, const Tolerances& tol = {});

/// Throws std::invalid_argument unless the vectors are mutually orthonormal
/// within tol.norm. `what` names the argument in the error message.
void require_orthonormal(std::span<const StateVector> vectors, const char* what,
                         const Tolerances& tol = {});

/**
 * Eigenvalues of a Hermitian operator in descending order.
 *
 * Values in [-tol.herm, 0) are clamped to zero so that PSD inputs come back
 * non-negative; anything more negative is returned unchanged.
 */
std::vector<double> hermitian_eigenvalues(const Operator& m, const Tolerances& tol = {});

/**
 * Extends orthonormal columns to a square unitary.
 *
 * The leading columns are the inputs verbatim. Remaining columns are taken
 * from the standard basis by Gram-Schmidt: at every step each candidate
 * e_0..e_{n-1} is orthogonalized against the columns so far and the one with
 * the largest residual wins, ties going to the lowest index. Each new column
 * is then phased so its first nonzero entry is real and positive.
 */
Operator unitary_completion(std::span<const StateVector> columns, const Tolerances& tol = {});

/**
 * Inverse of a Hermitian PSD (Gram) matrix; spectral pseudo-inverse when
 * eigenvalues fall below tol.rank. The result is exactly Hermitian.
 */
Operator invert_gram(const Operator& gram, const Tolerances& tol = {});

/// Gram matrix A_ij = <v_i|v_j>.
Operator gram_matrix(std::span<const StateVector> vectors);

/// Computational basis e_0..e_{dim-1}.
StateList computational_basis(Index dim);

/// Discrete Fourier basis f_k = sum_m exp(2 pi i k m / dim) e_m / sqrt(dim).
/// For dim = 2 this is the sigma_x eigenbasis (up_x, down_x).
StateList fourier_basis(Index dim);

namespace qubit {
StateVector up_z();
StateVector down_z();
StateVector up_x();
StateVector down_x();
}  // namespace qubit

}  // namespace rql
