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

#include "rql/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace rql {

namespace {

bool all_finite(const Amplitudes& v) {
  for (Index k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v(k).real()) || !std::isfinite(v(k).imag())) return false;
  }
  return true;
}

void require_square(const Operator& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(what) + ": operator must be square and non-empty");
  }
}

}  // namespace

void Tolerances::validate() const {
  for (double v : {norm, herm, idem, rank, zero, truth}) {
    if (!(v >= 0.0 && v <= 1e-3)) {
      throw std::invalid_argument("Tolerances: every tolerance must lie in [0, 1e-3]");
    }
  }
}

StateVector StateVector::from_amplitudes(Amplitudes amps, const Tolerances& tol) {
  if (amps.size() == 0) throw std::invalid_argument("StateVector: dimension must be positive");
  if (!all_finite(amps)) throw std::invalid_argument("StateVector: non-finite amplitude");
  if (std::abs(amps.squaredNorm() - 1.0) > tol.norm) {
    throw std::invalid_argument("StateVector: amplitudes are not normalized");
  }
  return StateVector(std::move(amps), false);
}

StateVector StateVector::normalized(Amplitudes amps) {
  if (amps.size() == 0) throw std::invalid_argument("StateVector: dimension must be positive");
  if (!all_finite(amps)) throw std::invalid_argument("StateVector: non-finite amplitude");
  const double n = amps.norm();
  if (n < 1e-300 || n * n < Tolerances{}.zero) {
    throw std::invalid_argument("StateVector: cannot normalize a zero vector");
  }
  amps /= n;
  return StateVector(std::move(amps), false);
}

StateVector StateVector::normalized(std::initializer_list<Complex> amps) {
  Amplitudes v(static_cast<Index>(amps.size()));
  Index k = 0;
  for (const Complex& a : amps) v(k++) = a;
  return normalized(std::move(v));
}

StateVector StateVector::basis(Index dim, Index k) {
  if (dim <= 0 || k < 0 || k >= dim) throw std::invalid_argument("StateVector::basis: index out of range");
  Amplitudes v = Amplitudes::Zero(dim);
  v(k) = 1.0;
  return StateVector(std::move(v), false);
}

StateVector StateVector::zero(Index dim) {
  if (dim <= 0) throw std::invalid_argument("StateVector: dimension must be positive");
  return StateVector(Amplitudes::Zero(dim), true);
}

Complex inner_product(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  return u.amplitudes().dot(v.amplitudes());  // Eigen's dot conjugates the left operand
}

StateVector tensor_product(const StateVector& u, const StateVector& v) {
  if (u.is_zero() || v.is_zero()) throw std::invalid_argument("tensor_product: zero input vector");
  Amplitudes out(u.dim() * v.dim());
  for (Index i = 0; i < u.dim(); ++i) {
    out.segment(i * v.dim(), v.dim()) = u[i] * v.amplitudes();
  }
  // Product of two unit vectors; renormalize only to shed rounding.
  return StateVector::normalized(std::move(out));
}

Operator outer_product(const StateVector& u, const StateVector& v) {
  return u.amplitudes() * v.amplitudes().adjoint();
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator as_columns(std::span<const StateVector> vectors) {
  if (vectors.empty()) return Operator(0, 0);
  const Index n = vectors.front().dim();
  Operator m(n, static_cast<Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].dim() != n) throw std::invalid_argument("as_columns: dimension mismatch");
    m.col(static_cast<Index>(k)) = vectors[k].amplitudes();
  }
  return m;
}

double sup_norm(const Operator& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Operator& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return sup_norm(m - m.adjoint());
}

double idempotency_defect(const Operator& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return sup_norm(m * m - m);
}

double unitarity_defect(const Operator& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return sup_norm(u.adjoint() * u - Operator::Identity(u.rows(), u.cols()));
}

bool is_hermitian(const Operator& m, const Tolerances& tol) {
  return hermiticity_defect(m) <= tol.herm;
}

bool is_unitary(const Operator& u, const Tolerances& tol) {
  return unitarity_defect(u) <= tol.idem;
}

void require_orthonormal(std::span<const StateVector> vectors, const char* what,
                         const Tolerances& tol) {
  for (const auto& v : vectors) {
    if (v.is_zero()) throw std::invalid_argument(std::string(what) + ": zero vector");
  }
  const Operator g = gram_matrix(vectors);
  if (g.size() == 0) return;
  if (sup_norm(g - Operator::Identity(g.rows(), g.cols())) > tol.norm) {
    throw std::invalid_argument(std::string(what) + ": vectors are not orthonormal");
  }
}

std::vector<double> hermitian_eigenvalues(const Operator& m, const Tolerances& tol) {
  require_square(m, "hermitian_eigenvalues");
  if (hermiticity_defect(m) > tol.herm) {
    throw std::invalid_argument("hermitian_eigenvalues: operator is not Hermitian");
  }
  const Operator h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("hermitian_eigenvalues: solver failed");
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::reverse(out.begin(), out.end());
  for (double& v : out) {
    if (v < 0.0 && v >= -tol.herm) v = 0.0;
  }
  return out;
}

Operator unitary_completion(std::span<const StateVector> columns, const Tolerances& tol) {
  if (columns.empty()) throw std::invalid_argument("unitary_completion: no columns given");
  require_orthonormal(columns, "unitary_completion", tol);
  const Index n = columns.front().dim();
  const Index k = static_cast<Index>(columns.size());
  if (k > n) throw std::invalid_argument("unitary_completion: more columns than dimension");

  Operator u(n, n);
  u.leftCols(k) = as_columns(columns);

  for (Index filled = k; filled < n; ++filled) {
    const auto q = u.leftCols(filled);
    Amplitudes best;
    double best_norm = -1.0;
    for (Index c = 0; c < n; ++c) {
      Amplitudes r = Amplitudes::Unit(n, c);
      // Two passes of classical Gram-Schmidt keep the residual orthogonal to
      // working precision.
      r -= q * (q.adjoint() * r);
      r -= q * (q.adjoint() * r);
      const double rn = r.norm();
      if (rn > best_norm + 1e-12) {
        best_norm = rn;
        best = std::move(r);
      }
    }
    best /= best_norm;
    for (Index e = 0; e < n; ++e) {
      if (std::abs(best(e)) > 1e-12) {
        best *= std::conj(best(e)) / std::abs(best(e));
        best(e) = std::abs(best(e));
        break;
      }
    }
    u.col(filled) = best;
  }
  return u;
}

Operator invert_gram(const Operator& gram, const Tolerances& tol) {
  require_square(gram, "invert_gram");
  if (hermiticity_defect(gram) > tol.herm) {
    throw std::invalid_argument("invert_gram: Gram matrix is not Hermitian");
  }
  const Operator h = 0.5 * (gram + gram.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  if (es.info() != Eigen::Success) throw std::runtime_error("invert_gram: solver failed");
  const auto& vals = es.eigenvalues();
  Eigen::VectorXd inv(vals.size());
  for (Index k = 0; k < vals.size(); ++k) inv(k) = vals(k) > tol.rank ? 1.0 / vals(k) : 0.0;
  const Operator& v = es.eigenvectors();
  Operator out = v * inv.asDiagonal() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

Operator gram_matrix(std::span<const StateVector> vectors) {
  const Operator m = as_columns(vectors);
  return m.adjoint() * m;
}

StateList computational_basis(Index dim) {
  StateList out;
  out.reserve(static_cast<std::size_t>(dim));
  for (Index k = 0; k < dim; ++k) out.push_back(StateVector::basis(dim, k));
  return out;
}

StateList fourier_basis(Index dim) {
  if (dim <= 0) throw std::invalid_argument("fourier_basis: dimension must be positive");
  StateList out;
  out.reserve(static_cast<std::size_t>(dim));
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Index k = 0; k < dim; ++k) {
    Amplitudes v(dim);
    for (Index m = 0; m < dim; ++m) {
      const Index r = (k * m) % dim;
      if ((4 * r) % dim == 0) {
        // Quarter turns are exact: 1, i, -1, -i.
        static constexpr Complex kQuarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        v(m) = scale * kQuarter[(4 * r) / dim];
      } else {
        v(m) = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(dim));
      }
    }
    out.push_back(StateVector::normalized(std::move(v)));
  }
  return out;
}

namespace qubit {
StateVector up_z() { return StateVector::basis(2, 0); }
StateVector down_z() { return StateVector::basis(2, 1); }
StateVector up_x() { return StateVector::normalized({1.0, 1.0}); }
StateVector down_x() { return StateVector::normalized({1.0, -1.0}); }
}  // namespace qubit

}  // namespace rql
