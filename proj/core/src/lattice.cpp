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

#include "rql/lattice.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace rql {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch");
  }
}

// Eigenvectors of a Hermitian operator whose eigenvalue is at least `floor`.
Operator eigenspace_above(const Operator& h, double floor) {
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success) throw std::runtime_error("lattice: eigen solver failed");
  const auto& vals = es.eigenvalues();
  Index keep = 0;
  for (Index k = 0; k < vals.size(); ++k) keep += vals(k) >= floor ? 1 : 0;
  // Eigenvalues are ascending, so the selected ones are the trailing block.
  return es.eigenvectors().rightCols(keep);
}

}  // namespace

Subspace Subspace::null(Index ambient_dim) {
  if (ambient_dim <= 0) throw std::invalid_argument("Subspace: ambient dimension must be positive");
  return Subspace(ambient_dim, Operator(ambient_dim, 0));
}

Subspace Subspace::full(Index ambient_dim) {
  if (ambient_dim <= 0) throw std::invalid_argument("Subspace: ambient dimension must be positive");
  return Subspace(ambient_dim, Operator::Identity(ambient_dim, ambient_dim));
}

StateList Subspace::basis_vectors() const {
  StateList out;
  for (Index k = 0; k < rank(); ++k) out.push_back(StateVector::normalized(Amplitudes(basis_.col(k))));
  return out;
}

Operator Subspace::projector() const {
  if (is_null()) return Operator::Zero(ambient_, ambient_);
  return basis_ * basis_.adjoint();
}

Subspace subspace_from_columns(const Operator& m, const Tolerances& tol) {
  const Index ambient = m.rows();
  if (ambient <= 0) throw std::invalid_argument("span: ambient dimension must be positive");
  if (m.cols() == 0) return Subspace::null(ambient);
  Eigen::JacobiSVD<Operator> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Index r = 0;
  while (r < sv.size() && sv(r) > tol.rank) ++r;
  return Subspace(ambient, svd.matrixU().leftCols(r));
}

Subspace span(std::span<const StateVector> vectors, Index ambient_dim, const Tolerances& tol) {
  for (const auto& v : vectors) {
    if (v.dim() != ambient_dim) throw std::invalid_argument("span: dimension mismatch");
  }
  if (vectors.empty()) return Subspace::null(ambient_dim);
  return subspace_from_columns(as_columns(vectors), tol);
}

Subspace meet(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  require_same_ambient(a, b, "meet");
  if (a.is_null() || b.is_null()) return Subspace::null(a.ambient_dim());
  const Operator pa = a.projector();
  const Operator m = pa * b.projector() * pa;
  return subspace_from_columns(eigenspace_above(m, 1.0 - tol.rank), tol);
}

Subspace join(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  require_same_ambient(a, b, "join");
  Operator cols(a.ambient_dim(), a.rank() + b.rank());
  cols << a.basis(), b.basis();
  return subspace_from_columns(cols, tol);
}

Subspace orthocomplement(const Subspace& a, const Tolerances& tol) {
  const Index n = a.ambient_dim();
  const Operator q = Operator::Identity(n, n) - a.projector();
  // q is a projector: its spectrum is {0, 1}, so any threshold in between works.
  return subspace_from_columns(eigenspace_above(q, 0.5), tol);
}

double projector_distance(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "projector_distance");
  return sup_norm(a.projector() - b.projector());
}

bool same_subspace(const Subspace& a, const Subspace& b, double eps) {
  return projector_distance(a, b) < eps;
}

bool is_contained(const Subspace& a, const Subspace& b, double eps) {
  require_same_ambient(a, b, "is_contained");
  const Operator pa = a.projector();
  return sup_norm(pa * b.projector() - pa) < eps;
}

DistributivityReport check_distributivity(const Subspace& a, const Subspace& b, const Subspace& c,
                                          const Tolerances& tol) {
  require_same_ambient(a, b, "check_distributivity");
  require_same_ambient(a, c, "check_distributivity");
  Subspace lhs = meet(a, join(b, c, tol), tol);
  Subspace rhs = join(meet(a, b, tol), meet(a, c, tol), tol);
  const double d = projector_distance(lhs, rhs);
  return DistributivityReport{std::move(lhs), std::move(rhs), d < 1e-10, d};
}

}  // namespace rql
