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

#include "rql/measures.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>

#include "rql/relstate.hpp"

namespace rql {

namespace {

constexpr double kImaginaryResidue = 1e-9;
constexpr double kTraceTolerance = 1e-10;
constexpr double kCompletenessTolerance = 1e-9;

double clamp_probability(Complex value) {
  if (std::abs(value.imag()) > kImaginaryResidue) {
    throw std::domain_error("born_probability: probability has an imaginary part");
  }
  return std::clamp(value.real(), 0.0, 1.0);
}

// Born-rule elements must be effects: Hermitian with spectrum in [0, 1].
void require_effect(const Operator& e, Index dim, const Tolerances& tol) {
  if (e.rows() != dim || e.cols() != dim) throw std::invalid_argument("born_probability: dimension mismatch");
  const auto ev = hermitian_eigenvalues(e, tol);
  if (ev.back() < -tol.herm || ev.front() > 1.0 + tol.herm) {
    throw std::invalid_argument("born_probability: element is not an effect (spectrum outside [0, 1])");
  }
}

}  // namespace

DensityMatrix DensityMatrix::from_operator(Operator m, const Tolerances& tol) {
  const auto ev = hermitian_eigenvalues(m, tol);  // also checks square + Hermitian
  if (ev.back() < -tol.herm) throw std::invalid_argument("DensityMatrix: operator is not PSD");
  if (std::abs(m.trace().real() - 1.0) > kTraceTolerance || std::abs(m.trace().imag()) > kTraceTolerance) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  if (psi.is_zero()) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  return DensityMatrix(outer_product(psi, psi));
}

Operator Pvm::element(const IndexSet& x) const {
  const Index n = dim();
  Operator out = Operator::Zero(n, n);
  for (std::size_t i : x) {
    if (i >= label_count()) throw std::out_of_range("Pvm::element: label outside the index set");
    const auto col = basis_.col(static_cast<Index>(i));
    out += col * col.adjoint();
  }
  return out;
}

Povm Povm::from_elements(std::vector<Operator> elements, const Tolerances& tol) {
  if (elements.empty()) throw std::invalid_argument("Povm: no elements");
  const Index n = elements.front().rows();
  Operator sum = Operator::Zero(n, n);
  for (const auto& e : elements) {
    if (e.rows() != n || e.cols() != n) throw std::invalid_argument("Povm: dimension mismatch");
    if (hermitian_eigenvalues(e, tol).back() < -tol.herm) {
      throw std::invalid_argument("Povm: element is not positive semi-definite");
    }
    sum += e;
  }
  if (sup_norm(sum - Operator::Identity(n, n)) > kCompletenessTolerance) {
    throw std::invalid_argument("Povm: elements do not sum to the identity");
  }
  return Povm(std::move(elements));
}

Pvm pvm_from_basis(std::span<const StateVector> basis, std::vector<IndexSet> partition,
                   const Tolerances& tol) {
  if (basis.empty()) throw std::invalid_argument("pvm_from_basis: empty basis");
  const Index n = basis.front().dim();
  if (static_cast<Index>(basis.size()) != n) {
    throw std::invalid_argument("pvm_from_basis: basis is not complete");
  }
  require_orthonormal(basis, "pvm_from_basis", tol);

  std::vector<int> seen(basis.size(), 0);
  for (const auto& cell : partition) {
    for (std::size_t i : cell) {
      if (i >= basis.size()) throw std::invalid_argument("pvm_from_basis: partition label out of range");
      if (seen[i]++) throw std::invalid_argument("pvm_from_basis: partition cells overlap");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw std::invalid_argument("pvm_from_basis: partition does not cover the index set");
  }

  Pvm p(as_columns(basis), std::move(partition), {});
  std::vector<Operator> outcomes;
  outcomes.reserve(p.partition().size());
  for (const auto& cell : p.partition()) outcomes.push_back(p.element(cell));
  p.outcomes_ = std::move(outcomes);
  return p;
}

Operator element_product(const Pvm& p, const IndexSet& x, const IndexSet& y) {
  return p.element(x) * p.element(y);
}

Operator element_union(const Pvm& p, const IndexSet& x, const IndexSet& y) {
  IndexSet both;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(both, both.end()));
  return p.element(x) + p.element(y) - p.element(both);
}

Operator element_complement(const Pvm& p, const IndexSet& x) {
  return Operator::Identity(p.dim(), p.dim()) - p.element(x);
}

double born_probability(const StateVector& psi, const Operator& e, const Tolerances& tol) {
  if (psi.is_zero()) throw std::invalid_argument("born_probability: zero state");
  require_effect(e, psi.dim(), tol);
  return clamp_probability(psi.amplitudes().dot(e * psi.amplitudes()));
}

double born_probability(const DensityMatrix& rho, const Operator& e, const Tolerances& tol) {
  require_effect(e, rho.dim(), tol);
  return clamp_probability((rho.matrix() * e).trace());
}

Complex matrix_element(const StateVector& xi, const Operator& e, const StateVector& eta) {
  if (e.rows() != xi.dim() || e.cols() != eta.dim()) {
    throw std::invalid_argument("matrix_element: dimension mismatch");
  }
  return xi.amplitudes().dot(e * eta.amplitudes());
}

Operator general_projector(std::span<const StateVector> vectors, const Tolerances& tol) {
  if (vectors.empty()) throw std::invalid_argument("general_projector: empty vector list");
  for (const auto& v : vectors) {
    if (v.is_zero()) throw std::invalid_argument("general_projector: zero vector");
  }
  const Operator phi = as_columns(vectors);
  const Operator a = phi.adjoint() * phi;
  Operator p = phi * invert_gram(a, tol) * phi.adjoint();
  return 0.5 * (p + p.adjoint());
}

ProjectorDiagnostics check_projector(const Operator& m, const Tolerances& tol) {
  ProjectorDiagnostics d;
  d.hermiticity_defect = hermiticity_defect(m);
  d.idempotency_defect = idempotency_defect(m);
  d.self_adjoint = d.hermiticity_defect <= tol.herm;
  d.idempotent = d.idempotency_defect <= tol.idem;
  return d;
}

Operator naimark_isometry(const Operator& u, const StateVector& ready, Index dim_s, const Tolerances& tol) {
  if (ready.is_zero()) throw std::invalid_argument("naimark_compress: zero ready state");
  if (dim_s <= 0 || u.rows() != dim_s * ready.dim() || u.cols() != u.rows()) {
    throw std::invalid_argument("naimark_compress: dimension mismatch");
  }
  if (!is_unitary(u, tol)) throw std::invalid_argument("naimark_compress: coupling operator is not unitary");
  // I_S (x) |ready> as a (dim_s * dim_e) x dim_s matrix.
  const Operator embed = kron(Operator::Identity(dim_s, dim_s), Operator(ready.amplitudes()));
  return u * embed;
}

Povm naimark_compress(const Pvm& pvm_joint, const Operator& u, const StateVector& ready, Index dim_s,
                      const Tolerances& tol) {
  if (pvm_joint.dim() != dim_s * ready.dim()) throw std::invalid_argument("naimark_compress: dimension mismatch");
  const Operator v = naimark_isometry(u, ready, dim_s, tol);
  std::vector<Operator> effects;
  effects.reserve(pvm_joint.outcome_count());
  for (std::size_t k = 0; k < pvm_joint.outcome_count(); ++k) {
    Operator f = v.adjoint() * pvm_joint.outcome(k) * v;
    effects.push_back(0.5 * (f + f.adjoint()));
  }
  return Povm::from_elements(std::move(effects), tol);
}

double relative_state_probability(const RelativeStateDecomposition& decomp, const Operator& env_element,
                                  const Tolerances& tol) {
  const Index de = decomp.dim_e();
  if (env_element.rows() != de || env_element.cols() != de) {
    throw std::invalid_argument("relative_state_probability: dimension mismatch");
  }
  require_effect(env_element, de, tol);
  Complex total = 0.0;
  for (std::size_t i = 0; i < decomp.rel_states.size(); ++i) {
    if (!decomp.defined_mask[i]) continue;
    const auto& r = decomp.rel_states[i].amplitudes();
    total += decomp.weights[i] * decomp.weights[i] * r.dot(env_element * r);
  }
  return clamp_probability(total);
}

}  // namespace rql
