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

#include "rql/qlogic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rql {

namespace {

void require_index(const ConjugatePair& pair, Index i, Index j, const char* what) {
  if (i < 0 || j < 0 || i >= pair.dim() || j >= pair.dim()) {
    throw std::out_of_range(std::string(what) + ": basis index out of range");
  }
}

void require_state(const StateVector& psi, Index dim, const char* what) {
  if (psi.is_zero()) throw std::invalid_argument(std::string(what) + ": zero state");
  if (psi.dim() != dim) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

void require_projector(const Operator& p, Index dim, const Tolerances& tol, const char* what) {
  if (p.rows() != dim || p.cols() != dim) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  const auto d = check_projector(p, tol);
  if (!d.self_adjoint || !d.idempotent) {
    throw std::invalid_argument(std::string(what) + ": operator is not an orthogonal projector");
  }
}

double probability_of(const StateVector& psi, const StateVector& target) {
  return std::norm(inner_product(target, psi));
}

}  // namespace

std::string_view to_string(TernaryValue v) {
  switch (v) {
    case TernaryValue::True:
      return "True";
    case TernaryValue::False:
      return "False";
    case TernaryValue::Uncertain:
      return "Uncertain";
  }
  return "?";
}

ConjugatePair ConjugatePair::make(StateList first, StateList second, const Tolerances& tol) {
  if (first.empty() || first.size() != second.size()) {
    throw std::invalid_argument("ConjugatePair: bases must be non-empty and of equal size");
  }
  const Index n = first.front().dim();
  if (static_cast<Index>(first.size()) != n) throw std::invalid_argument("ConjugatePair: basis is not complete");
  for (const auto& v : second) {
    if (v.dim() != n) throw std::invalid_argument("ConjugatePair: dimension mismatch");
  }
  require_orthonormal(first, "ConjugatePair (first basis)", tol);
  require_orthonormal(second, "ConjugatePair (second basis)", tol);
  Operator overlaps = as_columns(second).adjoint() * as_columns(first);
  return ConjugatePair(std::move(first), std::move(second), std::move(overlaps));
}

ConjugatePair ConjugatePair::qubit_zx() {
  return make({qubit::up_z(), qubit::down_z()}, {qubit::up_x(), qubit::down_x()});
}

ConjugatePair ConjugatePair::fourier(Index dim) {
  return make(computational_basis(dim), fourier_basis(dim));
}

double conjunction_probability(const StateVector& psi0, const ConjugatePair& pair, Index i, Index j,
                               ConjunctionOrder order) {
  require_index(pair, i, j, "conjunction_probability");
  require_state(psi0, pair.dim(), "conjunction_probability");
  const auto& phi = pair.first()[static_cast<std::size_t>(i)];
  const auto& chi = pair.second()[static_cast<std::size_t>(j)];
  const double transition = std::norm(pair.overlap(j, i));
  return order == ConjunctionOrder::FirstThenSecond ? transition * probability_of(psi0, phi)
                                                    : transition * probability_of(psi0, chi);
}

Operator conjunction_povm_element(const ConjugatePair& pair, Index i, Index j, const Operator& env_overlaps,
                                  const Tolerances& tol) {
  require_index(pair, i, j, "conjunction_povm_element");
  const Index n = pair.dim();
  const Index pairs = n * n;
  if (env_overlaps.rows() != pairs || env_overlaps.cols() != pairs) {
    throw std::invalid_argument("conjunction_povm_element: overlap matrix must be (dim*dim) square");
  }
  if (hermiticity_defect(env_overlaps) > tol.herm) {
    throw std::invalid_argument("conjunction_povm_element: overlap matrix is not Hermitian");
  }
  for (Index k = 0; k < pairs; ++k) {
    if (std::abs(env_overlaps(k, k) - 1.0) > tol.norm) {
      throw std::invalid_argument("conjunction_povm_element: overlap matrix diagonal must be 1");
    }
  }
  if (hermitian_eigenvalues(env_overlaps, tol).back() < -tol.herm) {
    throw std::invalid_argument("conjunction_povm_element: overlap matrix is not positive semi-definite");
  }

  const auto flat = [n](Index jj, Index ii) { return jj * n + ii; };
  const Operator& t = pair.overlaps();  // t(j, i) = <chi_j|phi_i>
  const Index target = flat(j, i);

  // Coefficients in the phi basis:
  // C(i'', i') = sum_j' conj(t(j', i'')) <R_{j'i''}|R_ji> <R_ji|R_{j'i'}> t(j', i').
  Operator c = Operator::Zero(n, n);
  for (Index jp = 0; jp < n; ++jp) {
    for (Index a = 0; a < n; ++a) {
      const Complex left = std::conj(t(jp, a)) * env_overlaps(flat(jp, a), target);
      for (Index b = 0; b < n; ++b) {
        c(a, b) += left * env_overlaps(target, flat(jp, b)) * t(jp, b);
      }
    }
  }
  const Operator phi = as_columns(pair.first());
  Operator f = phi * c * phi.adjoint();
  return 0.5 * (f + f.adjoint());
}

bool conjunction_identity_check(const StateVector& psi0, const ConjugatePair& pair, Index i, Index j, double eps) {
  const double p_fx = conjunction_probability(psi0, pair, i, j, ConjunctionOrder::FirstThenSecond);
  const double p_xf = conjunction_probability(psi0, pair, i, j, ConjunctionOrder::SecondThenFirst);
  const double p_f = probability_of(psi0, pair.first()[static_cast<std::size_t>(i)]);
  const double p_x = probability_of(psi0, pair.second()[static_cast<std::size_t>(j)]);
  return std::abs(p_fx * p_x - p_xf * p_f) < eps;
}

Operator disjunction_projector(std::span<const StateVector> rel_states, Index dim_s, const Tolerances& tol) {
  if (rel_states.empty()) throw std::invalid_argument("disjunction_projector: empty relative-state list");
  if (dim_s <= 0) throw std::invalid_argument("disjunction_projector: system dimension must be positive");
  return kron(Operator::Identity(dim_s, dim_s), general_projector(rel_states, tol));
}

std::optional<StateVector> conditional_state(const StateVector& psi, const Operator& projector,
                                             const Tolerances& tol) {
  require_state(psi, projector.rows(), "conditional_state");
  require_projector(projector, psi.dim(), tol, "conditional_state");
  Amplitudes projected = projector * psi.amplitudes();
  if (projected.squaredNorm() < tol.zero) return std::nullopt;
  return StateVector::normalized(std::move(projected));
}

std::optional<BipartiteState> conditional_state(const BipartiteState& joint, const Operator& projector,
                                                const Tolerances& tol) {
  auto out = conditional_state(joint.joint(), projector, tol);
  if (!out) return std::nullopt;
  return BipartiteState::from_joint(*out, joint.dim_s(), joint.dim_e());
}

double conditional_probability(const StateVector& psi, const Operator& px, const Operator& py,
                               const Tolerances& tol) {
  const auto given = conditional_state(psi, py, tol);
  if (!given) return 0.0;
  return born_probability(*given, px, tol);
}

double conditional_probability(const BipartiteState& joint, const Operator& px, const Operator& py,
                               const Tolerances& tol) {
  return conditional_probability(joint.joint(), px, py, tol);
}

double system_given_environment(const RelativeStateDecomposition& decomp, Index k, Index i) {
  const Index n = decomp.dim_s();
  if (k < 0 || i < 0 || k >= n || i >= n) throw std::out_of_range("system_given_environment: index out of range");
  const auto ui = static_cast<std::size_t>(i);
  if (!decomp.defined_mask[ui]) {
    throw std::invalid_argument("system_given_environment: relative state is undefined (zero weight)");
  }
  const auto& ri = decomp.rel_states[ui];
  const auto weighted = [&](std::size_t m) {
    if (!decomp.defined_mask[m]) return 0.0;
    return decomp.weights[m] * decomp.weights[m] * std::norm(inner_product(ri, decomp.rel_states[m]));
  };
  double denom = 0.0;
  for (std::size_t m = 0; m < decomp.rel_states.size(); ++m) denom += weighted(m);
  return weighted(static_cast<std::size_t>(k)) / denom;
}

DistributiveReport distributive_analysis(const StateVector& psi0, const ConjugatePair& pair, Index j,
                                         double overlap_s, const Tolerances& tol) {
  if (pair.dim() != 2) throw std::invalid_argument("distributive_analysis: requires a two-level system");
  require_index(pair, 0, j, "distributive_analysis");
  require_state(psi0, 2, "distributive_analysis");
  if (!(overlap_s >= 0.0 && overlap_s <= 1.0)) {
    throw std::invalid_argument("distributive_analysis: overlap must lie in [0, 1]");
  }

  const StateVector ready = StateVector::basis(2, 0);
  const StateVector r1 = ready;
  const StateVector r2 = StateVector::normalized(
      {overlap_s, std::sqrt(std::max(0.0, 1.0 - overlap_s * overlap_s))});
  const StateList targets{r1, r2};
  const Operator u = premeasurement_unitary(pair.first(), targets, ready, tol);
  const BipartiteState joint = evolve(psi0, ready, u, tol);

  const auto& phi = pair.first();
  const auto& chi = pair.second()[static_cast<std::size_t>(j)];
  const Operator id_e = Operator::Identity(2, 2);
  const Operator either = kron(outer_product(phi[0], phi[0]) + outer_product(phi[1], phi[1]), id_e);
  const Operator chi_j = kron(outer_product(chi, chi), id_e);

  DistributiveReport r;
  r.overlap = overlap_s;
  const double p_either = born_probability(joint.joint(), either, tol);
  r.lhs = conditional_probability(joint, chi_j, either, tol) * p_either;
  r.rhs_sum = conjunction_probability(psi0, pair, 0, j, ConjunctionOrder::FirstThenSecond) +
              conjunction_probability(psi0, pair, 1, j, ConjunctionOrder::FirstThenSecond);

  const Complex z = inner_product(psi0, phi[0]) * inner_product(phi[0], chi) * inner_product(chi, phi[1]) *
                    inner_product(phi[1], psi0);
  r.z_modulus = std::abs(z);
  r.z_phase = std::arg(z);
  r.interference = 2.0 * r.z_modulus * std::cos(r.z_phase) * overlap_s;
  return r;
}

bool is_true(double p, const Tolerances& tol) { return truth_value(p, tol) == TernaryValue::True; }
bool is_false(double p, const Tolerances& tol) { return truth_value(p, tol) == TernaryValue::False; }
bool is_uncertain(double p, const Tolerances& tol) { return truth_value(p, tol) == TernaryValue::Uncertain; }

TernaryValue truth_value(double p, const Tolerances& tol) {
  if (!std::isfinite(p) || p < -tol.truth || p > 1.0 + tol.truth) {
    throw std::domain_error("truth_value: probability outside [0, 1]");
  }
  if (p >= 1.0 - tol.truth) return TernaryValue::True;
  if (p <= tol.truth) return TernaryValue::False;
  return TernaryValue::Uncertain;
}

TernaryValue excluded_middle(double p_x, const Tolerances& tol) {
  truth_value(p_x, tol);  // range check
  const double p_not_x = 1.0 - p_x;
  // X and NOT X are orthocomplementary, so the disjunction is their sum.
  return truth_value(p_x + p_not_x, tol);
}

Operator commuting_conjunction(const Operator& px, const Operator& py, const Tolerances& tol) {
  if (px.rows() != py.rows() || px.cols() != py.cols()) {
    throw std::invalid_argument("commuting_conjunction: dimension mismatch");
  }
  require_projector(px, px.rows(), tol, "commuting_conjunction");
  require_projector(py, py.rows(), tol, "commuting_conjunction");
  Operator xy = px * py;
  if (sup_norm(xy - py * px) > tol.idem) {
    throw std::invalid_argument("commuting_conjunction: projectors do not commute; use the ordered conjunction");
  }
  return 0.5 * (xy + xy.adjoint());
}

TernaryValue implication_truth(const StateVector& psi, const Operator& px, const Operator& py,
                               const Tolerances& tol) {
  return truth_value(conditional_probability(psi, py, px, tol), tol);
}

TernaryValue implication_truth(const BipartiteState& joint, const Operator& px, const Operator& py,
                               const Tolerances& tol) {
  return implication_truth(joint.joint(), px, py, tol);
}

}  // namespace rql
