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

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "rql/measures.hpp"
#include "rql/random.hpp"
#include "rql/relstate.hpp"
#include "test_support.hpp"

namespace rql {
namespace {

using testing::diag;
using testing::dist;

std::vector<IndexSet> singletons(std::size_t n) {
  std::vector<IndexSet> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back({k});
  return out;
}

// Random partition of {0..n-1} into at most `cells` non-empty cells.
std::vector<IndexSet> random_partition(Rng& rng, std::size_t n, std::size_t cells) {
  std::vector<IndexSet> out(cells);
  std::uniform_int_distribution<std::size_t> pick(0, cells - 1);
  for (std::size_t k = 0; k < n; ++k) out[k < cells ? k : pick(rng)].insert(k);
  std::erase_if(out, [](const IndexSet& s) { return s.empty(); });
  return out;
}

TEST(Pvm, FromZBasis) {
  const auto p = pvm_from_basis(computational_basis(2), singletons(2));
  EXPECT_LT(dist(p.outcome(0), diag({1, 0})), 1e-15);
  EXPECT_LT(dist(p.outcome(1), diag({0, 1})), 1e-15);
}

TEST(Pvm, WholeIndexSetIsIdentityAndEmptySetIsZero) {
  Rng rng(31);
  const auto b = random_basis(rng, 4);
  const auto p = pvm_from_basis(b, {{0, 1, 2, 3}});
  EXPECT_LT(dist(p.outcome(0), Operator::Identity(4, 4)), 1e-12);
  EXPECT_LT(dist(p.element({}), Operator::Zero(4, 4)), 1e-15);
}

TEST(Pvm, RejectsBadInputs) {
  EXPECT_THROW(pvm_from_basis(StateList{qubit::up_z(), qubit::up_x()}, singletons(2)), std::invalid_argument);
  EXPECT_THROW(pvm_from_basis(computational_basis(3), {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(pvm_from_basis(computational_basis(3), {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(pvm_from_basis(computational_basis(3), {{0, 1, 2, 3}}), std::invalid_argument);
  EXPECT_THROW(pvm_from_basis(StateList{qubit::up_z()}, {{0}}), std::invalid_argument);
  const auto p = pvm_from_basis(computational_basis(2), singletons(2));
  EXPECT_THROW(p.element({2}), std::out_of_range);
}

TEST(Pvm, ProductUnionComplementMatchSetAlgebra) {
  const auto p = pvm_from_basis(computational_basis(3), singletons(3));
  EXPECT_LT(dist(element_product(p, {0, 1}, {0, 1}), p.element({0, 1})), 1e-15);
  EXPECT_LT(dist(element_product(p, {0}, {1, 2}), Operator::Zero(3, 3)), 1e-15);
  EXPECT_LT(dist(element_product(p, {0, 1}, {1, 2}), diag({0, 1, 0})), 1e-15);

  EXPECT_LT(dist(element_union(p, {0}, {2}), p.element({0}) + p.element({2})), 1e-15);
  EXPECT_LT(dist(element_union(p, {1}, {1}), p.element({1})), 1e-15);
  EXPECT_LT(dist(element_union(p, {0}, {0, 1}), p.element({0, 1})), 1e-15);

  EXPECT_LT(dist(element_complement(p, {0, 1, 2}), Operator::Zero(3, 3)), 1e-15);
  EXPECT_LT(dist(element_complement(p, {}), Operator::Identity(3, 3)), 1e-15);
  const auto q = pvm_from_basis(computational_basis(2), singletons(2));
  EXPECT_LT(dist(element_complement(q, {0}), diag({0, 1})), 1e-15);
}

TEST(Pvm, InvariantsOnRandomBases) {
  Rng rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + trial % 15;
    const auto basis = random_basis(rng, n);
    const auto p = pvm_from_basis(basis, random_partition(rng, static_cast<std::size_t>(n), 1 + trial % 4));
    Operator sum = Operator::Zero(n, n);
    for (std::size_t k = 0; k < p.outcome_count(); ++k) {
      const Operator& e = p.outcome(k);
      EXPECT_LT(hermiticity_defect(e), 1e-10);
      EXPECT_LT(idempotency_defect(e), 1e-10);
      for (std::size_t l = k + 1; l < p.outcome_count(); ++l) EXPECT_LT(testing::dist(e * p.outcome(l), Operator::Zero(n, n)), 1e-10);
      EXPECT_LT(dist(element_product(p, p.partition()[k], p.partition()[k]), e), 1e-10);
      EXPECT_LT(dist(element_complement(p, p.partition()[k]) * e, Operator::Zero(n, n)), 1e-10);
      sum += e;
    }
    EXPECT_LT(dist(sum, Operator::Identity(n, n)), 1e-10);

    // Probabilities over the partition sum to one.
    const auto psi = random_state(rng, n);
    double total = 0.0;
    for (std::size_t k = 0; k < p.outcome_count(); ++k) total += born_probability(psi, p.outcome(k));
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(BornProbability, Examples) {
  Rng rng(33);
  const auto psi = random_state(rng, 3);
  EXPECT_NEAR(born_probability(psi, Operator::Identity(3, 3)), 1.0, 1e-15);
  EXPECT_EQ(born_probability(StateVector::basis(2, 1), diag({1, 0})), 0.0);
  EXPECT_NEAR(born_probability(StateVector::normalized({0.6, 0.8}), diag({1, 0})), 0.36, 1e-15);
}

TEST(BornProbability, PureAndDensityAgree) {
  Rng rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = 2 + trial % 6;
    const auto psi = random_state(rng, n);
    const auto phi = random_state(rng, n);
    const Operator e = outer_product(phi, phi);
    EXPECT_NEAR(born_probability(psi, e), born_probability(DensityMatrix::pure(psi), e), 1e-12);
  }
}

TEST(BornProbability, Errors) {
  EXPECT_THROW(born_probability(qubit::up_z(), Operator::Identity(3, 3)), std::invalid_argument);
  EXPECT_THROW(born_probability(qubit::up_z(), diag({1, -0.5})), std::invalid_argument);
  EXPECT_THROW(born_probability(qubit::up_z(), diag({2, 0})), std::invalid_argument);
}

TEST(GeneralProjector, OrthonormalInputsReduceToSum) {
  Rng rng(35);
  const auto b = random_basis(rng, 5);
  const StateList sub(b.begin(), b.begin() + 3);
  Operator expected = Operator::Zero(5, 5);
  for (const auto& v : sub) expected += outer_product(v, v);
  EXPECT_LT(dist(general_projector(sub), expected), 1e-13);
}

TEST(GeneralProjector, Examples) {
  EXPECT_LT(dist(general_projector(StateList{qubit::up_z(), qubit::up_x()}), Operator::Identity(2, 2)), 1e-14);
  const StateList v{StateVector::basis(3, 0), StateVector::normalized({1.0, 1.0, 0.0})};
  EXPECT_LT(dist(general_projector(v), diag({1, 1, 0})), 1e-14);
  EXPECT_LT(dist(general_projector(v), testing::gram_schmidt_projector(as_columns(v))), 1e-14);
  EXPECT_THROW(general_projector(StateList{}), std::invalid_argument);
  EXPECT_THROW(general_projector(StateList{StateVector::zero(2)}), std::invalid_argument);
}

TEST(GeneralProjector, FixesInputsAndIgnoresOrderAndDuplicates) {
  Rng rng(36);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 3 + trial % 6;
    const Index k = 1 + trial % (n - 1);
    StateList v;
    for (Index c = 0; c < k; ++c) v.push_back(random_state(rng, n));
    const Operator p = general_projector(v);
    const auto d = check_projector(p);
    EXPECT_TRUE(d.self_adjoint);
    EXPECT_TRUE(d.idempotent) << d.idempotency_defect;
    for (const auto& x : v) EXPECT_LT((p * x.amplitudes() - x.amplitudes()).norm(), 1e-9);

    StateList shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(v.front());
    EXPECT_LT(dist(general_projector(shuffled), p), 1e-10);
  }
}

TEST(CheckProjector, Examples) {
  const Operator prod = outer_product(qubit::up_x(), qubit::up_x()) * outer_product(qubit::up_z(), qubit::up_z());
  const auto bad = check_projector(prod);
  EXPECT_FALSE(bad.self_adjoint);
  EXPECT_FALSE(bad.idempotent);
  EXPECT_GT(bad.hermiticity_defect, 0.1);
  EXPECT_GT(bad.idempotency_defect, 0.1);

  for (const Operator& good : {Operator(Operator::Identity(2, 2)), outer_product(qubit::up_z(), qubit::up_z())}) {
    const auto d = check_projector(good);
    EXPECT_TRUE(d.self_adjoint);
    EXPECT_TRUE(d.idempotent);
  }
}

// Joint PVM {I_S (x) |b_k><b_k|} for an environment basis b.
Pvm environment_pvm(Index ds, std::span<const StateVector> env_basis) {
  StateList joint;
  std::vector<IndexSet> cells(env_basis.size());
  const auto sys = computational_basis(ds);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t k = 0; k < env_basis.size(); ++k) {
      cells[k].insert(joint.size());
      joint.push_back(tensor_product(sys[i], env_basis[k]));
    }
  }
  return pvm_from_basis(joint, cells);
}

TEST(NaimarkCompress, TrivialCoupling) {
  const auto env = computational_basis(2);
  const auto pvm = environment_pvm(2, env);
  const auto povm = naimark_compress(pvm, Operator::Identity(4, 4), env[0], 2);
  ASSERT_EQ(povm.size(), 2u);
  EXPECT_LT(dist(povm.element(0), Operator::Identity(2, 2)), 1e-14);
  EXPECT_LT(dist(povm.element(1), Operator::Zero(2, 2)), 1e-14);
}

TEST(NaimarkCompress, PremeasurementGivesSystemProjectors) {
  Rng rng(37);
  const auto phi = random_basis(rng, 2);
  const auto env = computational_basis(2);
  const Operator u = premeasurement_unitary(phi, env, env[0]);
  const auto povm = naimark_compress(environment_pvm(2, env), u, env[0], 2);
  // Oracle: the premeasurement copies phi_i into e_i, so reading e_1 is
  // reading phi_1.
  EXPECT_LT(dist(povm.element(1), outer_product(phi[1], phi[1])), 1e-12);
  EXPECT_LT(dist(povm.element(0), outer_product(phi[0], phi[0])), 1e-12);
}

TEST(NaimarkCompress, CompressedProbabilitiesMatchJointOnes) {
  Rng rng(38);
  for (int trial = 0; trial < 50; ++trial) {
    const Index ds = 2 + trial % 3;
    const Index de = 2 + (trial / 3) % 3;
    const Operator u = random_unitary(rng, ds * de);
    const auto ready = random_state(rng, de);
    const auto pvm = pvm_from_basis(random_basis(rng, ds * de),
                                    random_partition(rng, static_cast<std::size_t>(ds * de), 2 + trial % 3));
    const auto povm = naimark_compress(pvm, u, ready, ds);
    Operator sum = Operator::Zero(ds, ds);
    for (const auto& f : povm.elements()) sum += f;
    EXPECT_LT(dist(sum, Operator::Identity(ds, ds)), 1e-9);
    const auto psi0 = random_state(rng, ds);
    const StateVector joint = StateVector::normalized(u * tensor_product(psi0, ready).amplitudes());
    for (std::size_t k = 0; k < povm.size(); ++k) {
      EXPECT_NEAR(born_probability(psi0, povm.element(k)), born_probability(joint, pvm.outcome(k)), 1e-10);
    }
  }
}

TEST(NaimarkCompress, Errors) {
  const auto env = computational_basis(2);
  const auto pvm = environment_pvm(2, env);
  Operator not_unitary = Operator::Identity(4, 4);
  not_unitary(0, 0) = 2.0;
  EXPECT_THROW(naimark_compress(pvm, not_unitary, env[0], 2), std::invalid_argument);
  EXPECT_THROW(naimark_compress(pvm, Operator::Identity(4, 4), StateVector::basis(3, 0), 2), std::invalid_argument);
}

TEST(Povm, RejectsInvalidEffects) {
  EXPECT_THROW(Povm::from_elements({diag({1, 0})}), std::invalid_argument);
  EXPECT_THROW(Povm::from_elements({diag({1.5, 0.5}), diag({-0.5, 0.5})}), std::invalid_argument);
  EXPECT_NO_THROW(Povm::from_elements({diag({0.3, 0.5}), diag({0.7, 0.5})}));
}

TEST(RelativeStateProbability, Examples) {
  const auto env = computational_basis(2);
  // Bell-like state.
  Operator a = Operator::Zero(2, 2);
  a(0, 0) = a(1, 1) = 1.0 / std::sqrt(2.0);
  const auto bell = BipartiteState::from_amplitudes(a);
  const auto dec = decompose(bell, computational_basis(2));
  EXPECT_NEAR(relative_state_probability(dec, Operator::Identity(2, 2)), 1.0, 1e-15);
  const Operator pe1 = outer_product(env[0], env[0]);
  EXPECT_NEAR(relative_state_probability(dec, pe1), 0.5, 1e-15);
  // Full-space oracle.
  EXPECT_NEAR(born_probability(bell.joint(), kron(Operator::Identity(2, 2), pe1)), 0.5, 1e-15);

  const auto prod = BipartiteState::product(qubit::up_x(), env[0]);
  EXPECT_NEAR(relative_state_probability(decompose(prod, computational_basis(2)), pe1), 1.0, 1e-15);
  EXPECT_THROW(relative_state_probability(dec, Operator::Identity(3, 3)), std::invalid_argument);
}

TEST(RelativeStateProbability, MatchesJointBornRule) {
  Rng rng(39);
  for (int trial = 0; trial < 30; ++trial) {
    const Index ds = 2 + trial % 3;
    const Index de = 2 + trial % 4;
    const auto state = BipartiteState::from_amplitudes(random_amplitude_matrix(rng, ds, de));
    const auto dec = decompose(state, random_basis(rng, ds));
    const auto b = random_basis(rng, de);
    const Operator pi_e = outer_product(b[0], b[0]) + outer_product(b[1], b[1]);
    EXPECT_NEAR(relative_state_probability(dec, pi_e),
                born_probability(state.joint(), kron(Operator::Identity(ds, ds), pi_e)), 1e-10);
  }
}

TEST(MatrixElement, OffDiagonal) {
  EXPECT_NEAR(std::abs(matrix_element(qubit::up_z(), outer_product(qubit::up_x(), qubit::up_x()), qubit::down_z()) - 0.5),
              0.0, 1e-15);
}

}  // namespace
}  // namespace rql
