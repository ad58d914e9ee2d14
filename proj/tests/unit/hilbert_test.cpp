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

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "rql/hilbert.hpp"
#include "rql/random.hpp"
#include "test_support.hpp"

namespace rql {
namespace {

using testing::diag;
using testing::dist;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(StateVector, RejectsUnnormalizedAndNonFinite) {
  Amplitudes v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(StateVector::from_amplitudes(v), std::invalid_argument);
  v << std::nan(""), 0.0;
  EXPECT_THROW(StateVector::from_amplitudes(v), std::invalid_argument);
  EXPECT_THROW(StateVector::normalized({0.0, 0.0}), std::invalid_argument);
  EXPECT_TRUE(StateVector::zero(3).is_zero());
}

TEST(InnerProduct, Examples) {
  const auto e1 = StateVector::basis(2, 0);
  const auto e2 = StateVector::basis(2, 1);
  EXPECT_EQ(inner_product(e1, e1), Complex(1.0));
  EXPECT_EQ(inner_product(e1, e2), Complex(0.0));
  // sum conj(u_k) v_k = 1 * 1/sqrt2
  EXPECT_NEAR(std::abs(inner_product(e1, qubit::up_x()) - Complex(kInvSqrt2)), 0.0, 1e-15);
  EXPECT_THROW(inner_product(e1, StateVector::basis(3, 0)), std::invalid_argument);
}

TEST(InnerProduct, ConjugateSymmetryAndLinearity) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto u = random_state(rng, 5);
    const auto v = random_state(rng, 5);
    EXPECT_LT(std::abs(inner_product(u, v) - std::conj(inner_product(v, u))), 1e-14);
    const Complex self = inner_product(u, u);
    EXPECT_NEAR(self.imag(), 0.0, 1e-15);
    EXPECT_GE(self.real(), 0.0);
    // Conjugate-linear in the left slot.
    const Complex c(0.3, -0.7);
    const Complex lhs = Amplitudes(c * u.amplitudes()).dot(v.amplitudes());
    EXPECT_LT(std::abs(lhs - std::conj(c) * inner_product(u, v)), 1e-14);
  }
}

TEST(TensorProduct, Examples) {
  const auto e1 = StateVector::basis(2, 0);
  EXPECT_LT((tensor_product(e1, e1).amplitudes() - StateVector::basis(4, 0).amplitudes()).norm(), 1e-15);
  Amplitudes expected(4);
  expected << kInvSqrt2, 0.0, kInvSqrt2, 0.0;
  EXPECT_LT((tensor_product(qubit::up_x(), e1).amplitudes() - expected).norm(), 1e-15);
  EXPECT_THROW(tensor_product(StateVector::zero(2), e1), std::invalid_argument);
}

TEST(TensorProduct, NormAndAssociativity) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = random_state(rng, 2);
    const auto v = random_state(rng, 3);
    const auto w = random_state(rng, 2);
    const auto uv = tensor_product(u, v);
    EXPECT_NEAR(uv.amplitudes().norm(), 1.0, 1e-14);
    EXPECT_LT(std::abs(uv[1 * 3 + 2] - u[1] * v[2]), 1e-15);
    const auto left = tensor_product(tensor_product(u, v), w);
    const auto right = tensor_product(u, tensor_product(v, w));
    EXPECT_LT((left.amplitudes() - right.amplitudes()).norm(), 1e-14);
  }
}

TEST(OuterProduct, Examples) {
  const auto e1 = StateVector::basis(2, 0);
  const auto e2 = StateVector::basis(2, 1);
  EXPECT_LT(dist(outer_product(e1, e1), diag({1, 0})), 1e-15);
  Operator single = Operator::Zero(2, 2);
  single(0, 1) = 1.0;
  EXPECT_LT(dist(outer_product(e1, e2), single), 1e-15);
  EXPECT_LT(dist(outer_product(qubit::up_x(), qubit::up_x()), Operator::Constant(2, 2, 0.5)), 1e-15);
}

TEST(OuterProduct, RankOneProjectorIsHermitianIdempotent) {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_state(rng, 6);
    const Operator p = outer_product(u, u);
    EXPECT_LT(hermiticity_defect(p), 1e-10);
    EXPECT_LT(idempotency_defect(p), 1e-10);
  }
}

TEST(HermitianEigenvalues, Examples) {
  EXPECT_EQ(hermitian_eigenvalues(diag({0.5, 0.5})), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(hermitian_eigenvalues(diag({0.0, 1.0})), (std::vector<double>{1.0, 0.0}));
  // Characteristic polynomial l^2 - l = 0.
  const auto ev = hermitian_eigenvalues(Operator::Constant(2, 2, 0.5));
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0], 1.0, 1e-15);
  EXPECT_NEAR(ev[1], 0.0, 1e-15);
  EXPECT_GE(ev[1], 0.0);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  Operator m = Operator::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigenvalues(m), std::invalid_argument);
  EXPECT_THROW(hermitian_eigenvalues(Operator::Zero(2, 3)), std::invalid_argument);
}

TEST(HermitianEigenvalues, SumsToTraceOnRandomHermitian) {
  Rng rng(14);
  for (Index n = 1; n <= 16; ++n) {
    Operator a = random_amplitude_matrix(rng, n, n) * 3.0;
    a = (a + a.adjoint()).eval();
    const auto ev = hermitian_eigenvalues(a);
    EXPECT_NEAR(std::accumulate(ev.begin(), ev.end(), 0.0), a.trace().real(), 1e-9);
    EXPECT_TRUE(std::is_sorted(ev.rbegin(), ev.rend()));
  }
}

TEST(UnitaryCompletion, FullBasisIsReturnedVerbatim) {
  Rng rng(15);
  const auto b = random_basis(rng, 4);
  const Operator u = unitary_completion(b);
  EXPECT_LT(dist(u, as_columns(b)), 1e-15);
}

TEST(UnitaryCompletion, SingleColumnDeterministicSign) {
  // Candidates e1, e2 against column e2: e1 survives with residual 1 and
  // already has a positive leading entry.
  const Operator u = unitary_completion(StateList{StateVector::basis(2, 1)});
  Operator expected(2, 2);
  expected << 0.0, 1.0, 1.0, 0.0;
  EXPECT_LT(dist(u, expected), 1e-15);
}

TEST(UnitaryCompletion, RandomIsometriesComplete) {
  Rng rng(16);
  for (Index n = 2; n <= 8; ++n) {
    for (Index k = 1; k <= n; ++k) {
      const Operator full = random_unitary(rng, n);
      StateList cols;
      for (Index c = 0; c < k; ++c) cols.push_back(StateVector::normalized(Amplitudes(full.col(c))));
      const Operator u = unitary_completion(cols);
      EXPECT_LT(unitarity_defect(u), 1e-10);
      EXPECT_LT(dist(u.leftCols(k), full.leftCols(k)), 1e-15);
      for (Index c = k; c < n; ++c) {
        // First nonzero entry of each completed column is real positive.
        Index e = 0;
        while (std::abs(u(e, c)) <= 1e-12) ++e;
        EXPECT_NEAR(u(e, c).imag(), 0.0, 1e-15);
        EXPECT_GT(u(e, c).real(), 0.0);
      }
      // Determinism.
      EXPECT_EQ(dist(u, unitary_completion(cols)), 0.0);
    }
  }
}

TEST(UnitaryCompletion, RejectsNonOrthonormal) {
  EXPECT_THROW(unitary_completion(StateList{qubit::up_z(), qubit::up_x()}), std::invalid_argument);
}

TEST(InvertGram, Examples) {
  EXPECT_LT(dist(invert_gram(Operator::Identity(3, 3)), Operator::Identity(3, 3)), 1e-15);

  Operator a(2, 2);
  a << 1.0, kInvSqrt2, kInvSqrt2, 1.0;
  Operator inv(2, 2);
  inv << 2.0, -std::sqrt(2.0), -std::sqrt(2.0), 2.0;
  EXPECT_LT(dist(invert_gram(a), inv), 1e-12);

  // Rank one: eigenvalue 2 inverts to 1/2 on (1,1)/sqrt2.
  EXPECT_LT(dist(invert_gram(Operator::Constant(2, 2, 1.0)), Operator::Constant(2, 2, 0.25)), 1e-14);

  Operator bad = Operator::Zero(2, 2);
  bad(0, 1) = 1.0;
  EXPECT_THROW(invert_gram(bad), std::invalid_argument);
}

TEST(InvertGram, PseudoInverseLawOnRandomPsd) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 2 + trial % 6;
    const Index r = 1 + trial % n;  // rank
    Operator b = Operator::Zero(n, r);
    const auto basis = random_basis(rng, n);
    for (Index c = 0; c < r; ++c) b.col(c) = basis[static_cast<std::size_t>(c)].amplitudes() * double(c + 1);
    const Operator a = b * b.adjoint();
    const Operator ai = invert_gram(a);
    EXPECT_LT(dist(ai * a * ai, ai), 1e-9);
    EXPECT_LT(dist(a * ai * a, a), 1e-9);
    EXPECT_LT(hermiticity_defect(ai), 1e-15);
  }
}

TEST(FourierBasis, QubitCaseIsSigmaXBasis) {
  const auto f = fourier_basis(2);
  EXPECT_LT((f[0].amplitudes() - qubit::up_x().amplitudes()).norm(), 1e-15);
  EXPECT_LT((f[1].amplitudes() - qubit::down_x().amplitudes()).norm(), 1e-15);
  const auto f5 = fourier_basis(5);
  EXPECT_NO_THROW(require_orthonormal(f5, "fourier"));
}

TEST(Tolerances, Validate) {
  EXPECT_NO_THROW(Tolerances{}.validate());
  EXPECT_THROW((Tolerances{.norm = 1e-2}).validate(), std::invalid_argument);
  EXPECT_THROW((Tolerances{.truth = -1.0}).validate(), std::invalid_argument);
}

}  // namespace
}  // namespace rql
