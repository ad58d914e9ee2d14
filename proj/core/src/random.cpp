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

#include "rql/random.hpp"

#include <cmath>

namespace rql {

namespace {

Operator ginibre(Rng& rng, Index rows, Index cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator m(rows, cols);
  // Fill in a fixed (row-major) order so results do not depend on Eigen's
  // storage layout.
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

}  // namespace

StateVector random_state(Rng& rng, Index dim) {
  return StateVector::normalized(Amplitudes(ginibre(rng, dim, 1).col(0)));
}

Operator random_unitary(Rng& rng, Index dim) {
  const Operator z = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<Operator> qr(z);
  Operator q = qr.householderQ() * Operator::Identity(dim, dim);
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

StateList random_basis(Rng& rng, Index dim) {
  const Operator u = random_unitary(rng, dim);
  StateList out;
  out.reserve(static_cast<std::size_t>(dim));
  for (Index k = 0; k < dim; ++k) out.push_back(StateVector::normalized(Amplitudes(u.col(k))));
  return out;
}

Operator random_amplitude_matrix(Rng& rng, Index dim_s, Index dim_e) {
  Operator a = ginibre(rng, dim_s, dim_e);
  a /= a.norm();
  return a;
}

}  // namespace rql
