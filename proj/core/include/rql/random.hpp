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

// Seeded random instances for sweeps and property tests. Every generator is
// a pure function of the engine state, so a fixed seed reproduces a run.

#include <cstdint>
#include <random>

#include "rql/hilbert.hpp"

namespace rql {

using Rng = std::mt19937_64;

/// Haar-random pure state (normalized complex Gaussian vector).
StateVector random_state(Rng& rng, Index dim);

/// Haar-random unitary via QR of a complex Ginibre matrix with the R-phase fix.
Operator random_unitary(Rng& rng, Index dim);

/// Columns of a Haar-random unitary.
StateList random_basis(Rng& rng, Index dim);

/// Random bipartite amplitude matrix (dim_s x dim_e) of unit Frobenius norm.
Operator random_amplitude_matrix(Rng& rng, Index dim_s, Index dim_e);

}  // namespace rql
