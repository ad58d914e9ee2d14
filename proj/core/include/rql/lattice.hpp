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

// Birkhoff/von Neumann subspace lattice: meet is intersection, join is the
// closed sum, and the complement is the orthogonal complement.

#include "rql/hilbert.hpp"

namespace rql {

/// A closed subspace held as an orthonormal basis (columns of basis()).
class Subspace {
 public:
  static Subspace null(Index ambient_dim);
  static Subspace full(Index ambient_dim);

  Index ambient_dim() const { return ambient_; }
  Index rank() const { return basis_.cols(); }
  bool is_null() const { return rank() == 0; }

  const Operator& basis() const { return basis_; }
  StateList basis_vectors() const;
  /// Orthogonal projector B B^dagger.
  Operator projector() const;

 private:
  friend Subspace subspace_from_columns(const Operator&, const Tolerances&);
  Subspace(Index ambient, Operator basis) : ambient_(ambient), basis_(std::move(basis)) {}

  Index ambient_ = 0;
  Operator basis_;
};

/// Orthonormalized span; rank is the number of singular values above tol.rank.
Subspace span(std::span<const StateVector> vectors, Index ambient_dim, const Tolerances& tol = {});

/// Span of the (not necessarily orthonormal) columns of m.
Subspace subspace_from_columns(const Operator& m, const Tolerances& tol = {});

/// Intersection: eigenvectors of Pa Pb Pa with eigenvalue >= 1 - tol.rank.
Subspace meet(const Subspace& a, const Subspace& b, const Tolerances& tol = {});
Subspace join(const Subspace& a, const Subspace& b, const Tolerances& tol = {});
Subspace orthocomplement(const Subspace& a, const Tolerances& tol = {});

/// Sup-norm distance between the two projectors.
double projector_distance(const Subspace& a, const Subspace& b);

/// Subspace equality is projector equality within `eps`; bases are not unique.
bool same_subspace(const Subspace& a, const Subspace& b, double eps = 1e-10);

/// a is contained in b: Pa Pb = Pa within `eps`.
bool is_contained(const Subspace& a, const Subspace& b, double eps = 1e-10);

struct DistributivityReport {
  Subspace lhs;  ///< a meet (b join c)
  Subspace rhs;  ///< (a meet b) join (a meet c)
  bool equal = false;
  double distance = 0.0;
};

DistributivityReport check_distributivity(const Subspace& a, const Subspace& b, const Subspace& c,
                                          const Tolerances& tol = {});

}  // namespace rql
