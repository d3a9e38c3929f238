// Copyright 2026 The pimub Authors
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

// The permutation-invariant (PI) operator subspace.
//
// An operator A on n qubits is PI iff A_{xy} depends only on the orbit of
// the index pair (x, y) under simultaneous permutation of the qubits. Such
// an orbit is fixed by how many positions i carry each of the four bit pairs
// (x_i, y_i), so there are C(n + 3, 3) of them and the S_n twirl reduces to
// averaging A over each orbit.

#include <cstdint>
#include <vector>

#include "pimub/operators.hpp"

namespace pimub {

inline constexpr int kMaxSymmetricQubits = 10;

class PairOrbits {
 public:
  // Throws kDimensionOverflow for n > kMaxSymmetricQubits.
  explicit PairOrbits(int n);

  int n() const { return n_; }
  std::size_t size() const { return sizes_.size(); }
  int orbit(std::uint32_t x, std::uint32_t y) const {
    return ids_[(static_cast<std::size_t>(x) << n_) | y];
  }
  std::size_t orbit_size(int id) const { return sizes_[id]; }
  // Orbit of (y, x) given the orbit of (x, y).
  int transposed(int id) const { return transposed_[id]; }

  // Per-orbit sums of A_{xy}.
  Eigen::VectorXcd orbit_sums(const Matrix& a) const;

 private:
  int n_;
  std::vector<int> ids_;
  std::vector<std::size_t> sizes_;
  std::vector<int> transposed_;
};

// (1/n!) sum_pi U_pi A U_pi^dagger, computed by orbit averaging.
Matrix twirl(const Matrix& a);

// Pi_pq A Pi_pq = A for every pair p < q, entrywise within tol.
bool is_permutation_invariant(const Matrix& a, double tol = 1e-10);

// Real linear functional A -> Tr(A P) restricted to Hermitian PI operators,
// written in the coordinates (Re r_O, Im r_O) of A's orbit values r_O.
Eigen::VectorXd pi_functional(const PairOrbits& orbits, const Vector& v);

}  // namespace pimub
