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

// The complete family of 2^n + 1 mutually unbiased bases.
//
// Slope bases are |nu, mu> = X_nu |anchor(mu)>, where anchor(mu) is a joint
// eigenvector of the commuting monomials {Z_alpha X_{mu alpha}}. For mu != 0
// the anchor is the quadratic-phase state
//   anchor(mu)(x) = 2^{-n/2} i^{q(x)},
//   q(x) = sum_i S_ii x_i + 2 sum_{i<j} S_ij x_i x_j  (mod 4),
// with S_ij = tr(theta_i mu^{-1} theta_j). The vertical basis is F|nu>.

#include <cstdint>
#include <utility>
#include <vector>

#include "pimub/gf2n.hpp"
#include "pimub/labels.hpp"
#include "pimub/operators.hpp"

namespace pimub {

inline constexpr double kStructuralTol = 1e-10;

// Columns are the vectors |nu~> indexed by nu.
Matrix build_vertical(const FieldContext& ctx);

// Columns are |nu, mu> indexed by nu; mu = 0 gives the identity. Throws
// kDegenerateEigenspace if the anchor fails the joint-eigenvector check.
Matrix build_slope_basis(const FieldContext& ctx, const FieldElement& mu);

// Symmetric matrix of multiplication by mu in self-dual coordinates, rows
// and columns ordered theta_1..theta_n.
std::vector<std::vector<int>> multiplication_matrix(const FieldElement& mu);

class MubFamily {
 public:
  MubFamily(FieldPtr field, std::vector<Matrix> bases);

  const FieldContext& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return field_->n(); }
  Eigen::Index dim() const { return dimension(n()); }
  std::size_t num_bases() const { return bases_.size(); }
  std::vector<BasisLabel> labels() const;

  const Matrix& basis(const BasisLabel& label) const;
  Vector vector(const LabelPoint& point) const;
  Matrix projector(const LabelPoint& point) const;

 private:
  FieldPtr field_;
  std::vector<Matrix> bases_;
};

MubFamily build_family(FieldPtr field);

// sum_{k,nu} Tr(rho P_{nu,k}) P_{nu,k} - I; equals rho for a complete family.
Matrix reconstruct_identity_check(const MubFamily& family, const Matrix& rho);

// Largest deviation from the unbiasedness relation
// |<nu,k|nu',k'>|^2 = delta_kk' delta_nunu' + 2^{-n} (1 - delta_kk').
double max_unbiasedness_error(const MubFamily& family);

// Result of conjugating every projector with every swap matrix.
struct CovarianceReport {
  int n = 0;
  std::size_t checked = 0;
  // Conjugates that coincide with some projector of the family.
  std::size_t closed = 0;
  // Conjugates that coincide with the projector predicted by each rule.
  std::size_t coordinate_swap_hits = 0;
  std::size_t shared_nu_trace_hits = 0;
  // Qubit pairs whose swap maps the family onto itself.
  std::vector<std::pair<int, int>> preserving_swaps;

  bool family_closed() const { return closed == checked; }
  bool holds(IndexRule rule) const;
};

CovarianceReport check_permutation_covariance(const MubFamily& family,
                                              double tol = 1e-9);

}  // namespace pimub
