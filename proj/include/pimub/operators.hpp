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

// Dense operators on n qubits labelled by GF(2^n).
//
// The computational basis vector |nu> sits at the index equal to the
// self-dual bitmask of nu, so Z_alpha and X_beta are literal Kronecker
// products with qubit 1 as the leftmost factor.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pimub/gf2n.hpp"

namespace pimub {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Eigen::Index dimension(int n) { return Eigen::Index{1} << n; }

// sigma_z = |0><0| - |1><1|, so that the Kronecker product of the factors
// reproduces (-1)^tr(nu alpha) on |nu>.
Matrix sigma_z();
Matrix sigma_x();

// Z_alpha = sigma_z^{a_1} (x) ... (x) sigma_z^{a_n}, a_i = tr(alpha theta_i).
Matrix build_z(const FieldElement& alpha);
// X_beta = sigma_x^{b_1} (x) ... (x) sigma_x^{b_n}; X_beta |nu> = |nu + beta>.
Matrix build_x(const FieldElement& beta);
// F_{nu,nu'} = 2^{-n/2} (-1)^tr(nu nu').
Matrix fourier(const FieldContext& ctx);

// Exchanges qubits p and q (1-based). Throws kInvalidIndex for p == q or
// indices outside [1, n].
Matrix swap_matrix(const FieldContext& ctx, int p, int q);

// kappa + eps tr(eps kappa) with eps = theta_p + theta_q.
FieldElement permute_label(const FieldElement& kappa, int p, int q);

// Bit-level counterpart of permute_label on a self-dual bitmask.
std::uint32_t swap_coordinates(std::uint32_t bits, int n, int p, int q);

// Unitary sending qubit i to position image[i] (0-based permutation).
Matrix permutation_matrix(int n, std::span<const int> image);

bool is_unitary(const Matrix& u, double tol = 1e-12);
bool is_hermitian(const Matrix& a, double tol = 1e-12);

// Hermitian, unit trace and PSD up to the given tolerances, in any dimension.
bool is_density_operator(const Matrix& m, double hermitian_tol,
                         double trace_tol, double eigen_tol);

// Validated dim x dim density matrix: Hermitian, unit trace and positive
// semidefinite up to the tolerances below.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kEigenTol = 1e-10;

  // Throws Error(kDimensionMismatch) when the invariants do not hold.
  explicit DensityMatrix(Matrix m);

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  int num_qubits() const;

  static bool is_valid(const Matrix& m, double hermitian_tol = kHermitianTol,
                       double trace_tol = kTraceTol,
                       double eigen_tol = kEigenTol);

 private:
  Matrix m_;
};

}  // namespace pimub
