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

#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "pimub/operators.hpp"

namespace pimub {
namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

Matrix hadamard_power(int n) {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Matrix out = Matrix::Ones(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, h);
  return out;
}

// |x_1> (x) ... (x) |x_n> for the bit string x, qubit 1 leftmost.
Vector product_state(const std::vector<int>& bits) {
  Matrix out = Matrix::Ones(1, 1);
  for (int b : bits) {
    Matrix ket = Matrix::Zero(2, 1);
    ket(b, 0) = 1.0;
    out = kron(out, ket);
  }
  return out.col(0);
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Operators, PauliMatricesFollowTheTraceCharacter) {
  for (int n = 1; n <= 4; ++n) {
    const FieldPtr f = make_field(n);
    for (const auto& alpha : f->elements()) {
      const Matrix z = build_z(alpha);
      const Matrix x = build_x(alpha);
      for (const auto& nu : f->elements()) {
        const double sign = f->trace(f->mul(nu, alpha)) ? -1.0 : 1.0;
        for (const auto& mu : f->elements()) {
          const double expected_z = nu == mu ? sign : 0.0;
          EXPECT_EQ(z(nu.bits(), mu.bits()), Complex(expected_z, 0.0));
          const double expected_x = (mu + alpha) == nu ? 1.0 : 0.0;
          EXPECT_EQ(x(nu.bits(), mu.bits()), Complex(expected_x, 0.0));
        }
      }
    }
  }
}

TEST(Operators, CommutationSigns) {
  for (int n = 1; n <= 4; ++n) {
    const FieldPtr f = make_field(n);
    for (const auto& a : f->elements()) {
      for (const auto& b : f->elements()) {
        const double sign = f->trace(f->mul(a, b)) ? -1.0 : 1.0;
        const Matrix z = build_z(a);
        const Matrix x = build_x(b);
        EXPECT_LE(max_abs(z * x - sign * x * z), 1e-12);
      }
    }
  }
}

TEST(Operators, FourierIsHadamardPowerAndConjugatesZToX) {
  for (int n = 1; n <= 5; ++n) {
    const FieldPtr f = make_field(n);
    const Matrix fr = fourier(*f);
    EXPECT_LE(max_abs(fr - hadamard_power(n)), 1e-12);
    EXPECT_TRUE(is_unitary(fr));
    for (const auto& a : f->elements()) {
      EXPECT_LE(max_abs(fr * build_z(a) * fr - build_x(a)), 1e-12);
    }
  }
}

TEST(Operators, SwapMatrixExchangesTensorFactors) {
  for (int n = 2; n <= 4; ++n) {
    const FieldPtr f = make_field(n);
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        if (p == q) continue;
        const Matrix s = swap_matrix(*f, p, q);
        EXPECT_TRUE(is_unitary(s));
        EXPECT_LE(max_abs(s * s - Matrix::Identity(s.rows(), s.cols())), 0.0);
        for (std::uint32_t x = 0; x < f->size(); ++x) {
          std::vector<int> bits(n);
          for (int i = 0; i < n; ++i) bits[i] = (x >> (n - 1 - i)) & 1u;
          std::vector<int> swapped = bits;
          std::swap(swapped[p - 1], swapped[q - 1]);
          EXPECT_LE(max_abs(s * product_state(bits) - product_state(swapped)), 0.0);
        }
      }
    }
  }
}

TEST(Operators, FieldSwapFormulaIsBitSwap) {
  for (int n = 2; n <= 6; ++n) {
    const FieldPtr f = make_field(n);
    for (int p = 1; p <= n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        for (const auto& kappa : f->elements()) {
          std::uint32_t expected = kappa.bits();
          const int bp = kappa.coordinate(p);
          const int bq = kappa.coordinate(q);
          if (bp != bq) expected ^= (1u << (n - p)) | (1u << (n - q));
          EXPECT_EQ(permute_label(kappa, p, q).bits(), expected);
          EXPECT_EQ(swap_coordinates(kappa.bits(), n, p, q), expected);
        }
      }
    }
  }
}

TEST(Operators, PermutationMatrixComposesTranspositions) {
  const int n = 3;
  const FieldPtr f = make_field(n);
  // Cycle 1 -> 2 -> 3 -> 1 as (1 3)(1 2) acting right to left.
  const std::vector<int> cycle{1, 2, 0};
  const Matrix direct = permutation_matrix(n, cycle);
  EXPECT_LE(max_abs(direct - swap_matrix(*f, 1, 3) * swap_matrix(*f, 1, 2)), 0.0);
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  EXPECT_LE(max_abs(permutation_matrix(n, identity) - Matrix::Identity(8, 8)), 0.0);
}

TEST(Operators, InvalidQubitPairs) {
  const FieldPtr f = make_field(3);
  EXPECT_THROW(swap_matrix(*f, 1, 1), Error);
  EXPECT_THROW(swap_matrix(*f, 0, 2), Error);
  EXPECT_THROW(swap_matrix(*f, 1, 4), Error);
  EXPECT_THROW(permute_label(f->one(), 2, 2), Error);
}

TEST(Operators, DensityMatrixValidation) {
  Matrix rho = Matrix::Identity(4, 4) / 4.0;
  EXPECT_NO_THROW(DensityMatrix{rho});
  EXPECT_EQ(DensityMatrix(rho).num_qubits(), 2);
  Matrix bad_trace = Matrix::Identity(4, 4) / 3.0;
  EXPECT_THROW(DensityMatrix{bad_trace}, Error);
  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix{negative}, Error);
  Matrix non_hermitian = Matrix::Identity(2, 2) / 2.0;
  non_hermitian(0, 1) = Complex(0.1, 0.0);
  EXPECT_THROW(DensityMatrix{non_hermitian}, Error);
  EXPECT_THROW(DensityMatrix{Matrix::Identity(3, 3) / 3.0}, Error);
  EXPECT_TRUE(is_density_operator(Matrix::Identity(3, 3) / 3.0, 1e-12, 1e-12, 1e-10));
}

}  // namespace
}  // namespace pimub
