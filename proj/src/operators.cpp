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

#include "pimub/operators.hpp"

#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace pimub {
namespace {

void check_qubit_pair(int n, int p, int q) {
  if (p == q || p < 1 || q < 1 || p > n || q > n) {
    throw Error(ErrorKind::kInvalidIndex,
                "invalid qubit pair (" + std::to_string(p) + ", " +
                    std::to_string(q) + ") for n=" + std::to_string(n));
  }
}

Matrix kron_power(const FieldElement& e, const Matrix& factor) {
  const FieldContext& ctx = *e.context();
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 1; i <= ctx.n(); ++i) {
    // a_i = tr(e theta_i) equals the i-th self-dual coordinate.
    const int a = ctx.trace(ctx.mul(e, ctx.theta(i)));
    const Matrix f = a ? factor : Matrix::Identity(2, 2);
    out = Eigen::kroneckerProduct(out, f).eval();
  }
  return out;
}

}  // namespace

Matrix sigma_z() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = -1.0;
  return s;
}

Matrix sigma_x() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 1) = 1.0;
  s(1, 0) = 1.0;
  return s;
}

Matrix build_z(const FieldElement& alpha) {
  if (alpha.context() == nullptr) {
    throw Error(ErrorKind::kContextMismatch, "element has no field");
  }
  return kron_power(alpha, sigma_z());
}

Matrix build_x(const FieldElement& beta) {
  if (beta.context() == nullptr) {
    throw Error(ErrorKind::kContextMismatch, "element has no field");
  }
  return kron_power(beta, sigma_x());
}

Matrix fourier(const FieldContext& ctx) {
  const Eigen::Index dim = ctx.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Matrix f(dim, dim);
  for (std::uint32_t a = 0; a < ctx.size(); ++a) {
    for (std::uint32_t b = 0; b < ctx.size(); ++b) {
      const int t = ctx.trace(ctx.mul(ctx.element(a), ctx.element(b)));
      f(a, b) = t ? -scale : scale;
    }
  }
  return f;
}

std::uint32_t swap_coordinates(std::uint32_t bits, int n, int p, int q) {
  check_qubit_pair(n, p, q);
  const int sp = n - p;
  const int sq = n - q;
  const std::uint32_t bp = (bits >> sp) & 1u;
  const std::uint32_t bq = (bits >> sq) & 1u;
  if (bp == bq) return bits;
  return bits ^ ((std::uint32_t{1} << sp) | (std::uint32_t{1} << sq));
}

Matrix swap_matrix(const FieldContext& ctx, int p, int q) {
  const int n = ctx.n();
  check_qubit_pair(n, p, q);
  const Eigen::Index dim = ctx.size();
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint32_t x = 0; x < ctx.size(); ++x) {
    m(swap_coordinates(x, n, p, q), x) = 1.0;
  }
  return m;
}

FieldElement permute_label(const FieldElement& kappa, int p, int q) {
  const FieldContext* ctx = kappa.context();
  if (ctx == nullptr) {
    throw Error(ErrorKind::kContextMismatch, "element has no field");
  }
  check_qubit_pair(ctx->n(), p, q);
  const FieldElement eps = ctx->theta(p) + ctx->theta(q);
  return ctx->trace(ctx->mul(eps, kappa)) ? kappa + eps : kappa;
}

Matrix permutation_matrix(int n, std::span<const int> image) {
  if (static_cast<int>(image.size()) != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "permutation has wrong length");
  }
  const Eigen::Index dim = dimension(n);
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(dim); ++x) {
    std::uint32_t y = 0;
    for (int i = 0; i < n; ++i) {
      if ((x >> (n - 1 - i)) & 1u) y |= std::uint32_t{1} << (n - 1 - image[i]);
    }
    m(y, x) = 1.0;
  }
  return m;
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols()))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (!is_valid(m_)) {
    throw Error(ErrorKind::kDimensionMismatch,
                "matrix is not a valid density matrix");
  }
}

int DensityMatrix::num_qubits() const {
  return std::countr_zero(static_cast<std::uint64_t>(m_.rows()));
}

bool DensityMatrix::is_valid(const Matrix& m, double hermitian_tol,
                             double trace_tol, double eigen_tol) {
  if (!std::has_single_bit(static_cast<std::uint64_t>(m.rows()))) return false;
  return is_density_operator(m, hermitian_tol, trace_tol, eigen_tol);
}

bool is_density_operator(const Matrix& m, double hermitian_tol, double trace_tol,
                         double eigen_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (!is_hermitian(m, hermitian_tol)) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > trace_tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -eigen_tol;
}

}  // namespace pimub
