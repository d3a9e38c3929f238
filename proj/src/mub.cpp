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

#include "pimub/mub.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace pimub {
namespace {

int parity(std::uint32_t x) { return std::popcount(x) & 1; }

// |v|^2 overlap test between unit vectors.
bool same_ray(const Vector& a, const Vector& b, double tol) {
  return std::abs(std::norm(a.dot(b)) - 1.0) <= tol;
}

}  // namespace

std::string_view to_string(IndexRule rule) {
  switch (rule) {
    case IndexRule::kCoordinateSwap: return "coordinate-swap";
    case IndexRule::kSharedNuTrace: return "shared-nu-trace";
  }
  return "unknown";
}

LabelPoint transform_point(const LabelPoint& point, int n, int p, int q,
                           IndexRule rule) {
  LabelPoint out = point;
  out.nu = swap_coordinates(point.nu, n, p, q);
  if (point.basis.is_vertical() || point.basis.slope_bits() == 0) return out;
  const std::uint32_t mu = point.basis.slope_bits();
  switch (rule) {
    case IndexRule::kCoordinateSwap:
      out.basis = BasisLabel::slope(swap_coordinates(mu, n, p, q));
      break;
    case IndexRule::kSharedNuTrace: {
      const std::uint32_t eps = (1u << (n - p)) | (1u << (n - q));
      const int t = parity(point.nu & eps);
      out.basis = BasisLabel::slope(t ? mu ^ eps : mu);
      break;
    }
  }
  return out;
}

std::vector<std::vector<int>> multiplication_matrix(const FieldElement& mu) {
  const FieldContext& ctx = *mu.context();
  const int n = ctx.n();
  std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      s[i - 1][j - 1] =
          ctx.trace(ctx.mul(ctx.mul(ctx.theta(i), mu), ctx.theta(j)));
    }
  }
  return s;
}

Matrix build_vertical(const FieldContext& ctx) {
  // F|nu> = Z_nu F|0>; every entry is +-2^{-n/2}.
  return fourier(ctx);
}

Matrix build_slope_basis(const FieldContext& ctx, const FieldElement& mu) {
  if (mu.context() != &ctx) {
    throw Error(ErrorKind::kContextMismatch, "slope from a different field");
  }
  const int n = ctx.n();
  const std::uint32_t dim = ctx.size();
  if (mu.is_zero()) return Matrix::Identity(dim, dim);

  const auto s = multiplication_matrix(ctx.inverse(mu));
  static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  Vector anchor(dim);
  for (std::uint32_t x = 0; x < dim; ++x) {
    int q = 0;
    for (int i = 0; i < n; ++i) {
      if (!((x >> (n - 1 - i)) & 1u)) continue;
      q += s[i][i];
      for (int j = i + 1; j < n; ++j) {
        if ((x >> (n - 1 - j)) & 1u) q += 2 * s[i][j];
      }
    }
    anchor(x) = amp * kPhase[q & 3];
  }

  // Joint-eigenvector check on the generators Z_{theta_i} X_{mu theta_i}.
  for (int i = 1; i <= n; ++i) {
    const std::uint32_t a = ctx.theta(i).bits();
    const std::uint32_t b = ctx.mul(mu, ctx.theta(i)).bits();
    Complex lambda = 0.0;
    for (std::uint32_t x = 0; x < dim; ++x) {
      const Complex image = (parity(a & x) ? -1.0 : 1.0) * anchor(x ^ b);
      lambda += std::conj(anchor(x)) * image;
    }
    double residual = 0.0;
    for (std::uint32_t x = 0; x < dim; ++x) {
      const Complex image = (parity(a & x) ? -1.0 : 1.0) * anchor(x ^ b);
      residual = std::max(residual, std::abs(image - lambda * anchor(x)));
    }
    if (residual > kStructuralTol || std::abs(std::abs(lambda) - 1.0) > kStructuralTol) {
      throw Error(ErrorKind::kDegenerateEigenspace,
                  "anchor for slope " + std::to_string(mu.bits()) +
                      " is not a joint eigenvector");
    }
  }

  Matrix basis(dim, dim);
  for (std::uint32_t nu = 0; nu < dim; ++nu) {
    for (std::uint32_t x = 0; x < dim; ++x) basis(x, nu) = anchor(x ^ nu);
  }
  return basis;
}

MubFamily::MubFamily(FieldPtr field, std::vector<Matrix> bases)
    : field_(std::move(field)), bases_(std::move(bases)) {
  if (bases_.size() != field_->size() + 1) {
    throw Error(ErrorKind::kDimensionMismatch,
                "a family needs 2^n + 1 bases");
  }
}

std::vector<BasisLabel> MubFamily::labels() const {
  std::vector<BasisLabel> out;
  for (std::uint32_t k = 0; k < bases_.size(); ++k) {
    out.push_back(BasisLabel::from_index(k, n()));
  }
  return out;
}

const Matrix& MubFamily::basis(const BasisLabel& label) const {
  const std::uint32_t k = label.index(n());
  if (k >= bases_.size() || (!label.is_vertical() && k >= field_->size())) {
    throw Error(ErrorKind::kInvalidIndex, "unknown basis " + label.to_string());
  }
  return bases_[k];
}

Vector MubFamily::vector(const LabelPoint& point) const {
  const Matrix& b = basis(point.basis);
  if (point.nu >= static_cast<std::uint32_t>(b.cols())) {
    throw Error(ErrorKind::kInvalidIndex, "state label out of range");
  }
  return b.col(point.nu);
}

Matrix MubFamily::projector(const LabelPoint& point) const {
  const Vector v = vector(point);
  return v * v.adjoint();
}

MubFamily build_family(FieldPtr field) {
  std::vector<Matrix> bases;
  bases.reserve(field->size() + 1);
  for (std::uint32_t mu = 0; mu < field->size(); ++mu) {
    bases.push_back(build_slope_basis(*field, field->element(mu)));
  }
  bases.push_back(build_vertical(*field));
  return MubFamily(std::move(field), std::move(bases));
}

Matrix reconstruct_identity_check(const MubFamily& family, const Matrix& rho) {
  const Eigen::Index dim = family.dim();
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorKind::kDimensionMismatch, "state dimension mismatch");
  }
  Matrix out = -Matrix::Identity(dim, dim);
  for (const BasisLabel& label : family.labels()) {
    const Matrix& b = family.basis(label);
    // p_nu = <v|rho|v>; sum_nu p_nu |v><v| = B diag(p) B^dagger.
    const Matrix rb = rho * b;
    Eigen::VectorXd p(dim);
    for (Eigen::Index nu = 0; nu < dim; ++nu) {
      p(nu) = b.col(nu).dot(rb.col(nu)).real();
    }
    out += b * p.cast<Complex>().asDiagonal() * b.adjoint();
  }
  return out;
}

double max_unbiasedness_error(const MubFamily& family) {
  const auto labels = family.labels();
  const double unbiased = 1.0 / static_cast<double>(family.dim());
  double worst = 0.0;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    const Matrix& ba = family.basis(labels[a]);
    for (std::size_t b = a; b < labels.size(); ++b) {
      const Matrix g = ba.adjoint() * family.basis(labels[b]);
      for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
          const double expected =
              a == b ? (i == j ? 1.0 : 0.0) : unbiased;
          worst = std::max(worst, std::abs(std::norm(g(i, j)) - expected));
        }
      }
    }
  }
  return worst;
}

bool CovarianceReport::holds(IndexRule rule) const {
  const std::size_t hits = rule == IndexRule::kCoordinateSwap
                               ? coordinate_swap_hits
                               : shared_nu_trace_hits;
  return checked > 0 && hits == checked;
}

CovarianceReport check_permutation_covariance(const MubFamily& family,
                                              double tol) {
  const int n = family.n();
  const std::uint32_t dim = family.field().size();
  CovarianceReport report;
  report.n = n;
  const auto labels = family.labels();
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      std::size_t closed_here = 0;
      std::size_t checked_here = 0;
      for (const BasisLabel& label : labels) {
        const Matrix& b = family.basis(label);
        for (std::uint32_t nu = 0; nu < dim; ++nu) {
          // Pi is a permutation matrix: (Pi v)(x') = v(x) with x' = swap(x).
          Vector image(dim);
          for (std::uint32_t x = 0; x < dim; ++x) {
            image(swap_coordinates(x, n, p, q)) = b(x, nu);
          }
          const LabelPoint point{nu, label};
          ++checked_here;
          bool matched = false;
          for (IndexRule rule :
               {IndexRule::kCoordinateSwap, IndexRule::kSharedNuTrace}) {
            const LabelPoint target = transform_point(point, n, p, q, rule);
            if (same_ray(family.vector(target), image, tol)) {
              matched = true;
              if (rule == IndexRule::kCoordinateSwap) {
                ++report.coordinate_swap_hits;
              } else {
                ++report.shared_nu_trace_hits;
              }
            }
          }
          if (!matched) {
            for (const BasisLabel& other : labels) {
              const Eigen::VectorXd overlaps =
                  (family.basis(other).adjoint() * image).cwiseAbs2();
              if (std::abs(overlaps.maxCoeff() - 1.0) <= tol) {
                matched = true;
                break;
              }
            }
          }
          if (matched) ++closed_here;
        }
      }
      report.checked += checked_here;
      report.closed += closed_here;
      if (closed_here == checked_here) report.preserving_swaps.emplace_back(p, q);
    }
  }
  return report;
}

}  // namespace pimub
