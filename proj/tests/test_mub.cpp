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
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "pimub/mub.hpp"

namespace pimub {
namespace {

Matrix random_state(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  const Eigen::Index d = dimension(n);
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d * d; ++i) g(i) = Complex(normal(rng), normal(rng));
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

TEST(Mub, OverlapsAreUnbiased) {
  for (int n = 1; n <= 4; ++n) {
    const MubFamily family = build_family(make_field(n));
    ASSERT_EQ(family.num_bases(), (1u << n) + 1);
    const double expected = 1.0 / static_cast<double>(family.dim());
    const auto labels = family.labels();
    for (std::size_t a = 0; a < labels.size(); ++a) {
      const Matrix& ba = family.basis(labels[a]);
      EXPECT_LE((ba.adjoint() * ba - Matrix::Identity(family.dim(), family.dim()))
                    .cwiseAbs()
                    .maxCoeff(),
                1e-12);
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        const Matrix overlaps = ba.adjoint() * family.basis(labels[b]);
        EXPECT_LE((overlaps.cwiseAbs2().array() - expected).abs().maxCoeff(), 1e-12);
      }
    }
    EXPECT_LE(max_unbiasedness_error(family), 1e-12);
  }
}

TEST(Mub, SlopeVectorsAreJointEigenvectorsOfTheirRay) {
  for (int n = 1; n <= 4; ++n) {
    const FieldPtr f = make_field(n);
    const MubFamily family = build_family(f);
    for (const auto& mu : f->elements()) {
      const Matrix& b = family.basis(BasisLabel::slope(mu.bits()));
      for (const auto& alpha : f->elements()) {
        const Matrix op = build_z(alpha) * build_x(f->mul(mu, alpha));
        const Matrix image = b.adjoint() * op * b;
        // Diagonal with unimodular entries.
        const Matrix off = image - Matrix(image.diagonal().asDiagonal());
        EXPECT_LE(off.cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LE((image.diagonal().cwiseAbs().array() - 1.0).abs().maxCoeff(), 1e-10);
      }
    }
    const Matrix& v = family.basis(BasisLabel::vertical());
    for (const auto& alpha : f->elements()) {
      const Matrix image = v.adjoint() * build_x(alpha) * v;
      const Matrix off = image - Matrix(image.diagonal().asDiagonal());
      EXPECT_LE(off.cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(Mub, ComputationalAndVerticalBases) {
  const FieldPtr f = make_field(3);
  const MubFamily family = build_family(f);
  EXPECT_LE((family.basis(BasisLabel::slope(0)) - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff(),
            0.0);
  EXPECT_LE((family.basis(BasisLabel::vertical()) - fourier(*f)).cwiseAbs().maxCoeff(), 0.0);
  // |nu, vertical> = Z_nu F|0>.
  const Vector plus = fourier(*f).col(0);
  for (const auto& nu : f->elements()) {
    const Vector expected = build_z(nu) * plus;
    EXPECT_LE((family.vector({nu.bits(), BasisLabel::vertical()}) - expected).norm(), 1e-12);
  }
}

TEST(Mub, SlopeBasisIsShiftCovariant) {
  const FieldPtr f = make_field(3);
  const MubFamily family = build_family(f);
  for (const auto& mu : f->elements()) {
    const BasisLabel label = BasisLabel::slope(mu.bits());
    const Vector anchor = family.vector({0, label});
    for (const auto& nu : f->elements()) {
      EXPECT_LE((family.vector({nu.bits(), label}) - build_x(nu) * anchor).norm(), 1e-12);
    }
  }
}

TEST(Mub, ProjectorsAndFullInversion) {
  for (int n = 1; n <= 4; ++n) {
    const MubFamily family = build_family(make_field(n));
    const Matrix p = family.projector({1, BasisLabel::slope(1)});
    EXPECT_LE((p * p - p).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
    const Matrix rho = random_state(n, 11u + static_cast<unsigned>(n));
    EXPECT_LE((reconstruct_identity_check(family, rho) - rho).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Mub, TwoQubitFamilyIsSwapCovariant) {
  const MubFamily family = build_family(make_field(2));
  const CovarianceReport report = check_permutation_covariance(family);
  EXPECT_EQ(report.checked, 20u);
  EXPECT_TRUE(report.family_closed());
  EXPECT_TRUE(report.holds(IndexRule::kCoordinateSwap));
  EXPECT_FALSE(report.holds(IndexRule::kSharedNuTrace));
  ASSERT_EQ(report.preserving_swaps.size(), 1u);
}

// Beyond two qubits a qubit exchange maps some projectors outside the family.
TEST(Mub, ThreeQubitFamilyIsNotSwapClosed) {
  const MubFamily family = build_family(make_field(3));
  const CovarianceReport report = check_permutation_covariance(family);
  EXPECT_EQ(report.checked, 3u * 72u);
  EXPECT_LT(report.closed, report.checked);
  EXPECT_FALSE(report.holds(IndexRule::kCoordinateSwap));
  EXPECT_FALSE(report.holds(IndexRule::kSharedNuTrace));
  EXPECT_TRUE(report.preserving_swaps.empty());
}

TEST(Mub, TransformPoint) {
  const int n = 3;
  const LabelPoint point{0b110, BasisLabel::slope(0b100)};
  const LabelPoint swapped = transform_point(point, n, 1, 3, IndexRule::kCoordinateSwap);
  EXPECT_EQ(swapped.nu, 0b011u);
  EXPECT_EQ(swapped.basis, BasisLabel::slope(0b001));
  const LabelPoint shared = transform_point(point, n, 1, 3, IndexRule::kSharedNuTrace);
  EXPECT_EQ(shared.nu, 0b011u);
  EXPECT_EQ(shared.basis, BasisLabel::slope(0b001));
  const LabelPoint vertical{0b100, BasisLabel::vertical()};
  EXPECT_EQ(transform_point(vertical, n, 1, 2, IndexRule::kCoordinateSwap).basis,
            BasisLabel::vertical());
}

TEST(Mub, LabelIndexing) {
  const int n = 3;
  for (std::uint32_t i = 0; i < num_label_points(n); ++i) {
    EXPECT_EQ(LabelPoint::from_index(i, n).index(n), i);
  }
  EXPECT_EQ(BasisLabel::vertical().index(n), 8u);
  EXPECT_LT(BasisLabel::slope(7), BasisLabel::vertical());
}

TEST(Mub, Errors) {
  const FieldPtr f = make_field(2);
  const FieldPtr g = make_field(2);
  EXPECT_THROW(build_slope_basis(*f, g->one()), Error);
  EXPECT_THROW(MubFamily(f, {}), Error);
  const MubFamily family = build_family(f);
  EXPECT_THROW(family.basis(BasisLabel::slope(4)), Error);
  EXPECT_THROW(family.vector({4, BasisLabel::slope(0)}), Error);
}

}  // namespace
}  // namespace pimub
