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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "pimub/symmetric.hpp"

namespace pimub {
namespace {

Matrix random_matrix(Eigen::Index d, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d * d; ++i) m(i) = Complex(normal(rng), normal(rng));
  return m;
}

Matrix brute_force_twirl(const Matrix& a, int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  int count = 0;
  do {
    const Matrix u = permutation_matrix(n, image);
    sum += u * a * u.adjoint();
    ++count;
  } while (std::next_permutation(image.begin(), image.end()));
  return sum / static_cast<double>(count);
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Symmetric, TwirlMatchesPermutationAverage) {
  for (int n = 1; n <= 5; ++n) {
    const Matrix a = random_matrix(dimension(n), 3u + static_cast<unsigned>(n));
    const Matrix t = twirl(a);
    EXPECT_LE((t - brute_force_twirl(a, n)).cwiseAbs().maxCoeff(), 1e-12) << n;
    EXPECT_LE((twirl(t) - t).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(std::abs(t.trace() - a.trace()), 0.0, 1e-10);
    EXPECT_TRUE(is_permutation_invariant(t));
    if (n >= 2) EXPECT_FALSE(is_permutation_invariant(a));
  }
}

TEST(Symmetric, PairOrbitCount) {
  for (int n = 1; n <= 8; ++n) {
    const PairOrbits orbits(n);
    EXPECT_EQ(static_cast<long long>(orbits.size()), binomial(n + 3, 3)) << n;
    std::size_t total = 0;
    for (std::size_t id = 0; id < orbits.size(); ++id) {
      total += orbits.orbit_size(static_cast<int>(id));
      const int t = orbits.transposed(static_cast<int>(id));
      EXPECT_EQ(orbits.transposed(t), static_cast<int>(id));
    }
    EXPECT_EQ(total, static_cast<std::size_t>(dimension(n) * dimension(n)));
  }
  EXPECT_THROW(PairOrbits(kMaxSymmetricQubits + 1), Error);
}

TEST(Symmetric, FunctionalEvaluatesExpectationOnPIOperators) {
  const int n = 3;
  const PairOrbits orbits(n);
  Matrix a = twirl(random_matrix(dimension(n), 17));
  a = (a + a.adjoint()).eval() * 0.5;
  const Eigen::VectorXcd sums = orbits.orbit_sums(a);
  Eigen::VectorXd coords(2 * orbits.size());
  for (std::size_t id = 0; id < orbits.size(); ++id) {
    const Complex r = sums(id) / static_cast<double>(orbits.orbit_size(static_cast<int>(id)));
    coords(id) = r.real();
    coords(orbits.size() + id) = r.imag();
  }
  Vector v = random_matrix(dimension(n), 23).col(0);
  v.normalize();
  const double direct = v.dot(a * v).real();
  EXPECT_NEAR(pi_functional(orbits, v).dot(coords), direct, 1e-12);
}

}  // namespace
}  // namespace pimub
