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

#include "pimub/symmetric.hpp"

#include <bit>
#include <array>
#include <map>
#include <string>

namespace pimub {

PairOrbits::PairOrbits(int n) : n_(n) {
  if (n < 1 || n > kMaxSymmetricQubits) {
    throw Error(ErrorKind::kDimensionOverflow,
                "PI operator tables support 1 <= n <= " +
                    std::to_string(kMaxSymmetricQubits));
  }
  const std::uint32_t dim = 1u << n;
  // Key: counts of (0,1), (1,0), (1,1) pairs; (0,0) is implied.
  std::map<std::array<int, 3>, int> index;
  ids_.resize(static_cast<std::size_t>(dim) * dim);
  std::vector<std::array<int, 3>> keys;
  for (std::uint32_t x = 0; x < dim; ++x) {
    for (std::uint32_t y = 0; y < dim; ++y) {
      const std::array<int, 3> key = {std::popcount(~x & y),
                                      std::popcount(x & ~y),
                                      std::popcount(x & y)};
      auto [it, inserted] = index.try_emplace(key, static_cast<int>(sizes_.size()));
      if (inserted) {
        sizes_.push_back(0);
        keys.push_back(key);
      }
      ids_[(static_cast<std::size_t>(x) << n) | y] = it->second;
      ++sizes_[it->second];
    }
  }
  transposed_.resize(sizes_.size());
  for (std::size_t id = 0; id < keys.size(); ++id) {
    const auto& k = keys[id];
    transposed_[id] = index.at({k[1], k[0], k[2]});
  }
}

Eigen::VectorXcd PairOrbits::orbit_sums(const Matrix& a) const {
  const Eigen::Index dim = Eigen::Index{1} << n_;
  if (a.rows() != dim || a.cols() != dim) {
    throw Error(ErrorKind::kDimensionMismatch, "operator dimension mismatch");
  }
  Eigen::VectorXcd sums = Eigen::VectorXcd::Zero(size());
  for (Eigen::Index x = 0; x < dim; ++x) {
    for (Eigen::Index y = 0; y < dim; ++y) sums(orbit(x, y)) += a(x, y);
  }
  return sums;
}

Matrix twirl(const Matrix& a) {
  if (a.rows() != a.cols() || !std::has_single_bit(static_cast<std::uint64_t>(a.rows()))) {
    throw Error(ErrorKind::kDimensionMismatch, "twirl needs a 2^n square matrix");
  }
  const int n = std::countr_zero(static_cast<std::uint64_t>(a.rows()));
  if (n == 0) return a;
  const PairOrbits orbits(n);
  Eigen::VectorXcd mean = orbits.orbit_sums(a);
  for (Eigen::Index id = 0; id < mean.size(); ++id) {
    mean(id) /= static_cast<double>(orbits.orbit_size(id));
  }
  Matrix out(a.rows(), a.cols());
  for (Eigen::Index x = 0; x < a.rows(); ++x) {
    for (Eigen::Index y = 0; y < a.cols(); ++y) out(x, y) = mean(orbits.orbit(x, y));
  }
  return out;
}

bool is_permutation_invariant(const Matrix& a, double tol) {
  if (a.rows() != a.cols() || !std::has_single_bit(static_cast<std::uint64_t>(a.rows()))) {
    return false;
  }
  const int n = std::countr_zero(static_cast<std::uint64_t>(a.rows()));
  const std::uint32_t dim = 1u << n;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (std::uint32_t x = 0; x < dim; ++x) {
        const std::uint32_t sx = swap_coordinates(x, n, p, q);
        for (std::uint32_t y = 0; y < dim; ++y) {
          const std::uint32_t sy = swap_coordinates(y, n, p, q);
          if (std::abs(a(sx, sy) - a(x, y)) > tol) return false;
        }
      }
    }
  }
  return true;
}

Eigen::VectorXd pi_functional(const PairOrbits& orbits, const Vector& v) {
  // Tr(A |v><v|) = sum_{x,y} A_xy v_y conj(v_x) = sum_O r_O g_O.
  const Eigen::Index k = static_cast<Eigen::Index>(orbits.size());
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(k);
  for (Eigen::Index x = 0; x < v.size(); ++x) {
    const Complex cx = std::conj(v(x));
    for (Eigen::Index y = 0; y < v.size(); ++y) g(orbits.orbit(x, y)) += v(y) * cx;
  }
  Eigen::VectorXd out(2 * k);
  out.head(k) = g.real();
  out.tail(k) = -g.imag();
  return out;
}

}  // namespace pimub
