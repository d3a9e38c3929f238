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

// Measurement labels shared by the basis, orbit and tomography layers.

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace pimub {

// One of the 2^n + 1 bases: a slope mu (self-dual bitmask) or the vertical
// basis of infinite slope. Slopes order by bitmask; vertical sorts last.
class BasisLabel {
 public:
  static BasisLabel slope(std::uint32_t mu_bits) { return BasisLabel(mu_bits); }
  static BasisLabel vertical() { return BasisLabel(kVerticalKey); }

  bool is_vertical() const { return key_ == kVerticalKey; }
  // Only meaningful for slopes.
  std::uint32_t slope_bits() const { return key_; }
  // Dense index: the slope bitmask, or 2^n for the vertical basis.
  std::uint32_t index(int n) const {
    return is_vertical() ? (std::uint32_t{1} << n) : key_;
  }
  static BasisLabel from_index(std::uint32_t index, int n) {
    return index == (std::uint32_t{1} << n) ? vertical() : slope(index);
  }

  std::string to_string() const {
    return is_vertical() ? std::string("vertical")
                         : "slope:" + std::to_string(key_);
  }

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;

 private:
  static constexpr std::uint32_t kVerticalKey =
      std::numeric_limits<std::uint32_t>::max();
  explicit BasisLabel(std::uint32_t key) : key_(key) {}
  std::uint32_t key_;
};

// The index pair (nu, k) of a probability p_{nu,k}.
struct LabelPoint {
  std::uint32_t nu = 0;
  BasisLabel basis = BasisLabel::slope(0);

  // Dense index k * 2^n + nu.
  std::uint32_t index(int n) const { return basis.index(n) * (1u << n) + nu; }
  static LabelPoint from_index(std::uint32_t index, int n) {
    return LabelPoint{index & ((1u << n) - 1), BasisLabel::from_index(index >> n, n)};
  }

  friend auto operator<=>(const LabelPoint& a, const LabelPoint& b) {
    if (auto c = a.basis <=> b.basis; c != 0) return c;
    return a.nu <=> b.nu;
  }
  friend bool operator==(const LabelPoint&, const LabelPoint&) = default;
};

inline std::uint32_t num_label_points(int n) {
  return ((1u << n) + 1) * (1u << n);
}

// How a qubit exchange (p, q), eps = theta_p + theta_q, relabels (nu, mu).
enum class IndexRule {
  // nu -> nu + eps tr(nu eps), mu -> mu + eps tr(mu eps): both self-dual
  // bit strings have coordinates p and q exchanged.
  kCoordinateSwap,
  // nu -> nu + eps tr(nu eps), mu -> mu + eps tr(nu eps).
  kSharedNuTrace,
};

std::string_view to_string(IndexRule rule);

// Image of a label point under the exchange of qubits p and q. The vertical
// basis and the computational basis (mu = 0) only move nu.
LabelPoint transform_point(const LabelPoint& point, int n, int p, int q,
                           IndexRule rule);

}  // namespace pimub
