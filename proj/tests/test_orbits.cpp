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
#include <bit>
#include <map>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "pimub/orbits.hpp"
#include "pimub/tomography.hpp"

namespace pimub {
namespace {

using Key = std::tuple<int, int, int, int>;  // kind, m, l, s

// Orbit sizes by brute-force counting of label points with given invariants.
std::map<Key, std::size_t> counted_orbits(int n) {
  std::map<Key, std::size_t> out;
  const std::uint32_t d = 1u << n;
  for (std::uint32_t nu = 0; nu < d; ++nu) {
    const int l = std::popcount(nu);
    ++out[{0, 0, l, l}];
    ++out[{2, 0, l, l}];
    for (std::uint32_t mu = 1; mu < d; ++mu) {
      ++out[{1, std::popcount(mu), l, std::popcount(mu ^ nu)}];
    }
  }
  return out;
}

Key key_of(const Orbit& o) {
  const auto& inv = o.invariants;
  switch (inv.kind) {
    case OrbitInvariants::Kind::kComputational: return {0, 0, inv.l, inv.l};
    case OrbitInvariants::Kind::kSlope: return {1, inv.m, inv.l, inv.s};
    case OrbitInvariants::Kind::kVertical: return {2, 0, inv.l, inv.l};
  }
  return {};
}

// sum over spins of (2j + 1)^2, minus one, from explicit spin multiplets.
long long block_oracle(int n) {
  long long total = -1;
  for (int twice_j = n % 2; twice_j <= n; twice_j += 2) total += (twice_j + 1) * (twice_j + 1);
  return total;
}

TEST(Orbits, OrbitsAreInvariantClasses) {
  for (int n = 1; n <= 6; ++n) {
    const FieldPtr f = make_field(n);
    const OrbitTable table = enumerate_orbits(*f);
    const auto expected = counted_orbits(n);
    ASSERT_EQ(table.size(), expected.size()) << n;
    std::map<Key, std::size_t> got;
    for (const Orbit& o : table.orbits()) {
      ASSERT_EQ(got.count(key_of(o)), 0u);
      got[key_of(o)] = o.members.size();
      for (const LabelPoint& p : o.members) EXPECT_EQ(orbit_invariants(p), o.invariants);
    }
    EXPECT_EQ(got, expected);
    EXPECT_EQ(table.total_members(), num_label_points(n));
  }
}

TEST(Orbits, KnownCounts) {
  EXPECT_EQ(enumerate_orbits(*make_field(2)).size(), 13u);
  EXPECT_EQ(enumerate_orbits(*make_field(3)).size(), 24u);
  EXPECT_EQ(independent_count(*make_field(2)), 9);
  EXPECT_EQ(independent_count(*make_field(3)), 19);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(independent_count(*make_field(n)), block_oracle(n)) << n;
  }
}

TEST(Orbits, ClosedFormDisagreesWithEnumeration) {
  EXPECT_EQ(closed_form_orbit_count(2), 12);
  EXPECT_EQ(closed_form_orbit_count(3), 23);
  EXPECT_NE(closed_form_orbit_count(2), independent_count(*make_field(2)));
  EXPECT_NE(closed_form_orbit_count(3), independent_count(*make_field(3)));
}

TEST(Orbits, SRangeMatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    const std::uint32_t d = 1u << n;
    for (int m = 0; m <= n; ++m) {
      for (int l = 0; l <= n; ++l) {
        std::set<int> seen;
        for (std::uint32_t mu = 0; mu < d; ++mu) {
          if (std::popcount(mu) != m) continue;
          for (std::uint32_t nu = 0; nu < d; ++nu) {
            if (std::popcount(nu) == l) seen.insert(std::popcount(mu ^ nu));
          }
        }
        const auto range = s_range(m, l, n);
        EXPECT_EQ(std::set<int>(range.begin(), range.end()), seen)
            << "n=" << n << " m=" << m << " l=" << l;
      }
    }
  }
}

TEST(Orbits, MinimalBases) {
  const auto two = minimal_bases(*make_field(2));
  EXPECT_EQ(two, (std::vector<BasisLabel>{BasisLabel::slope(0), BasisLabel::slope(0b10),
                                          BasisLabel::slope(0b11), BasisLabel::vertical()}));
  for (int n = 1; n <= 6; ++n) {
    const auto bases = minimal_bases(*make_field(n));
    ASSERT_EQ(bases.size(), static_cast<std::size_t>(n + 2));
    for (int m = 1; m <= n; ++m) EXPECT_EQ(std::popcount(bases[m].slope_bits()), m);
  }
}

TEST(Orbits, ThreeQubitReport) {
  const std::string expected =
      "m   0   0   0   0  0~  0~  0~  0~   1   1   1   1   1   1   2   2   2   2   2   2   3   3   3   3\n"
      "l   0   1   2   3  0~  1~  2~  3~   0   1   1   2   2   3   0   1   1   2   2   3   0   1   2   3\n"
      "s   0   1   2   3  0~  1~  2~  3~   1   0   2   1   3   2   2   1   3   0   2   1   3   2   1   0\n"
      "#   1   3   3   1   1   3   3   1   3   3   6   6   3   3   3   6   3   3   6   3   1   3   3   1\n";
  EXPECT_EQ(format_orbit_report(enumerate_orbits(*make_field(3))), expected);
}

TEST(Orbits, ExpansionReproducesTwoQubitProbabilities) {
  const FieldPtr f = make_field(2);
  const MubFamily family = build_family(f);
  const OrbitTable table = enumerate_orbits(*f);
  const Matrix rho = random_pi_state({2, TwirlSpec{5}}).matrix();
  const auto all = exact_probabilities(rho, family, family.labels());
  std::map<LabelPoint, double> measured;
  for (const auto& rec : all) {
    if (std::find(minimal_bases(*f).begin(), minimal_bases(*f).end(), rec.basis) ==
        minimal_bases(*f).end()) {
      continue;
    }
    for (std::uint32_t nu = 0; nu < 4; ++nu) measured[{nu, rec.basis}] = rec.probabilities[nu];
  }
  for (ExpansionMode mode : {ExpansionMode::kRepresentative, ExpansionMode::kOrbitAverage}) {
    const auto expanded = expand_probabilities(measured, table, mode);
    for (const auto& rec : all) {
      for (std::uint32_t nu = 0; nu < 4; ++nu) {
        EXPECT_NEAR(expanded[(LabelPoint{nu, rec.basis}).index(2)], rec.probabilities[nu], 1e-12);
      }
    }
  }
  // The nu = 0 orbit of a measured basis follows from normalization.
  auto partial = measured;
  partial.erase(LabelPoint{0, BasisLabel::vertical()});
  const auto derived = expand_probabilities(partial, table);
  EXPECT_NEAR(derived[(LabelPoint{0, BasisLabel::vertical()}).index(2)],
              measured.at((LabelPoint{0, BasisLabel::vertical()})), 1e-12);
}

TEST(Orbits, ExpansionErrors) {
  const FieldPtr f = make_field(2);
  const OrbitTable table = enumerate_orbits(*f);
  std::map<LabelPoint, double> only_computational;
  for (std::uint32_t nu = 0; nu < 4; ++nu) only_computational[{nu, BasisLabel::slope(0)}] = 0.25;
  try {
    expand_probabilities(only_computational, table);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMissingOrbit);
  }
  std::map<LabelPoint, double> skewed = only_computational;
  skewed[{0, BasisLabel::slope(0)}] = 0.5;
  for (const BasisLabel& b : {BasisLabel::slope(2), BasisLabel::slope(3), BasisLabel::vertical()}) {
    for (std::uint32_t nu = 0; nu < 4; ++nu) skewed[{nu, b}] = 0.25;
  }
  try {
    expand_probabilities(skewed, table);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotNormalized);
  }
}

TEST(Orbits, SharedTraceRuleMergesMoreLabels) {
  const FieldPtr f = make_field(3);
  const OrbitTable shared = enumerate_orbits(*f, IndexRule::kSharedNuTrace);
  EXPECT_EQ(shared.rule(), IndexRule::kSharedNuTrace);
  EXPECT_EQ(shared.total_members(), 72u);
  EXPECT_NE(shared.size(), 24u);
}

}  // namespace
}  // namespace pimub
