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

// Orbits of measurement labels (nu, k) under qubit permutations.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pimub/gf2n.hpp"
#include "pimub/labels.hpp"

namespace pimub {

// (m, l, s) = (|mu|, |nu|, |mu + nu|) for slopes mu != 0; only l is
// meaningful for the computational and vertical bases.
struct OrbitInvariants {
  enum class Kind { kComputational, kSlope, kVertical };
  Kind kind = Kind::kComputational;
  int m = 0;
  int l = 0;
  int s = 0;

  std::string to_string() const;
  friend bool operator==(const OrbitInvariants&, const OrbitInvariants&) = default;
};

OrbitInvariants orbit_invariants(const LabelPoint& point);

struct Orbit {
  int id = 0;
  LabelPoint representative;
  std::vector<LabelPoint> members;  // sorted
  OrbitInvariants invariants;
};

class OrbitTable {
 public:
  OrbitTable(int n, IndexRule rule, std::vector<Orbit> orbits);

  int n() const { return n_; }
  IndexRule rule() const { return rule_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  std::size_t size() const { return orbits_.size(); }
  const Orbit& orbit_of(const LabelPoint& point) const;
  int orbit_id(const LabelPoint& point) const;
  std::size_t total_members() const;

 private:
  int n_;
  IndexRule rule_;
  std::vector<Orbit> orbits_;
  std::vector<int> orbit_of_;
};

// Union-find closure of all (2^n + 1) 2^n label points under every
// transposition (p, q), p < q, acting through `rule`.
OrbitTable enumerate_orbits(const FieldContext& ctx,
                            IndexRule rule = IndexRule::kCoordinateSwap);

// s from |m - l| to min(m + l, 2n - m - l, n) in steps of two.
std::vector<int> s_range(int m, int l, int n);

// mu = 0, theta_1 + ... + theta_m for m = 1..n, and the vertical basis.
std::vector<BasisLabel> minimal_bases(const FieldContext& ctx);

// Orbit count minus one normalization per minimal basis.
int independent_count(const FieldContext& ctx);
int independent_count(const OrbitTable& table);

// The closed form 1 + n(n^2 + 6n + 17)/6, reported next to the enumeration.
long long closed_form_orbit_count(int n);

enum class ExpansionMode {
  // Each orbit takes the value of its smallest measured member.
  kRepresentative,
  // Each orbit takes the mean over its measured members.
  kOrbitAverage,
};

// Spreads measured probabilities over every label point through the orbit
// table. In a measured basis, a missing orbit that contains nu = 0 is derived
// by normalization. Throws kMissingOrbit when an orbit stays unresolved and
// kNotNormalized when a measured basis does not sum to one within `tol`.
// The result is indexed by LabelPoint::index.
std::vector<double> expand_probabilities(
    const std::map<LabelPoint, double>& measured, const OrbitTable& table,
    ExpansionMode mode = ExpansionMode::kRepresentative, double tol = 1e-9);

// One column per orbit in the layout m / l / s / # with the computational
// basis first, then the vertical basis (tilde rows), then slopes by (m, l, s).
std::string format_orbit_report(const OrbitTable& table);

}  // namespace pimub
