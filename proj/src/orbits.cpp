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

#include "pimub/orbits.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace pimub {
namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size) : parent_(size), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
};

// Report ordering: computational, vertical, then slopes by (m, l, s).
std::tuple<int, int, int, int> report_key(const OrbitInvariants& inv) {
  switch (inv.kind) {
    case OrbitInvariants::Kind::kComputational: return {0, 0, inv.l, 0};
    case OrbitInvariants::Kind::kVertical: return {1, 0, inv.l, 0};
    case OrbitInvariants::Kind::kSlope: return {2, inv.m, inv.l, inv.s};
  }
  return {3, 0, 0, 0};
}

}  // namespace

std::string OrbitInvariants::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kComputational: os << "(l=" << l << ")"; break;
    case Kind::kVertical: os << "(l~=" << l << ")"; break;
    case Kind::kSlope: os << "(m=" << m << ",l=" << l << ",s=" << s << ")"; break;
  }
  return os.str();
}

OrbitInvariants orbit_invariants(const LabelPoint& point) {
  OrbitInvariants inv;
  inv.l = std::popcount(point.nu);
  if (point.basis.is_vertical()) {
    inv.kind = OrbitInvariants::Kind::kVertical;
  } else if (point.basis.slope_bits() == 0) {
    inv.kind = OrbitInvariants::Kind::kComputational;
  } else {
    inv.kind = OrbitInvariants::Kind::kSlope;
    inv.m = std::popcount(point.basis.slope_bits());
    inv.s = std::popcount(point.basis.slope_bits() ^ point.nu);
  }
  return inv;
}

OrbitTable::OrbitTable(int n, IndexRule rule, std::vector<Orbit> orbits)
    : n_(n), rule_(rule), orbits_(std::move(orbits)) {
  orbit_of_.assign(num_label_points(n_), -1);
  for (const Orbit& o : orbits_) {
    for (const LabelPoint& p : o.members) orbit_of_[p.index(n_)] = o.id;
  }
}

int OrbitTable::orbit_id(const LabelPoint& point) const {
  const std::uint32_t idx = point.index(n_);
  if (idx >= orbit_of_.size() || orbit_of_[idx] < 0) {
    throw Error(ErrorKind::kInvalidIndex, "label point outside the table");
  }
  return orbit_of_[idx];
}

const Orbit& OrbitTable::orbit_of(const LabelPoint& point) const {
  return orbits_[orbit_id(point)];
}

std::size_t OrbitTable::total_members() const {
  std::size_t total = 0;
  for (const Orbit& o : orbits_) total += o.members.size();
  return total;
}

OrbitTable enumerate_orbits(const FieldContext& ctx, IndexRule rule) {
  const int n = ctx.n();
  const std::uint32_t total = num_label_points(n);
  DisjointSet sets(total);
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      for (std::uint32_t i = 0; i < total; ++i) {
        const LabelPoint image =
            transform_point(LabelPoint::from_index(i, n), n, p, q, rule);
        sets.unite(i, image.index(n));
      }
    }
  }
  // Dense indices already sort as (basis, nu) with the vertical basis last,
  // so the first member seen is the representative.
  std::map<std::size_t, std::vector<LabelPoint>> groups;
  std::vector<std::size_t> order;
  for (std::uint32_t i = 0; i < total; ++i) {
    const std::size_t root = sets.find(i);
    auto [it, inserted] = groups.try_emplace(root);
    if (inserted) order.push_back(root);
    it->second.push_back(LabelPoint::from_index(i, n));
  }
  std::vector<Orbit> orbits;
  orbits.reserve(order.size());
  for (std::size_t root : order) {
    Orbit o;
    o.id = static_cast<int>(orbits.size());
    o.members = std::move(groups[root]);
    o.representative = o.members.front();
    o.invariants = orbit_invariants(o.representative);
    orbits.push_back(std::move(o));
  }
  return OrbitTable(n, rule, std::move(orbits));
}

std::vector<int> s_range(int m, int l, int n) {
  std::vector<int> out;
  const int hi = std::min({m + l, 2 * n - m - l, n});
  for (int s = std::abs(m - l); s <= hi; s += 2) out.push_back(s);
  return out;
}

std::vector<BasisLabel> minimal_bases(const FieldContext& ctx) {
  const int n = ctx.n();
  std::vector<BasisLabel> out;
  out.push_back(BasisLabel::slope(0));
  for (int m = 1; m <= n; ++m) {
    // theta_1 + ... + theta_m occupies the m most significant bits.
    const std::uint32_t mu = ((1u << m) - 1) << (n - m);
    out.push_back(BasisLabel::slope(mu));
  }
  out.push_back(BasisLabel::vertical());
  return out;
}

int independent_count(const OrbitTable& table) {
  return static_cast<int>(table.size()) - (table.n() + 2);
}

int independent_count(const FieldContext& ctx) {
  return independent_count(enumerate_orbits(ctx));
}

long long closed_form_orbit_count(int n) {
  const long long nn = n;
  return 1 + nn * (nn * nn + 6 * nn + 17) / 6;
}

std::vector<double> expand_probabilities(
    const std::map<LabelPoint, double>& measured, const OrbitTable& table,
    ExpansionMode mode, double tol) {
  const int n = table.n();
  const std::uint32_t dim = 1u << n;
  std::vector<double> value(table.size(), 0.0);
  std::vector<int> seen(table.size(), 0);
  for (const auto& [point, p] : measured) {
    const int id = table.orbit_id(point);
    if (mode == ExpansionMode::kRepresentative) {
      // std::map iterates in point order: keep the smallest member.
      if (seen[id] == 0) value[id] = p;
    } else {
      value[id] += p;
    }
    ++seen[id];
  }
  if (mode == ExpansionMode::kOrbitAverage) {
    for (std::size_t id = 0; id < value.size(); ++id) {
      if (seen[id] > 0) value[id] /= seen[id];
    }
  }

  std::vector<BasisLabel> bases;
  for (const auto& [point, p] : measured) {
    if (bases.empty() || bases.back() != point.basis) bases.push_back(point.basis);
  }
  for (const BasisLabel& basis : bases) {
    const int zero_id = table.orbit_id(LabelPoint{0, basis});
    if (seen[zero_id] > 0) continue;
    double rest = 0.0;
    int zero_members = 0;
    bool resolvable = true;
    for (std::uint32_t nu = 0; nu < dim; ++nu) {
      const int id = table.orbit_id(LabelPoint{nu, basis});
      if (id == zero_id) {
        ++zero_members;
      } else if (seen[id] == 0) {
        resolvable = false;
      } else {
        rest += value[id];
      }
    }
    if (!resolvable) continue;
    value[zero_id] = (1.0 - rest) / zero_members;
    seen[zero_id] = -1;  // derived
  }

  for (std::size_t id = 0; id < value.size(); ++id) {
    if (seen[id] == 0) {
      throw Error(ErrorKind::kMissingOrbit,
                  "orbit " + std::to_string(id) + " " +
                      table.orbits()[id].invariants.to_string() +
                      " has no measured member");
    }
  }

  std::vector<double> out(num_label_points(n), 0.0);
  for (std::uint32_t i = 0; i < out.size(); ++i) {
    out[i] = value[table.orbit_id(LabelPoint::from_index(i, n))];
  }
  for (const BasisLabel& basis : bases) {
    double sum = 0.0;
    for (std::uint32_t nu = 0; nu < dim; ++nu) {
      sum += out[LabelPoint{nu, basis}.index(n)];
    }
    if (std::abs(sum - 1.0) > tol) {
      throw Error(ErrorKind::kNotNormalized,
                  "basis " + basis.to_string() + " sums to " +
                      std::to_string(sum));
    }
  }
  return out;
}

std::string format_orbit_report(const OrbitTable& table) {
  std::vector<const Orbit*> sorted;
  for (const Orbit& o : table.orbits()) sorted.push_back(&o);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Orbit* a, const Orbit* b) {
    return report_key(a->invariants) < report_key(b->invariants);
  });
  auto cell = [](const Orbit& o, char row) {
    const bool tilde = o.invariants.kind == OrbitInvariants::Kind::kVertical;
    const bool slope = o.invariants.kind == OrbitInvariants::Kind::kSlope;
    std::string text;
    switch (row) {
      case 'm': text = std::to_string(slope ? o.invariants.m : 0); break;
      case 'l': text = std::to_string(o.invariants.l); break;
      // Without a slope, s = |mu + nu| reduces to l.
      case 's': text = std::to_string(slope ? o.invariants.s : o.invariants.l); break;
      default: text = std::to_string(o.members.size()); return text;
    }
    return tilde ? text + "~" : text;
  };
  std::ostringstream os;
  for (char row : {'m', 'l', 's', '#'}) {
    os << row;
    for (const Orbit* o : sorted) {
      std::string c = cell(*o, row);
      os << std::string(c.size() < 3 ? 4 - c.size() : 1, ' ') << c;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pimub
