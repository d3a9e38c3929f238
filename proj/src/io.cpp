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

#include "pimub/io.hpp"

#include <fstream>
#include <sstream>

namespace pimub::io {
namespace {

[[noreturn]] void schema(const std::string& what) {
  throw Error(ErrorKind::kSchema, what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    schema(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    schema(std::string("field '") + what + "' has the wrong type");
  }
}

std::uint32_t get_bitmask(const Json& j, int n, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    schema(std::string("field '") + what + "' must be a non-negative integer");
  }
  const std::uint64_t v = j.get<std::uint64_t>();
  if (v >= (std::uint64_t{1} << n)) {
    throw Error(ErrorKind::kInvalidIndex,
                std::string(what) + "=" + std::to_string(v) + " out of range");
  }
  return static_cast<std::uint32_t>(v);
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(Json::array({v(i).real(), v(i).imag()}));
  }
  return out;
}

int check_n(const Json& j) {
  const int n = get_as<int>(require(j, "n"), "n");
  if (n < 1 || n > kMaxQubits) {
    throw Error(ErrorKind::kUnsupportedN, "n=" + std::to_string(n));
  }
  return n;
}

}  // namespace

Json field_to_json(const FieldContext& ctx) {
  Json basis = Json::array();
  for (std::uint32_t b : ctx.selfdual_basis_poly()) basis.push_back(b);
  bool gram_ok = true;
  for (int i = 1; i <= ctx.n(); ++i) {
    for (int k = 1; k <= ctx.n(); ++k) {
      gram_ok &= ctx.trace(ctx.mul(ctx.theta(i), ctx.theta(k))) == (i == k ? 1 : 0);
    }
  }
  return Json{{"n", ctx.n()},
              {"irreducible_poly", ctx.irreducible_poly()},
              {"selfdual_basis", basis},
              {"gram_ok", gram_ok}};
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return Json{{"dim", m.rows()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j) {
  const long long dim = get_as<long long>(require(j, "dim"), "dim");
  const Json& entries = require(j, "entries");
  if (dim < 1 || !entries.is_array() ||
      entries.size() != static_cast<std::size_t>(dim * dim)) {
    schema("matrix needs dim*dim entries");
  }
  Matrix m(dim, dim);
  for (long long k = 0; k < dim * dim; ++k) {
    const Json& e = entries[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      schema("matrix entries are [re, im] pairs");
    }
    m(k / dim, k % dim) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

Json label_to_json(const BasisLabel& label) {
  if (label.is_vertical()) return "vertical";
  return Json{{"slope", label.slope_bits()}};
}

BasisLabel label_from_json(const Json& j, int n) {
  if (j.is_string()) {
    if (j.get<std::string>() == "vertical") return BasisLabel::vertical();
    schema("basis label must be \"vertical\" or {\"slope\": bitmask}");
  }
  return BasisLabel::slope(get_bitmask(require(j, "slope"), n, "slope"));
}

Json basis_to_json(const MubFamily& family, const BasisLabel& label) {
  const Matrix& b = family.basis(label);
  Json vectors = Json::array();
  for (Eigen::Index c = 0; c < b.cols(); ++c) vectors.push_back(vector_to_json(b.col(c)));
  return Json{{"n", family.n()}, {"label", label_to_json(label)}, {"vectors", vectors}};
}

std::string orbits_to_csv(const OrbitTable& table) {
  std::ostringstream out;
  out << "orbit_id,basis_label,nu_bitmask,m,l,s,orbit_size\n";
  for (const Orbit& o : table.orbits()) {
    const LabelPoint& r = o.representative;
    const bool slope = o.invariants.kind == OrbitInvariants::Kind::kSlope;
    out << o.id << ','
        << (r.basis.is_vertical() ? std::string("vertical")
                                  : std::to_string(r.basis.slope_bits()))
        << ',' << r.nu << ',' << o.invariants.m << ',' << o.invariants.l << ',';
    out << (slope ? o.invariants.s : o.invariants.l) << ',' << o.members.size() << '\n';
  }
  return out.str();
}

Json orbits_to_json(const OrbitTable& table) {
  Json orbits = Json::array();
  for (const Orbit& o : table.orbits()) {
    Json members = Json::array();
    for (const LabelPoint& p : o.members) {
      members.push_back(Json{{"basis", label_to_json(p.basis)}, {"nu_bitmask", p.nu}});
    }
    Json row{{"orbit_id", o.id},
             {"basis", label_to_json(o.representative.basis)},
             {"nu_bitmask", o.representative.nu},
             {"kind", o.invariants.kind == OrbitInvariants::Kind::kSlope
                          ? "slope"
                          : o.invariants.kind == OrbitInvariants::Kind::kVertical
                                ? "vertical"
                                : "computational"},
             {"m", o.invariants.m},
             {"l", o.invariants.l}};
    row["s"] = o.invariants.kind == OrbitInvariants::Kind::kSlope ? o.invariants.s
                                                                  : o.invariants.l;
    row["orbit_size"] = o.members.size();
    row["members"] = members;
    orbits.push_back(row);
  }
  return Json{{"n", table.n()},
              {"index_rule", std::string(to_string(table.rule()))},
              {"orbit_count", table.size()},
              {"total_members", table.total_members()},
              {"independent_count", independent_count(table)},
              {"orbits", orbits}};
}

Json record_to_json(const MeasurementRecord& record) {
  Json data = Json::array();
  for (std::size_t nu = 0; nu < record.probabilities.size(); ++nu) {
    if (record.has_counts()) {
      data.push_back(Json{{"nu_bitmask", nu}, {"count", record.counts[nu]}});
    } else {
      data.push_back(Json{{"nu_bitmask", nu}, {"p", record.probabilities[nu]}});
    }
  }
  Json out{{"basis", label_to_json(record.basis)}};
  if (record.has_counts()) out["shots"] = record.shots;
  out["data"] = data;
  return out;
}

MeasurementRecord record_from_json(const Json& j, int n) {
  MeasurementRecord rec;
  rec.basis = label_from_json(require(j, "basis"), n);
  const Json& data = require(j, "data");
  if (!data.is_array()) schema("record data must be an array");
  const std::size_t d = std::size_t{1} << n;
  std::vector<bool> seen(d, false);
  rec.probabilities.assign(d, 0.0);
  bool counts = j.contains("shots");
  if (counts) {
    rec.shots = get_as<std::uint64_t>(j.at("shots"), "shots");
    rec.counts.assign(d, 0);
  }
  for (const Json& entry : data) {
    const std::uint32_t nu = get_bitmask(require(entry, "nu_bitmask"), n, "nu_bitmask");
    if (seen[nu]) schema("duplicate nu_bitmask " + std::to_string(nu));
    seen[nu] = true;
    if (counts) {
      rec.counts[nu] = get_as<std::uint64_t>(require(entry, "count"), "count");
    } else {
      rec.probabilities[nu] = get_as<double>(require(entry, "p"), "p");
    }
  }
  if (counts) {
    if (rec.shots == 0) schema("shots must be positive");
    for (std::size_t nu = 0; nu < d; ++nu) {
      rec.probabilities[nu] =
          static_cast<double>(rec.counts[nu]) / static_cast<double>(rec.shots);
    }
  }
  return rec;
}

Json simulation_to_json(const Simulation& sim) {
  Json records = Json::array();
  for (const auto& r : sim.records) records.push_back(record_to_json(r));
  Json out{{"n", sim.n}};
  if (!sim.selfdual_basis.empty()) out["selfdual_basis"] = sim.selfdual_basis;
  if (sim.seed) out["seed"] = *sim.seed;
  if (sim.shots) out["shots"] = *sim.shots;
  out["state"] = matrix_to_json(sim.state);
  out["records"] = records;
  return out;
}

Simulation simulation_from_json(const Json& j) {
  Simulation sim;
  sim.n = check_n(j);
  if (j.contains("selfdual_basis")) {
    sim.selfdual_basis =
        get_as<std::vector<std::uint32_t>>(j.at("selfdual_basis"), "selfdual_basis");
  }
  if (j.contains("seed")) sim.seed = get_as<std::uint64_t>(j.at("seed"), "seed");
  if (j.contains("shots")) sim.shots = get_as<std::uint64_t>(j.at("shots"), "shots");
  if (j.contains("state")) {
    sim.state = matrix_from_json(j.at("state"));
    if (sim.state.rows() != dimension(sim.n)) {
      throw Error(ErrorKind::kDimensionMismatch, "state dimension does not match n");
    }
  }
  const Json& records = require(j, "records");
  if (!records.is_array()) schema("records must be an array");
  for (const Json& r : records) sim.records.push_back(record_from_json(r, sim.n));
  return sim;
}

Json report_to_json(const Report& report) {
  Json bases = Json::array();
  for (const auto& b : report.bases_used) bases.push_back(label_to_json(b));
  Json out{{"n", report.n}, {"bases_used", bases}};
  out["fidelity"] = report.fidelity ? Json(*report.fidelity) : Json(nullptr);
  out["trace_distance"] =
      report.trace_distance ? Json(*report.trace_distance) : Json(nullptr);
  out["physical"] = report.physical;
  out["orbit_count"] = report.orbit_count;
  out["independent_count"] = report.independent_count;
  out["pi_rank"] = report.pi_rank;
  out["pi_dimension"] = report.pi_dimension;
  if (report.estimate.size() > 0) out["estimate"] = matrix_to_json(report.estimate);
  return out;
}

std::optional<PIStateSpec> state_spec_from_json(const Json& j, int n) {
  if (!j.is_object()) schema("state must be an object");
  if (!j.contains("method")) return std::nullopt;
  const std::string method = get_as<std::string>(j.at("method"), "method");
  PIStateSpec spec;
  spec.n = n;
  if (method == "twirl") {
    spec.method = TwirlSpec{get_as<std::uint64_t>(require(j, "seed"), "seed")};
  } else if (method == "dicke") {
    spec.method =
        DickeMixtureSpec{get_as<std::vector<double>>(require(j, "weights"), "weights")};
  } else if (method == "blocks") {
    SpinBlocksSpec blocks;
    const Json& list = require(j, "blocks");
    if (!list.is_array()) schema("blocks must be an array");
    for (const Json& b : list) {
      SpinBlock block;
      block.twice_j = get_as<int>(require(b, "twice_j"), "twice_j");
      block.probability = get_as<double>(require(b, "probability"), "probability");
      block.state = matrix_from_json(require(b, "state"));
      blocks.blocks.push_back(std::move(block));
    }
    spec.method = std::move(blocks);
  } else {
    schema("unknown method '" + method + "'");
  }
  return spec;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kSchema, path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace pimub::io
