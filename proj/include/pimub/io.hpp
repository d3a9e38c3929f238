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

// JSON and CSV interchange for fields, bases, orbit tables, measurement
// records and reconstruction reports.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pimub/mub.hpp"
#include "pimub/orbits.hpp"
#include "pimub/tomography.hpp"

namespace pimub::io {

using Json = nlohmann::ordered_json;

// {n, irreducible_poly, selfdual_basis, gram_ok}; basis elements are
// polynomial-coordinate bitmasks.
Json field_to_json(const FieldContext& ctx);

// {dim, entries}: row-major [re, im] pairs.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"slope": bitmask} or "vertical".
Json label_to_json(const BasisLabel& label);
BasisLabel label_from_json(const Json& j, int n);

// {n, label, vectors}: vectors[nu] is the column |nu, label>.
Json basis_to_json(const MubFamily& family, const BasisLabel& label);

// Columns orbit_id, basis_label, nu_bitmask, m, l, s, orbit_size; one row
// per orbit holding its representative.
std::string orbits_to_csv(const OrbitTable& table);
Json orbits_to_json(const OrbitTable& table);

// {basis, shots?, data: [{nu_bitmask, p | count}]}.
Json record_to_json(const MeasurementRecord& record);
MeasurementRecord record_from_json(const Json& j, int n);

struct Simulation {
  int n = 0;
  // Self-dual basis of the field the records refer to; empty means the
  // default field.
  std::vector<std::uint32_t> selfdual_basis;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;
  Matrix state;
  std::vector<MeasurementRecord> records;
};

Json simulation_to_json(const Simulation& sim);
Simulation simulation_from_json(const Json& j);

struct Report {
  int n = 0;
  std::vector<BasisLabel> bases_used;
  // Against the true state, when the input carries one.
  std::optional<double> fidelity;
  std::optional<double> trace_distance;
  // Whether the linear estimate was already a density matrix.
  bool physical = false;
  std::size_t orbit_count = 0;
  int independent_count = 0;
  int pi_rank = 0;
  int pi_dimension = 0;
  // Estimate after projection onto PI density matrices.
  Matrix estimate;
};

Json report_to_json(const Report& report);

// Either a generator description {"method": "twirl" | "dicke" | "blocks",
// ...} or a plain matrix. Returns std::nullopt for a plain matrix.
std::optional<PIStateSpec> state_spec_from_json(const Json& j, int n);

Json read_json(const std::filesystem::path& path);
// Writes `text` followed by a newline when missing.
void write_text(const std::filesystem::path& path, const std::string& text);

// Canonical two-space indented dump.
std::string dump(const Json& j);

}  // namespace pimub::io
