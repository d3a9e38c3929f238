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

// Permutationally invariant test states, simulated MUB measurements and
// state reconstruction from the minimal basis set.

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "pimub/mub.hpp"
#include "pimub/orbits.hpp"
#include "pimub/symmetric.hpp"

namespace pimub {

inline constexpr int kMaxTwirlQubits = 8;

// Spins are passed as 2j so that half-integers stay exact.
// Valid values run from n down to 0 (n even) or 1 (n odd) in steps of two.
std::vector<int> spin_values(int n);

// dim K_j = C(n, n/2 - j) - C(n, n/2 - j - 1). Throws kInvalidJ.
long long multiplicity(int n, int twice_j);

// Orthonormal spin-j vectors, one D x (2j+1) matrix per multiplicity copy.
// Column c holds m = j - c, where m counts (#zeros - #ones)/2.
std::vector<Matrix> spin_basis(int n, int twice_j);

struct TwirlSpec {
  std::uint64_t seed = 0;
};

// weights[k] multiplies the Dicke state with k excitations, k = 0..n.
struct DickeMixtureSpec {
  std::vector<double> weights;
};

struct SpinBlock {
  int twice_j = 0;
  double probability = 0.0;
  Matrix state;  // (2j+1) x (2j+1) density matrix
};

struct SpinBlocksSpec {
  std::vector<SpinBlock> blocks;
};

struct PIStateSpec {
  int n = 1;
  std::variant<TwirlSpec, DickeMixtureSpec, SpinBlocksSpec> method;
};

// Throws kInvalidSpec for malformed weights or blocks and kDimensionOverflow
// for the twirl method beyond kMaxTwirlQubits.
DensityMatrix random_pi_state(const PIStateSpec& spec);

// Seeded Ginibre state G G^dagger / Tr; not permutation invariant.
DensityMatrix random_density_matrix(int n, std::uint64_t seed);
Vector random_pure_state(int n, std::uint64_t seed);
Vector dicke_state(int n, int excitations);

struct MeasurementRecord {
  BasisLabel basis = BasisLabel::slope(0);
  // Indexed by nu. For sampled records these are the frequencies.
  std::vector<double> probabilities;
  std::vector<std::uint64_t> counts;
  std::uint64_t shots = 0;

  bool has_counts() const { return !counts.empty(); }
};

std::vector<MeasurementRecord> exact_probabilities(
    const Matrix& rho, const MubFamily& family,
    const std::vector<BasisLabel>& bases);

// Multinomial draw of `shots` outcomes from an exact record.
MeasurementRecord sample_counts(const MeasurementRecord& exact,
                                std::uint64_t shots, std::uint64_t seed);

enum class ExpansionRule {
  // Each unmeasured probability is the linear combination of measured ones
  // that reproduces its functional on the PI operator subspace.
  kSymmetricSubspace,
  // Copies values along label orbits (see OrbitTable).
  kPermutationOrbits,
};

struct ReconstructOptions {
  ExpansionRule rule = ExpansionRule::kSymmetricSubspace;
  ExpansionMode mode = ExpansionMode::kRepresentative;
  double normalization_tol = 1e-9;
};

// Reconstructs states from records on a fixed set of bases. Holds a
// reference to `family`, which must outlive it.
class Reconstructor {
 public:
  Reconstructor(const MubFamily& family, std::vector<BasisLabel> bases,
                ReconstructOptions options = {});

  const std::vector<BasisLabel>& bases() const { return bases_; }
  const OrbitTable& orbit_table() const { return table_; }
  // Rank of the measured functionals on Hermitian PI operators, out of
  // C(n + 3, 3). Only computed for the symmetric-subspace rule.
  int pi_rank() const { return pi_rank_; }
  int pi_dimension() const { return pi_dimension_; }
  bool informationally_complete() const { return pi_rank_ == pi_dimension_; }

  // Probabilities for every label point, indexed by LabelPoint::index.
  // Throws kMissingBasis, kInconsistentNormalization, kNotIdentifiable.
  std::vector<double> expand(const std::vector<MeasurementRecord>& records) const;
  Matrix reconstruct(const std::vector<MeasurementRecord>& records) const;

 private:
  Eigen::VectorXd measured_vector(const std::vector<MeasurementRecord>& records) const;

  const MubFamily& family_;
  std::vector<BasisLabel> bases_;
  ReconstructOptions options_;
  OrbitTable table_;
  int pi_rank_ = 0;
  int pi_dimension_ = 0;
  // expanded = coefficients^T * measured (symmetric-subspace rule).
  Eigen::MatrixXd coefficients_;
};

// Rank of the PI functionals of `bases` out of C(n + 3, 3).
int pi_rank(const MubFamily& family, const std::vector<BasisLabel>& bases);

// Minimal bases (mu = 0, one slope of each weight 1..n, vertical) whose
// records determine every PI state. Slopes are scanned in odometer order,
// each weight starting from theta_1 + ... + theta_m. Returns std::nullopt
// when no choice among the first `max_candidates` is complete.
std::optional<std::vector<BasisLabel>> informative_minimal_bases(
    const MubFamily& family, std::size_t max_candidates = 100000);

struct MeasurementSetup {
  FieldPtr field;
  std::vector<BasisLabel> bases;
  int pi_rank = 0;
  int pi_dimension = 0;
  bool complete() const { return pi_rank == pi_dimension; }
};

// Field and minimal bases for n qubits: the default field first, then every
// other self-dual basis in enumeration order (n <= kMaxEnumerationQubits).
// Falls back to the default field and minimal_bases() when nothing is
// complete.
MeasurementSetup find_minimal_setup(int n);

// Full-record reconstruction on the minimal bases with orbit table `table`.
Matrix reconstruct(const std::vector<MeasurementRecord>& records,
                   const OrbitTable& table, const MubFamily& family,
                   const ReconstructOptions& options = {});

// sum_{k,nu} p_{nu,k} P_{nu,k} - I from probabilities on every label point.
Matrix invert_probabilities(const MubFamily& family,
                            const std::vector<double>& probabilities);

// Nearest unit-trace PSD matrix in Frobenius norm (eigenvalue projection
// onto the simplex), then twirled back onto the PI subspace.
DensityMatrix project_physical(const Matrix& estimate);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const Matrix& rho, const Matrix& sigma);
// (1/2) ||rho - sigma||_1.
double trace_distance(const Matrix& rho, const Matrix& sigma);

}  // namespace pimub
