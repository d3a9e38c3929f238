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

#include "pimub/tomography.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace pimub {
namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::uint32_t> sector(int n, int ones) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (std::popcount(x) == ones) out.push_back(x);
  }
  return out;
}

// Lowering operator J- = sum_i sigma-_i (flips a 0 to a 1).
Eigen::VectorXd lower(const Eigen::VectorXd& v, int n) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(v.size()); ++x) {
    if (v(x) == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      if (!((x >> i) & 1u)) out(x | (1u << i)) += v(x);
    }
  }
  return out;
}

void check_weights(const std::vector<double>& w, std::size_t expected,
                   const char* what) {
  if (w.size() != expected) {
    throw Error(ErrorKind::kInvalidSpec,
                std::string(what) + ": expected " + std::to_string(expected) +
                    " weights, got " + std::to_string(w.size()));
  }
  double sum = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) {
      throw Error(ErrorKind::kInvalidSpec, std::string(what) + ": negative weight");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorKind::kInvalidSpec,
                std::string(what) + ": weights sum to " + std::to_string(sum));
  }
}

Matrix ginibre(int n, std::mt19937_64& rng) {
  const Eigen::Index dim = dimension(n);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

Matrix hermitize(const Matrix& a) { return (a + a.adjoint()) * 0.5; }

Matrix psd_sqrt(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(a));
  const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.cast<Complex>().asDiagonal() *
         es.eigenvectors().adjoint();
}

// Euclidean projection of `values` onto the probability simplex.
Eigen::VectorXd simplex_projection(const Eigen::VectorXd& values) {
  std::vector<double> u(values.data(), values.data() + values.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - candidate > 0.0) shift = candidate;
  }
  return (values.array() - shift).cwiseMax(0.0).matrix();
}

Matrix check_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0 ||
      !std::has_single_bit(static_cast<std::uint64_t>(a.rows()))) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::string(what) + " must be a 2^n square matrix");
  }
  return a;
}

}  // namespace

std::vector<int> spin_values(int n) {
  std::vector<int> out;
  for (int tj = n; tj >= 0; tj -= 2) out.push_back(tj);
  return out;
}

long long multiplicity(int n, int twice_j) {
  if (n < 1 || twice_j < 0 || twice_j > n || (n - twice_j) % 2 != 0) {
    throw Error(ErrorKind::kInvalidJ, "2j=" + std::to_string(twice_j) +
                                          " is not a valid spin for n=" +
                                          std::to_string(n));
  }
  const int k = (n - twice_j) / 2;
  return binomial(n, k) - binomial(n, k - 1);
}

std::vector<Matrix> spin_basis(int n, int twice_j) {
  const long long copies = multiplicity(n, twice_j);
  const int ones = (n - twice_j) / 2;
  const Eigen::Index dim = dimension(n);
  const auto top = sector(n, ones);

  // Highest-weight vectors: kernel of J+ on the sector with `ones` ones.
  Eigen::MatrixXd kernel;
  if (ones == 0) {
    kernel = Eigen::MatrixXd::Ones(1, 1);
  } else {
    const auto below = sector(n, ones - 1);
    std::vector<int> position(dim, -1);
    for (std::size_t i = 0; i < below.size(); ++i) position[below[i]] = static_cast<int>(i);
    Eigen::MatrixXd jplus = Eigen::MatrixXd::Zero(below.size(), top.size());
    for (std::size_t c = 0; c < top.size(); ++c) {
      for (int i = 0; i < n; ++i) {
        if ((top[c] >> i) & 1u) jplus(position[top[c] ^ (1u << i)], c) += 1.0;
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jplus, Eigen::ComputeFullV);
    kernel = svd.matrixV().rightCols(copies);
  }
  if (kernel.cols() != copies) {
    throw Error(ErrorKind::kInvalidJ, "highest-weight space has wrong dimension");
  }

  std::vector<Matrix> out;
  for (long long a = 0; a < copies; ++a) {
    Matrix block(dim, twice_j + 1);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    for (std::size_t i = 0; i < top.size(); ++i) v(top[i]) = kernel(i, a);
    v.normalize();
    for (int c = 0; c <= twice_j; ++c) {
      block.col(c) = v.cast<Complex>();
      if (c < twice_j) {
        v = lower(v, n);
        v.normalize();
      }
    }
    out.push_back(std::move(block));
  }
  return out;
}

Vector dicke_state(int n, int excitations) {
  if (excitations < 0 || excitations > n) {
    throw Error(ErrorKind::kInvalidSpec, "excitation number out of range");
  }
  const auto members = sector(n, excitations);
  Vector v = Vector::Zero(dimension(n));
  const double amp = 1.0 / std::sqrt(static_cast<double>(members.size()));
  for (std::uint32_t x : members) v(x) = amp;
  return v;
}

DensityMatrix random_density_matrix(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxTwirlQubits) {
    throw Error(ErrorKind::kDimensionOverflow, "random states support 1 <= n <= 8");
  }
  std::mt19937_64 rng(seed);
  return DensityMatrix(hermitize(ginibre(n, rng)));
}

Vector random_pure_state(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxQubits) {
    throw Error(ErrorKind::kDimensionOverflow, "n out of range");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dimension(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  v.normalize();
  return v;
}

DensityMatrix random_pi_state(const PIStateSpec& spec) {
  const int n = spec.n;
  if (n < 1 || n > kMaxQubits) {
    throw Error(ErrorKind::kInvalidSpec, "n out of range");
  }
  const Eigen::Index dim = dimension(n);
  return std::visit(
      [&](const auto& method) -> DensityMatrix {
        using T = std::decay_t<decltype(method)>;
        if constexpr (std::is_same_v<T, TwirlSpec>) {
          if (n > kMaxTwirlQubits) {
            throw Error(ErrorKind::kDimensionOverflow,
                        "twirl states support n <= " +
                            std::to_string(kMaxTwirlQubits));
          }
          std::mt19937_64 rng(method.seed);
          return DensityMatrix(hermitize(twirl(ginibre(n, rng))));
        } else if constexpr (std::is_same_v<T, DickeMixtureSpec>) {
          check_weights(method.weights, static_cast<std::size_t>(n) + 1,
                        "dicke mixture");
          Matrix rho = Matrix::Zero(dim, dim);
          for (int k = 0; k <= n; ++k) {
            if (method.weights[k] == 0.0) continue;
            const Vector d = dicke_state(n, k);
            rho += method.weights[k] * d * d.adjoint();
          }
          return DensityMatrix(hermitize(rho));
        } else {
          std::vector<double> probabilities;
          std::vector<int> seen;
          for (const SpinBlock& b : method.blocks) {
            multiplicity(n, b.twice_j);
            if (std::find(seen.begin(), seen.end(), b.twice_j) != seen.end()) {
              throw Error(ErrorKind::kInvalidSpec, "spin listed twice");
            }
            seen.push_back(b.twice_j);
            if (b.state.rows() != b.twice_j + 1 ||
                !is_density_operator(b.state, 1e-12, 1e-12, 1e-10)) {
              throw Error(ErrorKind::kInvalidSpec,
                          "spin block state is not a (2j+1)-dimensional "
                          "density matrix");
            }
            probabilities.push_back(b.probability);
          }
          check_weights(probabilities, method.blocks.size(), "spin blocks");
          Matrix rho = Matrix::Zero(dim, dim);
          for (const SpinBlock& b : method.blocks) {
            if (b.probability == 0.0) continue;
            const auto copies = spin_basis(n, b.twice_j);
            const double scale = b.probability / static_cast<double>(copies.size());
            for (const Matrix& e : copies) rho += scale * e * b.state * e.adjoint();
          }
          return DensityMatrix(hermitize(rho));
        }
      },
      spec.method);
}

std::vector<MeasurementRecord> exact_probabilities(
    const Matrix& rho, const MubFamily& family,
    const std::vector<BasisLabel>& bases) {
  if (rho.rows() != family.dim() || rho.cols() != family.dim()) {
    throw Error(ErrorKind::kDimensionMismatch, "state dimension mismatch");
  }
  std::vector<MeasurementRecord> out;
  for (const BasisLabel& label : bases) {
    const Matrix& b = family.basis(label);
    const Matrix rb = rho * b;
    MeasurementRecord rec;
    rec.basis = label;
    rec.probabilities.resize(b.cols());
    for (Eigen::Index nu = 0; nu < b.cols(); ++nu) {
      rec.probabilities[nu] = b.col(nu).dot(rb.col(nu)).real();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

MeasurementRecord sample_counts(const MeasurementRecord& exact,
                                std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) {
    throw Error(ErrorKind::kInvalidSpec, "shots must be positive");
  }
  std::mt19937_64 rng(seed);
  MeasurementRecord rec;
  rec.basis = exact.basis;
  rec.shots = shots;
  const std::size_t outcomes = exact.probabilities.size();
  rec.counts.assign(outcomes, 0);
  std::uint64_t remaining = shots;
  double mass = 1.0;
  for (std::size_t nu = 0; nu < outcomes && remaining > 0; ++nu) {
    const double p = std::max(exact.probabilities[nu], 0.0);
    std::uint64_t c = remaining;
    if (nu + 1 < outcomes) {
      const double conditional = mass > 0.0 ? std::clamp(p / mass, 0.0, 1.0) : 0.0;
      std::binomial_distribution<std::uint64_t> draw(remaining, conditional);
      c = draw(rng);
    }
    rec.counts[nu] = c;
    remaining -= c;
    mass -= p;
  }
  rec.probabilities.resize(outcomes);
  for (std::size_t nu = 0; nu < outcomes; ++nu) {
    rec.probabilities[nu] =
        static_cast<double>(rec.counts[nu]) / static_cast<double>(shots);
  }
  return rec;
}

Reconstructor::Reconstructor(const MubFamily& family,
                             std::vector<BasisLabel> bases,
                             ReconstructOptions options)
    : family_(family),
      bases_(std::move(bases)),
      options_(options),
      table_(enumerate_orbits(family.field())) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (options_.rule != ExpansionRule::kSymmetricSubspace) return;

  const int n = family.n();
  const PairOrbits orbits(n);
  const Eigen::Index rows = 2 * static_cast<Eigen::Index>(orbits.size());
  const Eigen::Index d = family.dim();
  const std::uint32_t total = num_label_points(n);
  pi_dimension_ = static_cast<int>(orbits.size());

  Eigen::MatrixXd targets(rows, total);
  for (std::uint32_t i = 0; i < total; ++i) {
    targets.col(i) = pi_functional(orbits, family.vector(LabelPoint::from_index(i, n)));
  }
  Eigen::MatrixXd measured(rows, static_cast<Eigen::Index>(bases_.size()) * d);
  for (std::size_t b = 0; b < bases_.size(); ++b) {
    for (Eigen::Index nu = 0; nu < d; ++nu) {
      const LabelPoint point{static_cast<std::uint32_t>(nu), bases_[b]};
      measured.col(static_cast<Eigen::Index>(b) * d + nu) = targets.col(point.index(n));
    }
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(measured);
  cod.setThreshold(1e-10);
  pi_rank_ = static_cast<int>(cod.rank());
  coefficients_ = cod.solve(targets);
}

Eigen::VectorXd Reconstructor::measured_vector(
    const std::vector<MeasurementRecord>& records) const {
  const Eigen::Index d = family_.dim();
  Eigen::VectorXd out(static_cast<Eigen::Index>(bases_.size()) * d);
  for (std::size_t b = 0; b < bases_.size(); ++b) {
    auto it = std::find_if(records.begin(), records.end(),
                           [&](const MeasurementRecord& r) { return r.basis == bases_[b]; });
    if (it == records.end()) {
      throw Error(ErrorKind::kMissingBasis,
                  "no record for basis " + bases_[b].to_string());
    }
    if (static_cast<Eigen::Index>(it->probabilities.size()) != d) {
      throw Error(ErrorKind::kInconsistentNormalization,
                  "record for " + bases_[b].to_string() + " has " +
                      std::to_string(it->probabilities.size()) + " outcomes");
    }
    if (it->has_counts()) {
      const std::uint64_t total =
          std::accumulate(it->counts.begin(), it->counts.end(), std::uint64_t{0});
      if (total != it->shots) {
        throw Error(ErrorKind::kInconsistentNormalization,
                    "counts for " + bases_[b].to_string() + " do not sum to shots");
      }
    }
    const double sum =
        std::accumulate(it->probabilities.begin(), it->probabilities.end(), 0.0);
    if (std::abs(sum - 1.0) > options_.normalization_tol) {
      throw Error(ErrorKind::kInconsistentNormalization,
                  "record for " + bases_[b].to_string() + " sums to " +
                      std::to_string(sum));
    }
    for (Eigen::Index nu = 0; nu < d; ++nu) {
      out(static_cast<Eigen::Index>(b) * d + nu) = it->probabilities[nu];
    }
  }
  return out;
}

std::vector<double> Reconstructor::expand(
    const std::vector<MeasurementRecord>& records) const {
  const Eigen::VectorXd measured = measured_vector(records);
  if (options_.rule == ExpansionRule::kSymmetricSubspace) {
    if (!informationally_complete()) {
      throw Error(ErrorKind::kNotIdentifiable,
                  "measured bases span " + std::to_string(pi_rank_) + " of " +
                      std::to_string(pi_dimension_) +
                      " PI operator dimensions");
    }
    const Eigen::VectorXd all = coefficients_.transpose() * measured;
    return std::vector<double>(all.data(), all.data() + all.size());
  }
  const Eigen::Index d = family_.dim();
  std::map<LabelPoint, double> points;
  for (std::size_t b = 0; b < bases_.size(); ++b) {
    for (Eigen::Index nu = 0; nu < d; ++nu) {
      points[LabelPoint{static_cast<std::uint32_t>(nu), bases_[b]}] =
          measured(static_cast<Eigen::Index>(b) * d + nu);
    }
  }
  return expand_probabilities(points, table_, options_.mode,
                              options_.normalization_tol);
}

Matrix Reconstructor::reconstruct(
    const std::vector<MeasurementRecord>& records) const {
  return invert_probabilities(family_, expand(records));
}

namespace {

Eigen::MatrixXd basis_functionals(const PairOrbits& orbits, const MubFamily& family,
                                  const BasisLabel& label) {
  const Eigen::Index d = family.dim();
  Eigen::MatrixXd out(2 * static_cast<Eigen::Index>(orbits.size()), d);
  for (Eigen::Index nu = 0; nu < d; ++nu) {
    out.col(nu) = pi_functional(
        orbits, family.vector(LabelPoint{static_cast<std::uint32_t>(nu), label}));
  }
  return out;
}

int stacked_rank(const std::vector<const Eigen::MatrixXd*>& blocks) {
  Eigen::Index cols = 0;
  for (const auto* b : blocks) cols += b->cols();
  Eigen::MatrixXd m(blocks.front()->rows(), cols);
  Eigen::Index at = 0;
  for (const auto* b : blocks) {
    m.middleCols(at, b->cols()) = *b;
    at += b->cols();
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m);
  cod.setThreshold(1e-10);
  return static_cast<int>(cod.rank());
}

}  // namespace

int pi_rank(const MubFamily& family, const std::vector<BasisLabel>& bases) {
  if (bases.empty()) return 0;
  const PairOrbits orbits(family.n());
  std::vector<Eigen::MatrixXd> blocks;
  for (const auto& b : bases) blocks.push_back(basis_functionals(orbits, family, b));
  std::vector<const Eigen::MatrixXd*> ptrs;
  for (const auto& b : blocks) ptrs.push_back(&b);
  return stacked_rank(ptrs);
}

std::optional<std::vector<BasisLabel>> informative_minimal_bases(
    const MubFamily& family, std::size_t max_candidates) {
  const int n = family.n();
  const PairOrbits orbits(n);
  const int target = static_cast<int>(orbits.size());

  // choices[m] lists the slopes of weight m, theta_1 + ... + theta_m first.
  std::vector<std::vector<std::uint32_t>> choices(n + 1);
  for (int m = 1; m <= n; ++m) {
    const std::uint32_t first = ((std::uint32_t{1} << m) - 1) << (n - m);
    choices[m].push_back(first);
    for (std::uint32_t mu = 1; mu < family.field().size(); ++mu) {
      if (std::popcount(mu) == m && mu != first) choices[m].push_back(mu);
    }
  }
  std::map<std::uint32_t, Eigen::MatrixXd> cache;
  auto block = [&](const BasisLabel& label) -> const Eigen::MatrixXd& {
    const std::uint32_t key = label.index(n);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, basis_functionals(orbits, family, label)).first;
    }
    return it->second;
  };

  std::vector<std::size_t> odometer(n + 1, 0);
  for (std::size_t tried = 0; tried < max_candidates; ++tried) {
    std::vector<BasisLabel> bases{BasisLabel::slope(0)};
    for (int m = 1; m <= n; ++m) bases.push_back(BasisLabel::slope(choices[m][odometer[m]]));
    bases.push_back(BasisLabel::vertical());
    std::vector<const Eigen::MatrixXd*> ptrs;
    for (const auto& b : bases) ptrs.push_back(&block(b));
    if (stacked_rank(ptrs) == target) return bases;
    // Advance the odometer with weight 1 as the fastest digit.
    int m = 1;
    while (m <= n && ++odometer[m] == choices[m].size()) odometer[m++] = 0;
    if (m > n) break;
  }
  return std::nullopt;
}

MeasurementSetup find_minimal_setup(int n) {
  const FieldPtr fallback = make_field(n);
  std::vector<FieldPtr> fields{fallback};
  if (n <= kMaxEnumerationQubits && n <= kMaxSymmetricQubits) {
    for (auto& basis : selfdual_bases(n)) {
      if (basis != fallback->selfdual_basis_poly()) {
        fields.push_back(make_field(n, std::move(basis)));
      }
    }
  }
  for (const FieldPtr& field : fields) {
    const MubFamily family = build_family(field);
    if (auto bases = informative_minimal_bases(family)) {
      const int dim = static_cast<int>(PairOrbits(n).size());
      return MeasurementSetup{field, std::move(*bases), dim, dim};
    }
  }
  const MubFamily family = build_family(fallback);
  const auto bases = minimal_bases(*fallback);
  return MeasurementSetup{fallback, bases, pi_rank(family, bases),
                          static_cast<int>(PairOrbits(n).size())};
}

Matrix reconstruct(const std::vector<MeasurementRecord>& records,
                   const OrbitTable& table, const MubFamily& family,
                   const ReconstructOptions& options) {
  if (table.n() != family.n()) {
    throw Error(ErrorKind::kDimensionMismatch, "orbit table is for another n");
  }
  return Reconstructor(family, minimal_bases(family.field()), options)
      .reconstruct(records);
}

Matrix invert_probabilities(const MubFamily& family,
                            const std::vector<double>& probabilities) {
  const int n = family.n();
  if (probabilities.size() != num_label_points(n)) {
    throw Error(ErrorKind::kDimensionMismatch,
                "need one probability per label point");
  }
  const Eigen::Index d = family.dim();
  Matrix out = -Matrix::Identity(d, d);
  for (const BasisLabel& label : family.labels()) {
    const Matrix& b = family.basis(label);
    Eigen::VectorXcd p(d);
    for (Eigen::Index nu = 0; nu < d; ++nu) {
      p(nu) = probabilities[LabelPoint{static_cast<std::uint32_t>(nu), label}.index(n)];
    }
    out += b * p.asDiagonal() * b.adjoint();
  }
  return out;
}

DensityMatrix project_physical(const Matrix& estimate) {
  check_square(estimate, "estimate");
  Matrix current = hermitize(estimate);
  for (int pass = 0; pass < 2; ++pass) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(current);
    const Eigen::VectorXd projected = simplex_projection(es.eigenvalues());
    current = es.eigenvectors() * projected.cast<Complex>().asDiagonal() *
              es.eigenvectors().adjoint();
    current = hermitize(twirl(current));
    Eigen::SelfAdjointEigenSolver<Matrix> check(current, Eigen::EigenvaluesOnly);
    // A twirl is a mixture of unitary conjugations and cannot create
    // negative eigenvalues; the second pass only absorbs rounding.
    if (check.eigenvalues().minCoeff() >= -1e-12) break;
  }
  current /= current.trace().real();
  return DensityMatrix(std::move(current));
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  check_square(rho, "rho");
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "fidelity of different dimensions");
  }
  const Matrix root = psd_sqrt(rho);
  const Matrix inner = hermitize(root * sigma * root);
  Eigen::SelfAdjointEigenSolver<Matrix> es(inner, Eigen::EigenvaluesOnly);
  const double f = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(f * f, 0.0, 1.0);
}

double trace_distance(const Matrix& rho, const Matrix& sigma) {
  check_square(rho, "rho");
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "trace distance of different dimensions");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(rho - sigma),
                                           Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace pimub
