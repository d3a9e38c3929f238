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

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "pimub/io.hpp"
#include "pimub/mub.hpp"
#include "pimub/operators.hpp"
#include "pimub/orbits.hpp"
#include "pimub/symmetric.hpp"
#include "pimub/tomography.hpp"

namespace pimub::cli {
namespace {

using io::Json;

constexpr int kMaxBasisExportQubits = 6;
constexpr int kMaxOrbitQubits = 10;
constexpr int kMaxPipelineQubits = 6;

struct Options {
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;
  bool exact = false;
  double tolerance = 1e-9;
  std::string out;
  std::string state;
  std::string method = "twirl";
  std::string input;
  std::string expansion = "subspace";
  bool csv = false;
  bool verify = false;
};

// Failure of an invariant check; maps to exit code 1 after output is written.
struct CheckFailed {};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  } else {
    io::write_text(opt.out, text);
  }
}

FieldPtr field_for(int n, const std::vector<std::uint32_t>& basis) {
  return basis.empty() ? make_field(n) : make_field(n, basis);
}

int cmd_field(const Options& opt, std::ostream& out) {
  const FieldPtr field = make_field(opt.n);
  const Json j = io::field_to_json(*field);
  emit(opt, io::dump(j), out);
  if (opt.verify && !j.at("gram_ok").get<bool>()) throw CheckFailed{};
  return kExitOk;
}

int cmd_mubs(const Options& opt, std::ostream& out) {
  const FieldPtr field = make_field(opt.n);
  const MubFamily family = build_family(field);
  if (opt.out.empty()) {
    Json bases = Json::array();
    for (const auto& label : family.labels()) {
      bases.push_back(io::basis_to_json(family, label));
    }
    out << io::dump(Json{{"field", io::field_to_json(*field)}, {"bases", bases}})
        << '\n';
  } else {
    const std::filesystem::path dir(opt.out);
    std::filesystem::create_directories(dir);
    io::write_text(dir / "field.json", io::dump(io::field_to_json(*field)));
    for (const auto& label : family.labels()) {
      const std::string name =
          label.is_vertical() ? "vertical" : std::to_string(label.slope_bits());
      io::write_text(dir / ("basis_" + name + ".json"),
                     io::dump(io::basis_to_json(family, label)));
    }
  }
  if (opt.verify && max_unbiasedness_error(family) > opt.tolerance) {
    throw CheckFailed{};
  }
  return kExitOk;
}

int cmd_orbits(const Options& opt, std::ostream& out) {
  const FieldPtr field = make_field(opt.n);
  const OrbitTable table = enumerate_orbits(*field);
  emit(opt, opt.csv ? io::orbits_to_csv(table) : io::dump(io::orbits_to_json(table)),
       out);
  return kExitOk;
}

Matrix random_block_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return (rho + rho.adjoint()) * 0.5;
}

std::vector<double> random_weights(std::size_t count, std::mt19937_64& rng) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> w(count);
  double sum = 0.0;
  for (double& x : w) sum += (x = draw(rng));
  for (double& x : w) x /= sum;
  return w;
}

PIStateSpec generated_spec(const Options& opt) {
  PIStateSpec spec;
  spec.n = opt.n;
  const std::uint64_t seed = *opt.seed;
  std::mt19937_64 rng(splitmix64(seed));
  if (opt.method == "twirl") {
    spec.method = TwirlSpec{seed};
  } else if (opt.method == "dicke") {
    spec.method = DickeMixtureSpec{random_weights(opt.n + 1, rng)};
  } else {
    const auto spins = spin_values(opt.n);
    const auto weights = random_weights(spins.size(), rng);
    SpinBlocksSpec blocks;
    for (std::size_t k = 0; k < spins.size(); ++k) {
      blocks.blocks.push_back(
          SpinBlock{spins[k], weights[k], random_block_state(spins[k] + 1, rng)});
    }
    spec.method = std::move(blocks);
  }
  return spec;
}

Matrix simulation_state(const Options& opt) {
  if (opt.state.empty()) return random_pi_state(generated_spec(opt)).matrix();
  const Json j = io::read_json(opt.state);
  if (auto spec = io::state_spec_from_json(j, opt.n)) {
    return random_pi_state(*spec).matrix();
  }
  Matrix m = io::matrix_from_json(j);
  if (m.rows() != dimension(opt.n)) {
    throw Error(ErrorKind::kDimensionMismatch, "state file does not match n");
  }
  return DensityMatrix(std::move(m)).matrix();
}

int cmd_simulate(const Options& opt, std::ostream& out) {
  const MeasurementSetup setup = find_minimal_setup(opt.n);
  const MubFamily family = build_family(setup.field);
  io::Simulation sim;
  sim.n = opt.n;
  sim.selfdual_basis = setup.field->selfdual_basis_poly();
  sim.seed = opt.seed;
  sim.state = simulation_state(opt);
  sim.records = exact_probabilities(sim.state, family, setup.bases);
  if (!opt.exact) {
    sim.shots = opt.shots;
    for (std::size_t b = 0; b < sim.records.size(); ++b) {
      sim.records[b] =
          sample_counts(sim.records[b], *opt.shots, splitmix64(*opt.seed + b + 1));
    }
  }
  emit(opt, io::dump(io::simulation_to_json(sim)), out);
  return kExitOk;
}

int cmd_reconstruct(const Options& opt, std::ostream& out) {
  const io::Simulation sim = io::simulation_from_json(io::read_json(opt.input));
  if (sim.n > kMaxPipelineQubits) {
    throw Error(ErrorKind::kUnsupportedN, "reconstruction supports n <= " +
                                              std::to_string(kMaxPipelineQubits));
  }
  const MubFamily family = build_family(field_for(sim.n, sim.selfdual_basis));
  std::vector<BasisLabel> bases;
  for (const auto& r : sim.records) bases.push_back(r.basis);
  ReconstructOptions options;
  if (opt.expansion == "orbits") options.rule = ExpansionRule::kPermutationOrbits;
  const Reconstructor reconstructor(family, bases, options);
  const Matrix estimate = reconstructor.reconstruct(sim.records);

  io::Report report;
  report.n = sim.n;
  report.bases_used = reconstructor.bases();
  report.physical = DensityMatrix::is_valid(estimate, opt.tolerance,
                                            opt.tolerance, opt.tolerance);
  report.estimate = project_physical(estimate).matrix();
  report.orbit_count = reconstructor.orbit_table().size();
  report.independent_count = independent_count(reconstructor.orbit_table());
  report.pi_rank = pi_rank(family, reconstructor.bases());
  report.pi_dimension = static_cast<int>(PairOrbits(sim.n).size());
  if (sim.state.size() > 0) {
    report.fidelity = fidelity(sim.state, report.estimate);
    report.trace_distance = trace_distance(sim.state, report.estimate);
  }
  emit(opt, io::dump(io::report_to_json(report)), out);
  if (opt.verify && !(report.trace_distance && *report.trace_distance <= opt.tolerance)) {
    throw CheckFailed{};
  }
  return kExitOk;
}

// Deterministic PI test state: the twirl of a fixed pure state.
Matrix verification_state(int n) {
  Vector psi(dimension(n));
  for (Eigen::Index x = 0; x < psi.size(); ++x) {
    psi(x) = Complex(1.0 + static_cast<double>(x % 5), static_cast<double>((7 * x) % 3));
  }
  psi.normalize();
  return twirl(psi * psi.adjoint());
}

double hadamard_error(const FieldContext& ctx) {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  Matrix power = Matrix::Ones(1, 1);
  for (int i = 0; i < ctx.n(); ++i) {
    Matrix next(power.rows() * 2, power.cols() * 2);
    for (Eigen::Index r = 0; r < power.rows(); ++r) {
      for (Eigen::Index c = 0; c < power.cols(); ++c) {
        next.block(2 * r, 2 * c, 2, 2) = power(r, c) * h;
      }
    }
    power = std::move(next);
  }
  return (fourier(ctx) - power).cwiseAbs().maxCoeff();
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const int n = opt.n;
  const FieldPtr field = make_field(n);
  const FieldContext& ctx = *field;
  const MubFamily family = build_family(field);
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, double error, double tol) {
    const bool ok = error <= tol;
    all &= ok;
    checks.push_back(Json{{"name", name}, {"max_error", error}, {"passed", ok}});
  };

  double gram = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      gram = std::max(gram, std::abs(ctx.trace(ctx.mul(ctx.theta(i), ctx.theta(k))) -
                                     (i == k ? 1.0 : 0.0)));
    }
  }
  record("selfdual_gram", gram, 0.0);
  record("mub_unbiasedness", max_unbiasedness_error(family), opt.tolerance);

  // All label pairs up to four qubits, generator pairs beyond.
  std::vector<FieldElement> probes;
  if (n <= 4) {
    probes = ctx.elements();
  } else {
    for (int i = 1; i <= n; ++i) probes.push_back(ctx.theta(i));
  }
  double commutation = 0.0;
  for (const auto& a : probes) {
    const Matrix z = build_z(a);
    for (const auto& b : probes) {
      const Matrix x = build_x(b);
      const double sign = ctx.trace(ctx.mul(a, b)) ? -1.0 : 1.0;
      commutation = std::max(commutation, (z * x - sign * x * z).cwiseAbs().maxCoeff());
    }
  }
  record("pauli_commutation", commutation, 1e-12);

  const Matrix f = fourier(ctx);
  double conjugation = 0.0;
  for (const auto& a : ctx.elements()) {
    conjugation =
        std::max(conjugation, (f * build_z(a) * f - build_x(a)).cwiseAbs().maxCoeff());
  }
  record("fourier_conjugation", conjugation, 1e-12);
  record("fourier_hadamard", hadamard_error(ctx), 1e-12);

  double swaps = 0.0;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      Matrix from_field = Matrix::Zero(ctx.size(), ctx.size());
      for (const auto& kappa : ctx.elements()) {
        from_field(permute_label(kappa, p, q).bits(), kappa.bits()) = 1.0;
      }
      std::vector<int> image(n);
      for (int i = 0; i < n; ++i) image[i] = i;
      std::swap(image[p - 1], image[q - 1]);
      const Matrix direct = permutation_matrix(n, image);
      swaps = std::max(swaps, (from_field - direct).cwiseAbs().maxCoeff());
      swaps = std::max(swaps, (swap_matrix(ctx, p, q) - direct).cwiseAbs().maxCoeff());
    }
  }
  record("swap_field_formula", swaps, 1e-12);

  const Matrix rho = verification_state(n);
  record("full_inversion", (reconstruct_identity_check(family, rho) - rho).cwiseAbs().maxCoeff(),
         opt.tolerance);

  const OrbitTable table = enumerate_orbits(ctx);
  long long blocks = -1;
  for (int tj : spin_values(n)) blocks += static_cast<long long>(tj + 1) * (tj + 1);
  record("independent_count", std::abs(static_cast<double>(independent_count(table) - blocks)),
         0.0);

  const MeasurementSetup setup = find_minimal_setup(n);
  const MubFamily minimal_family = build_family(setup.field);
  double round_trip = 1.0;
  if (setup.complete()) {
    const Reconstructor reconstructor(minimal_family, setup.bases);
    const Matrix estimate =
        reconstructor.reconstruct(exact_probabilities(rho, minimal_family, setup.bases));
    round_trip = trace_distance(rho, estimate);
  }
  record("minimal_round_trip", round_trip, opt.tolerance);

  const CovarianceReport cov = check_permutation_covariance(family);
  Json rules = Json::array();
  for (IndexRule rule : {IndexRule::kCoordinateSwap, IndexRule::kSharedNuTrace}) {
    if (cov.holds(rule)) rules.push_back(std::string(to_string(rule)));
  }
  const Json result{
      {"n", n},
      {"tolerance", opt.tolerance},
      {"checks", checks},
      {"covariance",
       Json{{"projectors_checked", cov.checked},
            {"projectors_closed", cov.closed},
            {"family_closed", cov.family_closed()},
            {"index_rules_holding", rules}}},
      {"orbit_count", table.size()},
      {"closed_form_orbit_count", closed_form_orbit_count(n)},
      {"passed", all}};
  emit(opt, io::dump(result), out);
  if (!all) throw CheckFailed{};
  return kExitOk;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Minimal MUB tomography of permutationally invariant qubit states",
               "pimub"};
  app.require_subcommand(1);
  Options opt;

  auto add_n = [&](CLI::App* cmd, int max_n) {
    cmd->add_option("--n", opt.n, "Number of qubits")
        ->required()
        ->check(CLI::Range(1, max_n));
  };
  auto add_out = [&](CLI::App* cmd, const std::string& what) {
    cmd->add_option("--out", opt.out, what);
  };
  auto add_tolerance = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", opt.tolerance, "Numerical tolerance for checks")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* field = app.add_subcommand("field", "Export GF(2^n) with its self-dual basis");
  add_n(field, kMaxQubits);
  add_out(field, "Output JSON file");
  field->add_flag("--verify", opt.verify, "Fail unless the basis is self-dual");

  CLI::App* mubs = app.add_subcommand("mubs", "Export the 2^n + 1 bases");
  add_n(mubs, kMaxBasisExportQubits);
  add_out(mubs, "Output directory (one JSON file per basis)");
  add_tolerance(mubs);
  mubs->add_flag("--verify", opt.verify, "Fail unless the bases are mutually unbiased");

  CLI::App* orbits = app.add_subcommand("orbits", "Orbits of label points under qubit swaps");
  add_n(orbits, kMaxOrbitQubits);
  add_out(orbits, "Output file");
  orbits->add_flag("--csv", opt.csv, "Write CSV instead of JSON");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Measure a PI state on the minimal bases");
  add_n(simulate, kMaxPipelineQubits);
  add_out(simulate, "Output JSON file");
  simulate->add_option("--seed", opt.seed, "Seed for state generation and sampling")
      ->required();
  auto* shots = simulate->add_option("--shots", opt.shots, "Shots per basis")
                    ->check(CLI::PositiveNumber);
  auto* exact = simulate->add_flag("--exact", opt.exact, "Record exact probabilities");
  shots->excludes(exact);
  simulate->add_option("--method", opt.method, "State generator")
      ->check(CLI::IsMember({"twirl", "dicke", "blocks"}));
  simulate->add_option("--state", opt.state,
                       "State file: a generator description or a density matrix")
      ->check(CLI::ExistingFile);

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "Reconstruct a state from measurement records");
  reconstruct->add_option("input", opt.input, "Simulation JSON")
      ->required()
      ->check(CLI::ExistingFile);
  add_out(reconstruct, "Output report file");
  add_tolerance(reconstruct);
  reconstruct->add_option("--expansion", opt.expansion,
                          "How unmeasured probabilities are filled in")
      ->check(CLI::IsMember({"subspace", "orbits"}));
  reconstruct->add_flag("--verify", opt.verify,
                        "Fail unless the trace distance to the stored state is "
                        "within --tolerance");

  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite");
  add_n(verify, kMaxPipelineQubits);
  add_out(verify, "Output JSON file");
  add_tolerance(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (simulate->parsed() && !opt.exact && !opt.shots) {
      throw CLI::ValidationError("simulate", "one of --shots or --exact is required");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (field->parsed()) return cmd_field(opt, out);
    if (mubs->parsed()) return cmd_mubs(opt, out);
    if (orbits->parsed()) return cmd_orbits(opt, out);
    if (simulate->parsed()) return cmd_simulate(opt, out);
    if (reconstruct->parsed()) return cmd_reconstruct(opt, out);
    return cmd_verify(opt, out);
  } catch (const CheckFailed&) {
    write_error(err, "check_failed", "invariant check failed");
    return kExitFailure;
  } catch (const Error& e) {
    write_error(err, std::string(to_string(e.kind())), e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return kExitFailure;
  }
}

}  // namespace pimub::cli
