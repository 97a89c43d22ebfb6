// Command-line front end: randomized verification sweeps, figure-grid
// emission, squeezing classification, and the truncated-oscillator check.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uncrel/cs_ineq.hpp"
#include "uncrel/io.hpp"
#include "uncrel/multivariance.hpp"
#include "uncrel/squeezing.hpp"
#include "uncrel/statefam.hpp"
#include "uncrel/uncertainty.hpp"

using nlohmann::json;
using namespace uncrel;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

// Canonical per-figure seeds so shipped reference grids are reproducible.
constexpr std::uint64_t kFigureSeeds[5] = {0x5eed0001, 0x5eed0002, 0x5eed0003, 0x5eed0004,
                                           0x5eed0005};

// ---------------------------------------------------------------------------
// verify

struct SweepConfig {
  std::string relation = "balanced-herm";
  int m = 3;
  int dim = 4;
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = kSlackTol;
  std::string out;
};

struct TrialInputs {
  std::vector<ComplexVector> vectors;           // vector relations
  std::vector<ComplexMatrix> ops;               // operator relations
  std::optional<QuantumState> state;            // operator relations
  std::optional<PairSet> pairs;                 // unbalanced relations
};

PairSet random_pairset(int m, Rng& rng) {
  std::vector<std::pair<int, int>> all;
  for (int j = 1; j <= m; ++j)
    for (int k = j + 1; k <= m; ++k) all.emplace_back(j, k);
  const int total = static_cast<int>(all.size());
  const int count = rng.uniform_int(1, total);
  // Partial Fisher-Yates so the choice is deterministic per (seed, trial).
  for (int i = 0; i < count; ++i)
    std::swap(all[static_cast<std::size_t>(i)],
              all[static_cast<std::size_t>(rng.uniform_int(i, total - 1))]);
  all.resize(static_cast<std::size_t>(count));
  return PairSet(all);
}

QuantumState random_state(std::size_t dim, Rng& rng, bool pure, bool normalized) {
  double target = normalized ? 1.0 : rng.uniform(0.2, 3.0);
  if (pure) {
    ComplexVector v = random_vector(dim, rng);
    v *= std::sqrt(target) / v.norm();
    return QuantumState::pure(std::move(v));
  }
  const std::size_t rank = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(dim)));
  ComplexMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho *= target / rho.trace().real();
  return QuantumState::density(rho);
}

// Inputs are a pure function of (config, trial) so the worst case can be
// regenerated for the witness without storing every draw.
TrialInputs draw_trial(const SweepConfig& cfg, int trial) {
  Rng rng(cfg.seed, static_cast<std::uint64_t>(trial) + 1);
  TrialInputs in;
  const auto dim = static_cast<std::size_t>(cfg.dim);
  const bool pure = trial % 2 == 0;
  const bool vectors = cfg.relation == "balanced-cs" || cfg.relation == "unbalanced-cs";
  const bool hermitian_ops = cfg.relation == "balanced-herm" || cfg.relation == "unbalanced-herm" ||
                             cfg.relation == "multivariance" || cfg.relation == "symmetric";
  const bool general_ops = cfg.relation == "balanced-gen" || cfg.relation == "unbalanced-gen";
  if (vectors) {
    const bool real_only = trial % 2 == 1;
    for (int j = 0; j < cfg.m; ++j) in.vectors.push_back(random_vector(dim, rng, real_only));
  } else if (hermitian_ops) {
    for (int j = 0; j < cfg.m; ++j) in.ops.push_back(random_hermitian(dim, rng));
    in.state = random_state(dim, rng, pure, /*normalized=*/true);
  } else if (general_ops) {
    for (int j = 0; j < cfg.m; ++j) in.ops.push_back(random_operator(dim, rng));
    in.state = random_state(dim, rng, pure, /*normalized=*/false);
  }
  if (cfg.relation == "unbalanced-cs" || cfg.relation == "unbalanced-herm" ||
      cfg.relation == "unbalanced-gen")
    in.pairs = random_pairset(cfg.m, rng);
  return in;
}

// Minimal slack across whichever family of reports the relation produces.
double trial_min_slack(const SweepConfig& cfg, const TrialInputs& in, bool& ok) {
  double min_slack = std::numeric_limits<double>::infinity();
  ok = true;
  auto fold = [&](const InequalityReport& r) {
    min_slack = std::min(min_slack, r.slack / r.scale);
    ok = ok && r.satisfied;
  };
  if (cfg.relation == "balanced-cs") {
    fold(balanced_cs(in.vectors, cfg.tol));
  } else if (cfg.relation == "unbalanced-cs") {
    fold(unbalanced_cs(in.vectors, *in.pairs, cfg.tol));
  } else if (cfg.relation == "balanced-herm") {
    fold(balanced_relation(*in.state, in.ops, Mode::Hermitian, cfg.tol));
  } else if (cfg.relation == "unbalanced-herm") {
    fold(unbalanced_relation(*in.state, in.ops, *in.pairs, Mode::Hermitian, cfg.tol));
  } else if (cfg.relation == "balanced-gen") {
    fold(balanced_relation(*in.state, in.ops, Mode::General, cfg.tol));
  } else if (cfg.relation == "unbalanced-gen") {
    fold(unbalanced_relation(*in.state, in.ops, *in.pairs, Mode::General, cfg.tol));
  } else if (cfg.relation == "multivariance") {
    for (const auto& r : all_partitioned_relations(*in.state, OperatorSequence(in.ops), cfg.tol)) {
      min_slack = std::min(min_slack, r.slack / r.scale);
      ok = ok && r.satisfied;
    }
  } else if (cfg.relation == "symmetric") {
    fold(symmetric_relation(*in.state, OperatorSequence(in.ops), cfg.tol));
  }
  return min_slack;
}

json witness_json(const TrialInputs& in) {
  json w;
  if (!in.vectors.empty()) {
    w["vectors"] = json::array();
    for (const auto& v : in.vectors) w["vectors"].push_back(ket_to_json(v));
  }
  if (!in.ops.empty()) {
    w["ops"] = json::array();
    for (const auto& op : in.ops) w["ops"].push_back(matrix_to_json(op));
  }
  if (in.state) w["state"] = state_to_json(*in.state);
  if (in.pairs) {
    w["pairs"] = json::array();
    for (const auto& [j, k] : in.pairs->pairs()) w["pairs"].push_back(json::array({j, k}));
  }
  return w;
}

int cmd_verify(const SweepConfig& cfg) {
  static const std::vector<std::string> kRelations = {
      "balanced-cs",   "unbalanced-cs", "balanced-herm", "unbalanced-herm",
      "balanced-gen",  "unbalanced-gen", "multivariance", "symmetric"};
  if (std::find(kRelations.begin(), kRelations.end(), cfg.relation) == kRelations.end())
    throw ParameterError("unknown relation: " + cfg.relation);
  if (cfg.trials < 1) throw ParameterError("trials must be >= 1");
  if (cfg.tol <= 0.0) throw ParameterError("tol must be > 0");
  if (cfg.m < 2) throw ParameterError("M must be >= 2");
  if (cfg.dim < 1) throw ParameterError("dim must be >= 1");
  if (cfg.relation == "symmetric" && cfg.m > kDefaultPermutationLimit)
    throw ParameterError("symmetric relation limited to M <= " +
                         std::to_string(kDefaultPermutationLimit));

  int violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  int worst_trial = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    bool ok = true;
    const double slack = trial_min_slack(cfg, draw_trial(cfg, t), ok);
    if (!ok) ++violations;
    if (slack < min_slack) {
      min_slack = slack;
      worst_trial = t;
    }
  }

  json report;
  report["relation"] = cfg.relation;
  report["M"] = cfg.m;
  report["dim"] = cfg.dim;
  report["trials"] = cfg.trials;
  report["seed"] = cfg.seed;
  report["tol"] = cfg.tol;
  report["violations"] = violations;
  report["min_relative_slack"] = min_slack;
  report["worst_trial"] = worst_trial;
  report["worst_witness"] = witness_json(draw_trial(cfg, worst_trial));

  const std::string text = report.dump(2) + "\n";
  if (cfg.out.empty())
    std::cout << text;
  else
    write_text_file(cfg.out, text);
  return violations == 0 ? 0 : kExitViolation;
}

// ---------------------------------------------------------------------------
// figure

struct GridSpec {
  int n1 = 48;
  int n2 = 48;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char sep = 0;
  std::istringstream in(text);
  if (!(in >> g.n1 >> sep >> g.n2) || sep != 'x' || g.n1 < 1 || g.n2 < 1 || !in.eof())
    throw ParameterError("grid must look like 48x48");
  return g;
}

double lerp_index(double lo, double hi, int i, int n) {
  return n <= 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

int cmd_figure(int figure_id, const GridSpec& grid, std::optional<std::uint64_t> seed_opt,
               std::string out, double tol) {
  if (figure_id < 1 || figure_id > 5) throw ParameterError("figure id must be 1..5");
  const std::uint64_t seed =
      seed_opt ? *seed_opt : kFigureSeeds[static_cast<std::size_t>(figure_id - 1)];
  if (out.empty()) out = "figure" + std::to_string(figure_id) + ".csv";

  const bool one_qubit = figure_id == 1 || figure_id == 3 || figure_id == 5;
  const std::size_t dim = one_qubit ? 2 : 4;
  const int m = (figure_id == 2 || figure_id == 4) ? 3 : 4;
  const bool hermitian_ops = figure_id != 3 && figure_id != 4;
  const Mode mode = hermitian_ops ? Mode::Hermitian : Mode::General;
  const bool tightest = figure_id <= 4;

  std::vector<ComplexMatrix> ops;
  for (int j = 0; j < m; ++j) {
    Rng rng(seed, static_cast<std::uint64_t>(j) + 1);
    ComplexMatrix op = hermitian_ops ? random_hermitian(dim, rng) : random_operator(dim, rng);
    // Figure 4's operators are pinned at a scale where every deviation stays
    // below 1 over the family, so the full product bound dominates the
    // chosen-pair bound at every grid point.
    if (figure_id == 4) op *= 0.5;
    ops.push_back(op);
  }
  const PairSet pairs({{1, 2}, {1, 3}});  // Figs. 2 and 4

  const double lo1 = 0.0;
  const double hi1 = one_qubit ? std::numbers::pi : std::numbers::pi / 4.0;
  const double lo2 = 0.0;
  const double hi2 = one_qubit ? 2.0 * std::numbers::pi : 1.0;

  std::ostringstream csv;
  csv << "param1,param2,lhs,rhs" << (tightest ? ",tightest" : "") << "\n";
  bool all_ok = true;
  for (int i = 0; i < grid.n1; ++i) {
    const double p1 = lerp_index(lo1, hi1, i, grid.n1);
    for (int k = 0; k < grid.n2; ++k) {
      const double p2 = lerp_index(lo2, hi2, k, grid.n2);
      const QuantumState state = one_qubit ? one_qubit_family(p1, p2) : two_qubit_family(p1, p2);
      double lhs = 0.0, rhs = 0.0;
      bool ok = true;
      if (figure_id == 5) {
        const auto rel = partitioned_relation(state, OperatorSequence(ops), 2, tol);
        lhs = rel.lhs_left * rel.lhs_right;
        rhs = rel.rhs;
        ok = rel.satisfied;
      } else if (figure_id == 1 || figure_id == 3) {
        const auto rel = balanced_relation(state, ops, mode, tol);
        lhs = rel.lhs;
        rhs = rel.rhs;
        ok = rel.satisfied;
      } else {
        const auto rel = unbalanced_relation(state, ops, pairs, mode, tol);
        lhs = rel.lhs;
        rhs = rel.rhs;
        ok = rel.satisfied;
      }
      all_ok = all_ok && ok;
      csv << format_double(p1) << "," << format_double(p2) << "," << format_double(lhs) << ","
          << format_double(rhs);
      if (tightest) csv << "," << format_double(tightest_product(state, ops, mode));
      csv << "\n";
    }
  }
  write_text_file(out, csv.str());

  json meta;
  meta["figure"] = figure_id;
  meta["seed"] = seed;
  meta["grid"] = json::array({grid.n1, grid.n2});
  meta["relation"] = figure_id == 5   ? "partitioned"
                     : figure_id == 1 ? "balanced-herm"
                     : figure_id == 2 ? "unbalanced-herm"
                     : figure_id == 3 ? "balanced-gen"
                                      : "unbalanced-gen";
  meta["axes"] = json::array({json{{"name", one_qubit ? "theta" : "vartheta"},
                                   {"lo", lo1},
                                   {"hi", hi1},
                                   {"count", grid.n1}},
                              json{{"name", one_qubit ? "phi" : "eta"},
                                   {"lo", lo2},
                                   {"hi", hi2},
                                   {"count", grid.n2}}});
  meta["ops"] = json::array();
  for (const auto& op : ops) meta["ops"].push_back(matrix_to_json(op));
  if (figure_id == 2 || figure_id == 4)
    meta["pairs"] = json::array({json::array({1, 2}), json::array({1, 3})});
  write_text_file(out + ".meta.json", meta.dump(2) + "\n");

  return all_ok ? 0 : kExitViolation;
}

// ---------------------------------------------------------------------------
// squeeze

int cmd_squeeze(const std::string& ops_path, const std::string& state_path,
                const std::string& family, const std::vector<double>& params,
                const std::string& mode_name, const std::string& out) {
  const json ops_json = read_json_file(ops_path);
  std::vector<ComplexMatrix> ops;
  if (ops_json.is_array()) {
    for (const auto& item : ops_json) ops.push_back(json_to_matrix(item, "operator"));
  } else {
    ops.push_back(json_to_matrix(ops_json, "operator"));
  }

  QuantumState state = [&] {
    if (!state_path.empty()) return json_to_state(read_json_file(state_path));
    if (family == "one-qubit") {
      if (params.size() != 2) throw ParameterError("one-qubit family needs --params theta phi");
      return one_qubit_family(params[0], params[1]);
    }
    if (family == "two-qubit") {
      if (params.size() != 2) throw ParameterError("two-qubit family needs --params vartheta eta");
      return two_qubit_family(params[0], params[1]);
    }
    throw ParameterError("provide --state or --family {one-qubit, two-qubit}");
  }();

  const Mode mode = mode_name == "hermitian" ? Mode::Hermitian : Mode::General;
  const json result = classification_to_json(classify(state, ops, mode));
  const std::string text = result.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// oscillator

int cmd_oscillator(int fock_dim, double hbar, const std::string& state_name, double alpha_re,
                   double alpha_im, int n, const std::string& out) {
  OscillatorSpec spec;
  if (state_name == "vacuum") {
    spec = OscillatorSpec::vacuum();
  } else if (state_name == "coherent") {
    spec = OscillatorSpec::coherent(cdouble(alpha_re, alpha_im));
  } else if (state_name == "number") {
    spec = OscillatorSpec::number(n);
  } else {
    throw ParameterError("state must be vacuum, coherent, or number");
  }
  const OscillatorResult result = oscillator_demo(fock_dim, hbar, spec);
  const std::string text = oscillator_to_json(result).dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
  return result.report.satisfied ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-operator uncertainty relation toolkit"};
  app.require_subcommand(1);

  SweepConfig sweep;
  CLI::App* verify = app.add_subcommand("verify", "Randomized verification sweep");
  verify->add_option("--relation", sweep.relation, "Relation to check");
  verify->add_option("--M", sweep.m, "Operator/vector count");
  verify->add_option("--dim", sweep.dim, "Hilbert-space dimension");
  verify->add_option("--trials", sweep.trials, "Number of seeded draws");
  verify->add_option("--seed", sweep.seed, "Base RNG seed");
  verify->add_option("--tol", sweep.tol, "Relative slack tolerance");
  verify->add_option("--out", sweep.out, "Write the JSON report here instead of stdout");

  int figure_id = 1;
  std::string grid_text = "48x48";
  std::optional<std::uint64_t> figure_seed;
  std::string figure_out;
  double figure_tol = kSlackTol;
  CLI::App* figure = app.add_subcommand("figure", "Emit an lhs/rhs grid as CSV + metadata");
  figure->add_option("id", figure_id, "Figure id (1..5)")->required();
  figure->add_option("--grid", grid_text, "Grid size, e.g. 48x48");
  figure->add_option("--seed", figure_seed, "Override the canonical figure seed");
  figure->add_option("--out", figure_out, "CSV output path");
  figure->add_option("--tol", figure_tol, "Relative slack tolerance");

  std::string sq_ops, sq_state, sq_family, sq_mode = "general", sq_out;
  std::vector<double> sq_params;
  CLI::App* squeeze = app.add_subcommand("squeeze", "Classify q/M squeezing");
  squeeze->add_option("--ops", sq_ops, "Operator fixture (JSON object or array)")->required();
  squeeze->add_option("--state", sq_state, "State fixture (JSON)");
  squeeze->add_option("--family", sq_family, "State family: one-qubit or two-qubit");
  squeeze->add_option("--params", sq_params, "Family parameters (two reals)");
  squeeze->add_option("--mode", sq_mode, "hermitian or general")
      ->check(CLI::IsMember({"hermitian", "general"}));
  squeeze->add_option("--out", sq_out, "Write JSON here instead of stdout");

  int osc_dim = 40;
  double osc_hbar = 1.0;
  std::string osc_state = "vacuum", osc_out;
  double osc_alpha_re = 0.0, osc_alpha_im = 0.0;
  int osc_n = 0;
  CLI::App* oscillator = app.add_subcommand("oscillator", "Three-operator oscillator check");
  oscillator->add_option("--dim", osc_dim, "Fock-space truncation dimension");
  oscillator->add_option("--hbar", osc_hbar, "Value of hbar");
  oscillator->add_option("--state", osc_state, "vacuum, coherent, or number");
  oscillator->add_option("--alpha-re", osc_alpha_re, "Coherent amplitude, real part");
  oscillator->add_option("--alpha-im", osc_alpha_im, "Coherent amplitude, imaginary part");
  oscillator->add_option("--n", osc_n, "Number-state index");
  oscillator->add_option("--out", osc_out, "Write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(sweep);
    if (figure->parsed())
      return cmd_figure(figure_id, parse_grid(grid_text), figure_seed, figure_out, figure_tol);
    if (squeeze->parsed()) return cmd_squeeze(sq_ops, sq_state, sq_family, sq_params, sq_mode, sq_out);
    if (oscillator->parsed())
      return cmd_oscillator(osc_dim, osc_hbar, osc_state, osc_alpha_re, osc_alpha_im, osc_n, osc_out);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const TruncationError& e) {
    std::cerr << "numeric precondition: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const PositivityError& e) {
    std::cerr << "numeric precondition: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}
