// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "uncrel/cs_ineq.hpp"
#include "uncrel/io.hpp"
#include "uncrel/multivariance.hpp"
#include "uncrel/squeezing.hpp"
#include "uncrel/statefam.hpp"
#include "uncrel/uncertainty.hpp"

using namespace uncrel;

namespace {

std::string g_cli;
int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

bool rel_ok(double lhs, double rhs, double tol) {
  return lhs - rhs >= -tol * std::max({1.0, lhs, rhs});
}

std::vector<ComplexVector> draw_vectors(int m, std::size_t dim, std::uint64_t seed, bool real) {
  Rng rng(seed);
  std::vector<ComplexVector> out;
  for (int j = 0; j < m; ++j) out.push_back(random_vector(dim, rng, real));
  return out;
}

std::vector<ComplexMatrix> draw_hermitians(int m, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ComplexMatrix> out;
  for (int j = 0; j < m; ++j) out.push_back(random_hermitian(dim, rng));
  return out;
}

std::vector<ComplexMatrix> draw_generals(int m, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ComplexMatrix> out;
  for (int j = 0; j < m; ++j) out.push_back(random_operator(dim, rng));
  return out;
}

QuantumState draw_state(std::size_t dim, std::uint64_t seed, bool pure, double trace) {
  Rng rng(seed);
  if (pure) {
    ComplexVector v = random_vector(dim, rng);
    v *= std::sqrt(trace) / v.norm();
    return QuantumState::pure(std::move(v));
  }
  const auto rank = static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(dim)));
  ComplexMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho *= trace / rho.trace().real();
  return QuantumState::density(rho);
}

// The subset of pairs minimizing the unbalanced inequality's slack ratio:
// all pairs with negative per-pair log-slack, or the single least-slack pair.
PairSet worst_pair_subset(const std::vector<double>& log_slack) {
  std::vector<std::pair<int, int>> chosen;
  const PairSet full = PairSet::full(
      static_cast<int>((1 + std::lround(std::sqrt(1.0 + 8.0 * log_slack.size()))) / 2));
  int arg_min = 0;
  for (std::size_t q = 0; q < log_slack.size(); ++q) {
    if (log_slack[q] < 0.0) chosen.push_back(full.pairs()[q]);
    if (log_slack[q] < log_slack[static_cast<std::size_t>(arg_min)])
      arg_min = static_cast<int>(q);
  }
  if (chosen.empty()) chosen.push_back(full.pairs()[static_cast<std::size_t>(arg_min)]);
  return PairSet(chosen);
}

int run_cli(const std::string& args) {
  const int status = std::system((g_cli + " " + args).c_str());
  return status < 0 ? status : WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// ---------------------------------------------------------------------------

bool c1_vector_cs(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t seed = 10000;
  int checked = 0;
  for (int m = 2; m <= 6; ++m) {
    const PairSet full = PairSet::full(m);
    for (std::size_t dim : {2, 3, 8, 16}) {
      for (int real = 0; real < 2; ++real) {
        for (int rep = 0; rep < 250; ++rep) {
          const auto vecs = draw_vectors(m, dim, seed++, real == 1);
          if (!balanced_cs(vecs, 1e-9).satisfied) {
            detail = "balanced violation";
            return false;
          }
          // Per-pair log slack identifies the worst pair subset exactly.
          std::vector<double> log_slack;
          for (const auto& [j, k] : full.pairs()) {
            const auto& u = vecs[static_cast<std::size_t>(j - 1)];
            const auto& v = vecs[static_cast<std::size_t>(k - 1)];
            log_slack.push_back(std::log(u.norm() * v.norm()) -
                                std::log(std::abs(hermitian_inner(u, v))));
          }
          if (!unbalanced_cs(vecs, worst_pair_subset(log_slack), 1e-9).satisfied) {
            detail = "unbalanced violation";
            return false;
          }
          // Exhaustive cross-check of every subset at M=3.
          if (m == 3 && rep < 5) {
            for (int k = 1; k <= 3; ++k)
              for (const PairSet& subset : enumerate_pairsets(3, k))
                if (!unbalanced_cs(vecs, subset, 1e-9).satisfied) {
                  detail = "subset violation";
                  return false;
                }
          }
          ++checked;
        }
      }
    }
  }
  // Parallel vectors reach equality.
  for (int m = 2; m <= 6; ++m) {
    Rng rng(777);
    const ComplexVector base = random_vector(6, rng);
    std::vector<ComplexVector> parallel;
    for (int j = 0; j < m; ++j) parallel.push_back(rng.complex_normal() * base);
    const auto rep = balanced_cs(parallel);
    if (std::abs(rep.slack) > 1e-12 * rep.scale) {
      detail = "parallel vectors not at equality";
      return false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = std::to_string(checked) + " instances in " + std::to_string(secs) + " s";
  return checked == 10000 && secs < 30.0;
}

bool c2_exponent_identity(std::string& detail) {
  std::uint64_t seed = 20000;
  for (int m = 2; m <= 6; ++m) {
    const PairSet full = PairSet::full(m);
    for (int rep = 0; rep < 1000; ++rep) {
      const auto vecs = draw_vectors(m, 4, seed++, false);
      double product = 1.0;
      for (const auto& [j, k] : full.pairs())
        product *= vecs[static_cast<std::size_t>(j - 1)].norm() *
                   vecs[static_cast<std::size_t>(k - 1)].norm();
      double norms = 1.0;
      for (const auto& v : vecs) norms *= v.norm();
      const double target = std::pow(norms, m - 1);
      if (std::abs(product - target) > 1e-12 * std::max(1.0, target)) {
        detail = "mismatch at M=" + std::to_string(m);
        return false;
      }
    }
  }
  return true;
}

bool c3_hermitian_suite(std::string& detail) {
  std::uint64_t seed = 30000;
  int checked = 0;
  const cdouble two_i(0.0, 2.0);
  for (int m = 2; m <= 5; ++m) {
    for (std::size_t dim = 2; dim <= 8; ++dim) {
      for (int rep = 0; rep < 358 && checked < 10000; ++rep) {
        const auto ops = draw_hermitians(m, dim, seed);
        const QuantumState state = draw_state(dim, seed ^ 0x1234, rep % 2 == 0, 1.0);
        ++seed;
        const auto bal = balanced_relation(state, ops, Mode::Hermitian, 1e-9);
        const auto unbal =
            unbalanced_relation(state, ops, PairSet::full(m), Mode::Hermitian, 1e-9);
        if (!bal.satisfied || !unbal.satisfied) {
          detail = "relation violation";
          return false;
        }
        if (m == 2) {
          // Schrodinger bound dominates the Robertson bound on every draw.
          const double schrodinger = bal.rhs;
          const double robertson =
              std::abs(expectation(state, ops[0] * ops[1] - ops[1] * ops[0]) / two_i);
          if (schrodinger < robertson - 1e-11 * std::max(1.0, robertson)) {
            detail = "Robertson bound exceeded Schrodinger bound";
            return false;
          }
          if (std::abs(schrodinger - std::abs(covariance(state, ops[0], ops[1]))) >
              1e-12 * std::max(1.0, schrodinger)) {
            detail = "M=2 rhs is not the covariance modulus";
            return false;
          }
        }
        ++checked;
      }
    }
  }
  detail = std::to_string(checked) + " draws";
  return checked == 10000;
}

bool c4_general_suite(std::string& detail) {
  std::uint64_t seed = 40000;
  for (int m = 2; m <= 4; ++m) {
    for (std::size_t dim = 2; dim <= 6; ++dim) {
      for (int rep = 0; rep < 70; ++rep) {
        Rng trng(seed);
        const double trace = trng.uniform(0.2, 3.0);
        const auto ops = draw_generals(m, dim, seed);
        const QuantumState state = draw_state(dim, seed ^ 0x9999, rep % 2 == 0, trace);
        ++seed;
        if (!balanced_relation(state, ops, Mode::General, 1e-9).satisfied ||
            !unbalanced_relation(state, ops, PairSet::full(m), Mode::General, 1e-9).satisfied) {
          detail = "general relation violation";
          return false;
        }
        // Three equivalent covariance-modulus expressions.
        const cdouble ab = gen_covariance(state, ops[0], ops[1]).gen_covariance;
        const cdouble ba = gen_covariance(state, ops[1], ops[0]).gen_covariance;
        const auto dec = covariance_decomposition(state, ops[0], ops[1], true);
        const double m1 = std::abs(ab);
        const double m2 = std::sqrt(std::abs(ab * ba));
        const double m3 = std::sqrt(dec.symmetric_part * dec.symmetric_part +
                                    dec.antisymmetric_part * dec.antisymmetric_part);
        const double scale = std::max(1.0, m1);
        if (std::abs(m1 - m2) > 1e-11 * scale || std::abs(m1 - m3) > 1e-11 * scale) {
          detail = "modulus expressions disagree";
          return false;
        }
      }
    }
  }
  // Hermitian/normalized specialization matches the Hermitian machinery.
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto ops = draw_hermitians(3, 4, 41000 + s);
    const QuantumState state = draw_state(4, 42000 + s, s % 2 == 0, 1.0);
    const auto h = balanced_relation(state, ops, Mode::Hermitian);
    const auto g = balanced_relation(state, ops, Mode::General);
    if (std::abs(h.lhs - g.lhs) > 1e-12 * std::max(1.0, h.lhs) ||
        std::abs(h.rhs - g.rhs) > 1e-12 * std::max(1.0, h.rhs)) {
      detail = "specialization mismatch";
      return false;
    }
  }
  return true;
}

bool c5_multivariance_suite(std::string& detail) {
  // Five-term expansion oracle.
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto ops = draw_hermitians(3, 3, 50000 + s);
    const QuantumState state = draw_state(3, 51000 + s, s % 2 == 0, 1.0);
    const cdouble e1 = expectation(state, ops[0]);
    const cdouble e2 = expectation(state, ops[1]);
    const cdouble e3 = expectation(state, ops[2]);
    const cdouble oracle = expectation(state, ops[0] * ops[1] * ops[2]) -
                           e1 * expectation(state, ops[1] * ops[2]) -
                           e2 * expectation(state, ops[0] * ops[2]) -
                           e3 * expectation(state, ops[0] * ops[1]) + 2.0 * e1 * e2 * e3;
    const cdouble value = multivariance(state, OperatorSequence(ops));
    if (std::abs(value - oracle) > 1e-12 * std::max(1.0, std::abs(oracle))) {
      detail = "expansion mismatch";
      return false;
    }
  }
  // Every partition for M in 2..5, pure and mixed.
  for (int m = 2; m <= 5; ++m) {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const OperatorSequence seq(draw_hermitians(m, 3, 52000 + 100 * static_cast<std::uint64_t>(m) + s));
      for (bool pure : {true, false}) {
        const QuantumState state = draw_state(3, 53000 + s + (pure ? 0 : 1), pure, 1.0);
        for (const auto& rep : all_partitioned_relations(state, seq)) {
          if (!rep.satisfied) {
            detail = "partition violated at M=" + std::to_string(m);
            return false;
          }
        }
      }
    }
  }
  // Seeded M=4 fixture: the five partition lines, with the p=2 line checked
  // against a deviation-product-state oracle.
  const OperatorSequence four(draw_hermitians(4, 4, 54000));
  const QuantumState psi = draw_state(4, 54001, true, 1.0);
  const auto lines = all_partitioned_relations(psi, four);
  if (lines.size() != 5) {
    detail = "expected 5 partition lines";
    return false;
  }
  const double left = deviation_product_state(psi, four, {2, 1}).norm();
  const double right = deviation_product_state(psi, four, {3, 4}).norm();
  if (std::abs(lines[2].lhs_left - left) > 1e-12 * std::max(1.0, left) ||
      std::abs(lines[2].lhs_right - right) > 1e-12 * std::max(1.0, right)) {
    detail = "p=2 line mismatch";
    return false;
  }
  // Four overlap moduli of the same multivariance.
  for (std::uint64_t s = 0; s < 100; ++s) {
    const OperatorSequence seq(draw_hermitians(3, 4, 55000 + s));
    const QuantumState state = draw_state(4, 56000 + s, true, 1.0);
    const double target = std::abs(multivariance(state, seq));
    const double scale = std::max(1.0, target);
    const double v1 = std::abs(
        hermitian_inner(state.ket(), deviation_product_state(state, seq, {1, 2, 3})));
    const double v2 = std::abs(hermitian_inner(deviation_product_state(state, seq, {1}),
                                               deviation_product_state(state, seq, {2, 3})));
    const double v3 = std::abs(hermitian_inner(deviation_product_state(state, seq, {2, 1}),
                                               deviation_product_state(state, seq, {3})));
    const double v4 =
        std::abs(hermitian_inner(deviation_product_state(state, seq, {3, 2, 1}), state.ket()));
    if (std::abs(v1 - target) > 1e-12 * scale || std::abs(v2 - target) > 1e-12 * scale ||
        std::abs(v3 - target) > 1e-12 * scale || std::abs(v4 - target) > 1e-12 * scale) {
      detail = "overlap moduli disagree";
      return false;
    }
  }
  return true;
}

bool c6_symmetric_suite(std::string& detail) {
  // Permutation invariance and the M=2 / M=3 closed forms.
  for (std::uint64_t s = 0; s < 100; ++s) {
    const QuantumState state = draw_state(3, 60000 + s, s % 2 == 0, 1.0);
    const OperatorSequence seq(draw_hermitians(3, 3, 61000 + s));
    const cdouble base = symmetric_multivariance(state, seq);
    const double scale = std::max(1.0, std::abs(base));
    if (std::abs(symmetric_multivariance(state, seq.permuted({2, 0, 1})) - base) > 1e-12 * scale ||
        std::abs(symmetric_multivariance(state, seq.reversed()) - base) > 1e-12 * scale) {
      detail = "permutation variance";
      return false;
    }
    const ComplexMatrix &a = seq.op(0), &b = seq.op(1), &c = seq.op(2);
    const cdouble ea = expectation(state, a), eb = expectation(state, b),
                  ec = expectation(state, c);
    const OperatorSequence two({a, b});
    const cdouble closed2 =
        expectation(state, a * b + b * a) / 2.0 - ea * eb;
    if (std::abs(symmetric_multivariance(state, two) - closed2) >
        1e-12 * std::max(1.0, std::abs(closed2))) {
      detail = "M=2 closed form";
      return false;
    }
    auto anti = [](const ComplexMatrix& x, const ComplexMatrix& y) { return x * y + y * x; };
    const cdouble closed3 =
        expectation(state, a * anti(b, c) + b * anti(c, a) + c * anti(a, b)) / 6.0 -
        (ea * expectation(state, anti(b, c)) + eb * expectation(state, anti(c, a)) +
         ec * expectation(state, anti(a, b))) /
            2.0 +
        2.0 * ea * eb * ec;
    if (std::abs(symmetric_multivariance(state, seq) - closed3) >
        1e-12 * std::max(1.0, std::abs(closed3))) {
      detail = "M=3 closed form";
      return false;
    }
  }
  // Symmetric relation over 10^3 trials for M in 2..4.
  std::uint64_t seed = 62000;
  for (int m = 2; m <= 4; ++m) {
    for (int rep = 0; rep < 334; ++rep) {
      const OperatorSequence seq(draw_hermitians(m, 3, seed));
      const QuantumState state = draw_state(3, seed ^ 0x77, rep % 2 == 0, 1.0);
      ++seed;
      if (!symmetric_relation(state, seq, 1e-9).satisfied) {
        detail = "symmetric relation violated";
        return false;
      }
    }
  }
  return true;
}

bool c7_oscillator(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const auto vac = oscillator_demo(40, 1.0, OscillatorSpec::vacuum());
  const double bound = std::pow(std::sqrt(4.0 / 3.0) / 2.0, 1.5);
  if (std::abs(vac.report.lhs - 0.5) > 1e-9 || std::abs(vac.report.rhs - bound) > 1e-9 ||
      std::abs(vac.report.rhs - 0.4386913376508308) > 1e-9 || !vac.report.satisfied) {
    detail = "vacuum anchor failed";
    return false;
  }
  Rng rng(70000);
  for (int rep = 0; rep < 20; ++rep) {
    const double mag = rng.uniform(0.0, 3.0);
    const double arg = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const auto coh = oscillator_demo(60, 1.0, OscillatorSpec::coherent(std::polar(mag, arg)));
    if (std::abs(coh.report.lhs - vac.report.lhs) > 1e-6 || !coh.report.satisfied) {
      detail = "coherent displacement changed the product";
      return false;
    }
  }
  for (int n = 0; n <= 10; ++n) {
    if (!oscillator_demo(60, 1.0, OscillatorSpec::number(n)).report.satisfied) {
      detail = "number state violated the bound";
      return false;
    }
  }
  if (vac.report.slack <= 0.06) {
    detail = "vacuum slack too small";
    return false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail = std::to_string(secs) + " s";
  return secs < 5.0;
}

bool c8_squeezing(std::string& detail) {
  std::uint64_t seed = 80000;
  int checked = 0;
  for (int m = 2; m <= 4; ++m) {
    for (std::size_t dim = 2; dim <= 4; ++dim) {
      for (int rep = 0; rep < 1112 && checked < 10000; ++rep) {
        const auto ops = draw_hermitians(m, dim, seed);
        const QuantumState state = draw_state(dim, seed ^ 0x51, rep % 2 == 0, 1.0);
        ++seed;
        const auto c = classify(state, ops, Mode::Hermitian);
        if (c.beta > 0.0 && c.relations_ok && c.q == c.M) {
          detail = "classifier returned q = M";
          return false;
        }
        if (m == 3) {
          const std::array<double, 3> vars{c.gen_variances[0], c.gen_variances[1],
                                           c.gen_variances[2]};
          const Fig6Region region = fig6_region(vars, c.beta);
          const int region_q = region == Fig6Region::Impossible  ? 3
                               : region == Fig6Region::TwoThirds ? 2
                               : region == Fig6Region::OneThird  ? 1
                                                                 : 0;
          // Agreement away from the (measure-zero) threshold boundary.
          bool borderline = false;
          for (double v : vars)
            borderline = borderline ||
                         std::abs(v - c.threshold) <= 1e-8 * std::max(1.0, c.threshold);
          if (!borderline && region_q != c.q) {
            detail = "classifier and region geometry disagree";
            return false;
          }
        }
        ++checked;
      }
    }
  }
  // Table self-consistency.
  if (table1_row(Table1RowLabel::ThreeThirdsImpossible, 2, 2, 2, 1.0, {0, 0, 0}).feasible) {
    detail = "impossible row reported feasible";
    return false;
  }
  for (auto label : {Table1RowLabel::TwoThirds_AB, Table1RowLabel::TwoThirds_AC,
                     Table1RowLabel::TwoThirds_BC, Table1RowLabel::OneThird_A,
                     Table1RowLabel::OneThird_B, Table1RowLabel::OneThird_C,
                     Table1RowLabel::NoSqueezing}) {
    const auto probe = table1_row(label, 1.4, 1.6, 1.8, 1.0, {0, 0, 0});
    if (!table1_row(label, 1.4, 1.6, 1.8, 1.0, probe.pair_products).feasible) {
      detail = "self-consistency failed";
      return false;
    }
  }
  detail = std::to_string(checked) + " draws";
  return checked == 10000;
}

bool c9_figure_replay(std::string& detail) {
  for (int k = 1; k <= 5; ++k) {
    const std::string a = "acc_fig" + std::to_string(k) + "a.csv";
    const std::string b = "acc_fig" + std::to_string(k) + "b.csv";
    if (run_cli("figure " + std::to_string(k) + " --grid 48x48 --out " + a) != 0 ||
        run_cli("figure " + std::to_string(k) + " --grid 48x48 --out " + b) != 0) {
      detail = "figure " + std::to_string(k) + " exited nonzero";
      return false;
    }
    const std::string csv = slurp(a);
    if (csv.empty() || csv != slurp(b) || slurp(a + ".meta.json") != slurp(b + ".meta.json")) {
      detail = "figure " + std::to_string(k) + " not byte-identical";
      return false;
    }
    // Row count and, for figures 1-4, tightest >= rhs at every point.
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0;
    while (std::getline(lines, line)) {
      ++rows;
      if (k == 5) continue;
      std::istringstream cells(line);
      std::string cell;
      std::vector<double> v;
      while (std::getline(cells, cell, ',')) v.push_back(std::strtod(cell.c_str(), nullptr));
      if (v.size() != 5) {
        detail = "bad column count";
        return false;
      }
      if (!rel_ok(v[4], v[3], 1e-9)) {
        detail = "tightest product below rhs";
        return false;
      }
    }
    if (rows != 48 * 48) {
      detail = "figure " + std::to_string(k) + " row count " + std::to_string(rows);
      return false;
    }
  }
  return true;
}

bool c10_state_families(std::string& detail) {
  const double l1 = std::pow(std::cos(std::numbers::pi / 8.0), 2);
  const double l2 = std::pow(std::sin(std::numbers::pi / 8.0), 2);
  for (int i = 0; i < 64; ++i) {
    for (int j = 0; j < 64; ++j) {
      const double theta = std::numbers::pi * i / 63.0;
      const double phi = 2.0 * std::numbers::pi * j / 63.0;
      const auto evs = hermitian_eigenvalues(one_qubit_family(theta, phi).rho());
      if (std::abs(evs[0] - l2) > 1e-12 || std::abs(evs[1] - l1) > 1e-12) {
        detail = "one-qubit spectrum drifted";
        return false;
      }
    }
  }
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      const double vt = std::numbers::pi / 4.0 * i / 31.0;
      const double eta = static_cast<double>(j) / 31.0;
      const double expected = eta * std::pow(std::cos(vt), 2);
      if (std::abs(concurrence(two_qubit_family(vt, eta)) - expected) > 1e-8) {
        detail = "two-qubit concurrence mismatch";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
    return 1;
  }
  g_cli = argv[1];

  criterion(1, "multi-vector inequalities over 10^4 seeded draws", c1_vector_cs);
  criterion(2, "full pair-set exponent identity", c2_exponent_identity);
  criterion(3, "Hermitian relation suite with Robertson dominance", c3_hermitian_suite);
  criterion(4, "general-operator suite on unnormalized states", c4_general_suite);
  criterion(5, "ordered deviation-product relations and overlaps", c5_multivariance_suite);
  criterion(6, "symmetric average relations and closed forms", c6_symmetric_suite);
  criterion(7, "truncated-oscillator three-operator anchor", c7_oscillator);
  criterion(8, "squeezing classifier and region geometry", c8_squeezing);
  criterion(9, "figure replay determinism and dominance", c9_figure_replay);
  criterion(10, "state-family spectrum and concurrence", c10_state_families);

  if (g_failures == 0) {
    std::printf("all 10 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
