#include "uncrel/squeezing.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "uncrel/cs_ineq.hpp"
#include "uncrel/statefam.hpp"

namespace uncrel {

double squeezing_beta(const QuantumState& state, const std::vector<ComplexMatrix>& ops, Mode mode) {
  const std::size_t m = ops.size();
  if (m < 2) throw ArityError("need M >= 2 operators");
  std::vector<double> moduli;
  moduli.reserve(m * (m - 1) / 2);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k)
      moduli.push_back(mode_cov_modulus(state, ops[j], ops[k], mode));
  // (prod moduli)^{2/(M-1)}
  return root_of_product(moduli, static_cast<double>(m - 1) / 2.0);
}

SqueezingClassification classify(const QuantumState& state, const std::vector<ComplexMatrix>& ops,
                                 Mode mode, double tol) {
  const int m = static_cast<int>(ops.size());
  if (m < 2) throw ArityError("need M >= 2 operators");

  SqueezingClassification out;
  out.M = m;
  std::vector<double> stds(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    stds[static_cast<std::size_t>(j)] = mode_std(state, ops[static_cast<std::size_t>(j)], mode);
    out.gen_variances.push_back(stds[static_cast<std::size_t>(j)] * stds[static_cast<std::size_t>(j)]);
  }
  std::vector<std::vector<double>> moduli(static_cast<std::size_t>(m),
                                          std::vector<double>(static_cast<std::size_t>(m), 0.0));
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      moduli[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = mode_cov_modulus(
          state, ops[static_cast<std::size_t>(j)], ops[static_cast<std::size_t>(k)], mode);

  std::vector<double> all_moduli;
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      all_moduli.push_back(moduli[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
  out.beta = root_of_product(all_moduli, static_cast<double>(m - 1) / 2.0);
  out.threshold = out.beta == 0.0 ? 0.0 : std::pow(out.beta, 1.0 / m);

  // Strict inequality with tolerance; ties (saturating states) count as not
  // squeezed.
  const double guard = tol * std::max(1.0, out.threshold);
  for (int j = 0; j < m; ++j) {
    if (out.gen_variances[static_cast<std::size_t>(j)] < out.threshold - guard)
      out.squeezed_indices.push_back(j + 1);
  }
  out.q = static_cast<int>(out.squeezed_indices.size());
  out.label = std::to_string(out.q) + "/" + std::to_string(m);

  // Every balanced relation over every subset of size 2..M must hold.
  out.relations_ok = true;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    double lhs = 1.0;
    std::vector<double> sub_moduli;
    for (int j = 0; j < m; ++j) {
      if (!(mask & (1u << j))) continue;
      lhs *= stds[static_cast<std::size_t>(j)];
      for (int k = j + 1; k < m; ++k)
        if (mask & (1u << k))
          sub_moduli.push_back(moduli[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
    }
    const double rhs = root_of_product(sub_moduli, static_cast<double>(std::popcount(mask) - 1));
    if (lhs - rhs < -tol * std::max({1.0, lhs, rhs})) {
      out.relations_ok = false;
      break;
    }
  }
  return out;
}

namespace {

const char* side_beta_ge_1 = "beta >= 1";

}  // namespace

Table1Row table1_row(Table1RowLabel label, double a, double b, double c, double beta,
                     const std::array<double, 3>& pair_moduli) {
  if (beta < 0.0) throw ParameterError("beta must be >= 0");
  const bool no_squeezing = label == Table1RowLabel::NoSqueezing;
  // Squeezing rows need strict factors > 1; the no-squeezing row permits the
  // a = b = c = 1 boundary.
  if (no_squeezing) {
    if (a < 1.0 || b < 1.0 || c < 1.0) throw ParameterError("factors must be >= 1");
  } else {
    if (a <= 1.0 || b <= 1.0 || c <= 1.0) throw ParameterError("factors a, b, c must be > 1");
  }

  const double t = std::cbrt(beta);       // beta^{1/3}
  const double t2 = t * t;                // beta^{2/3}
  Table1Row row;
  row.label = label;
  row.a = a;
  row.b = b;
  row.c = c;
  row.beta = beta;

  bool products_apply = true;
  switch (label) {
    case Table1RowLabel::ThreeThirdsImpossible:
      row.variances = {t / a, t / b, t / c};
      products_apply = false;
      break;
    case Table1RowLabel::TwoThirds_AB:
      row.variances = {t / a, t / b, a * b * t};
      row.pair_products = {t2 / (a * b), b * t2, a * t2};
      row.side_conditions.emplace_back(side_beta_ge_1, beta >= 1.0);
      break;
    case Table1RowLabel::TwoThirds_AC:
      row.variances = {t / a, a * c * t, t / c};
      row.pair_products = {c * t2, t2 / (a * c), a * t2};
      row.side_conditions.emplace_back(side_beta_ge_1, beta >= 1.0);
      break;
    case Table1RowLabel::TwoThirds_BC:
      row.variances = {b * c * t, t / b, t / c};
      row.pair_products = {c * t2, b * t2, t2 / (b * c)};
      row.side_conditions.emplace_back(side_beta_ge_1, beta >= 1.0);
      break;
    case Table1RowLabel::OneThird_A:
      row.variances = {t / (b * c), b * t, c * t};
      row.pair_products = {t2 / c, t2 / b, b * c * t2};
      row.side_conditions.emplace_back(side_beta_ge_1, beta >= 1.0);
      row.side_conditions.emplace_back("|cov~(B,C)| >= b c beta^{-1/3}",
                                       pair_moduli[2] >= b * c * (1.0 / t));
      break;
    case Table1RowLabel::OneThird_B:
      row.variances = {a * t, t / (a * c), c * t};
      row.pair_products = {t2 / c, a * c * t2, t2 / a};
      row.side_conditions.emplace_back(side_beta_ge_1, beta >= 1.0);
      row.side_conditions.emplace_back("|cov~(A,C)| >= a c beta^{-1/3}",
                                       pair_moduli[1] >= a * c * (1.0 / t));
      break;
    case Table1RowLabel::OneThird_C:
      row.variances = {a * t, b * t, t / (a * b)};
      row.pair_products = {a * b * t2, t2 / b, t2 / a};
      row.side_conditions.emplace_back(side_beta_ge_1, beta >= 1.0);
      row.side_conditions.emplace_back("|cov~(A,B)| >= a b beta^{-1/3}",
                                       pair_moduli[0] >= a * b * (1.0 / t));
      break;
    case Table1RowLabel::NoSqueezing:
      row.variances = {a * t, b * t, c * t};
      row.pair_products = {a * b * t2, a * c * t2, b * c * t2};
      break;
  }

  if (products_apply) {
    for (int i = 0; i < 3; ++i)
      row.product_constraints[static_cast<std::size_t>(i)] =
          row.pair_products[static_cast<std::size_t>(i)] >= pair_moduli[static_cast<std::size_t>(i)];
  } else {
    row.product_constraints = {false, false, false};
  }

  bool sides_ok = true;
  for (const auto& [name, ok] : row.side_conditions) sides_ok = sides_ok && ok;
  row.feasible = products_apply && sides_ok && row.product_constraints[0] &&
                 row.product_constraints[1] && row.product_constraints[2] &&
                 label != Table1RowLabel::ThreeThirdsImpossible;
  return row;
}

Fig6Region fig6_region(const std::array<double, 3>& variances, double beta) {
  const double threshold = std::cbrt(beta);
  int below = 0;
  for (double v : variances)
    if (v < threshold) ++below;
  switch (below) {
    case 3: return Fig6Region::Impossible;
    case 2: return Fig6Region::TwoThirds;
    case 1: return Fig6Region::OneThird;
    default: return Fig6Region::NoSqueezing;
  }
}

OscillatorResult oscillator_demo(int fock_dim, double hbar, const OscillatorSpec& spec,
                                 double tol) {
  if (fock_dim < 2) throw DimensionError("fock_dim must be >= 2");
  if (hbar <= 0.0) throw ParameterError("hbar must be positive");
  const auto dim = static_cast<std::size_t>(fock_dim);

  constexpr double kTailLimit = 1e-10;
  ComplexVector ket(dim);
  double tail = 0.0;
  switch (spec.kind) {
    case OscillatorSpec::Kind::Vacuum:
      ket[0] = 1.0;
      break;
    case OscillatorSpec::Kind::Number: {
      // Second moments of x and p on |n> are exact only for n <= dim - 2.
      if (spec.n < 0) throw ParameterError("n must be >= 0");
      if (spec.n > fock_dim - 2)
        throw TruncationError("number state n = " + std::to_string(spec.n) +
                              " does not fit in fock_dim = " + std::to_string(fock_dim));
      ket[static_cast<std::size_t>(spec.n)] = 1.0;
      break;
    }
    case OscillatorSpec::Kind::Coherent: {
      // c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!)
      cdouble coeff = std::exp(-0.5 * std::norm(spec.alpha));
      double weight = 0.0;
      for (std::size_t n = 0; n < dim; ++n) {
        ket[n] = coeff;
        weight += std::norm(coeff);
        coeff *= spec.alpha / std::sqrt(static_cast<double>(n + 1));
      }
      tail = 1.0 - weight;
      if (tail >= kTailLimit)
        throw TruncationError("coherent-state truncation tail " + std::to_string(tail) +
                              " exceeds limit");
      ket *= 1.0 / ket.norm();
      break;
    }
  }

  const QuantumState state = QuantumState::pure(ket);
  const ComplexMatrix x = position_op(dim, hbar);
  const ComplexMatrix p = momentum_op(dim, hbar);
  const ComplexMatrix r = -1.0 * (x + p);

  OscillatorResult out;
  out.truncation_tail = tail;
  out.sigma_x = std_dev(state, x);
  out.sigma_p = std_dev(state, p);
  out.sigma_r = std_dev(state, r);
  const double tau = std::sqrt(4.0 / 3.0);
  const double rhs = std::pow(tau * hbar / 2.0, 1.5);
  out.report = make_report(RelationId::Oscillator, out.sigma_x * out.sigma_p * out.sigma_r, rhs, tol);
  return out;
}

}  // namespace uncrel
