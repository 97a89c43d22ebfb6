#include "uncrel/uncertainty.hpp"

#include <cmath>
#include <string>

namespace uncrel {

namespace {

void require_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_hermitian(tol)) throw HermiticityError("operator is not Hermitian within tolerance");
}

void require_normalized(const QuantumState& state, double tol) {
  if (std::abs(state.trace() - 1.0) > tol)
    throw NormalizationError("state trace " + std::to_string(state.trace()) +
                             " is not 1; use the generalized covariance");
}

// Expectation of a Hermitian operator: real up to rounding.
double real_expectation(const QuantumState& state, const ComplexMatrix& a) {
  const cdouble e = expectation(state, a);
  const double scale = std::max(1.0, std::abs(e));
  if (std::abs(e.imag()) > 1e-12 * scale)
    throw HermiticityError("expectation value has non-negligible imaginary part " +
                           std::to_string(e.imag()));
  return e.real();
}

}  // namespace

cdouble covariance(const QuantumState& state, const ComplexMatrix& a, const ComplexMatrix& b,
                   double tol) {
  require_hermitian(a, tol);
  require_hermitian(b, tol);
  require_normalized(state, tol);
  const cdouble ab = expectation(state, a * b);
  return ab - real_expectation(state, a) * real_expectation(state, b);
}

double variance(const QuantumState& state, const ComplexMatrix& a, double tol) {
  const cdouble v = covariance(state, a, a, tol);
  const double scale = std::max(1.0, std::abs(v));
  if (v.real() < -tol * scale)
    throw PositivityError("variance " + std::to_string(v.real()) + " below tolerance");
  return std::max(0.0, v.real());
}

double std_dev(const QuantumState& state, const ComplexMatrix& a, double tol) {
  return std::sqrt(variance(state, a, tol));
}

GeneralizedMoments gen_covariance(const QuantumState& state, const ComplexMatrix& a,
                                  const ComplexMatrix& b, double tol) {
  if (!a.is_square() || a.rows() != state.dim() || !b.is_square() || b.rows() != state.dim())
    throw DimensionError("operator dimension does not match state");
  const double factor = 2.0 - state.trace();
  const cdouble ea = expectation(state, a);  // <A^dag> = <A>^*
  const cdouble eb = expectation(state, b);
  GeneralizedMoments out;
  out.trace_factor = factor;
  out.gen_covariance = expectation(state, a.adjoint() * b) - factor * std::conj(ea) * eb;
  const cdouble self = expectation(state, a.adjoint() * a) - factor * std::conj(ea) * ea;
  const double scale = std::max(1.0, std::abs(self));
  if (self.real() < -tol * scale)
    throw PositivityError("generalized variance " + std::to_string(self.real()) +
                          " below tolerance; inconsistent state");
  out.gen_variance = std::max(0.0, self.real());
  out.gen_std = std::sqrt(out.gen_variance);
  return out;
}

ComplexMatrix pseudo_commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
    throw DimensionError("pseudo-commutator needs equal square matrices");
  return a.adjoint() * b - b.adjoint() * a;
}

ComplexMatrix pseudo_anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
    throw DimensionError("pseudo-anticommutator needs equal square matrices");
  return a.adjoint() * b + b.adjoint() * a;
}

CovarianceDecomposition covariance_decomposition(const QuantumState& state, const ComplexMatrix& a,
                                                 const ComplexMatrix& b, bool generalized,
                                                 double tol) {
  CovarianceDecomposition out;
  // <pseudo-anticommutator> is real, <pseudo-commutator> purely imaginary.
  const cdouble anti_op = expectation(state, pseudo_anticommutator(a, b));
  const cdouble comm_op = expectation(state, pseudo_commutator(a, b));
  if (generalized) {
    const double factor = 2.0 - state.trace();
    const cdouble cross = std::conj(expectation(state, a)) * expectation(state, b);
    out.symmetric_part = anti_op.real() / 2.0 - factor * cross.real();
    out.antisymmetric_part = comm_op.imag() / 2.0 - factor * cross.imag();
    out.raw = gen_covariance(state, a, b, tol).gen_covariance;
  } else {
    require_hermitian(a, tol);
    require_hermitian(b, tol);
    require_normalized(state, tol);
    out.symmetric_part =
        anti_op.real() / 2.0 - real_expectation(state, a) * real_expectation(state, b);
    out.antisymmetric_part = comm_op.imag() / 2.0;
    out.raw = covariance(state, a, b, tol);
  }
  out.modulus = std::hypot(out.symmetric_part, out.antisymmetric_part);
  return out;
}

double mode_std(const QuantumState& state, const ComplexMatrix& a, Mode mode) {
  if (mode == Mode::Hermitian) return std_dev(state, a);
  return gen_covariance(state, a, a).gen_std;
}

double mode_cov_modulus(const QuantumState& state, const ComplexMatrix& a, const ComplexMatrix& b,
                        Mode mode) {
  if (mode == Mode::Hermitian) return std::abs(covariance(state, a, b));
  return std::abs(gen_covariance(state, a, b).gen_covariance);
}

namespace {

void check_mode_inputs(const QuantumState& state, const std::vector<ComplexMatrix>& ops,
                       Mode mode) {
  if (ops.size() < 2) throw ArityError("need M >= 2 operators");
  for (const ComplexMatrix& op : ops)
    if (!op.is_square() || op.rows() != state.dim())
      throw DimensionError("operator dimension does not match state");
  if (mode == Mode::Hermitian) {
    for (const ComplexMatrix& op : ops)
      if (!op.is_hermitian(kCheckTol))
        throw ModeError("Hermitian mode requires Hermitian operators");
    if (std::abs(state.trace() - 1.0) > kCheckTol)
      throw ModeError("Hermitian mode requires a normalized state");
  }
}

}  // namespace

InequalityReport balanced_relation(const QuantumState& state, const std::vector<ComplexMatrix>& ops,
                                   Mode mode, double tol) {
  check_mode_inputs(state, ops, mode);
  const std::size_t m = ops.size();
  double lhs = 1.0;
  for (const ComplexMatrix& op : ops) lhs *= mode_std(state, op, mode);
  std::vector<double> moduli;
  moduli.reserve(m * (m - 1) / 2);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k)
      moduli.push_back(mode_cov_modulus(state, ops[j], ops[k], mode));
  const double rhs = root_of_product(moduli, static_cast<double>(m - 1));
  return make_report(mode == Mode::Hermitian ? RelationId::BalancedHermitian
                                             : RelationId::BalancedGeneral,
                     lhs, rhs, tol);
}

InequalityReport unbalanced_relation(const QuantumState& state,
                                     const std::vector<ComplexMatrix>& ops, const PairSet& pairs,
                                     Mode mode, double tol) {
  check_mode_inputs(state, ops, mode);
  pairs.validate_against(static_cast<int>(ops.size()));
  double lhs = 1.0;
  double rhs = 1.0;
  for (const auto& [j, k] : pairs.pairs()) {
    const ComplexMatrix& a = ops[static_cast<std::size_t>(j - 1)];
    const ComplexMatrix& b = ops[static_cast<std::size_t>(k - 1)];
    lhs *= mode_std(state, a, mode) * mode_std(state, b, mode);
    rhs *= mode_cov_modulus(state, a, b, mode);
  }
  return make_report(mode == Mode::Hermitian ? RelationId::UnbalancedHermitian
                                             : RelationId::UnbalancedGeneral,
                     lhs, rhs, tol);
}

double tightest_product(const QuantumState& state, const std::vector<ComplexMatrix>& ops,
                        Mode mode) {
  check_mode_inputs(state, ops, mode);
  double prod = 1.0;
  for (const ComplexMatrix& op : ops) prod *= mode_std(state, op, mode);
  return prod;
}

}  // namespace uncrel
