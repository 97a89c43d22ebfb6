#pragma once

#include <vector>

#include "uncrel/cs_ineq.hpp"
#include "uncrel/linalg.hpp"
#include "uncrel/report.hpp"

namespace uncrel {

enum class Mode { Hermitian, General };

/// Re/Im split of a (generalized) covariance: modulus^2 = sym^2 + anti^2.
struct CovarianceDecomposition {
  double symmetric_part = 0.0;     // anticommutator term
  double antisymmetric_part = 0.0; // commutator term
  double modulus = 0.0;
  cdouble raw;
};

struct GeneralizedMoments {
  cdouble gen_covariance;       // cov~(A,B)
  double gen_variance = 0.0;    // cov~(A,A), clamped at 0
  double gen_std = 0.0;         // sqrt(gen_variance)
  double trace_factor = 0.0;    // 2 - tr(rho)
};

/// <AB> - <A><B> for Hermitian A,B and a normalized state.
cdouble covariance(const QuantumState& state, const ComplexMatrix& a, const ComplexMatrix& b,
                   double tol = kCheckTol);
double variance(const QuantumState& state, const ComplexMatrix& a, double tol = kCheckTol);
double std_dev(const QuantumState& state, const ComplexMatrix& a, double tol = kCheckTol);

/// <A^dag B> - [2 - tr(rho)] <A^dag><B> for any operators and states.
GeneralizedMoments gen_covariance(const QuantumState& state, const ComplexMatrix& a,
                                  const ComplexMatrix& b, double tol = kCheckTol);

/// A^dag B - B^dag A.
ComplexMatrix pseudo_commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// A^dag B + B^dag A.
ComplexMatrix pseudo_anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

CovarianceDecomposition covariance_decomposition(const QuantumState& state, const ComplexMatrix& a,
                                                 const ComplexMatrix& b, bool generalized,
                                                 double tol = kCheckTol);

/// prod sigma_j >= (prod_{j<k} |sigma^2_{jk}|)^{1/(M-1)}, tilde variants in
/// General mode.
InequalityReport balanced_relation(const QuantumState& state, const std::vector<ComplexMatrix>& ops,
                                   Mode mode, double tol = kSlackTol);
InequalityReport unbalanced_relation(const QuantumState& state,
                                     const std::vector<ComplexMatrix>& ops, const PairSet& pairs,
                                     Mode mode, double tol = kSlackTol);
/// prod sigma_j; the tightest bound, dominates every relation's rhs.
double tightest_product(const QuantumState& state, const std::vector<ComplexMatrix>& ops, Mode mode);

/// sigma (or sigma~) of a single operator per mode.
double mode_std(const QuantumState& state, const ComplexMatrix& a, Mode mode);
/// |sigma^2_{A,B}| (or |sigma~^2|) per mode.
double mode_cov_modulus(const QuantumState& state, const ComplexMatrix& a, const ComplexMatrix& b,
                        Mode mode);

}  // namespace uncrel
