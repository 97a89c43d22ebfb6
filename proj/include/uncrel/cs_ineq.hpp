#pragma once

#include <utility>
#include <vector>

#include "uncrel/linalg.hpp"
#include "uncrel/report.hpp"

namespace uncrel {

/// A chosen set of distinct index pairs (1-based, canonicalized to j < k and
/// sorted). Duplicate pairs and j == k are rejected.
class PairSet {
 public:
  explicit PairSet(std::vector<std::pair<int, int>> pairs);

  /// All C(M,2) pairs of 1..M.
  static PairSet full(int m);

  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  /// Throws IndexError if any index is outside 1..M.
  void validate_against(int m) const;

  bool operator==(const PairSet&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

/// prod_j |a_j| >= (prod_{j<k} |a_j.a_k|)^{1/(M-1)} for M >= 2.
InequalityReport balanced_cs(const std::vector<ComplexVector>& vectors, double tol = kSlackTol);

/// prod_q |a_{j_q}||a_{k_q}| >= prod_q |a_{j_q}.a_{k_q}|.
InequalityReport unbalanced_cs(const std::vector<ComplexVector>& vectors, const PairSet& pairs,
                               double tol = kSlackTol);

/// Ket-facing wrappers: identical arithmetic on the underlying arrays.
InequalityReport balanced_cs_states(const std::vector<QuantumState>& kets, double tol = kSlackTol);
InequalityReport unbalanced_cs_states(const std::vector<QuantumState>& kets, const PairSet& pairs,
                                      double tol = kSlackTol);

/// All (C(M,2) choose K) pair subsets, lexicographically ordered.
std::vector<PairSet> enumerate_pairsets(int m, int k);

/// |a_{p,...,1}| |a_{p+1,...,M}| >= |sigma^M| for deviations built from
/// Hermitian matrices acting on vector a, with <A> = a^dag A a.
InequalityReport multivariance_cs_vectors(const ComplexVector& a,
                                          const std::vector<ComplexMatrix>& ops, int p,
                                          double tol = kSlackTol, double herm_tol = kCheckTol);

/// (prod factors)^{1/root} computed in log space; 0 if any factor is 0.
double root_of_product(const std::vector<double>& factors, double root);

}  // namespace uncrel
