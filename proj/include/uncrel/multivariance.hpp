#pragma once

#include <string>
#include <vector>

#include "uncrel/linalg.hpp"
#include "uncrel/report.hpp"

namespace uncrel {

/// Ordered list of Hermitian operators; order is significant.
class OperatorSequence {
 public:
  explicit OperatorSequence(std::vector<ComplexMatrix> ops, double herm_tol = kCheckTol);
  OperatorSequence(std::vector<ComplexMatrix> ops, std::vector<std::string> labels,
                   double herm_tol = kCheckTol);

  int size() const { return static_cast<int>(ops_.size()); }
  std::size_t dim() const { return ops_.front().rows(); }
  const ComplexMatrix& op(int j) const { return ops_[static_cast<std::size_t>(j)]; }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Reordered copy; perm holds 0-based positions.
  OperatorSequence permuted(const std::vector<int>& perm) const;
  OperatorSequence reversed() const;

 private:
  std::vector<ComplexMatrix> ops_;
  std::vector<std::string> labels_;
};

struct PartitionedRelationReport {
  int p = 0;
  double lhs_left = 0.0;   // sqrt(sigma^{2p}) factor
  double lhs_right = 0.0;  // sqrt(sigma^{2(M-p)}) factor
  double rhs = 0.0;        // |sigma^M|
  double slack = 0.0;
  double scale = 1.0;
  bool satisfied = false;
  StateKind state_kind = StateKind::PureKet;
};

/// sigma^M = < prod_j Delta A_j >, applied in the written (left-to-right)
/// order; reduces to the covariance at M = 2.
cdouble multivariance(const QuantumState& state, const OperatorSequence& seq);

/// |psi_{j1,...,jq}> = (Delta A_{j1}) ... (Delta A_{jq}) |psi>, with the
/// rightmost deviation acting first. Indices are 1-based into seq; empty
/// indices return the ket unchanged.
ComplexVector deviation_product_state(const QuantumState& state, const OperatorSequence& seq,
                                      const std::vector<int>& indices);

/// sqrt(sigma^{2p}) sqrt(sigma^{2(M-p)}) >= |sigma^M|; mixed states use the
/// tr(rho X^dag Y) sesquilinear form in place of ket overlaps.
PartitionedRelationReport partitioned_relation(const QuantumState& state,
                                               const OperatorSequence& seq, int p,
                                               double tol = kSlackTol);
/// Reports for p = 0..M, ordered.
std::vector<PartitionedRelationReport> all_partitioned_relations(const QuantumState& state,
                                                                 const OperatorSequence& seq,
                                                                 double tol = kSlackTol);

inline constexpr int kDefaultPermutationLimit = 8;

/// (1/M!) sum over all argument permutations of the multivariance.
cdouble symmetric_multivariance(const QuantumState& state, const OperatorSequence& seq,
                                int m_max = kDefaultPermutationLimit);

/// Uniform (M+1)!-weighted average of the partitioned lhs products over all
/// permutations and partitions, bounding |symmetric multivariance|.
InequalityReport symmetric_relation(const QuantumState& state, const OperatorSequence& seq,
                                    double tol = kSlackTol, int m_max = kDefaultPermutationLimit);

}  // namespace uncrel
