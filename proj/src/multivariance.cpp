#include "uncrel/multivariance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace uncrel {

OperatorSequence::OperatorSequence(std::vector<ComplexMatrix> ops, double herm_tol)
    : OperatorSequence(std::move(ops), std::vector<std::string>{}, herm_tol) {}

OperatorSequence::OperatorSequence(std::vector<ComplexMatrix> ops, std::vector<std::string> labels,
                                   double herm_tol)
    : ops_(std::move(ops)), labels_(std::move(labels)) {
  if (ops_.empty()) throw ArityError("operator sequence must not be empty");
  for (const ComplexMatrix& op : ops_) {
    if (!op.is_square() || op.rows() != ops_.front().rows())
      throw DimensionError("operators must be square with a common dimension");
    if (!op.is_hermitian(herm_tol))
      throw HermiticityError("operator is not Hermitian within tolerance");
  }
  if (!labels_.empty() && labels_.size() != ops_.size())
    throw ParameterError("label count does not match operator count");
}

OperatorSequence OperatorSequence::permuted(const std::vector<int>& perm) const {
  if (perm.size() != ops_.size()) throw ParameterError("permutation length mismatch");
  std::vector<ComplexMatrix> ops;
  ops.reserve(ops_.size());
  std::vector<std::string> labels;
  for (int i : perm) {
    if (i < 0 || i >= size()) throw IndexError("permutation index out of range");
    ops.push_back(ops_[static_cast<std::size_t>(i)]);
    if (!labels_.empty()) labels.push_back(labels_[static_cast<std::size_t>(i)]);
  }
  return OperatorSequence(std::move(ops), std::move(labels));
}

OperatorSequence OperatorSequence::reversed() const {
  std::vector<int> perm(ops_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  return permuted(perm);
}

namespace {

void require_dims(const QuantumState& state, const OperatorSequence& seq) {
  if (seq.dim() != state.dim()) throw DimensionError("operator dimension does not match state");
}

std::vector<ComplexMatrix> deviations(const QuantumState& state, const OperatorSequence& seq) {
  std::vector<ComplexMatrix> dev;
  dev.reserve(static_cast<std::size_t>(seq.size()));
  for (const ComplexMatrix& op : seq.ops()) dev.push_back(deviation(state, op));
  return dev;
}

// Delta A_{first} ... Delta A_{last} as a single matrix (1-based inclusive
// range; empty range gives the identity).
ComplexMatrix deviation_chain(const std::vector<ComplexMatrix>& dev, int first, int last,
                              std::size_t dim) {
  ComplexMatrix prod = ComplexMatrix::identity(dim);
  for (int j = first; j <= last; ++j) prod = prod * dev[static_cast<std::size_t>(j - 1)];
  return prod;
}

// <X^dag Y> as the inner product of two deviation-product states; for mixed
// states this is tr(rho X^dag Y), positive semidefinite in X = Y.
cdouble gram(const QuantumState& state, const ComplexMatrix& x, const ComplexMatrix& y) {
  return expectation(state, x.adjoint() * y);
}

double radicand_to_norm(cdouble value, const char* what) {
  const double scale = std::max(1.0, std::abs(value));
  if (value.real() < -kCheckTol * scale)
    throw PositivityError(std::string(what) + " radicand " + std::to_string(value.real()) +
                          " is negative beyond tolerance");
  return std::sqrt(std::max(0.0, value.real()));
}

}  // namespace

cdouble multivariance(const QuantumState& state, const OperatorSequence& seq) {
  require_dims(state, seq);
  const auto dev = deviations(state, seq);
  return expectation(state, deviation_chain(dev, 1, seq.size(), state.dim()));
}

ComplexVector deviation_product_state(const QuantumState& state, const OperatorSequence& seq,
                                      const std::vector<int>& indices) {
  if (!state.is_pure()) throw PurityError("deviation-product states require a pure ket");
  require_dims(state, seq);
  for (int j : indices)
    if (j < 1 || j > seq.size()) throw IndexError("sequence index out of range");
  ComplexVector out = state.ket();
  for (auto it = indices.rbegin(); it != indices.rend(); ++it)
    out = deviation(state, seq.op(*it - 1)).apply(out);
  return out;
}

PartitionedRelationReport partitioned_relation(const QuantumState& state,
                                               const OperatorSequence& seq, int p, double tol) {
  require_dims(state, seq);
  const int m = seq.size();
  if (p < 0 || p > m) throw ArityError("p must be in 0..M");
  const auto dev = deviations(state, seq);
  // X = Delta A_p ... Delta A_1, Y = Delta A_{p+1} ... Delta A_M, so that
  // X^dag Y = Delta A_1 ... Delta A_M and sigma^M = <X^dag Y>.
  ComplexMatrix x = ComplexMatrix::identity(state.dim());
  for (int j = p; j >= 1; --j) x = x * dev[static_cast<std::size_t>(j - 1)];
  ComplexMatrix y = ComplexMatrix::identity(state.dim());
  for (int j = p + 1; j <= m; ++j) y = y * dev[static_cast<std::size_t>(j - 1)];

  PartitionedRelationReport out;
  out.p = p;
  out.state_kind = state.kind();
  out.lhs_left = radicand_to_norm(gram(state, x, x), "left");
  out.lhs_right = radicand_to_norm(gram(state, y, y), "right");
  out.rhs = std::abs(gram(state, x, y));
  const double lhs = out.lhs_left * out.lhs_right;
  out.slack = lhs - out.rhs;
  out.scale = std::max({1.0, lhs, out.rhs});
  out.satisfied = out.slack >= -tol * out.scale;
  return out;
}

std::vector<PartitionedRelationReport> all_partitioned_relations(const QuantumState& state,
                                                                 const OperatorSequence& seq,
                                                                 double tol) {
  std::vector<PartitionedRelationReport> out;
  out.reserve(static_cast<std::size_t>(seq.size()) + 1);
  for (int p = 0; p <= seq.size(); ++p) out.push_back(partitioned_relation(state, seq, p, tol));
  return out;
}

cdouble symmetric_multivariance(const QuantumState& state, const OperatorSequence& seq, int m_max) {
  require_dims(state, seq);
  const int m = seq.size();
  if (m > m_max)
    throw ArityError("M = " + std::to_string(m) + " exceeds permutation limit " +
                     std::to_string(m_max));
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  cdouble sum = 0.0;
  std::size_t count = 0;
  do {
    sum += multivariance(state, seq.permuted(perm));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / static_cast<double>(count);
}

InequalityReport symmetric_relation(const QuantumState& state, const OperatorSequence& seq,
                                    double tol, int m_max) {
  require_dims(state, seq);
  const int m = seq.size();
  if (m > m_max)
    throw ArityError("M = " + std::to_string(m) + " exceeds permutation limit " +
                     std::to_string(m_max));
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  double lhs_sum = 0.0;
  std::size_t count = 0;
  do {
    const OperatorSequence permuted = seq.permuted(perm);
    for (int p = 0; p <= m; ++p) {
      const PartitionedRelationReport rel = partitioned_relation(state, permuted, p, tol);
      lhs_sum += rel.lhs_left * rel.lhs_right;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const double lhs = lhs_sum / (static_cast<double>(count) * (m + 1));
  const double rhs = std::abs(symmetric_multivariance(state, seq, m_max));
  return make_report(RelationId::SymmetricMultivariance, lhs, rhs, tol);
}

}  // namespace uncrel
