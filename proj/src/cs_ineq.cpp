#include "uncrel/cs_ineq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace uncrel {

PairSet::PairSet(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw PairSetError("pair set must not be empty");
  for (auto& [j, k] : pairs_) {
    if (j == k) throw PairSetError("pair has equal indices: (" + std::to_string(j) + "," +
                                   std::to_string(k) + ")");
    if (j < 1 || k < 1) throw IndexError("pair indices are 1-based");
    if (j > k) std::swap(j, k);
  }
  std::sort(pairs_.begin(), pairs_.end());
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end())
    throw PairSetError("duplicate pair in pair set");
}

PairSet PairSet::full(int m) {
  if (m < 2) throw ArityError("need at least 2 indices");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < m; ++j)
    for (int k = j + 1; k <= m; ++k) pairs.emplace_back(j, k);
  return PairSet(std::move(pairs));
}

void PairSet::validate_against(int m) const {
  for (const auto& [j, k] : pairs_)
    if (k > m)
      throw IndexError("pair index " + std::to_string(k) + " out of range for M=" +
                       std::to_string(m));
}

double root_of_product(const std::vector<double>& factors, double root) {
  double log_sum = 0.0;
  for (double f : factors) {
    if (f == 0.0) return 0.0;
    log_sum += std::log(f);
  }
  return std::exp(log_sum / root);
}

namespace {

void require_equal_dims(const std::vector<ComplexVector>& vectors) {
  for (const ComplexVector& v : vectors)
    if (v.dim() != vectors.front().dim()) throw DimensionError("vectors have mixed dimensions");
}

std::vector<ComplexVector> extract_kets(const std::vector<QuantumState>& states) {
  std::vector<ComplexVector> kets;
  kets.reserve(states.size());
  for (const QuantumState& s : states) kets.push_back(s.ket());
  return kets;
}

}  // namespace

InequalityReport balanced_cs(const std::vector<ComplexVector>& vectors, double tol) {
  const int m = static_cast<int>(vectors.size());
  if (m < 2) throw ArityError("balanced CS needs M >= 2 vectors");
  require_equal_dims(vectors);
  double lhs = 1.0;
  for (const ComplexVector& v : vectors) lhs *= v.norm();
  std::vector<double> overlaps;
  overlaps.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) overlaps.push_back(std::abs(hermitian_inner(vectors[j], vectors[k])));
  const double rhs = root_of_product(overlaps, static_cast<double>(m - 1));
  return make_report(RelationId::BalancedCs, lhs, rhs, tol);
}

InequalityReport unbalanced_cs(const std::vector<ComplexVector>& vectors, const PairSet& pairs,
                               double tol) {
  const int m = static_cast<int>(vectors.size());
  if (m < 2) throw ArityError("unbalanced CS needs M >= 2 vectors");
  require_equal_dims(vectors);
  pairs.validate_against(m);
  double lhs = 1.0;
  double rhs = 1.0;
  for (const auto& [j, k] : pairs.pairs()) {
    const ComplexVector& u = vectors[static_cast<std::size_t>(j - 1)];
    const ComplexVector& v = vectors[static_cast<std::size_t>(k - 1)];
    lhs *= u.norm() * v.norm();
    rhs *= std::abs(hermitian_inner(u, v));
  }
  return make_report(RelationId::UnbalancedCs, lhs, rhs, tol);
}

InequalityReport balanced_cs_states(const std::vector<QuantumState>& kets, double tol) {
  return balanced_cs(extract_kets(kets), tol);
}

InequalityReport unbalanced_cs_states(const std::vector<QuantumState>& kets, const PairSet& pairs,
                                      double tol) {
  return unbalanced_cs(extract_kets(kets), pairs, tol);
}

std::vector<PairSet> enumerate_pairsets(int m, int k) {
  if (m < 2) throw ArityError("need M >= 2");
  const int total = m * (m - 1) / 2;
  if (k < 1 || k > total) throw ArityError("K must be in 1..M(M-1)/2");
  std::vector<std::pair<int, int>> all;
  for (int j = 1; j < m; ++j)
    for (int l = j + 1; l <= m; ++l) all.emplace_back(j, l);

  std::vector<PairSet> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<std::pair<int, int>> chosen;
    chosen.reserve(static_cast<std::size_t>(k));
    for (int i : idx) chosen.push_back(all[static_cast<std::size_t>(i)]);
    out.emplace_back(std::move(chosen));
    // next k-combination of 0..total-1 in lexicographic order
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == total - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

InequalityReport multivariance_cs_vectors(const ComplexVector& a,
                                          const std::vector<ComplexMatrix>& ops, int p, double tol,
                                          double herm_tol) {
  const int m = static_cast<int>(ops.size());
  if (m < 1) throw ArityError("need at least one operator");
  if (p < 0 || p > m) throw ArityError("p must be in 0..M");
  for (const ComplexMatrix& op : ops) {
    if (!op.is_square() || op.rows() != a.dim())
      throw DimensionError("operator dimension does not match vector");
    if (!op.is_hermitian(herm_tol)) throw HermiticityError("operator is not Hermitian within tolerance");
  }
  // <A> = a^dag A a, deviations Delta A = A - <A> I.
  std::vector<ComplexMatrix> dev;
  dev.reserve(ops.size());
  for (const ComplexMatrix& op : ops) {
    const cdouble mean = hermitian_inner(a, op.apply(a));
    ComplexMatrix d = op;
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, i) -= mean;
    dev.push_back(std::move(d));
  }
  // a_{p,...,1} = Delta A_p ... Delta A_1 a  (Delta A_1 applied first)
  ComplexVector left = a;
  for (int j = 1; j <= p; ++j) left = dev[static_cast<std::size_t>(j - 1)].apply(left);
  // a_{p+1,...,M} = Delta A_{p+1} ... Delta A_M a  (Delta A_M applied first)
  ComplexVector right = a;
  for (int j = m; j >= p + 1; --j) right = dev[static_cast<std::size_t>(j - 1)].apply(right);

  // sigma^M = a^dag Delta A_1 ... Delta A_M a
  ComplexVector acc = a;
  for (int j = m; j >= 1; --j) acc = dev[static_cast<std::size_t>(j - 1)].apply(acc);
  const double rhs = std::abs(hermitian_inner(a, acc));
  return make_report(RelationId::MultivarianceCs, left.norm() * right.norm(), rhs, tol);
}

std::string_view relation_name(RelationId id) {
  switch (id) {
    case RelationId::BalancedCs: return "balanced-cs";
    case RelationId::UnbalancedCs: return "unbalanced-cs";
    case RelationId::MultivarianceCs: return "multivariance-cs";
    case RelationId::BalancedHermitian: return "balanced-herm";
    case RelationId::UnbalancedHermitian: return "unbalanced-herm";
    case RelationId::BalancedGeneral: return "balanced-gen";
    case RelationId::UnbalancedGeneral: return "unbalanced-gen";
    case RelationId::Partitioned: return "multivariance";
    case RelationId::SymmetricMultivariance: return "symmetric";
    case RelationId::Oscillator: return "oscillator";
  }
  return "unknown";
}

}  // namespace uncrel
