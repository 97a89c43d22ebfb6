#pragma once

#include <algorithm>
#include <string_view>

#include "uncrel/linalg.hpp"

namespace uncrel {

enum class RelationId {
  BalancedCs,
  UnbalancedCs,
  MultivarianceCs,
  BalancedHermitian,
  UnbalancedHermitian,
  BalancedGeneral,
  UnbalancedGeneral,
  Partitioned,
  SymmetricMultivariance,
  Oscillator,
};

std::string_view relation_name(RelationId id);

/// Uniform result carrier for every inequality check. Both sides are
/// magnitudes, so lhs, rhs >= 0 and satisfied means slack >= -tol*scale.
struct InequalityReport {
  RelationId relation;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double scale = 1.0;
  bool satisfied = false;
};

inline InequalityReport make_report(RelationId id, double lhs, double rhs,
                                    double tol = kSlackTol) {
  InequalityReport r;
  r.relation = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.scale = std::max({1.0, lhs, rhs});
  r.satisfied = r.slack >= -tol * r.scale;
  return r;
}

}  // namespace uncrel
