#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "uncrel/linalg.hpp"
#include "uncrel/report.hpp"
#include "uncrel/uncertainty.hpp"

namespace uncrel {

struct SqueezingClassification {
  int M = 0;
  double beta = 0.0;
  double threshold = 0.0;  // beta^{1/M}
  std::vector<double> gen_variances;
  std::vector<int> squeezed_indices;  // 1-based
  int q = 0;
  std::string label;  // "q/M"
  bool relations_ok = false;
};

enum class Fig6Region { Impossible, TwoThirds, OneThird, NoSqueezing };

enum class Table1RowLabel {
  ThreeThirdsImpossible,
  TwoThirds_AB,
  TwoThirds_AC,
  TwoThirds_BC,
  OneThird_A,
  OneThird_B,
  OneThird_C,
  NoSqueezing,
};

struct Table1Row {
  Table1RowLabel label;
  double a = 0.0, b = 0.0, c = 0.0;
  double beta = 0.0;
  std::array<double, 3> variances{};      // sigma~^2_A, _B, _C closed forms
  std::array<double, 3> pair_products{};  // AB, AC, BC products
  std::array<bool, 3> product_constraints{};  // product >= pair modulus
  std::vector<std::pair<std::string, bool>> side_conditions;
  bool feasible = false;
};

/// beta = (prod_{j<k} |sigma~^2_{jk}|)^{2/(M-1)}; the square of the balanced
/// relation's right side.
double squeezing_beta(const QuantumState& state, const std::vector<ComplexMatrix>& ops, Mode mode);

/// q/M classification: counts generalized variances strictly below
/// beta^{1/M} (ties are not squeezed) and verifies the balanced relation on
/// every operator subset of size 2..M.
SqueezingClassification classify(const QuantumState& state, const std::vector<ComplexMatrix>& ops,
                                 Mode mode, double tol = kSlackTol);

Table1Row table1_row(Table1RowLabel label, double a, double b, double c, double beta,
                     const std::array<double, 3>& pair_moduli);

/// Counts variances below beta^{1/3}: 3 -> Impossible, 2 -> TwoThirds,
/// 1 -> OneThird, 0 -> NoSqueezing.
Fig6Region fig6_region(const std::array<double, 3>& variances, double beta);

struct OscillatorSpec {
  enum class Kind { Vacuum, Coherent, Number };
  Kind kind = Kind::Vacuum;
  cdouble alpha = 0.0;  // Coherent
  int n = 0;            // Number
  static OscillatorSpec vacuum() { return {}; }
  static OscillatorSpec coherent(cdouble alpha) { return {Kind::Coherent, alpha, 0}; }
  static OscillatorSpec number(int n) { return {Kind::Number, 0.0, n}; }
};

struct OscillatorResult {
  InequalityReport report;
  double sigma_x = 0.0;
  double sigma_p = 0.0;
  double sigma_r = 0.0;
  double truncation_tail = 0.0;
};

/// sigma_x sigma_p sigma_r >= (tau hbar/2)^{3/2} with r = -x - p and
/// tau = sqrt(4/3), evaluated on a truncated Fock space.
OscillatorResult oscillator_demo(int fock_dim, double hbar, const OscillatorSpec& spec,
                                 double tol = kSlackTol);

}  // namespace uncrel
