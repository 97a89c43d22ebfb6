#pragma once

#include <cstdint>
#include <optional>

#include "uncrel/linalg.hpp"

namespace uncrel {

/// Deterministic seeded generator: splitmix64 core with an explicit
/// Box-Muller normal, so streams are identical across platforms and
/// standard-library versions. Independent streams per (seed, stream).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double normal();
  /// Complex standard normal: (N + iN)/sqrt(2).
  cdouble complex_normal();
  int uniform_int(int lo, int hi);  // inclusive bounds

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

/// rho = eps Lambda eps^dag with Lambda = diag(cos^2(pi/8), sin^2(pi/8)).
QuantumState one_qubit_family(double theta, double phi);
/// Rank-2 two-qubit state with spectrum (cos^2 vt, sin^2 vt) and concurrence
/// eta cos^2 vt; vt in [0, pi/4], eta in [0, 1].
QuantumState two_qubit_family(double vartheta, double eta);
/// Wootters concurrence of a 4x4 density matrix.
double concurrence(const QuantumState& rho);

ComplexVector random_vector(std::size_t dim, Rng& rng, bool real_only = false);
ComplexMatrix random_operator(std::size_t dim, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);
QuantumState random_pure(std::size_t dim, Rng& rng);
QuantumState random_density(std::size_t dim, std::size_t rank, Rng& rng);

ComplexVector random_vector(std::size_t dim, std::uint64_t seed);
ComplexMatrix random_operator(std::size_t dim, std::uint64_t seed);
ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed);
QuantumState random_pure(std::size_t dim, std::uint64_t seed);
QuantumState random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Truncated ladder operator a|n> = sqrt(n)|n-1>, dim >= 2.
ComplexMatrix fock_ladder(std::size_t dim);
/// x = sqrt(hbar/2) (a + a^dag).
ComplexMatrix position_op(std::size_t dim, double hbar);
/// p = i sqrt(hbar/2) (a^dag - a).
ComplexMatrix momentum_op(std::size_t dim, double hbar);

}  // namespace uncrel
