#include "uncrel/statefam.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace uncrel {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  state_ = seed;
  // Mix the stream id in so (seed, s) and (seed, s') are independent.
  std::uint64_t mix = stream ^ 0x6a09e667f3bcc909ULL;
  state_ ^= splitmix64(mix);
  // Warm-up round.
  (void)splitmix64(state_);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  return r * std::cos(angle);
}

cdouble Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cdouble(re, im) / std::sqrt(2.0);
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next_u64() % span);
}

QuantumState one_qubit_family(double theta, double phi) {
  const double l1 = std::pow(std::cos(std::numbers::pi / 8.0), 2);
  const double l2 = std::pow(std::sin(std::numbers::pi / 8.0), 2);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const cdouble eip = std::polar(1.0, phi);
  const ComplexMatrix eps{{c, -s * std::conj(eip)}, {s * eip, c}};
  const ComplexMatrix lambda{{l1, 0.0}, {0.0, l2}};
  return QuantumState::density(eps * lambda * eps.adjoint());
}

QuantumState two_qubit_family(double vartheta, double eta) {
  if (vartheta < 0.0 || vartheta > std::numbers::pi / 4.0 + 1e-15)
    throw ParameterError("vartheta must be in [0, pi/4]");
  if (eta < 0.0 || eta > 1.0) throw ParameterError("eta must be in [0, 1]");
  const double l1 = std::pow(std::cos(vartheta), 2);
  const double l2 = std::pow(std::sin(vartheta), 2);
  // |Phi1> = cos(alpha)|00> + sin(alpha)|11> with sin(2 alpha) = eta, so the
  // concurrence of the mixture with |01><01| is 2 l1 cos(alpha) sin(alpha)
  // = eta l1.
  const double alpha = 0.5 * std::asin(eta);
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  ComplexMatrix rho(4, 4);
  rho(0, 0) = l1 * ca * ca;
  rho(0, 3) = l1 * ca * sa;
  rho(3, 0) = l1 * ca * sa;
  rho(3, 3) = l1 * sa * sa;
  rho(1, 1) = l2;  // |01><01|
  return QuantumState::density(rho);
}

double concurrence(const QuantumState& state) {
  if (state.dim() != 4) throw DimensionError("concurrence is defined for two qubits (dim 4)");
  const ComplexMatrix rho = state.density_matrix();
  // sigma_y (x) sigma_y
  ComplexMatrix yy(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  // With S = sqrt(rho) the Wootters lambdas (square roots of the eigenvalues
  // of rho.rho~) are the singular values of K = S (yy) conj(S): rho.rho~ is
  // similar to K K^dag because K is complex symmetric. Singular values avoid
  // the precision loss of near-zero eigenvalues of the non-Hermitian product.
  const ComplexMatrix s = hermitian_sqrt(rho);
  ComplexMatrix s_conj(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s_conj(i, j) = std::conj(s(i, j));
  const std::vector<double> mu = singular_values(s * yy * s_conj);
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

ComplexVector random_vector(std::size_t dim, Rng& rng, bool real_only) {
  if (dim < 1) throw ParameterError("dim must be >= 1");
  ComplexVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = real_only ? cdouble(rng.normal()) : rng.complex_normal();
  return v;
}

ComplexMatrix random_operator(std::size_t dim, Rng& rng) {
  if (dim < 1) throw ParameterError("dim must be >= 1");
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_operator(dim, rng);
  return 0.5 * (g + g.adjoint());
}

QuantumState random_pure(std::size_t dim, Rng& rng) {
  ComplexVector v = random_vector(dim, rng);
  v *= 1.0 / v.norm();
  return QuantumState::pure(std::move(v));
}

QuantumState random_density(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > dim) throw ParameterError("rank must be in 1..dim");
  ComplexMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return QuantumState::density(rho);
}

ComplexVector random_vector(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_vector(dim, rng);
}
ComplexMatrix random_operator(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_operator(dim, rng);
}
ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian(dim, rng);
}
QuantumState random_pure(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dim, rng);
}
QuantumState random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

ComplexMatrix fock_ladder(std::size_t dim) {
  if (dim < 2) throw DimensionError("Fock ladder needs dim >= 2");
  ComplexMatrix a(dim, dim);
  for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix position_op(std::size_t dim, double hbar) {
  const ComplexMatrix a = fock_ladder(dim);
  return std::sqrt(hbar / 2.0) * (a + a.adjoint());
}

ComplexMatrix momentum_op(std::size_t dim, double hbar) {
  const ComplexMatrix a = fock_ladder(dim);
  return cdouble(0.0, 1.0) * std::sqrt(hbar / 2.0) * (a.adjoint() - a);
}

}  // namespace uncrel
