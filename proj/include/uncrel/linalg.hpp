#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "uncrel/errors.hpp"

namespace uncrel {

using cdouble = std::complex<double>;

// Default entrywise tolerance for Hermiticity / positivity checks.
inline constexpr double kCheckTol = 1e-10;
// Default relative slack tolerance for inequality reports.
inline constexpr double kSlackTol = 1e-9;

/// Dense complex vector.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : entries_(dim) {}
  ComplexVector(std::initializer_list<cdouble> init) : entries_(init) {}
  explicit ComplexVector(std::vector<cdouble> entries) : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  cdouble& operator[](std::size_t i) { return entries_[i]; }
  const cdouble& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<cdouble>& entries() const { return entries_; }

  double norm() const;
  double norm_sq() const;

  ComplexVector& operator*=(cdouble c);
  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);
  friend ComplexVector operator*(cdouble c, ComplexVector v) {
    v *= c;
    return v;
  }
  friend ComplexVector operator+(ComplexVector a, const ComplexVector& b) {
    a += b;
    return a;
  }
  friend ComplexVector operator-(ComplexVector a, const ComplexVector& b) {
    a -= b;
    return a;
  }
  bool operator==(const ComplexVector&) const = default;

 private:
  std::vector<cdouble> entries_;
};

/// u.v = sum_i conj(u_i) v_i.
cdouble hermitian_inner(const ComplexVector& u, const ComplexVector& v);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> data);
  /// 2D brace construction: ComplexMatrix{{a, b}, {c, d}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<cdouble>& data() const { return data_; }

  ComplexMatrix adjoint() const;
  cdouble trace() const;
  double max_abs() const;
  bool is_hermitian(double tol = kCheckTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cdouble c);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(cdouble c, ComplexMatrix m) {
    m *= c;
    return m;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  ComplexVector apply(const ComplexVector& v) const;
  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> data_;
};

/// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
/// Eigenvalues of a general square matrix (unordered).
std::vector<cdouble> general_eigenvalues(const ComplexMatrix& m);
/// Positive-semidefinite square root of a Hermitian matrix; negative
/// eigenvalues (roundoff) are clamped to zero.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m);
/// Singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& m);

enum class StateKind { PureKet, DensityOperator };

/// Pure ket or density operator; normalization to 1 is not required.
class QuantumState {
 public:
  static QuantumState pure(ComplexVector ket);
  /// Validates Hermiticity and positive semidefiniteness within tol.
  static QuantumState density(ComplexMatrix rho, double tol = kCheckTol);

  StateKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  bool is_pure() const { return kind_ == StateKind::PureKet; }
  /// tr(rho), or <psi|psi> for kets. Real by construction.
  double trace() const;
  const ComplexVector& ket() const;
  const ComplexMatrix& rho() const;
  /// Density matrix; builds |psi><psi| for kets.
  ComplexMatrix density_matrix() const;

 private:
  QuantumState() = default;
  StateKind kind_ = StateKind::PureKet;
  std::size_t dim_ = 0;
  ComplexVector ket_;
  ComplexMatrix rho_;
};

/// <A> = <psi|A|psi> or tr(rho A).
cdouble expectation(const QuantumState& state, const ComplexMatrix& a);
/// A - <A> I.
ComplexMatrix deviation(const QuantumState& state, const ComplexMatrix& a);

}  // namespace uncrel
