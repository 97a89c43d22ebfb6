#include "uncrel/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace uncrel {

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<long>(i), static_cast<long>(j)) = m(i, j);
  return out;
}

void require_same_dim(const ComplexVector& u, const ComplexVector& v) {
  if (u.dim() != v.dim())
    throw DimensionError("vector dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                         std::to_string(v.dim()));
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix shape mismatch");
}

}  // namespace

double ComplexVector::norm_sq() const {
  double s = 0.0;
  for (const cdouble& e : entries_) s += std::norm(e);
  return s;
}

double ComplexVector::norm() const { return std::sqrt(norm_sq()); }

ComplexVector& ComplexVector::operator*=(cdouble c) {
  for (cdouble& e : entries_) e *= c;
  return *this;
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other[i];
  return *this;
}

cdouble hermitian_inner(const ComplexVector& u, const ComplexVector& v) {
  require_same_dim(u, v);
  cdouble s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ * cols_ != data_.size()) throw DimensionError("entry count does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cdouble>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged initializer rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cdouble ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  cdouble s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cdouble& e : data_) m = std::max(m, std::abs(e));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble c) {
  for (cdouble& e : data_) e *= c;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector ComplexMatrix::apply(const ComplexVector& v) const {
  if (cols_ != v.dim()) throw DimensionError("matrix-vector shape mismatch");
  ComplexVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    cdouble s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("eigenvalues of non-square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<cdouble> general_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("eigenvalues of non-square matrix");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), false);
  const auto& ev = solver.eigenvalues();
  return std::vector<cdouble>(ev.data(), ev.data() + ev.size());
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("square root of non-square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  const Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXcd s =
      solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = s(static_cast<long>(i), static_cast<long>(j));
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

QuantumState QuantumState::pure(ComplexVector ket) {
  if (ket.dim() == 0) throw DimensionError("empty ket");
  QuantumState s;
  s.kind_ = StateKind::PureKet;
  s.dim_ = ket.dim();
  s.ket_ = std::move(ket);
  return s;
}

QuantumState QuantumState::density(ComplexMatrix rho, double tol) {
  if (!rho.is_square() || rho.rows() == 0) throw DimensionError("density matrix must be square");
  if (!rho.is_hermitian(tol)) throw HermiticityError("density matrix is not Hermitian within tolerance");
  const auto eigs = hermitian_eigenvalues(rho);
  if (!eigs.empty() && eigs.front() < -tol)
    throw PositivityError("density matrix has eigenvalue " + std::to_string(eigs.front()));
  QuantumState s;
  s.kind_ = StateKind::DensityOperator;
  s.dim_ = rho.rows();
  s.rho_ = std::move(rho);
  return s;
}

double QuantumState::trace() const {
  if (kind_ == StateKind::PureKet) return ket_.norm_sq();
  return rho_.trace().real();
}

const ComplexVector& QuantumState::ket() const {
  if (kind_ != StateKind::PureKet) throw PurityError("state is not a pure ket");
  return ket_;
}

const ComplexMatrix& QuantumState::rho() const {
  if (kind_ != StateKind::DensityOperator) throw PurityError("state is not a density operator");
  return rho_;
}

ComplexMatrix QuantumState::density_matrix() const {
  if (kind_ == StateKind::DensityOperator) return rho_;
  ComplexMatrix out(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = ket_[i] * std::conj(ket_[j]);
  return out;
}

cdouble expectation(const QuantumState& state, const ComplexMatrix& a) {
  if (!a.is_square() || a.rows() != state.dim())
    throw DimensionError("operator dimension does not match state");
  if (state.kind() == StateKind::PureKet) {
    return hermitian_inner(state.ket(), a.apply(state.ket()));
  }
  // tr(rho A) = sum_ij rho_ij A_ji
  const ComplexMatrix& rho = state.rho();
  cdouble s = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) s += rho(i, j) * a(j, i);
  return s;
}

ComplexMatrix deviation(const QuantumState& state, const ComplexMatrix& a) {
  const cdouble mean = expectation(state, a);
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) -= mean;
  return out;
}

}  // namespace uncrel
