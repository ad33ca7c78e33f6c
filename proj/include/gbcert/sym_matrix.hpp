#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gbcert {

/// Dense square matrix, row-major. Used for general (not necessarily
/// symmetric) data such as block-certificate witnesses.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n);
  Matrix(std::size_t n, std::vector<double> row_major);

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> data() const { return data_; }

  Matrix transpose() const;
  double frobenius_norm() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Symmetric matrix. Construction from a general matrix stores (M + M^T) / 2,
/// so every instance is exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n);
  explicit SymMatrix(const Matrix& m);

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(std::span<const double> diag);

  std::size_t size() const { return m_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  /// Sets entries (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v);
  const Matrix& matrix() const { return m_; }
  double frobenius_norm() const { return m_.frobenius_norm(); }

  SymMatrix& operator+=(const SymMatrix& rhs);
  SymMatrix& operator-=(const SymMatrix& rhs);
  SymMatrix& operator*=(double s);

  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix m_;
};

/// Spectral factorization X = V diag(values) V^T with orthonormal columns in
/// `vectors` and `values` sorted in descending order.
struct EigDecomp {
  Matrix vectors;
  std::vector<double> values;
};

/// Cyclic Jacobi eigensolver. Sweeps until the off-diagonal Frobenius norm is
/// below 1e-13 * ||X||_F (at most 100 sweeps). Throws std::invalid_argument on
/// non-finite input.
EigDecomp eig_sym(const SymMatrix& x);

double min_eigenvalue(const SymMatrix& x);

/// V f(D) V^T for a decomposition and already-transformed eigenvalues.
SymMatrix from_spectrum(const Matrix& vectors, std::span<const double> values);

/// Nearest PSD matrix in Frobenius norm (negative eigenvalues clipped to 0).
SymMatrix psd_project(const SymMatrix& x);

/// Principal square root. Eigenvalues down to -1e-8 * ||X||_F are treated
/// as zero; anything more negative throws std::domain_error.
SymMatrix sqrt_psd(const SymMatrix& x);

/// Matrix geometric mean A # B = A^1/2 (A^-1/2 B A^-1/2)^1/2 A^1/2.
///
/// Scale is ||A||_F + ||B||_F. Inputs may be PSD up to -1e-8 * scale;
/// below that std::domain_error is thrown. The better conditioned argument
/// serves as the base (A # B = B # A). Base eigenvalues at or below 1e-12
/// times its largest are treated as zero, and on the remaining range the
/// continuous extension is evaluated exactly as D # S, with S the shorted
/// operator (generalized Schur complement) of the other argument. The result
/// never exceeds the true mean, so [[A, A # B], [A # B, B]] stays PSD.
SymMatrix geo_mean(const SymMatrix& a, const SymMatrix& b);

/// Symmetric 2n x 2n block matrix [[A, X], [X^T, B]].
SymMatrix block2(const SymMatrix& a, const Matrix& x, const SymMatrix& b);

}  // namespace gbcert
