#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gbcert/bernstein.hpp"
#include "gbcert/sym_matrix.hpp"

namespace gbcert {

// Default PSD slack for matrix membership tests, relative to matrix_scale(P).
inline constexpr double kDefaultMatrixTol = 1e-9;

/// P(x) = sum_i b_i(x) P_i with symmetric n x n coefficients P_0..P_d.
class MatrixPoly {
 public:
  /// Throws std::invalid_argument for an empty list or mismatched sizes.
  explicit MatrixPoly(std::vector<SymMatrix> coeffs);
  /// The n x n polynomial with p on the diagonal.
  static MatrixPoly diagonal(const ScalarPoly& p, std::size_t n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t dim() const { return coeffs_.front().size(); }
  const SymMatrix& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<SymMatrix>& coeffs() const { return coeffs_; }

 private:
  std::vector<SymMatrix> coeffs_;
};

/// Auxiliary matrices C_0..C_d for the block certificate; C_0 = C_d = 0.
/// Entries need not be symmetric.
class MatrixWitness {
 public:
  static MatrixWitness zeros(int degree, std::size_t n);
  /// Throws std::invalid_argument on mismatched sizes or nonzero endpoints.
  explicit MatrixWitness(std::vector<Matrix> c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t dim() const { return c_.front().size(); }
  const Matrix& operator[](std::size_t i) const { return c_[i]; }

 private:
  std::vector<Matrix> c_;
};

/// Largest Frobenius norm among the coefficients. Tolerances are relative to it.
double matrix_scale(const MatrixPoly& p);

/// Entrywise De Casteljau at x in [0, 1].
SymMatrix eval_matrix(const MatrixPoly& p, double x);

/// Entrywise midpoint subdivision, same conventions as split().
std::pair<MatrixPoly, MatrixPoly> split_matrix(const MatrixPoly& p);

/// P + delta I.
MatrixPoly shift_matrix(const MatrixPoly& p, double delta);

/// Every coefficient has smallest eigenvalue >= -tol * scale.
bool in_nb_matrix(const MatrixPoly& p, double tol = kDefaultMatrixTol);

/// sqrt(2 w_{i-1} w_{i+1} / m_i) ((P_{i-1})_+ # (P_{i+1})_+); zero at i = 0, d.
SymMatrix gb_matrix_bound(const MatrixPoly& p, int i);

/// Smallest eigenvalue of P_i + gb_matrix_bound(P, i) >= -tol * scale for all i.
bool in_gb_matrix(const MatrixPoly& p, double tol = kDefaultMatrixTol);

/// C_i = -sqrt(w_{i-1} w_{i+1} / (2 m_i)) ((P_{i-1})_+ # (P_{i+1})_+).
///
/// This makes the off-diagonal block of check_block_certificate equal to
/// -(P_{i-1})_+ # (P_{i+1})_+. When both neighbours P_{i-1}, P_{i+1} are PSD
/// and P is in GB the certificate holds. With an indefinite neighbour the
/// positive part still contributes a nonzero off-diagonal block and the
/// certificate can fail even though P is in GB.
MatrixWitness gb_matrix_witness(const MatrixPoly& p);

/// For each 1 <= i <= d-1, the 2n x 2n matrix
///   [ P_{i-1} - C_{i-1} - C_{i-1}^T    k C_i                          ]
///   [ k C_i^T                          P_{i+1} - C_{i+1} - C_{i+1}^T  ]
/// with k = sqrt(2 m_i / (w_{i-1} w_{i+1})) has smallest eigenvalue
/// >= -tol * scale. For d = 2 the remainder P_1 - C_1 - C_1^T must also be
/// PSD; for d <= 1 this is in_nb_matrix. A true result (up to the
/// tolerance) proves P(x) is PSD on [0, 1].
bool check_block_certificate(const MatrixPoly& p, const MatrixWitness& c,
                             double tol = kDefaultMatrixTol);

/// Minimum over x_k = k / (grid_points - 1) of the smallest eigenvalue of P(x_k).
/// Throws std::invalid_argument if grid_points < 2.
double min_eig_over_interval(const MatrixPoly& p, int grid_points);

}  // namespace gbcert
