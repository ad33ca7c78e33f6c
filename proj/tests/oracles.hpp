#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's evaluation, conversion or eigen routines.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gbcert/bernstein.hpp"
#include "gbcert/matrix_cert.hpp"
#include "gbcert/sym_matrix.hpp"

namespace oracle {

inline double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::uint64_t>(n - k + j) / j;
  return static_cast<double>(r);
}

inline double ipow(double x, int k) {
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= x;
  return r;
}

inline double bernstein_basis(int i, int d, double x) {
  return choose(d, i) * ipow(x, i) * ipow(1.0 - x, d - i);
}

/// Direct sum of c_i b_i(x).
inline double bernstein_sum(std::span<const double> c, double x) {
  const int d = static_cast<int>(c.size()) - 1;
  double s = 0.0;
  for (int i = 0; i <= d; ++i) s += c[i] * bernstein_basis(i, d, x);
  return s;
}

inline double bernstein_sum(const gbcert::ScalarPoly& p, double x) {
  return bernstein_sum(p.coeffs(), x);
}

inline double monomial_sum(std::span<const double> a, double x) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * std::pow(x, static_cast<double>(k));
  return s;
}

inline double grid_min(const gbcert::ScalarPoly& p, int points) {
  double m = HUGE_VAL;
  for (int k = 0; k < points; ++k) {
    m = std::min(m, bernstein_sum(p, static_cast<double>(k) / (points - 1)));
  }
  return m;
}

inline Eigen::MatrixXd to_eigen(const gbcert::Matrix& m) {
  Eigen::MatrixXd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) e(i, j) = m(i, j);
  }
  return e;
}

inline Eigen::MatrixXd to_eigen(const gbcert::SymMatrix& m) { return to_eigen(m.matrix()); }

inline gbcert::SymMatrix from_eigen(const Eigen::MatrixXd& e) {
  gbcert::Matrix m(static_cast<std::size_t>(e.rows()));
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  }
  return gbcert::SymMatrix(m);
}

inline double min_eig(const Eigen::MatrixXd& e) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(e, Eigen::EigenvaluesOnly)
      .eigenvalues()
      .minCoeff();
}

inline Eigen::MatrixXd matrix_sum(const gbcert::MatrixPoly& p, double x) {
  const int d = p.degree();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p.dim(), p.dim());
  for (int i = 0; i <= d; ++i) s += bernstein_basis(i, d, x) * to_eigen(p[i]);
  return s;
}

inline double matrix_grid_min(const gbcert::MatrixPoly& p, int points) {
  double m = HUGE_VAL;
  for (int k = 0; k < points; ++k) {
    m = std::min(m, min_eig(matrix_sum(p, static_cast<double>(k) / (points - 1))));
  }
  return m;
}

/// Smallest eigenvalue over 1 <= i <= d-1 of the 2x2 matrices
///   [ p_{i-1} - c_{i-1}         s_i c_i / sqrt(2) ]
///   [ s_i c_i / sqrt(2)         p_{i+1} - c_{i+1} ]
/// with s_i^2 = m_i / (w_{i-1} w_{i+1}); the certificate holds iff this is
/// nonnegative (and, for d = 2, p_1 >= c_1).
inline double tridiag_margin(std::span<const double> p, std::span<const double> c) {
  const int d = static_cast<int>(p.size()) - 1;
  auto w = [d](int i) { return (1 < i && i < d - 1) ? 0.5 : 1.0; };
  double best = HUGE_VAL;
  for (int i = 1; i < d; ++i) {
    const double m = 0.5 * (i + 1) * (d - i + 1) / (static_cast<double>(i) * (d - i));
    const double off = std::sqrt(m / (w(i - 1) * w(i + 1))) * c[i] / std::sqrt(2.0);
    Eigen::Matrix2d b;
    b << p[i - 1] - c[i - 1], off, off, p[i + 1] - c[i + 1];
    best = std::min(best, Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(b).eigenvalues()(0));
  }
  if (d == 2) best = std::min(best, p[1] - c[1]);
  return best;
}

/// Test-side generator, deliberately separate from gbcert::Rng.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(eng_); }
  double normal() { return std::normal_distribution<>(0.0, 1.0)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(eng_); }

  gbcert::ScalarPoly poly(int d, double lo, double hi) {
    std::vector<double> c(static_cast<std::size_t>(d) + 1);
    for (double& v : c) v = uniform(lo, hi);
    return gbcert::ScalarPoly(std::move(c));
  }

  gbcert::SymMatrix sym(std::size_t n) {
    gbcert::Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = normal();
    }
    return gbcert::SymMatrix(m);
  }

  /// G G^T + eps I with Gaussian G.
  gbcert::SymMatrix pd(std::size_t n, double eps = 1e-3) {
    gbcert::Matrix g(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = normal();
    }
    return gbcert::SymMatrix(g * g.transpose()) + eps * gbcert::SymMatrix::identity(n);
  }

  /// Mix of PSD and indefinite coefficients, shifted towards PSD.
  gbcert::MatrixPoly matrix_poly(int d, std::size_t n) {
    std::vector<gbcert::SymMatrix> c;
    for (int i = 0; i <= d; ++i) {
      gbcert::SymMatrix s = pd(n, 0.0);
      if (uniform(0.0, 1.0) < 0.5) {
        double mean_eig = 0.0;
        for (std::size_t k = 0; k < n; ++k) mean_eig += s(k, k) / static_cast<double>(n);
        s -= uniform(0.0, 1.5) * uniform(0.0, 1.0) * mean_eig * gbcert::SymMatrix::identity(n);
      }
      c.push_back(s);
    }
    return gbcert::MatrixPoly(std::move(c));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace oracle
