#include "gbcert/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace gbcert {

namespace {

constexpr double kJacobiRelTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kPsdDustRel = 1e-8;
constexpr double kGeoMeanRankTol = 1e-12;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

// Clips eigenvalues and rebuilds, or throws if the matrix is too indefinite.
SymMatrix clamp_psd(const EigDecomp& e, double scale, const char* what) {
  if (!e.values.empty() && e.values.back() < -kPsdDustRel * scale) {
    throw std::domain_error(std::string(what) + ": matrix is not positive semidefinite");
  }
  std::vector<double> v(e.values);
  for (double& x : v) x = std::max(x, 0.0);
  return from_spectrum(e.vectors, v);
}

// Ratio of smallest to largest eigenvalue; 0 for singular or zero matrices.
double conditioning(const EigDecomp& e) {
  const double hi = e.values.front();
  return hi > 0.0 ? std::max(e.values.back(), 0.0) / hi : 0.0;
}

// Moore-Penrose inverse, dropping eigenvalues at or below tol * largest.
Matrix pseudo_inverse(const SymMatrix& x, double tol) {
  EigDecomp e = eig_sym(x);
  const double cut = tol * std::max(e.values.front(), 0.0);
  for (double& v : e.values) v = v > cut ? 1.0 / v : 0.0;
  return from_spectrum(e.vectors, e.values).matrix();
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

Matrix::Matrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw std::invalid_argument("Matrix: data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

double Matrix::frobenius_norm() const {
  return std::sqrt(std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0));
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("Matrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("Matrix: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Matrix: dimension mismatch");
  const std::size_t n = a.n_;
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

SymMatrix::SymMatrix(std::size_t n) : m_(n) {}

SymMatrix::SymMatrix(const Matrix& m) : m_(m.size()) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      m_(i, j) = v;
      m_(j, i) = v;
    }
  }
}

SymMatrix SymMatrix::identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  SymMatrix s(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) s.m_(i, i) = diag[i];
  return s;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  m_(i, j) = v;
  m_(j, i) = v;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs) {
  m_ += rhs.m_;
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& rhs) {
  m_ -= rhs.m_;
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

EigDecomp eig_sym(const SymMatrix& x) {
  const std::size_t n = x.size();
  for (double v : x.matrix().data()) {
    if (!std::isfinite(v)) throw std::invalid_argument("eig_sym: non-finite entry");
  }
  Matrix a = x.matrix();
  Matrix v = Matrix::identity(n);
  const double threshold = kJacobiRelTol * a.frobenius_norm();

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(p, k) = a(k, p);
          a(k, q) = s * akp + c * akq;
          a(q, k) = a(k, q);
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
  EigDecomp out{Matrix(n), std::vector<double>(n)};
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]);
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

double min_eigenvalue(const SymMatrix& x) {
  if (x.size() == 0) return 0.0;
  return eig_sym(x).values.back();
}

SymMatrix from_spectrum(const Matrix& vectors, std::span<const double> values) {
  const std::size_t n = vectors.size();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += vectors(i, k) * values[k] * vectors(j, k);
      out(i, j) = s;
      out(j, i) = s;
    }
  }
  return SymMatrix(out);
}

SymMatrix psd_project(const SymMatrix& x) {
  EigDecomp e = eig_sym(x);
  for (double& v : e.values) v = std::max(v, 0.0);
  return from_spectrum(e.vectors, e.values);
}

SymMatrix sqrt_psd(const SymMatrix& x) {
  EigDecomp e = eig_sym(x);
  if (!e.values.empty() && e.values.back() < -kPsdDustRel * x.frobenius_norm()) {
    throw std::domain_error("sqrt_psd: matrix is not positive semidefinite");
  }
  for (double& v : e.values) v = std::sqrt(std::max(v, 0.0));
  return from_spectrum(e.vectors, e.values);
}

SymMatrix geo_mean(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("geo_mean: dimension mismatch");
  const std::size_t n = a.size();
  const double scale = a.frobenius_norm() + b.frobenius_norm();
  if (scale == 0.0) return SymMatrix(n);

  const SymMatrix ac = clamp_psd(eig_sym(a), scale, "geo_mean");
  const SymMatrix bc = clamp_psd(eig_sym(b), scale, "geo_mean");

  // A # B = B # A: use the better conditioned argument as the base.
  EigDecomp ea = eig_sym(ac);
  const EigDecomp eb = eig_sym(bc);
  const SymMatrix* other = &bc;
  if (conditioning(eb) > conditioning(ea)) {
    ea = eb;
    other = &ac;
  }
  if (ea.values.front() <= 0.0) return SymMatrix(n);

  // In the eigenbasis of the base A = diag(D, 0) with D of size r. The mean
  // lives on the leading block and equals D # S, where S is the shorted
  // operator (generalized Schur complement) of B onto those coordinates.
  const double cut = kGeoMeanRankTol * ea.values.front();
  std::size_t r = 0;
  while (r < n && ea.values[r] > cut) ++r;
  const std::size_t k = n - r;

  const Matrix bt = ea.vectors.transpose() * other->matrix() * ea.vectors;
  Matrix s(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) s(i, j) = bt(i, j);
  }
  if (k > 0) {
    Matrix bww(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) bww(i, j) = bt(r + i, r + j);
    }
    const Matrix pinv = pseudo_inverse(SymMatrix(bww), kGeoMeanRankTol);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        double acc = 0.0;
        for (std::size_t p = 0; p < k; ++p) {
          for (std::size_t q = 0; q < k; ++q) acc += bt(i, r + p) * pinv(p, q) * bt(j, r + q);
        }
        s(i, j) -= acc;
      }
    }
  }

  // D^1/2 (D^-1/2 S D^-1/2)^1/2 D^1/2 with D diagonal.
  std::vector<double> root(r);
  for (std::size_t i = 0; i < r; ++i) root[i] = std::sqrt(ea.values[i]);
  Matrix inner(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) inner(i, j) = s(i, j) / (root[i] * root[j]);
  }
  const Matrix inner_root = sqrt_psd(psd_project(SymMatrix(inner))).matrix();
  Matrix y(n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) y(i, j) = root[i] * inner_root(i, j) * root[j];
  }
  return SymMatrix(ea.vectors * y * ea.vectors.transpose());
}

SymMatrix block2(const SymMatrix& a, const Matrix& x, const SymMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n || x.size() != n) throw std::invalid_argument("block2: dimension mismatch");
  Matrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(n + i, n + j) = b(i, j);
      m(i, n + j) = x(i, j);
      m(n + j, i) = x(i, j);
    }
  }
  return SymMatrix(m);
}

}  // namespace gbcert
