#include "gbcert/matrix_cert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gbcert {

namespace {

bool is_zero(const Matrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](double v) { return v == 0.0; });
}

}  // namespace

MatrixPoly::MatrixPoly(std::vector<SymMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("MatrixPoly needs at least one coefficient");
  const std::size_t n = coeffs_.front().size();
  for (const SymMatrix& c : coeffs_) {
    if (c.size() != n) throw std::invalid_argument("MatrixPoly coefficient sizes differ");
  }
}

MatrixPoly MatrixPoly::diagonal(const ScalarPoly& p, std::size_t n) {
  std::vector<SymMatrix> out;
  out.reserve(p.coeffs().size());
  for (double c : p.coeffs()) out.push_back(SymMatrix::diagonal(std::vector<double>(n, c)));
  return MatrixPoly(std::move(out));
}

MatrixWitness MatrixWitness::zeros(int degree, std::size_t n) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  return MatrixWitness(std::vector<Matrix>(static_cast<std::size_t>(degree) + 1, Matrix(n)));
}

MatrixWitness::MatrixWitness(std::vector<Matrix> c) : c_(std::move(c)) {
  if (c_.empty()) throw std::invalid_argument("witness needs at least one entry");
  const std::size_t n = c_.front().size();
  for (const Matrix& m : c_) {
    if (m.size() != n) throw std::invalid_argument("witness matrix sizes differ");
  }
  if (!is_zero(c_.front()) || !is_zero(c_.back())) {
    throw std::invalid_argument("witness endpoints must be zero");
  }
}

double matrix_scale(const MatrixPoly& p) {
  double s = 0.0;
  for (const SymMatrix& c : p.coeffs()) s = std::max(s, c.frobenius_norm());
  return s;
}

SymMatrix eval_matrix(const MatrixPoly& p, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("parameter must lie in [0, 1]");
  std::vector<Matrix> work;
  work.reserve(p.coeffs().size());
  for (const SymMatrix& c : p.coeffs()) work.push_back(c.matrix());
  const double u = 1.0 - x;
  for (std::size_t level = work.size() - 1; level > 0; --level) {
    for (std::size_t j = 0; j < level; ++j) work[j] = u * work[j] + x * work[j + 1];
  }
  return SymMatrix(work[0]);
}

std::pair<MatrixPoly, MatrixPoly> split_matrix(const MatrixPoly& p) {
  const std::size_t m = p.coeffs().size();
  std::vector<Matrix> work;
  work.reserve(m);
  for (const SymMatrix& c : p.coeffs()) work.push_back(c.matrix());
  std::vector<SymMatrix> left(m), right(m);
  left[0] = p[0];
  right[m - 1] = p[m - 1];
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t j = 0; j + level < m; ++j) work[j] = 0.5 * (work[j] + work[j + 1]);
    left[level] = SymMatrix(work[0]);
    right[m - 1 - level] = SymMatrix(work[m - 1 - level]);
  }
  return {MatrixPoly(std::move(left)), MatrixPoly(std::move(right))};
}

MatrixPoly shift_matrix(const MatrixPoly& p, double delta) {
  const SymMatrix d = delta * SymMatrix::identity(p.dim());
  std::vector<SymMatrix> out(p.coeffs());
  for (SymMatrix& c : out) c += d;
  return MatrixPoly(std::move(out));
}

bool in_nb_matrix(const MatrixPoly& p, double tol) {
  const double floor = -tol * matrix_scale(p);
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [&](const SymMatrix& c) { return min_eigenvalue(c) >= floor; });
}

SymMatrix gb_matrix_bound(const MatrixPoly& p, int i) {
  const int d = p.degree();
  if (i < 0 || i > d) throw std::invalid_argument("gb_matrix_bound: index out of range");
  if (i == 0 || i == d) return SymMatrix(p.dim());
  const DegreeConstants k(d);
  return std::sqrt(k.gb_factor(i)) * geo_mean(psd_project(p[i - 1]), psd_project(p[i + 1]));
}

bool in_gb_matrix(const MatrixPoly& p, double tol) {
  const double floor = -tol * matrix_scale(p);
  for (int i = 0; i <= p.degree(); ++i) {
    if (min_eigenvalue(p[i] + gb_matrix_bound(p, i)) < floor) return false;
  }
  return true;
}

MatrixWitness gb_matrix_witness(const MatrixPoly& p) {
  const int d = p.degree();
  std::vector<Matrix> c(static_cast<std::size_t>(d) + 1, Matrix(p.dim()));
  // sqrt(ww / (2m)) is half of sqrt(2ww / m).
  for (int i = 1; i <= d - 1; ++i) c[i] = -0.5 * gb_matrix_bound(p, i).matrix();
  return MatrixWitness(std::move(c));
}

bool check_block_certificate(const MatrixPoly& p, const MatrixWitness& c, double tol) {
  const int d = p.degree();
  if (c.degree() != d || c.dim() != p.dim()) {
    throw std::invalid_argument("witness does not match polynomial dimensions");
  }
  if (d <= 1) return in_nb_matrix(p, tol);
  const double floor = -tol * matrix_scale(p);
  const DegreeConstants k(d);
  auto diag_block = [&](int j) {
    return SymMatrix(p[j].matrix() - c[j] - c[j].transpose());
  };
  for (int i = 1; i <= d - 1; ++i) {
    const double kappa = std::sqrt(2.0) * k.cone_scale(i);
    const SymMatrix blk = block2(diag_block(i - 1), kappa * c[i], diag_block(i + 1));
    if (min_eigenvalue(blk) < floor) return false;
  }
  // For d = 2, P_1 is nobody's neighbour and its remainder must be PSD alone.
  if (d == 2 && min_eigenvalue(diag_block(1)) < floor) return false;
  return true;
}

double min_eig_over_interval(const MatrixPoly& p, int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("grid_points must be at least 2");
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid_points; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(grid_points - 1);
    best = std::min(best, min_eigenvalue(eval_matrix(p, x)));
  }
  return best;
}

}  // namespace gbcert
