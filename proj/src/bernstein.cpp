#include "gbcert/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gbcert {

namespace {

void check_conversion_degree(int d) {
  if (d > kConversionDegreeCeiling) {
    throw std::invalid_argument("basis conversion degree " + std::to_string(d) +
                                " exceeds ceiling " +
                                std::to_string(kConversionDegreeCeiling));
  }
}

void check_unit(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("parameter must lie in [0, 1]");
  }
}

double ipow(double base, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

ScalarPoly::ScalarPoly() : coeffs_{0.0} {}

ScalarPoly::ScalarPoly(std::vector<double> coeffs, Interval domain)
    : coeffs_(std::move(coeffs)), domain_(domain) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("ScalarPoly needs at least one coefficient");
  }
  if (!(domain_.lo < domain_.hi)) {
    throw std::invalid_argument("ScalarPoly domain must satisfy lo < hi");
  }
}

DegreeConstants::DegreeConstants(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  const int d = degree;
  w_.resize(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) w_[i] = (1 < i && i < d - 1) ? 0.5 : 1.0;

  gb_factor_.assign(static_cast<std::size_t>(d) + 1, 0.0);
  cone_scale_.assign(static_cast<std::size_t>(d) + 1, 0.0);
  for (int i = 1; i <= d - 1; ++i) {
    const double mi = 0.5 * static_cast<double>((i + 1) * (d - i + 1)) /
                      static_cast<double>(i * (d - i));
    m_.push_back(mi);
    const double ww = w_[i - 1] * w_[i + 1];
    gb_factor_[i] = 2.0 * ww / mi;
    cone_scale_[i] = std::sqrt(mi / ww);
  }
}

double DegreeConstants::m(int i) const {
  if (i < 1 || i > degree_ - 1) throw std::invalid_argument("m_i index out of range");
  return m_[i - 1];
}

double DegreeConstants::w(int i) const {
  if (i < 0 || i > degree_) throw std::invalid_argument("w_i index out of range");
  return w_[i];
}

double DegreeConstants::gb_factor(int i) const {
  if (i < 0 || i > degree_) throw std::invalid_argument("index out of range");
  return gb_factor_[i];
}

double DegreeConstants::cone_scale(int i) const {
  if (i < 1 || i > degree_ - 1) throw std::invalid_argument("index out of range");
  return cone_scale_[i];
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int j = 1; j <= k; ++j) {
    r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
  }
  return std::round(r);
}

double basis_eval(int i, int d, double x) {
  if (d < 0 || i < 0 || i > d) throw std::invalid_argument("basis index out of range");
  check_unit(x);
  return binomial(d, i) * ipow(x, i) * ipow(1.0 - x, d - i);
}

double eval(const ScalarPoly& p, double x) {
  check_unit(x);
  std::vector<double> work(p.coeffs().begin(), p.coeffs().end());
  const double u = 1.0 - x;
  for (std::size_t level = work.size() - 1; level > 0; --level) {
    for (std::size_t j = 0; j < level; ++j) work[j] = u * work[j] + x * work[j + 1];
  }
  return work[0];
}

double eval_on_domain(const ScalarPoly& p, double x) {
  return eval(p, p.domain().normalize(x));
}

std::pair<ScalarPoly, ScalarPoly> split(const ScalarPoly& p) {
  const std::size_t n = p.coeffs().size();
  std::vector<double> work(p.coeffs().begin(), p.coeffs().end());
  std::vector<double> left(n), right(n);
  left[0] = work[0];
  right[n - 1] = work[n - 1];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t j = 0; j + level < n; ++j) work[j] = 0.5 * (work[j] + work[j + 1]);
    left[level] = work[0];
    right[n - 1 - level] = work[n - 1 - level];
  }
  return {ScalarPoly(std::move(left)), ScalarPoly(std::move(right))};
}

ScalarPoly from_monomial(std::span<const double> mono) {
  if (mono.empty()) throw std::invalid_argument("empty monomial coefficient list");
  return from_monomial(mono, static_cast<int>(mono.size()) - 1);
}

ScalarPoly from_monomial(std::span<const double> mono, int degree) {
  if (mono.empty()) throw std::invalid_argument("empty monomial coefficient list");
  if (degree < static_cast<int>(mono.size()) - 1) {
    throw std::invalid_argument("target degree below monomial degree");
  }
  check_conversion_degree(degree);
  // p_i = sum_{k <= i} C(i, k) / C(d, k) a_k, accumulated in extended
  // precision since the alternating inverse map amplifies rounding.
  std::vector<double> out(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int i = 0; i <= degree; ++i) {
    long double acc = 0.0L;
    for (int k = 0; k <= i && k < static_cast<int>(mono.size()); ++k) {
      acc += static_cast<long double>(binomial(i, k)) / binomial(degree, k) * mono[k];
    }
    out[i] = static_cast<double>(acc);
  }
  return ScalarPoly(std::move(out));
}

std::vector<double> to_monomial(const ScalarPoly& p) {
  const int d = p.degree();
  check_conversion_degree(d);
  // a_k = C(d, k) sum_{i <= k} (-1)^(k-i) C(k, i) p_i
  std::vector<double> out(static_cast<std::size_t>(d) + 1, 0.0);
  for (int k = 0; k <= d; ++k) {
    long double acc = 0.0L;
    for (int i = 0; i <= k; ++i) {
      const long double sign = ((k - i) % 2 == 0) ? 1.0L : -1.0L;
      acc += sign * binomial(k, i) * p[i];
    }
    out[k] = static_cast<double>(binomial(d, k) * acc);
  }
  return out;
}

ScalarPoly degree_elevate(const ScalarPoly& p, int new_degree) {
  if (new_degree < p.degree()) {
    throw std::invalid_argument("degree_elevate: target degree below current degree");
  }
  std::vector<double> cur(p.coeffs().begin(), p.coeffs().end());
  for (int d = p.degree(); d < new_degree; ++d) {
    std::vector<double> next(cur.size() + 1);
    const double denom = static_cast<double>(d + 1);
    next[0] = cur[0];
    next[d + 1] = cur[d];
    for (int i = 1; i <= d; ++i) {
      const double a = static_cast<double>(i) / denom;
      next[i] = a * cur[i - 1] + (1.0 - a) * cur[i];
    }
    cur = std::move(next);
  }
  return ScalarPoly(std::move(cur), p.domain());
}

ScalarPoly shift(const ScalarPoly& p, double delta) {
  std::vector<double> out(p.coeffs().begin(), p.coeffs().end());
  for (double& c : out) c += delta;
  return ScalarPoly(std::move(out), p.domain());
}

ScalarPoly remap_interval(const ScalarPoly& p, double r, double s) {
  if (!(r < s)) throw std::invalid_argument("remap_interval requires r < s");
  return ScalarPoly(std::vector<double>(p.coeffs().begin(), p.coeffs().end()), Interval{r, s});
}

bool cone_member(const ConePoint& pt, double tol) {
  return pt.x0 >= -tol && pt.x1 >= -tol && 2.0 * pt.x0 * pt.x1 - pt.x2 * pt.x2 >= -tol;
}

}  // namespace gbcert
