#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace gbcert {

// Basis conversions (monomial <-> Bernstein) and the exact root-counting oracle
// refuse degrees above this. The triangular conversion maps lose accuracy past
// roughly degree 15-20 in double precision.
inline constexpr int kConversionDegreeCeiling = 20;

// Default absolute slack for cone membership tests.
inline constexpr double kDefaultConeTol = 1e-9;

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  /// Maps x in [lo, hi] to the normalized parameter (x - lo) / (hi - lo).
  double normalize(double x) const { return (x - lo) / (hi - lo); }
  double midpoint() const { return 0.5 * (lo + hi); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Univariate polynomial of degree d stored as its d+1 Bernstein coefficients
/// on [0, 1].
///
/// The coefficient vector is always interpreted on the normalized parameter
/// range [0, 1]. A polynomial can carry a domain [r, s] as metadata (see
/// remap_interval); certification never looks at it, the coefficients are
/// identical either way.
class ScalarPoly {
 public:
  /// The zero constant (degree 0).
  ScalarPoly();
  /// Throws std::invalid_argument for an empty coefficient list.
  explicit ScalarPoly(std::vector<double> coeffs, Interval domain = {});

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  const Interval& domain() const { return domain_; }

  friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

 private:
  std::vector<double> coeffs_;
  Interval domain_;
};

/// A triple (x0, x1; x2) tested against the rotated second order cone
/// { x0 >= 0, x1 >= 0, 2 x0 x1 >= x2^2 }.
struct ConePoint {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Degree-dependent constants that couple neighbouring Bernstein basis
/// functions:
///
///   m_i = (i+1)(d-i+1) / (2 i (d-i))      for 1 <= i <= d-1
///   w_i = 1/2 if 1 < i < d-1, else 1      for 0 <= i <= d
///
/// For d <= 1 there are no interior indices and m is empty; every
/// criterion that uses these constants then degenerates to the plain
/// nonnegative-coefficient test.
class DegreeConstants {
 public:
  explicit DegreeConstants(int degree);

  int degree() const { return degree_; }
  /// m_i, 1 <= i <= d-1.
  double m(int i) const;
  /// w_i, 0 <= i <= d.
  double w(int i) const;

  /// 2 w_{i-1} w_{i+1} / m_i: the squared factor in the geometric-mean lower
  /// bound. Zero at i = 0 and i = d.
  double gb_factor(int i) const;
  /// sqrt(m_i / (w_{i-1} w_{i+1})): scaling of c_i inside the tridiagonal
  /// cone condition.
  double cone_scale(int i) const;

  std::span<const double> m_values() const { return m_; }
  std::span<const double> w_values() const { return w_; }

 private:
  int degree_;
  std::vector<double> m_;  // m_[i-1] = m_i
  std::vector<double> w_;
  std::vector<double> gb_factor_;
  std::vector<double> cone_scale_;
};

/// Binomial coefficient as a double, multiplicative recurrence (exact for the
/// small arguments used here).
double binomial(int n, int k);

/// b_i^d(x) = C(d, i) x^i (1-x)^(d-i). Throws std::invalid_argument for i
/// outside [0, d] or x outside [0, 1].
double basis_eval(int i, int d, double x);

/// Value of p at normalized parameter x in [0, 1] (De Casteljau).
double eval(const ScalarPoly& p, double x);

/// Value of p at x in its recorded domain [r, s].
double eval_on_domain(const ScalarPoly& p, double x);

/// Midpoint subdivision: returns (left, right) with p(x) = left(2x) on
/// [0, 1/2] and p(x) = right(2x - 1) on [1/2, 1].
std::pair<ScalarPoly, ScalarPoly> split(const ScalarPoly& p);

/// Monomial coefficients a_0 + a_1 x + ... -> Bernstein coefficients of the
/// same degree.
ScalarPoly from_monomial(std::span<const double> mono);
/// Same, elevated to `degree` (>= mono.size() - 1).
ScalarPoly from_monomial(std::span<const double> mono, int degree);
std::vector<double> to_monomial(const ScalarPoly& p);

/// Same polynomial in a higher-degree Bernstein basis.
ScalarPoly degree_elevate(const ScalarPoly& p, int new_degree);

/// p + delta (adds delta to every coefficient; partition of unity).
ScalarPoly shift(const ScalarPoly& p, double delta);

/// Attaches domain [r, s] to p. Coefficients are untouched.
ScalarPoly remap_interval(const ScalarPoly& p, double r, double s);

bool cone_member(const ConePoint& pt, double tol = kDefaultConeTol);

}  // namespace gbcert
