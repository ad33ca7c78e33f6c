#pragma once

#include <optional>
#include <vector>

#include "gbcert/bernstein.hpp"
#include "gbcert/sym_matrix.hpp"

namespace gbcert {

/// Auxiliary sequence c_0..c_d for the tridiagonal cone certificate.
/// c_0 = c_d = 0 always.
class CertificateWitness {
 public:
  /// All-zero witness for degree d (this is the NB certificate).
  static CertificateWitness zeros(int degree);
  /// Throws std::invalid_argument unless c.front() == c.back() == 0.
  explicit CertificateWitness(std::vector<double> c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](std::size_t i) const { return c_[i]; }
  const std::vector<double>& values() const { return c_; }

 private:
  std::vector<double> c_;
};

/// True iff every Bernstein coefficient is >= 0 (exact comparison).
bool in_nb(const ScalarPoly& p);

/// -sqrt( 2 w_{i-1} w_{i+1} / m_i * (p_{i-1})_+ (p_{i+1})_+ ), with
/// coefficients outside [0, d] read as 0. Always <= 0; zero at i = 0, d.
double gb_lower_bound(const ScalarPoly& p, int i);

/// Geometric-Bernstein membership: p_i >= gb_lower_bound(p, i) for all i.
/// For degree <= 1 this is identical to in_nb.
bool in_gb(const ScalarPoly& p);

/// The explicit witness c_i = gb_lower_bound(p, i) for 1 <= i <= d-1.
CertificateWitness gb_witness(const ScalarPoly& p);

/// Checks, for every 1 <= i <= d-1, that
///   (p_{i-1} - c_{i-1}, p_{i+1} - c_{i+1}; c_i sqrt(m_i / (w_{i-1} w_{i+1})))
/// lies in the rotated cone up to `tol`. For d = 2 it also requires
/// p_1 - c_1 >= -tol, since p_1 is no index's neighbour. A true result with
/// tol = 0 proves p >= 0 on [0, 1].
bool check_tridiag_certificate(const ScalarPoly& p, const CertificateWitness& c,
                               double tol = kDefaultConeTol);

// ---- cubic-only machinery -------------------------------------------------
//
// (c1, c2) below are in the same parametrization as CertificateWitness for
// d = 3, i.e. the cone conditions read
//   (p0, p2 - c2; sqrt(3/2) c1) in Q   and   (p1 - c1, p3; sqrt(3/2) c2) in Q.
// Formulations that write c/3 in place of c use constants three times larger.

struct CubicWitness {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// The two cone conditions above, each at absolute slack `tol`.
bool cubic_socp_feasible(const ScalarPoly& p, const CubicWitness& c,
                         double tol = kDefaultConeTol);

/// Witness (c1, c2) for a cubic nonnegative on [0, 1]; nullopt iff p is not
/// nonnegative there (decided by nonneg_oracle). Tries the geometric-mean
/// choice first, then maximizes the slack of the cone conditions over c2.
std::optional<CubicWitness> cubic_socp_witness(const ScalarPoly& p);

/// Discriminant of the cubic in Bernstein form:
/// -27(-3 p1^2 p2^2 + 4 p0 p2^3 + 4 p1^3 p3 - 6 p0 p1 p2 p3 + p0^2 p3^2).
double cubic_discriminant(const ScalarPoly& p);

enum class CubicBranch { DiscriminantNegative, PositiveCoefficients, Neither };

struct CubicVerdict {
  bool strictly_positive = false;
  double discriminant = 0.0;
  CubicBranch branch = CubicBranch::Neither;
};

/// Decides strict positivity of a cubic on [0, 1]:
/// (p0 > 0, p3 > 0, D < 0) or all p_i > 0. Says nothing definite about
/// polynomials touching zero.
CubicVerdict cubic_positive_exact(const ScalarPoly& p);

struct StDecomposition {
  ScalarPoly s;
  ScalarPoly t;
};

/// Splits a nonnegative cubic as p = s + t with
///   s = (p0, c1, p2 - c2, 0),  (s0, s2; sqrt(3/2) s1) in Q,  s3 >= 0
///   t = (0, p1 - c1, c2, p3),  (t1, t3; sqrt(3/2) t2) in Q,  t0 >= 0.
/// The coefficient sums s_i + t_i reproduce p_i exactly in floating point.
/// nullopt iff p is not nonnegative on [0, 1].
std::optional<StDecomposition> st_decompose(const ScalarPoly& p);
/// Same, with a caller-supplied witness (not re-verified).
StDecomposition st_decompose(const ScalarPoly& p, const CubicWitness& c);

struct GramPair {
  SymMatrix m1;
  SymMatrix m2;
};

/// Tridiagonal Gram matrices for odd degree 2k+1 with
///   p(x) = (1-x) b^T M1 b + x b^T M2 b,   b = (b_0^k(x), ..., b_k^k(x)).
/// The identity holds for every witness c; M1, M2 are PSD whenever c
/// satisfies check_tridiag_certificate. Even degrees throw
/// std::invalid_argument.
GramPair gram_pair(const ScalarPoly& p, const CertificateWitness& c);

/// Exact nonnegativity decision for p on [lo, hi] (normalized parameter),
/// via Sturm-sequence root isolation on the monomial form. Degree must not
/// exceed kConversionDegreeCeiling. The zero polynomial is nonnegative.
/// Values above -8 (d+1) eps max|p_i| count as zero, so polynomials touching
/// zero at a double root are accepted despite rounding.
bool nonneg_oracle(const ScalarPoly& p, double lo = 0.0, double hi = 1.0);

}  // namespace gbcert
