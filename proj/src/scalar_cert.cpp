#include "gbcert/scalar_cert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gbcert {

namespace {

constexpr double kSqrt3Over2 = 1.2247448713915890491;  // sqrt(3/2)
constexpr int kBisectionIters = 200;

void require_cubic(const ScalarPoly& p, const char* what) {
  if (p.degree() != 3) throw std::invalid_argument(std::string(what) + ": degree must be 3");
}

double pos(double x) { return x > 0.0 ? x : 0.0; }

// For d = 3 the bound is evaluated as -2 sqrt(a b / 3) so membership agrees
// bit for bit with the explicit cubic inequalities.
double gb_bound(const DegreeConstants& k, int i, double left, double right) {
  const double a = pos(left), b = pos(right);
  if (k.degree() == 3) return -2.0 * std::sqrt(a * b / 3.0);
  return -std::sqrt(k.gb_factor(i) * a * b);
}

// Witness maximizing the slack of the two cubic cone conditions.
//
// For fixed c2 <= p2 the first cone allows |c1| <= R(c2) = sqrt(4 p0 (p2 - c2) / 3),
// the second requires c1 <= U(c2) = p1 - 3 c2^2 / (4 p3). Feasibility is
// max_{c2 <= p2} U + R >= 0 with U + R concave in c2; c1 is centred in
// [-R, min(U, R)]. Returns nullopt only when no c2 can make the interval
// nonempty even approximately (endpoint coefficients negative).
std::optional<CubicWitness> max_slack_witness(const ScalarPoly& p) {
  const double p0 = p[0], p1 = p[1], p2 = p[2], p3 = p[3];
  if (p0 < 0.0 || p3 < 0.0) return std::nullopt;

  auto radius = [&](double c2) { return std::sqrt(4.0 * p0 * pos(p2 - c2) / 3.0); };
  auto centred = [](double r, double u) { return 0.5 * (-r + std::min(u, r)); };

  if (p3 == 0.0) {
    // Second cone forces c2 = 0.
    const double r = radius(0.0);
    return CubicWitness{centred(r, p1), 0.0};
  }
  if (p0 == 0.0) {
    // First cone forces c1 = 0; pick c2 maximizing U.
    return CubicWitness{0.0, std::min(0.0, p2)};
  }

  auto slope = [&](double c2) {
    const double r = radius(c2);
    if (r == 0.0) return -HUGE_VAL;
    return -1.5 * c2 / p3 - (2.0 * p0 / 3.0) / r;
  };

  double hi = std::min(p2, 0.0);
  double step = 1.0 + std::abs(p2) + std::abs(p1);
  double lo = hi - step;
  for (int k = 0; k < 200 && slope(lo) <= 0.0; ++k) {
    hi = lo;
    step *= 2.0;
    lo = hi - step;
  }
  for (int k = 0; k < kBisectionIters; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  const double c2 = 0.5 * (lo + hi);
  const double r = radius(c2);
  const double u = p1 - 0.75 * c2 * c2 / p3;
  return CubicWitness{centred(r, u), c2};
}

// s_i + t_i == p_i in floating point, adjusting t_i (then s_i) by a few ulps.
// Leaves the pair untouched when no nearby representable pair works.
void make_exact_sum(double target, double& s, double& t) {
  if (s + t == target) return;
  const double t0 = t;
  for (int k = 1; k <= 8; ++k) {
    double up = t0, down = t0;
    for (int j = 0; j < k; ++j) {
      up = std::nextafter(up, HUGE_VAL);
      down = std::nextafter(down, -HUGE_VAL);
    }
    if (s + up == target) { t = up; return; }
    if (s + down == target) { t = down; return; }
  }
  const double s_alt = target - t0;
  if (s_alt + t0 == target) {
    s = s_alt;
    t = t0;
  }
}

// Homogeneous distance-like margin of a point to the boundary of Q.
double cone_margin(const ConePoint& pt) {
  if (pt.x0 < 0.0 || pt.x1 < 0.0) return std::min(pt.x0, pt.x1);
  return std::min({pt.x0, pt.x1, std::sqrt(2.0 * pt.x0 * pt.x1) - std::abs(pt.x2)});
}

double cubic_margin(const ScalarPoly& p, const CubicWitness& c) {
  return std::min(cone_margin({p[0], p[2] - c.c2, kSqrt3Over2 * c.c1}),
                  cone_margin({p[1] - c.c1, p[3], kSqrt3Over2 * c.c2}));
}

bool exact_split(const StDecomposition& st, const ScalarPoly& p) {
  for (int i = 0; i <= 3; ++i) {
    if (st.s[i] + st.t[i] != p[i]) return false;
  }
  return true;
}

// Candidates for a witness entry paired with p_i: the current value plus a
// sweep of [p_i / 2, 2 p_i], where p_i - c is exact.
std::vector<double> exact_candidates(double current, double pi) {
  std::vector<double> out{current};
  if (pi == 0.0) {
    out.push_back(0.0);
    return out;
  }
  const double lo = std::min(0.5 * pi, 2.0 * pi), hi = std::max(0.5 * pi, 2.0 * pi);
  constexpr int kSweep = 64;
  for (int k = 0; k <= kSweep; ++k) out.push_back(lo + (hi - lo) * k / kSweep);
  return out;
}

}  // namespace

CertificateWitness CertificateWitness::zeros(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  return CertificateWitness(std::vector<double>(static_cast<std::size_t>(degree) + 1, 0.0));
}

CertificateWitness::CertificateWitness(std::vector<double> c) : c_(std::move(c)) {
  if (c_.empty()) throw std::invalid_argument("witness needs at least one entry");
  if (c_.front() != 0.0 || c_.back() != 0.0) {
    throw std::invalid_argument("witness endpoints must be zero");
  }
}

bool in_nb(const ScalarPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](double c) { return c >= 0.0; });
}

double gb_lower_bound(const ScalarPoly& p, int i) {
  const int d = p.degree();
  if (i < 0 || i > d) throw std::invalid_argument("gb_lower_bound: index out of range");
  if (i == 0 || i == d) return 0.0;
  return gb_bound(DegreeConstants(d), i, p[i - 1], p[i + 1]);
}

bool in_gb(const ScalarPoly& p) {
  const int d = p.degree();
  if (d <= 1) return in_nb(p);
  const DegreeConstants k(d);
  for (int i = 0; i <= d; ++i) {
    double bound = 0.0;
    if (i != 0 && i != d) bound = gb_bound(k, i, p[i - 1], p[i + 1]);
    if (!(p[i] >= bound)) return false;
  }
  return true;
}

CertificateWitness gb_witness(const ScalarPoly& p) {
  const int d = p.degree();
  std::vector<double> c(static_cast<std::size_t>(d) + 1, 0.0);
  for (int i = 1; i <= d - 1; ++i) c[i] = gb_lower_bound(p, i);
  return CertificateWitness(std::move(c));
}

bool check_tridiag_certificate(const ScalarPoly& p, const CertificateWitness& c, double tol) {
  const int d = p.degree();
  if (c.degree() != d) throw std::invalid_argument("witness length does not match degree");
  if (d <= 1) return in_nb(p);
  const DegreeConstants k(d);
  for (int i = 1; i <= d - 1; ++i) {
    const ConePoint pt{p[i - 1] - c[i - 1], p[i + 1] - c[i + 1], c[i] * k.cone_scale(i)};
    if (!cone_member(pt, tol)) return false;
  }
  // For d = 2 the middle coefficient is nobody's neighbour, so its
  // remainder p_1 - c_1 has to be nonnegative on its own.
  if (d == 2 && p[1] - c[1] < -tol) return false;
  return true;
}

bool cubic_socp_feasible(const ScalarPoly& p, const CubicWitness& c, double tol) {
  require_cubic(p, "cubic_socp_feasible");
  return cone_member({p[0], p[2] - c.c2, kSqrt3Over2 * c.c1}, tol) &&
         cone_member({p[1] - c.c1, p[3], kSqrt3Over2 * c.c2}, tol);
}

std::optional<CubicWitness> cubic_socp_witness(const ScalarPoly& p) {
  require_cubic(p, "cubic_socp_witness");
  if (!nonneg_oracle(p)) return std::nullopt;
  const CertificateWitness gb = gb_witness(p);
  const CubicWitness gb_pair{gb[1], gb[2]};
  if (cubic_socp_feasible(p, gb_pair, 0.0)) return gb_pair;
  // The oracle says p >= 0, so a witness exists; near the boundary the best
  // one found may satisfy the cone conditions only up to rounding.
  if (auto w = max_slack_witness(p)) return w;
  return CubicWitness{0.0, 0.0};
}

double cubic_discriminant(const ScalarPoly& p) {
  require_cubic(p, "cubic_discriminant");
  const double p0 = p[0], p1 = p[1], p2 = p[2], p3 = p[3];
  return -27.0 * (-3.0 * p1 * p1 * p2 * p2 + 4.0 * p0 * p2 * p2 * p2 +
                  4.0 * p1 * p1 * p1 * p3 - 6.0 * p0 * p1 * p2 * p3 + p0 * p0 * p3 * p3);
}

CubicVerdict cubic_positive_exact(const ScalarPoly& p) {
  require_cubic(p, "cubic_positive_exact");
  CubicVerdict v;
  v.discriminant = cubic_discriminant(p);
  if (p[0] > 0.0 && p[3] > 0.0 && -v.discriminant > 0.0) {
    v.branch = CubicBranch::DiscriminantNegative;
  } else if (std::all_of(p.coeffs().begin(), p.coeffs().end(), [](double c) { return c > 0.0; })) {
    v.branch = CubicBranch::PositiveCoefficients;
  }
  v.strictly_positive = v.branch != CubicBranch::Neither;
  return v;
}

StDecomposition st_decompose(const ScalarPoly& p, const CubicWitness& c) {
  require_cubic(p, "st_decompose");
  double s1 = c.c1, t1 = p[1] - c.c1;
  double t2 = c.c2, s2 = p[2] - c.c2;
  make_exact_sum(p[1], s1, t1);
  make_exact_sum(p[2], t2, s2);
  return {ScalarPoly({p[0], s1, s2, 0.0}), ScalarPoly({0.0, t1, t2, p[3]})};
}

std::optional<StDecomposition> st_decompose(const ScalarPoly& p) {
  require_cubic(p, "st_decompose");
  if (!nonneg_oracle(p)) return std::nullopt;
  const CubicWitness w = max_slack_witness(p).value_or(CubicWitness{});
  StDecomposition best = st_decompose(p, w);
  if (exact_split(best, p)) return best;
  // A witness far from p_i leaves s_i and t_i on a grid coarser than p_i,
  // so look for a feasible one whose differences are exact.
  double best_margin = -HUGE_VAL;
  for (double c1 : exact_candidates(w.c1, p[1])) {
    for (double c2 : exact_candidates(w.c2, p[2])) {
      const CubicWitness c{c1, c2};
      if (!cubic_socp_feasible(p, c, 0.0)) continue;
      StDecomposition st = st_decompose(p, c);
      const double margin = cubic_margin(p, c);
      if (exact_split(st, p) && in_gb(st.s) && in_gb(st.t) && margin > best_margin) {
        best_margin = margin;
        best = std::move(st);
      }
    }
  }
  return best;
}

GramPair gram_pair(const ScalarPoly& p, const CertificateWitness& c) {
  const int d = p.degree();
  if (d % 2 == 0) throw std::invalid_argument("gram_pair: only odd degrees are supported");
  if (c.degree() != d) throw std::invalid_argument("witness length does not match degree");
  const int k = (d - 1) / 2;
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  SymMatrix m1(n), m2(n);
  for (int j = 0; j <= k; ++j) {
    const double bk2 = binomial(k, j) * binomial(k, j);
    m1.set(j, j, binomial(d, 2 * j) / bk2 * (p[2 * j] - c[2 * j]));
    m2.set(j, j, binomial(d, 2 * j + 1) / bk2 * (p[2 * j + 1] - c[2 * j + 1]));
    if (j < k) {
      const double cross = 2.0 * binomial(k, j) * binomial(k, j + 1);
      m1.set(j, j + 1, binomial(d, 2 * j + 1) / cross * c[2 * j + 1]);
      m2.set(j, j + 1, binomial(d, 2 * j + 2) / cross * c[2 * j + 2]);
    }
  }
  return {std::move(m1), std::move(m2)};
}

}  // namespace gbcert
