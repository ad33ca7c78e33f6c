#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gbcert/scalar_cert.hpp"

namespace gbcert {

namespace {

// Polynomials here are monomial coefficient vectors, lowest degree first.
using Mono = std::vector<double>;

constexpr double kCoeffDust = 1e-13;
constexpr double kRemainderDust = 1e-11;
constexpr int kRefineIters = 200;

double max_abs(const Mono& a) {
  double m = 0.0;
  for (double c : a) m = std::max(m, std::abs(c));
  return m;
}

void trim(Mono& a, double floor) {
  for (double& c : a) {
    if (std::abs(c) <= floor) c = 0.0;
  }
  while (a.size() > 1 && a.back() == 0.0) a.pop_back();
}

void normalize(Mono& a) {
  const double m = max_abs(a);
  if (m > 0.0) {
    for (double& c : a) c /= m;
  }
}

double horner(const Mono& a, double x) {
  double r = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

Mono derivative(const Mono& a) {
  if (a.size() <= 1) return {0.0};
  Mono d(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = static_cast<double>(k) * a[k];
  return d;
}

// Remainder of a / b; b must have a nonzero leading coefficient.
Mono remainder(Mono a, const Mono& b) {
  const std::size_t nb = b.size();
  while (a.size() >= nb) {
    const double q = a.back() / b.back();
    const std::size_t off = a.size() - nb;
    for (std::size_t k = 0; k < nb; ++k) a[off + k] -= q * b[k];
    a.pop_back();
  }
  if (a.empty()) a.push_back(0.0);
  return a;
}

bool is_zero(const Mono& a) { return a.size() == 1 && a[0] == 0.0; }

class SturmChain {
 public:
  explicit SturmChain(const Mono& f) {
    Mono s0 = f;
    normalize(s0);
    Mono s1 = derivative(s0);
    normalize(s1);
    chain_.push_back(s0);
    if (is_zero(s1)) return;
    chain_.push_back(s1);
    while (true) {
      const Mono& prev = chain_[chain_.size() - 2];
      Mono r = remainder(prev, chain_.back());
      trim(r, kRemainderDust * max_abs(prev));
      if (is_zero(r)) break;
      for (double& c : r) c = -c;
      normalize(r);
      chain_.push_back(std::move(r));
      if (chain_.back().size() == 1) break;
    }
  }

  int sign_changes(double x) const {
    int changes = 0;
    int last = 0;
    for (const Mono& s : chain_) {
      const double v = horner(s, x);
      const int sg = (v > 0.0) - (v < 0.0);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  }

 private:
  std::vector<Mono> chain_;
};

// Locations of the distinct real roots in (lo, hi], each to within a few ulps.
// Root clusters narrower than the refinement limit are reported once.
void isolate(const SturmChain& sc, double lo, double hi, int vlo, int vhi,
             std::vector<double>& roots) {
  const int count = vlo - vhi;
  if (count <= 0) return;
  for (int it = 0; it < kRefineIters; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int vmid = sc.sign_changes(mid);
    const int left = vlo - vmid;
    const int right = vmid - vhi;
    if (left > 0 && right > 0) {
      isolate(sc, lo, mid, vlo, vmid, roots);
      isolate(sc, mid, hi, vmid, vhi, roots);
      return;
    }
    if (left > 0) {
      hi = mid;
      vhi = vmid;
    } else if (right > 0) {
      lo = mid;
      vlo = vmid;
    } else {
      // Inconsistent counts from rounding; stop refining here.
      break;
    }
  }
  roots.push_back(hi);
}

}  // namespace

bool nonneg_oracle(const ScalarPoly& p, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("nonneg_oracle requires lo < hi");
  Mono f = to_monomial(p);
  const double scale = max_abs(f);
  if (scale == 0.0) return true;
  trim(f, kCoeffDust * scale);

  // Values within the rounding error of evaluation count as zero; otherwise a
  // double root split into two close simple roots reads as a sign change.
  double bern_scale = 0.0;
  for (double c : p.coeffs()) bern_scale = std::max(bern_scale, std::abs(c));
  const double floor = -8.0 * (p.degree() + 1) * std::numeric_limits<double>::epsilon() *
                       std::max(bern_scale, scale);
  auto negative = [&](double x) {
    return ((x >= 0.0 && x <= 1.0) ? eval(p, x) : horner(f, x)) < floor;
  };
  if (negative(lo) || negative(hi)) return false;
  if (f.size() == 1) return f[0] >= 0.0;

  const SturmChain sc(f);
  std::vector<double> roots;
  isolate(sc, lo, hi, sc.sign_changes(lo), sc.sign_changes(hi), roots);
  std::sort(roots.begin(), roots.end());

  std::vector<double> marks{lo};
  for (double r : roots) {
    if (r > marks.back() && r < hi) marks.push_back(r);
  }
  marks.push_back(hi);
  for (std::size_t k = 0; k + 1 < marks.size(); ++k) {
    if (negative(0.5 * (marks[k] + marks[k + 1]))) return false;
  }
  return true;
}

}  // namespace gbcert
