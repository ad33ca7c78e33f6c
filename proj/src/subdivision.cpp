#include "gbcert/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

#include "gbcert/scalar_cert.hpp"

namespace gbcert {

namespace {

void check_args(double delta, int max_depth) {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  if (max_depth < 0) throw std::invalid_argument("max_depth must be nonnegative");
}

template <class Poly, class Accept, class Split>
class Walker {
 public:
  Walker(int max_depth, Accept accept, Split split)
      : max_depth_(max_depth), accept_(accept), split_(split) {}

  SubdivisionReport run(const Poly& root) {
    report_ = {};
    report_.certified = true;
    visit(root, 0, Interval{0.0, 1.0});
    return report_;
  }

 private:
  void visit(const Poly& p, int depth, Interval where) {
    report_.max_depth_reached = std::max(report_.max_depth_reached, depth);
    if (accept_(p)) return;
    if (depth >= max_depth_) {
      if (report_.certified) report_.failure_leaf = where;
      report_.certified = false;
      return;
    }
    ++report_.splits;
    auto [left, right] = split_(p);
    const double mid = where.midpoint();
    visit(left, depth + 1, Interval{where.lo, mid});
    visit(right, depth + 1, Interval{mid, where.hi});
  }

  int max_depth_;
  Accept accept_;
  Split split_;
  SubdivisionReport report_;
};

template <class Poly, class Accept, class Split>
SubdivisionReport walk(const Poly& root, int max_depth, Accept accept, Split split) {
  return Walker<Poly, Accept, Split>(max_depth, accept, split).run(root);
}

}  // namespace

const char* criterion_name(Criterion c) { return c == Criterion::NB ? "nb" : "gb"; }

SubdivisionReport certify_scalar(const ScalarPoly& p, double delta, Criterion crit,
                                 int max_depth) {
  check_args(delta, max_depth);
  auto accept = [crit](const ScalarPoly& q) {
    return crit == Criterion::NB ? in_nb(q) : in_gb(q);
  };
  auto halves = [](const ScalarPoly& q) { return split(q); };
  return walk(shift(p, delta), max_depth, accept, halves);
}

SubdivisionReport certify_matrix(const MatrixPoly& p, double delta, Criterion crit,
                                 int max_depth, double tol) {
  check_args(delta, max_depth);
  auto accept = [crit, tol](const MatrixPoly& q) {
    return crit == Criterion::NB ? in_nb_matrix(q, tol) : in_gb_matrix(q, tol);
  };
  auto halves = [](const MatrixPoly& q) { return split_matrix(q); };
  return walk(shift_matrix(p, delta), max_depth, accept, halves);
}

}  // namespace gbcert
