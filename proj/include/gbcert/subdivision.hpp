#pragma once

#include <optional>

#include "gbcert/bernstein.hpp"
#include "gbcert/matrix_cert.hpp"

namespace gbcert {

inline constexpr int kDefaultMaxDepth = 32;

/// Leaf test used by the subdivision engine. Both are sound: acceptance
/// implies nonnegativity (PSD-ness) on the leaf interval.
enum class Criterion { NB, GB };

const char* criterion_name(Criterion c);

struct SubdivisionReport {
  bool certified = false;
  /// Split operations performed anywhere in the tree. 0 iff the root passed.
  long splits = 0;
  /// Deepest node visited; the root has depth 0.
  int max_depth_reached = 0;
  /// First leaf (depth-first, left to right) where the depth limit fired, as
  /// a half-open subinterval of [0, 1]. Present iff certified is false.
  std::optional<Interval> failure_leaf;

  friend bool operator==(const SubdivisionReport& a, const SubdivisionReport& b) {
    const bool same_leaf =
        a.failure_leaf.has_value() == b.failure_leaf.has_value() &&
        (!a.failure_leaf ||
         (a.failure_leaf->lo == b.failure_leaf->lo && a.failure_leaf->hi == b.failure_leaf->hi));
    return a.certified == b.certified && a.splits == b.splits &&
           a.max_depth_reached == b.max_depth_reached && same_leaf;
  }
};

/// Certifies p + delta >= 0 on [0, 1] by recursive midpoint subdivision.
///
/// The shift is applied once at the root. Each node is tested with `crit`;
/// failing nodes are split and both halves explored, left first. A node at
/// depth max_depth that fails is a failure leaf; exploration of the rest of
/// the tree continues so the split count covers the whole tree.
/// Throws std::invalid_argument if delta < 0 or max_depth < 0.
SubdivisionReport certify_scalar(const ScalarPoly& p, double delta, Criterion crit,
                                 int max_depth = kDefaultMaxDepth);

/// Matrix analogue: certifies P + delta I is PSD on [0, 1]. Leaf tests use
/// in_nb_matrix / in_gb_matrix with tolerance `tol`.
SubdivisionReport certify_matrix(const MatrixPoly& p, double delta, Criterion crit,
                                 int max_depth = kDefaultMaxDepth,
                                 double tol = kDefaultMatrixTol);

}  // namespace gbcert
