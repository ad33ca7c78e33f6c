#include <doctest.h>

#include <stdexcept>
#include <string>

#include "gbcert/experiments.hpp"
#include "gbcert/scalar_cert.hpp"
#include "gbcert/subdivision.hpp"
#include "oracles.hpp"

using namespace gbcert;

TEST_CASE("criterion names") {
  CHECK(std::string(criterion_name(Criterion::NB)) == "nb");
  CHECK(std::string(criterion_name(Criterion::GB)) == "gb");
}

TEST_CASE("certify_scalar examples") {
  const SubdivisionReport half = certify_scalar(quad_root_cubic(0.5), 1e-4, Criterion::NB);
  CHECK(half.certified);
  CHECK(half.splits == 1);
  CHECK(half.max_depth_reached == 1);
  CHECK_FALSE(half.failure_leaf.has_value());

  for (double delta : {0.0, 1e-4, 3.0}) {
    const SubdivisionReport r = certify_scalar(ScalarPoly({1, 1, 1, 1}), delta, Criterion::NB);
    CHECK(r.certified);
    CHECK(r.splits == 0);
    CHECK(r.max_depth_reached == 0);
  }

  const ScalarPoly ex({1, -2, 3, 1});
  CHECK(certify_scalar(ex, 0.0, Criterion::GB).splits == 0);
  CHECK(certify_scalar(ex, 0.0, Criterion::NB).splits >= 1);
  CHECK(certify_scalar(ex, 0.0, Criterion::NB).certified);
}

TEST_CASE("certify_scalar argument checks") {
  const ScalarPoly p({1, 1});
  CHECK_THROWS_AS(certify_scalar(p, -1e-3, Criterion::NB), std::invalid_argument);
  CHECK_THROWS_AS(certify_scalar(p, 0.0, Criterion::NB, -1), std::invalid_argument);
}

TEST_CASE("depth exhaustion reports the first failing leaf") {
  // Negative at x = 1/2 only: every split keeps a failing node around 1/2.
  const ScalarPoly p = quad_root_cubic(0.5);
  const SubdivisionReport r = certify_scalar(shift(p, -1e-3), 0.0, Criterion::GB, 4);
  CHECK_FALSE(r.certified);
  REQUIRE(r.failure_leaf.has_value());
  CHECK(r.max_depth_reached == 4);
  // Depth-first, left first: the leaf just left of 1/2 fails first.
  CHECK(r.failure_leaf->lo == doctest::Approx(0.4375));
  CHECK(r.failure_leaf->hi == doctest::Approx(0.5));

  const SubdivisionReport root = certify_scalar(ScalarPoly({-1, -1}), 0.0, Criterion::NB, 0);
  CHECK_FALSE(root.certified);
  CHECK(root.splits == 0);
  REQUIRE(root.failure_leaf.has_value());
  CHECK(root.failure_leaf->lo == 0.0);
  CHECK(root.failure_leaf->hi == 1.0);
}

TEST_CASE("scalar subdivision: dominance, soundness, determinism") {
  oracle::Draw rng(301);
  int both = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const ScalarPoly p = rng.poly(rng.integer(2, 7), -1, 3);
    const SubdivisionReport nb = certify_scalar(p, 1e-4, Criterion::NB, 12);
    const SubdivisionReport gb = certify_scalar(p, 1e-4, Criterion::GB, 12);
    CHECK(gb.splits <= nb.splits);
    if (nb.certified) CHECK(gb.certified);
    if (nb.certified && gb.certified) ++both;
    if (gb.certified) CHECK(oracle::grid_min(shift(p, 1e-4), 4001) >= -1e-7);
    CHECK(gb == certify_scalar(p, 1e-4, Criterion::GB, 12));
    CHECK((nb.splits == 0) == in_nb(shift(p, 1e-4)));
    CHECK(nb.certified != nb.failure_leaf.has_value());
  }
  CHECK(both > 500);
}

TEST_CASE("larger delta never needs more splits") {
  oracle::Draw rng(303);
  for (int trial = 0; trial < 2000; ++trial) {
    const ScalarPoly p = rng.poly(rng.integer(2, 6), -1, 3);
    for (Criterion crit : {Criterion::NB, Criterion::GB}) {
      const SubdivisionReport a = certify_scalar(p, 1e-4, crit, 12);
      if (!a.certified) continue;
      const SubdivisionReport b = certify_scalar(p, 1e-2, crit, 12);
      CHECK(b.certified);
      CHECK(b.splits <= a.splits);
    }
  }
}

TEST_CASE("certify_matrix examples") {
  const MatrixPoly c(std::vector<SymMatrix>(4, SymMatrix::identity(3)));
  CHECK(certify_matrix(c, 0.0, Criterion::NB).splits == 0);
  CHECK(certify_matrix(c, 0.0, Criterion::GB).splits == 0);

  // Diagonal embedding of a GB member with a negative coefficient.
  const MatrixPoly ex = MatrixPoly::diagonal(ScalarPoly({1, -2, 3, 1}), 2);
  CHECK(certify_matrix(ex, 0.0, Criterion::GB).splits == 0);
  CHECK(certify_matrix(ex, 0.0, Criterion::NB).splits >= 1);

  CHECK_THROWS_AS(certify_matrix(c, -1.0, Criterion::NB), std::invalid_argument);
}

TEST_CASE("n = 1 matrix subdivision reproduces the scalar counts") {
  oracle::Draw rng(307);
  for (int trial = 0; trial < 100; ++trial) {
    const ScalarPoly p = rng.poly(3, -1, 3);
    for (Criterion crit : {Criterion::NB, Criterion::GB}) {
      const SubdivisionReport s = certify_scalar(p, 1e-4, crit, 10);
      const SubdivisionReport m = certify_matrix(MatrixPoly::diagonal(p, 1), 1e-4, crit, 10, 0.0);
      CHECK(s.splits == m.splits);
      CHECK(s.certified == m.certified);
    }
  }
}

TEST_CASE("matrix subdivision: dominance and soundness") {
  Rng rng(11);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const MatrixPoly p = sample_random_matrix_poly(rng, n);
      const SubdivisionReport nb = certify_matrix(p, 1e-4, Criterion::NB);
      const SubdivisionReport gb = certify_matrix(p, 1e-4, Criterion::GB);
      CHECK(nb.certified);
      CHECK(gb.certified);
      CHECK(gb.splits <= nb.splits);
      CHECK(gb == certify_matrix(p, 1e-4, Criterion::GB));
    }
  }
  oracle::Draw draw(311);
  for (int trial = 0; trial < 100; ++trial) {
    const MatrixPoly p = draw.matrix_poly(3, 2);
    const SubdivisionReport gb = certify_matrix(p, 1e-4, Criterion::GB, 10);
    CHECK(gb.splits <= certify_matrix(p, 1e-4, Criterion::NB, 10).splits);
    if (gb.certified) {
      CHECK(oracle::matrix_grid_min(shift_matrix(p, 1e-4), 4001) >= -1e-7 * matrix_scale(p));
    }
  }
}
