#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "gbcert/bernstein.hpp"
#include "gbcert/matrix_cert.hpp"
#include "gbcert/subdivision.hpp"

namespace gbcert {

/// Seedable generator: 64-bit Mersenne Twister (std::mt19937_64, whose output
/// sequence is fixed by the C++ standard). Uniforms take the top 53 bits;
/// normals use the Box-Muller transform and return both values of each pair.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }
  /// Uniform on [0, 1): (x >> 11) * 2^-53.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal. With u1 = 1 - uniform(), u2 = uniform():
  /// sqrt(-2 ln u1) cos(2 pi u2), then sqrt(-2 ln u1) sin(2 pi u2).
  double normal();

 private:
  std::mt19937_64 eng_;
  std::optional<double> spare_;
};

/// How the nonnegative cubic weights rho(x) = x s1(x)^2 + (1-x) s2(x)^2 are drawn.
enum class CubicSampler {
  /// s1 = a (x - r), s2 = b (x - r) with r ~ U[0, 1), a, b ~ N(0, 1): every
  /// weight has a double root inside the interval.
  SharedRoot,
  /// Bernstein coefficients of the linear s1, s2 are i.i.d. N(0, 1).
  MarkovLukacs,
};

struct ExperimentConfig {
  double delta = 1e-4;
  int grid = 4001;
  std::vector<int> dims{2, 3, 4, 5, 6, 7, 8, 9, 10};
  int trials = 100;
  std::uint64_t seed = 0;
  bool run_nb = true;
  bool run_gb = true;
  /// Unset means 6 for the quadratic experiments and 32 for the matrix one.
  std::optional<int> max_depth;
  CubicSampler sampler = CubicSampler::SharedRoot;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  int scalar_depth() const { return max_depth.value_or(6); }
  int matrix_depth() const { return max_depth.value_or(32); }
};

struct RunRecord {
  int instance = 0;
  double parameter = 0.0;  // t or n
  Criterion criterion = Criterion::NB;
  long splits = 0;
  bool certified = false;
};

/// (x - t)^2 in the cubic Bernstein basis.
ScalarPoly quad_root_cubic(double t);

/// t_k = k / (grid - 1).
double grid_point(int k, int grid);

/// One record per (t, criterion), ordered by t then NB before GB.
std::vector<RunRecord> run_quad_roots(const ExperimentConfig& cfg);

struct HistogramRow {
  int n = 0;
  std::optional<double> pct_nb;
  std::optional<double> pct_gb;
};

/// Percentage of certified instances that needed at most N splits, for
/// N = 0..max_depth.
std::vector<HistogramRow> quad_histogram(const std::vector<RunRecord>& records, int grid,
                                         int max_depth);

ScalarPoly sample_random_nonneg_cubic(Rng& rng, CubicSampler sampler = CubicSampler::SharedRoot);

/// P_i = sum_k rho_{k,i} t_k t_k^T where t_k is row k of an n x n standard
/// Gaussian matrix T and rho_k are independent nonnegative cubic weights, so
/// P(x) = T^T diag(rho_1(x), ..., rho_n(x)) T. Draw order: T row-major, then
/// rho_1..rho_n.
MatrixPoly sample_random_matrix_poly(Rng& rng, int n,
                                     CubicSampler sampler = CubicSampler::SharedRoot);

struct MatrixExperimentRow {
  int n = 0;
  std::optional<double> nb_mean, nb_std;
  std::optional<double> gb_mean, gb_std;
  std::optional<double> diff_mean, diff_std;
};

struct MatrixExperimentResult {
  std::vector<RunRecord> records;  // ordered by (n, instance, criterion)
  std::vector<MatrixExperimentRow> rows;
};

/// For each n in cfg.dims draws cfg.trials instances from one generator
/// seeded with cfg.seed and certifies each at cfg.delta. Standard deviations
/// are sample standard deviations (divisor trials - 1; 0 for one trial).
/// Instances are certified on worker threads; output does not depend on
/// scheduling.
MatrixExperimentResult run_matrix_experiment(const ExperimentConfig& cfg);

void write_quad_roots_csv(std::ostream& os, const std::vector<RunRecord>& records);
void write_histogram_csv(std::ostream& os, const std::vector<HistogramRow>& rows);
void write_matrix_csv(std::ostream& os, const std::vector<MatrixExperimentRow>& rows);

}  // namespace gbcert
