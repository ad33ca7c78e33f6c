#include "gbcert/experiments.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace gbcert {

namespace {

std::string fmt_num(double v) { return fmt::format("{:.6g}", v); }

template <class T>
std::string opt_num(const std::optional<T>& v) {
  return v ? fmt_num(static_cast<double>(*v)) : std::string();
}

struct Stats {
  double mean = 0.0;
  double std = 0.0;
};

Stats stats(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return s;
  double ss = 0.0;
  for (double x : xs) ss += (x - s.mean) * (x - s.mean);
  s.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  return s;
}

std::vector<Criterion> selected(const ExperimentConfig& cfg) {
  std::vector<Criterion> out;
  if (cfg.run_nb) out.push_back(Criterion::NB);
  if (cfg.run_gb) out.push_back(Criterion::GB);
  return out;
}

// rho = x s1^2 + (1-x) s2^2 with s1 = (a0, a1), s2 = (b0, b1) in the linear
// Bernstein basis.
ScalarPoly markov_lukacs_cubic(double a0, double a1, double b0, double b1) {
  return ScalarPoly({b0 * b0, a0 * a0 / 3.0 + 2.0 * b0 * b1 / 3.0,
                     2.0 * a0 * a1 / 3.0 + b1 * b1 / 3.0, a1 * a1});
}

// Runs fn(k) for k in [0, count) on a few threads.
template <class Fn>
void parallel_for(std::size_t count, Fn fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) fn(k);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  return r * std::cos(th);
}

void ExperimentConfig::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be > 0");
  if (grid < 2) throw std::invalid_argument("grid must be at least 2");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (dims.empty()) throw std::invalid_argument("dims must not be empty");
  for (int n : dims) {
    if (n < 1) throw std::invalid_argument("dims must be positive");
  }
  if (!run_nb && !run_gb) throw std::invalid_argument("no criterion selected");
  if (max_depth && *max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
}

ScalarPoly quad_root_cubic(double t) {
  const double mono[] = {t * t, -2.0 * t, 1.0};
  return from_monomial(mono, 3);
}

double grid_point(int k, int grid) {
  return static_cast<double>(k) / static_cast<double>(grid - 1);
}

std::vector<RunRecord> run_quad_roots(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<Criterion> crits = selected(cfg);
  std::vector<RunRecord> out(static_cast<std::size_t>(cfg.grid) * crits.size());
  parallel_for(static_cast<std::size_t>(cfg.grid), [&](std::size_t k) {
    const double t = grid_point(static_cast<int>(k), cfg.grid);
    const ScalarPoly p = quad_root_cubic(t);
    for (std::size_t c = 0; c < crits.size(); ++c) {
      const SubdivisionReport r = certify_scalar(p, cfg.delta, crits[c], cfg.scalar_depth());
      out[k * crits.size() + c] = {static_cast<int>(k), t, crits[c], r.splits, r.certified};
    }
  });
  return out;
}

std::vector<HistogramRow> quad_histogram(const std::vector<RunRecord>& records, int grid,
                                         int max_depth) {
  if (grid < 1) throw std::invalid_argument("grid must be positive");
  std::vector<HistogramRow> rows;
  bool have_nb = false, have_gb = false;
  for (const RunRecord& r : records) {
    (r.criterion == Criterion::NB ? have_nb : have_gb) = true;
  }
  for (int n = 0; n <= max_depth; ++n) {
    long nb = 0, gb = 0;
    for (const RunRecord& r : records) {
      if (!r.certified || r.splits > n) continue;
      ++(r.criterion == Criterion::NB ? nb : gb);
    }
    HistogramRow row{n, std::nullopt, std::nullopt};
    if (have_nb) row.pct_nb = 100.0 * static_cast<double>(nb) / grid;
    if (have_gb) row.pct_gb = 100.0 * static_cast<double>(gb) / grid;
    rows.push_back(row);
  }
  return rows;
}

ScalarPoly sample_random_nonneg_cubic(Rng& rng, CubicSampler sampler) {
  if (sampler == CubicSampler::SharedRoot) {
    const double r = rng.uniform();
    const double a = rng.normal();
    const double b = rng.normal();
    return markov_lukacs_cubic(-a * r, a * (1.0 - r), -b * r, b * (1.0 - r));
  }
  const double a0 = rng.normal();
  const double a1 = rng.normal();
  const double b0 = rng.normal();
  const double b1 = rng.normal();
  return markov_lukacs_cubic(a0, a1, b0, b1);
}

MatrixPoly sample_random_matrix_poly(Rng& rng, int n, CubicSampler sampler) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  const std::size_t dim = static_cast<std::size_t>(n);
  std::vector<double> t(dim * dim);
  for (double& v : t) v = rng.normal();
  std::vector<ScalarPoly> rho;
  rho.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) rho.push_back(sample_random_nonneg_cubic(rng, sampler));

  std::vector<SymMatrix> coeffs;
  for (int i = 0; i <= 3; ++i) {
    Matrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const double w = rho[k][i];
      for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) m(a, b) += w * t[k * dim + a] * t[k * dim + b];
      }
    }
    coeffs.emplace_back(m);
  }
  return MatrixPoly(std::move(coeffs));
}

MatrixExperimentResult run_matrix_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<Criterion> crits = selected(cfg);
  Rng rng(cfg.seed);

  struct Job {
    int n;
    int instance;
    MatrixPoly p;
  };
  std::vector<Job> jobs;
  for (int n : cfg.dims) {
    for (int k = 0; k < cfg.trials; ++k) {
      jobs.push_back({n, k, sample_random_matrix_poly(rng, n, cfg.sampler)});
    }
  }

  MatrixExperimentResult res;
  res.records.resize(jobs.size() * crits.size());
  parallel_for(jobs.size(), [&](std::size_t j) {
    for (std::size_t c = 0; c < crits.size(); ++c) {
      const SubdivisionReport r =
          certify_matrix(jobs[j].p, cfg.delta, crits[c], cfg.matrix_depth());
      res.records[j * crits.size() + c] = {jobs[j].instance, static_cast<double>(jobs[j].n),
                                           crits[c], r.splits, r.certified};
    }
  });

  for (std::size_t start = 0; start < jobs.size(); start += static_cast<std::size_t>(cfg.trials)) {
    std::vector<double> nb, gb, diff;
    for (std::size_t j = start; j < start + static_cast<std::size_t>(cfg.trials); ++j) {
      std::optional<long> snb, sgb;
      for (std::size_t c = 0; c < crits.size(); ++c) {
        const RunRecord& r = res.records[j * crits.size() + c];
        (r.criterion == Criterion::NB ? snb : sgb) = r.splits;
      }
      if (snb) nb.push_back(static_cast<double>(*snb));
      if (sgb) gb.push_back(static_cast<double>(*sgb));
      if (snb && sgb) diff.push_back(static_cast<double>(*snb - *sgb));
    }
    MatrixExperimentRow row;
    row.n = jobs[start].n;
    if (cfg.run_nb) {
      const Stats s = stats(nb);
      row.nb_mean = s.mean;
      row.nb_std = s.std;
    }
    if (cfg.run_gb) {
      const Stats s = stats(gb);
      row.gb_mean = s.mean;
      row.gb_std = s.std;
    }
    if (cfg.run_nb && cfg.run_gb) {
      const Stats s = stats(diff);
      row.diff_mean = s.mean;
      row.diff_std = s.std;
    }
    res.rows.push_back(row);
  }
  return res;
}

void write_quad_roots_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  os << "ts,nsubs,gsubs\n";
  std::size_t k = 0;
  while (k < records.size()) {
    const int inst = records[k].instance;
    std::optional<long> nb, gb;
    const double t = records[k].parameter;
    for (; k < records.size() && records[k].instance == inst; ++k) {
      (records[k].criterion == Criterion::NB ? nb : gb) = records[k].splits;
    }
    os << fmt_num(t) << ',' << (nb ? std::to_string(*nb) : "") << ','
       << (gb ? std::to_string(*gb) : "") << '\n';
  }
}

void write_histogram_csv(std::ostream& os, const std::vector<HistogramRow>& rows) {
  os << "N,pct_nb,pct_gb\n";
  for (const HistogramRow& r : rows) {
    os << r.n << ',' << opt_num(r.pct_nb) << ',' << opt_num(r.pct_gb) << '\n';
  }
}

void write_matrix_csv(std::ostream& os, const std::vector<MatrixExperimentRow>& rows) {
  os << "n,nb_mean,nb_std,gb_mean,gb_std,diff_mean,diff_std\n";
  for (const MatrixExperimentRow& r : rows) {
    os << r.n << ',' << opt_num(r.nb_mean) << ',' << opt_num(r.nb_std) << ','
       << opt_num(r.gb_mean) << ',' << opt_num(r.gb_std) << ',' << opt_num(r.diff_mean) << ','
       << opt_num(r.diff_std) << '\n';
  }
}

}  // namespace gbcert
