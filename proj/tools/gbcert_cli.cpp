// Command-line driver for the subdivision experiments. Writes CSV to stdout
// or --out. Exit status: 0 ok, 2 bad arguments, 3 output failure.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gbcert/experiments.hpp"

namespace {

constexpr int kExitArgs = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  return v;
}

// "2..10" or "2,4,8".
std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty dimension range '" + text + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw std::invalid_argument("no dimensions given");
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subdivision-count experiments for Bernstein nonnegativity certificates"};
  app.require_subcommand(1);

  gbcert::ExperimentConfig cfg;
  std::string dims = "2..10";
  std::string criterion = "both";
  std::string sampler = "shared-root";
  std::string out;
  int max_depth = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--delta", cfg.delta, "Certify p >= -delta")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
    sub->add_option("--criterion", criterion, "Leaf test")
        ->check(CLI::IsMember({"nb", "gb", "both"}))
        ->capture_default_str();
    sub->add_option("--max-depth", max_depth,
                    "Subdivision depth limit (default 6 for quad-*, 32 for matrix-experiment)");
    sub->add_option("--out", out, "Output CSV path (default stdout)");
  };

  auto* roots = app.add_subcommand("quad-roots", "Split counts for (x - t)^2 on a t grid");
  auto* hist = app.add_subcommand("quad-histogram", "Cumulative split-count percentages");
  auto* matrix = app.add_subcommand("matrix-experiment", "Random PSD matrix polynomials");
  for (auto* sub : {roots, hist}) {
    add_common(sub);
    sub->add_option("--grid", cfg.grid, "Number of t values in [0, 1]")->capture_default_str();
  }
  add_common(matrix);
  matrix->add_option("--dims", dims, "Dimensions, e.g. 2..10 or 2,4,8")->capture_default_str();
  matrix->add_option("--trials", cfg.trials, "Instances per dimension")->capture_default_str();
  matrix->add_option("--sampler", sampler, "Nonnegative cubic weights")
      ->check(CLI::IsMember({"shared-root", "markov-lukacs"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitArgs;
  }

  try {
    cfg.run_nb = criterion != "gb";
    cfg.run_gb = criterion != "nb";
    for (auto* sub : {roots, hist, matrix}) {
      if (sub->count("--max-depth") > 0) cfg.max_depth = max_depth;
    }
    cfg.sampler = sampler == "markov-lukacs" ? gbcert::CubicSampler::MarkovLukacs
                                             : gbcert::CubicSampler::SharedRoot;
    if (app.got_subcommand(matrix)) cfg.dims = parse_dims(dims);
    cfg.validate();

    std::ostringstream csv;
    if (app.got_subcommand(roots)) {
      gbcert::write_quad_roots_csv(csv, gbcert::run_quad_roots(cfg));
    } else if (app.got_subcommand(hist)) {
      const auto records = gbcert::run_quad_roots(cfg);
      gbcert::write_histogram_csv(csv,
                                  gbcert::quad_histogram(records, cfg.grid, cfg.scalar_depth()));
    } else {
      gbcert::write_matrix_csv(csv, gbcert::run_matrix_experiment(cfg).rows);
    }
    emit(out, csv.str());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
