// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Criterion 9 drives the installed CLI end to end and compares its output
// byte for byte against the committed golden files.

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "noonsim/analytic.hpp"
#include "noonsim/breakeven.hpp"
#include "noonsim/validation.hpp"

using namespace noonsim;
namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    if (!header_seen) {
      csv.header = cells;
      header_seen = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& c : cells) {
      if (c.empty()) {
        row.push_back(kNaN);
      } else if (c == "inf") {
        row.push_back(std::numeric_limits<double>::infinity());
      } else {
        row.push_back(std::strtod(c.c_str(), nullptr));
      }
    }
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(NOONSIM_CLI_PATH) + " " + args;
  return std::system(cmd.c_str());
}

// locate a sign change of columns[a] - columns[b] along the first column
double crossing_abscissa(const Csv& csv, size_t a, size_t b) {
  for (size_t i = 1; i < csv.rows.size(); ++i) {
    const double prev = csv.rows[i - 1][a] - csv.rows[i - 1][b];
    const double cur = csv.rows[i][a] - csv.rows[i][b];
    if (std::isfinite(prev) && std::isfinite(cur) && prev > 0.0 && cur <= 0.0) {
      return 0.5 * (csv.rows[i - 1][0] + csv.rows[i][0]);
    }
  }
  return kNaN;
}

Outcome criterion_heisenberg_recovery() {
  const ChannelPair lossless = ChannelPair::lossless();
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    worst = std::max(worst,
                     std::abs(analytic::noon_min_phase_error(n, lossless).value -
                              1.0 / n));
  }
  std::ostringstream os;
  os << "max residual " << worst << " tol 1e-14, N = 1..20";
  return {worst <= 1e-14, os.str()};
}

Outcome criterion_sql_recovery() {
  const ChannelPair lossless = ChannelPair::lossless();
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    worst = std::max(
        worst, std::abs(analytic::separable_min_phase_error(n, lossless).value -
                        1.0 / std::sqrt(double(n))));
  }
  std::ostringstream os;
  os << "max residual " << worst << " tol 1e-14, N = 1..20";
  return {worst <= 1e-14, os.str()};
}

Outcome criterion_breakeven_thresholds() {
  const struct {
    int n;
    double threshold;
  } cases[] = {{2, 0.41}, {4, 0.56}, {10, 0.73}};
  double worst_threshold = 0.0, worst_poly = 0.0;
  for (const auto& c : cases) {
    const auto point = breakeven::breakeven_alpha2(c.n, 1.0);
    if (!point.alpha2_star) return {false, "missing break-even at alpha1 = 1"};
    worst_threshold = std::max(worst_threshold, std::abs(*point.alpha2_star - c.threshold));
    worst_poly = std::max(
        worst_poly,
        std::abs(*point.alpha2_star - breakeven::breakeven_polynomial_root(c.n)));
  }
  std::ostringstream os;
  os << "threshold deviation " << worst_threshold << " tol 0.005, polynomial-root deviation "
     << worst_poly << " tol 1e-9";
  return {worst_threshold <= 0.005 && worst_poly <= 1e-9, os.str()};
}

Outcome criterion_oracle_equivalence() {
  double worst = 0.0;
  std::string worst_name;
  for (const auto& r : validation::oracle_grid_checks()) {
    if (r.max_residual > worst) {
      worst = r.max_residual;
      worst_name = r.name + " at " + r.detail;
    }
    if (!r.passed) return {false, r.name + " residual " + std::to_string(r.max_residual)};
  }
  std::ostringstream os;
  os << "max residual " << worst << " tol 1e-10 (" << worst_name << ")";
  return {true, os.str()};
}

Outcome criterion_heisenberg_unreachable() {
  for (int n : {2, 4, 10}) {
    const double limit = 1.0 / n;
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const double a1 = 0.05 + 0.95 * i / 19.0;
        const double a2 = 0.05 + 0.95 * j / 19.0;
        if (a1 == 1.0 && a2 == 1.0) continue;
        if (!(analytic::noon_min_phase_error(n, ChannelPair(a1, a2)).value >
              limit)) {
          std::ostringstream os;
          os << "limit reached at N=" << n << " a1=" << a1 << " a2=" << a2;
          return {false, os.str()};
        }
      }
    }
  }
  return {true, "noon minimum > 1/N on the 20x20 lossy grid, N in {2,4,10}"};
}

Outcome criterion_always_worse() {
  for (double a1 : {0.3, 0.41}) {
    for (int i = 0; i < 500; ++i) {
      const double a2 = 0.002 + (1.0 - 0.002) * i / 499.0;
      const ChannelPair ch(a1, a2);
      if (!(analytic::noon_min_phase_error(2, ch).value >
            analytic::separable_min_phase_error(2, ch).value)) {
        std::ostringstream os;
        os << "noon not worse at a1=" << a1 << " a2=" << a2;
        return {false, os.str()};
      }
    }
  }
  return {true, "noon minimum > separable minimum for a1 in {0.3, 0.41}, 500-point sweep"};
}

Outcome criterion_n_scaling() {
  double prev = 0.0;
  std::ostringstream os;
  for (int n : {2, 3, 4, 6, 10}) {
    const auto point = breakeven::breakeven_alpha2(n, 1.0);
    if (!point.alpha2_star) return {false, "missing break-even"};
    if (!(*point.alpha2_star > prev)) {
      return {false, "alpha2* not increasing at N=" + std::to_string(n)};
    }
    prev = *point.alpha2_star;
    os << "N" << n << "=" << *point.alpha2_star << " ";
  }
  return {true, "strictly increasing: " + os.str()};
}

Outcome criterion_error_propagation() {
  // 2000 trials x 10^4 shots per configuration, committed seed.
  std::ostringstream os;
  bool all_passed = true;
  for (const auto& r : validation::empirical_checks(validation::kValidationSeed)) {
    if (!r.passed) all_passed = false;
    os << r.name << " |ratio-1|=" << r.max_residual
       << (r.passed ? " ok; " : " FAIL; ");
  }
  os << "tol 0.1";
  return {all_passed, os.str()};
}

Outcome criterion_figures() {
  const fs::path out_dir =
      fs::temp_directory_path() /
      ("noonsim-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(out_dir);
  const fs::path golden_dir(NOONSIM_GOLDEN_DIR);

  const struct {
    const char* name;
    std::string args;
  } figures[] = {
      {"phase_error_default.csv", "phase-error"},
      {"limit_sweep_n2.csv", "limit-sweep --n 2"},
      {"limit_sweep_n4.csv", "limit-sweep --n 4"},
      {"compare_min_n2.csv", "compare-min --n 2"},
      {"compare_min_n4.csv", "compare-min --n 4"},
      {"compare_min_n10.csv", "compare-min --n 10"},
      {"breakeven_default.csv", "breakeven"},
  };

  for (const auto& fig : figures) {
    const fs::path out = out_dir / fig.name;
    if (run_cli(fig.args + " -o " + out.string()) != 0) {
      return {false, std::string("cli failed for ") + fig.name};
    }
    const std::string fresh = read_file(out);
    const std::string golden = read_file(golden_dir / fig.name);
    if (fresh != golden) {
      return {false, std::string("byte mismatch against golden ") + fig.name};
    }
  }

  // Qualitative structure, parsed from the regenerated files.
  for (int n : {2, 4}) {
    const Csv sweep = parse_csv(
        read_file(out_dir / ("limit_sweep_n" + std::to_string(n) + ".csv")));
    for (const auto& row : sweep.rows) {
      for (size_t c = 1; c <= 3; ++c) {
        if (std::isfinite(row[c]) && !(row[c] > 1.0 / n)) {
          return {false, "limit-sweep curve crossed 1/N"};
        }
      }
    }
  }
  const struct {
    int n;
    double threshold;
  } crossings[] = {{2, 0.4142}, {4, 0.5604}, {10, 0.7319}};
  for (const auto& c : crossings) {
    const Csv cmp = parse_csv(
        read_file(out_dir / ("compare_min_n" + std::to_string(c.n) + ".csv")));
    const double x = crossing_abscissa(cmp, 1, 2);
    if (!(std::abs(x - c.threshold) <= 0.005)) {
      std::ostringstream os;
      os << "compare-min N=" << c.n << " crossing at " << x << ", want "
         << c.threshold << " +- 0.005";
      return {false, os.str()};
    }
  }
  const Csv brk = parse_csv(read_file(out_dir / "breakeven_default.csv"));
  for (const auto& row : brk.rows) {
    if (!std::isnan(row[1]) && !std::isnan(row[2]) && !(row[2] > row[1])) {
      return {false, "break-even region ordering violated (N4 vs N2)"};
    }
    if (!std::isnan(row[2]) && !std::isnan(row[3]) && !(row[3] > row[2])) {
      return {false, "break-even region ordering violated (N10 vs N4)"};
    }
  }

  fs::remove_all(out_dir);
  return {true, "7 golden files byte-identical; curve structure matches"};
}

}  // namespace

int main() {
  const struct {
    int id;
    const char* name;
    std::function<Outcome()> run;
  } criteria[] = {
      {1, "heisenberg-limit-recovery", criterion_heisenberg_recovery},
      {2, "standard-quantum-limit-recovery", criterion_sql_recovery},
      {3, "break-even-thresholds", criterion_breakeven_thresholds},
      {4, "oracle-equivalence-grid", criterion_oracle_equivalence},
      {5, "heisenberg-unreachability", criterion_heisenberg_unreachable},
      {6, "always-worse-region", criterion_always_worse},
      {7, "break-even-n-scaling", criterion_n_scaling},
      {8, "empirical-error-propagation", criterion_error_propagation},
      {9, "figure-regeneration", criterion_figures},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.passed ? "[PASS] " : "[FAIL] ") << "criterion "
              << c.id << ": " << c.name << " :: " << outcome.detail << "\n";
    if (!outcome.passed) ++failures;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << " (" << (9 - failures) << "/9)\n";
  return failures == 0 ? 0 : 1;
}
