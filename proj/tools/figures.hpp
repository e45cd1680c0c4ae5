#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "noonsim/channel.hpp"
#include "noonsim/validation.hpp"

// Figure regeneration as data: each subcommand produces a Table that is
// serialized as CSV (or a minimal SVG quick-look plot). Output is fully
// deterministic: values go through one locale-free formatter at 12
// significant digits, +infinity is the literal token "inf", and absent
// cells (no break-even) are empty fields.

namespace noonsim::figures {

/// Inclusive linear grid: point i = start + i * (stop - start) / (count - 1).
struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;
};

std::vector<double> linspace(const Grid& grid);

struct Table {
  std::vector<std::string> meta;  // written as "# ..." comment lines
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// 12 significant digits, locale-independent; "inf" for infinities.
std::string format_value(double v);

void write_csv(std::ostream& os, const Table& table);

/// Minimal line plot: first column is the abscissa, every other column a
/// polyline. Divergent values are clipped; this is a quick look, not a
/// publication rendering.
void write_svg(std::ostream& os, const Table& table);

struct PhaseErrorSpec {
  std::vector<int> n_values = {2, 4};
  ChannelPair channel{0.6, 0.1, 0.0};
  Grid phi{0.0, std::numbers::pi, 1000};
};
Table phase_error_table(const PhaseErrorSpec& spec);

struct LimitSweepSpec {
  int n = 2;
  std::vector<ChannelPair> channels = {ChannelPair(0.6, 0.1),
                                       ChannelPair(0.8, 0.6),
                                       ChannelPair(0.999999, 0.99)};
  Grid phi{0.0, std::numbers::pi, 1000};
};
Table limit_sweep_table(const LimitSweepSpec& spec);

struct CompareMinSpec {
  int n = 2;
  std::vector<double> alpha1_values = {1.0, 0.6, 0.3};
  Grid alpha2{0.01, 1.0, 500};
};
Table compare_min_table(const CompareMinSpec& spec);

struct BreakEvenSpec {
  std::vector<int> n_values = {2, 4, 10};
  Grid alpha1{0.005, 1.0, 200};
};
Table breakeven_table(const BreakEvenSpec& spec);

struct MonteCarloSpec {
  Method method = Method::noon;
  int n = 2;
  ChannelPair channel{0.6, 0.1, 0.0};
  std::optional<double> phi_true;  // defaults to the operating point
  std::int64_t shots = 10000;
  int trials = 2000;
  std::uint64_t seed = validation::kValidationSeed;
};
Table montecarlo_table(const MonteCarloSpec& spec);

}  // namespace noonsim::figures
