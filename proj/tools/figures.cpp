#include "figures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "noonsim/analytic.hpp"
#include "noonsim/breakeven.hpp"
#include "noonsim/montecarlo.hpp"

namespace noonsim::figures {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string channel_meta(const ChannelPair& ch) {
  return "alpha1: " + format_value(ch.alpha1()) +
         "  alpha2: " + format_value(ch.alpha2()) +
         "  phi0: " + format_value(ch.phi0());
}

std::string grid_meta(const char* name, const Grid& g) {
  return std::string(name) + " grid: " + std::to_string(g.count) +
         " points over [" + format_value(g.start) + ", " +
         format_value(g.stop) + "], point i = start + i*(stop-start)/(count-1)";
}

}  // namespace

std::vector<double> linspace(const Grid& grid) {
  if (grid.count < 2) {
    throw std::invalid_argument("grid count must be >= 2");
  }
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop) ||
      !(grid.stop > grid.start)) {
    throw std::invalid_argument("grid bounds must be finite and increasing");
  }
  std::vector<double> points(grid.count);
  for (int i = 0; i < grid.count; ++i) {
    points[i] =
        grid.start + double(i) * (grid.stop - grid.start) / (grid.count - 1);
  }
  return points;
}

std::string format_value(double v) {
  char buf[40];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (ec != std::errc()) throw std::logic_error("format_value failed");
  return std::string(buf, ptr);
}

void write_csv(std::ostream& os, const Table& table) {
  for (const auto& line : table.meta) os << "# " << line << "\n";
  for (size_t i = 0; i < table.header.size(); ++i) {
    if (i) os << ",";
    os << table.header[i];
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      if (!std::isnan(row[i])) os << format_value(row[i]);
    }
    os << "\n";
  }
}

void write_svg(std::ostream& os, const Table& table) {
  const int width = 720, height = 480;
  const int ml = 70, mr = 20, mt = 30, mb = 50;
  const double pw = width - ml - mr, ph = height - mt - mb;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, yfinite_max = -xmin;
  for (const auto& row : table.rows) {
    if (std::isfinite(row[0])) {
      xmin = std::min(xmin, row[0]);
      xmax = std::max(xmax, row[0]);
    }
    for (size_t c = 1; c < row.size(); ++c) {
      if (std::isfinite(row[c])) {
        ymin = std::min(ymin, row[c]);
        yfinite_max = std::max(yfinite_max, row[c]);
      }
    }
  }
  if (!(xmax > xmin)) throw std::invalid_argument("write_svg: empty table");
  // Divergences dwarf everything else; clip the range to 10x the smallest
  // finite value so the minima stay visible.
  const double ymax = std::min(yfinite_max, 10.0 * std::max(ymin, 1e-300));
  const double yspan = ymax > ymin ? ymax - ymin : 1.0;
  const auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
  const auto sy = [&](double y) { return mt + (1.0 - (y - ymin) / yspan) * ph; };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                 "#9467bd", "#ff7f0e", "#8c564b"};
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
     << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = xmin + (xmax - xmin) * t / 4.0;
    const double fy = ymin + yspan * t / 4.0;
    os << "<text x=\"" << sx(fx) << "\" y=\"" << height - mb + 18
       << "\" font-size=\"11\" text-anchor=\"middle\">" << format_value(fx)
       << "</text>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << sy(fy) + 4
       << "\" font-size=\"11\" text-anchor=\"end\">" << format_value(fy)
       << "</text>\n";
  }
  for (size_t c = 1; c < table.header.size(); ++c) {
    os << "<polyline fill=\"none\" stroke=\"" << colors[(c - 1) % 6]
       << "\" stroke-width=\"1.5\" points=\"";
    bool open = false;
    for (const auto& row : table.rows) {
      const double y = row[c];
      if (std::isfinite(row[0]) && std::isfinite(y) && y <= ymax) {
        os << sx(row[0]) << "," << sy(y) << " ";
        open = true;
      } else if (open) {
        // break the polyline across divergences
        os << "\" /><polyline fill=\"none\" stroke=\"" << colors[(c - 1) % 6]
           << "\" stroke-width=\"1.5\" points=\"";
        open = false;
      }
    }
    os << "\" />\n";
    os << "<text x=\"" << ml + 10 << "\" y=\"" << mt + 16 * c
       << "\" font-size=\"12\" fill=\"" << colors[(c - 1) % 6] << "\">"
       << table.header[c] << "</text>\n";
  }
  os << "</svg>\n";
}

Table phase_error_table(const PhaseErrorSpec& spec) {
  Table t;
  t.meta = {"noonsim phase-error", "n: " + join_ints(spec.n_values),
            channel_meta(spec.channel), grid_meta("phi", spec.phi),
            "delta-phi in radians; inf marks vanishing responsivity"};
  t.header = {"phi"};
  for (int n : spec.n_values) t.header.push_back("delta_phi_N" + std::to_string(n));
  for (double phi : linspace(spec.phi)) {
    std::vector<double> row{phi};
    for (int n : spec.n_values) {
      row.push_back(analytic::noon_phase_error(n, spec.channel, phi).value);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table limit_sweep_table(const LimitSweepSpec& spec) {
  Table t;
  t.meta = {"noonsim limit-sweep", "n: " + std::to_string(spec.n),
            grid_meta("phi", spec.phi),
            "delta-phi versus phi, one column per channel set; "
            "heisenberg column is the 1/N reference"};
  t.header = {"phi"};
  for (const auto& ch : spec.channels) {
    t.header.push_back("delta_phi_a1_" + format_value(ch.alpha1()) + "_a2_" +
                       format_value(ch.alpha2()));
  }
  t.header.push_back("heisenberg");
  for (double phi : linspace(spec.phi)) {
    std::vector<double> row{phi};
    for (const auto& ch : spec.channels) {
      row.push_back(analytic::noon_phase_error(spec.n, ch, phi).value);
    }
    row.push_back(analytic::heisenberg_limit(spec.n));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table compare_min_table(const CompareMinSpec& spec) {
  Table t;
  std::string a1list;
  for (size_t i = 0; i < spec.alpha1_values.size(); ++i) {
    if (i) a1list += ",";
    a1list += format_value(spec.alpha1_values[i]);
  }
  t.meta = {"noonsim compare-min", "n: " + std::to_string(spec.n),
            "alpha1: " + a1list, grid_meta("alpha2", spec.alpha2),
            "minimum delta-phi of each method versus long-arm transmittance"};
  t.header = {"alpha2"};
  for (double a1 : spec.alpha1_values) {
    t.header.push_back("noon_a1_" + format_value(a1));
    t.header.push_back("sep_a1_" + format_value(a1));
  }
  for (double a2 : linspace(spec.alpha2)) {
    std::vector<double> row{a2};
    for (double a1 : spec.alpha1_values) {
      const ChannelPair ch(a1, a2);
      row.push_back(analytic::noon_min_phase_error(spec.n, ch).value);
      row.push_back(analytic::separable_min_phase_error(spec.n, ch).value);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table breakeven_table(const BreakEvenSpec& spec) {
  Table t;
  t.meta = {"noonsim breakeven", "n: " + join_ints(spec.n_values),
            grid_meta("alpha1", spec.alpha1),
            "long-arm transmittance where the two methods' minimum phase "
            "errors coincide; empty where the N00N method is always worse"};
  t.header = {"alpha1"};
  for (int n : spec.n_values) {
    t.header.push_back("alpha2_star_N" + std::to_string(n));
  }
  const std::vector<double> grid = linspace(spec.alpha1);
  std::vector<breakeven::BreakEvenCurve> curves;
  curves.reserve(spec.n_values.size());
  for (int n : spec.n_values) {
    curves.push_back(breakeven::breakeven_curve(n, grid));
  }
  for (size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (const auto& curve : curves) {
      const auto& p = curve.points[i];
      row.push_back(p.alpha2_star ? *p.alpha2_star : kNaN);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table montecarlo_table(const MonteCarloSpec& spec) {
  using namespace noonsim::montecarlo;
  const double phi =
      spec.phi_true.value_or(operating_point(spec.method, spec.n, spec.channel));
  const OutcomeProbabilities probs =
      outcome_probabilities(spec.method, spec.n, spec.channel, phi);
  const int draws_per_shot = spec.method == Method::noon ? 1 : spec.n;

  Table t;
  t.header = {"trial", "n_plus", "n_minus", "n_zero", "phi_hat"};
  std::vector<double> estimates;
  estimates.reserve(spec.trials);
  for (int trial = 0; trial < spec.trials; ++trial) {
    const ShotRecord rec = sample_outcomes(
        probs, draws_per_shot, spec.shots, trial_stream_seed(spec.seed, trial));
    const double est = estimate_phase(rec, spec.method, spec.n, spec.channel);
    estimates.push_back(est);
    t.rows.push_back({double(trial), double(rec.n_plus), double(rec.n_minus),
                      double(rec.n_zero), est});
  }

  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= estimates.size();
  double ss = 0.0;
  for (double e : estimates) ss += (e - mean) * (e - mean);
  const double sd =
      estimates.size() > 1 ? std::sqrt(ss / (estimates.size() - 1)) : 0.0;
  const double predicted =
      (spec.method == Method::noon
           ? analytic::noon_phase_error(spec.n, spec.channel, phi).value
           : analytic::separable_phase_error(spec.n, spec.channel, phi).value) /
      std::sqrt(double(spec.shots));

  std::ostringstream seed_os;
  seed_os << "seed: " << spec.seed;
  t.meta = {"noonsim montecarlo",
            std::string("method: ") + method_name(spec.method) +
                "  n: " + std::to_string(spec.n),
            channel_meta(spec.channel),
            "phi_true: " + format_value(phi) +
                "  shots: " + std::to_string(spec.shots) +
                "  trials: " + std::to_string(spec.trials),
            seed_os.str(),
            std::string("prng: ") + kPrngDescription,
            "empirical_sd: " + format_value(sd) +
                "  predicted: " + format_value(predicted)};
  return t;
}

}  // namespace noonsim::figures
