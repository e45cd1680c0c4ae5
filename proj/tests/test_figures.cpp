#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "figures.hpp"
#include "noonsim/validation.hpp"

using namespace noonsim;
using namespace noonsim::figures;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string to_csv(const Table& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

double column_min(const Table& t, size_t col) {
  double m = kInf;
  for (const auto& row : t.rows) {
    if (std::isfinite(row[col])) m = std::min(m, row[col]);
  }
  return m;
}

}  // namespace

TEST_CASE("value formatting") {
  CHECK_EQ(format_value(0.1), "0.1");
  CHECK_EQ(format_value(1.0), "1");
  CHECK_EQ(format_value(kInf), "inf");
  CHECK_EQ(format_value(1.0 / 3.0), "0.333333333333");  // 12 significant digits
  CHECK_EQ(format_value(0.999999), "0.999999");
}

TEST_CASE("linspace") {
  const auto pts = linspace(Grid{0.0, 1.0, 5});
  REQUIRE_EQ(pts.size(), 5);
  CHECK_EQ(pts.front(), 0.0);
  CHECK_EQ(pts.back(), 1.0);
  CHECK_EQ(pts[2], 0.5);
  CHECK_THROWS_AS(linspace(Grid{0.0, 1.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(linspace(Grid{1.0, 0.0, 10}), std::invalid_argument);
}

TEST_CASE("csv writing") {
  Table t;
  t.meta = {"demo"};
  t.header = {"x", "y"};
  t.rows = {{0.5, kInf}, {1.5, std::numeric_limits<double>::quiet_NaN()}};
  CHECK_EQ(to_csv(t), "# demo\nx,y\n0.5,inf\n1.5,\n");
}

TEST_CASE("phase-error table") {
  const PhaseErrorSpec spec;  // figure defaults
  const Table t = phase_error_table(spec);

  SUBCASE("shape and header") {
    REQUIRE_EQ(t.header.size(), 3);
    CHECK_EQ(t.header[0], "phi");
    CHECK_EQ(t.header[1], "delta_phi_N2");
    CHECK_EQ(t.header[2], "delta_phi_N4");
    CHECK_EQ(t.rows.size(), 1000);
  }
  SUBCASE("divergent rows carry the inf token") {
    CHECK_EQ(t.rows.front()[1], kInf);  // phi = 0
    CHECK_EQ(t.rows.front()[2], kInf);
    CHECK_EQ(t.rows.back()[1], kInf);  // phi = pi
    CHECK_EQ(t.rows.back()[2], kInf);
  }
  SUBCASE("column minima match the closed-form minima") {
    CHECK_LT(std::abs(column_min(t, 1) - 3.58430219460109), 1e-3);
    CHECK_LT(std::abs(column_min(t, 2) - 17.6844883031206), 2e-2);
  }
  SUBCASE("reruns are byte identical") {
    CHECK_EQ(to_csv(t), to_csv(phase_error_table(spec)));
  }
  SUBCASE("period pi/2 for the N=2 column on an aligned grid") {
    PhaseErrorSpec aligned;
    aligned.phi.count = 1001;  // step pi/1000, so pi/2 is 500 steps
    const Table a = phase_error_table(aligned);
    for (size_t i = 0; i + 500 < a.rows.size(); i += 17) {
      const double lhs = a.rows[i][1];
      const double rhs = a.rows[i + 500][1];
      CAPTURE(i);
      if (std::isinf(lhs) || std::isinf(rhs)) {
        CHECK_EQ(lhs, rhs);
      } else {
        CHECK_LT(std::abs(lhs - rhs) / rhs, 1e-6);
      }
    }
  }
}

TEST_CASE("limit-sweep table") {
  LimitSweepSpec spec2;  // N = 2 defaults
  const Table t2 = limit_sweep_table(spec2);
  LimitSweepSpec spec4 = spec2;
  spec4.n = 4;
  const Table t4 = limit_sweep_table(spec4);

  SUBCASE("header carries the channel sets and the reference column") {
    REQUIRE_EQ(t2.header.size(), 5);
    CHECK_EQ(t2.header[1], "delta_phi_a1_0.6_a2_0.1");
    CHECK_EQ(t2.header[3], "delta_phi_a1_0.999999_a2_0.99");
    CHECK_EQ(t2.header[4], "heisenberg");
  }
  SUBCASE("every finite value stays above the Heisenberg limit") {
    for (const auto& row : t2.rows) {
      for (size_t c = 1; c <= 3; ++c) {
        if (std::isfinite(row[c])) CHECK_GT(row[c], 0.5);
      }
      CHECK_EQ(row[4], 0.5);
    }
  }
  SUBCASE("cleaner channels approach the limit more closely") {
    const double worst = column_min(t2, 1);
    const double mid = column_min(t2, 2);
    const double best = column_min(t2, 3);
    CHECK_GT(worst, mid);
    CHECK_GT(mid, best);
    CHECK_LT(best - 0.5, 0.01);
  }
  SUBCASE("performance degrades with N in normalized units") {
    for (size_t c = 1; c <= 2; ++c) {  // the two genuinely lossy channel sets
      CAPTURE(c);
      CHECK_GT(column_min(t4, c) * 4.0, column_min(t2, c) * 2.0);
    }
  }
}

TEST_CASE("compare-min table") {
  CompareMinSpec spec;  // N = 2 defaults
  const Table t = compare_min_table(spec);

  SUBCASE("columns pair up per short-arm value") {
    REQUIRE_EQ(t.header.size(), 7);
    CHECK_EQ(t.header[1], "noon_a1_1");
    CHECK_EQ(t.header[2], "sep_a1_1");
    CHECK_EQ(t.header[5], "noon_a1_0.3");
    CHECK_EQ(t.header[6], "sep_a1_0.3");
    CHECK_EQ(t.rows.size(), 500);
  }
  SUBCASE("perfect short arm: curves cross at the N = 2 threshold") {
    double crossing = -1.0;
    for (size_t i = 1; i < t.rows.size(); ++i) {
      const double prev = t.rows[i - 1][1] - t.rows[i - 1][2];
      const double cur = t.rows[i][1] - t.rows[i][2];
      if (prev > 0.0 && cur <= 0.0) {
        crossing = 0.5 * (t.rows[i - 1][0] + t.rows[i][0]);
      }
    }
    CHECK_LT(std::abs(crossing - 0.414), 0.005);
  }
  SUBCASE("N = 10 crossing at its threshold") {
    CompareMinSpec s10;
    s10.n = 10;
    const Table t10 = compare_min_table(s10);
    double crossing = -1.0;
    for (size_t i = 1; i < t10.rows.size(); ++i) {
      const double prev = t10.rows[i - 1][1] - t10.rows[i - 1][2];
      const double cur = t10.rows[i][1] - t10.rows[i][2];
      if (prev > 0.0 && cur <= 0.0) {
        crossing = 0.5 * (t10.rows[i - 1][0] + t10.rows[i][0]);
      }
    }
    CHECK_LT(std::abs(crossing - 0.73), 0.005);
  }
  SUBCASE("alpha1 = 0.3: N00N worse for every long-arm transmittance") {
    for (const auto& row : t.rows) {
      CHECK_GT(row[5], row[6]);
    }
  }
}

TEST_CASE("break-even table") {
  BreakEvenSpec spec;  // defaults: N in {2, 4, 10}, 200-point grid
  const Table t = breakeven_table(spec);

  SUBCASE("grid endpoints and headers") {
    REQUIRE_EQ(t.rows.size(), 200);
    CHECK_EQ(t.header[1], "alpha2_star_N2");
    CHECK_EQ(t.header[3], "alpha2_star_N10");
    CHECK_EQ(t.rows.back()[0], 1.0);
  }
  SUBCASE("alpha1 = 1 row reproduces the thresholds") {
    const auto& last = t.rows.back();
    CHECK_LT(std::abs(last[1] - 0.4142), 1e-3);
    CHECK_LT(std::abs(last[2] - 0.560425660450318), 1e-3);
    CHECK_LT(std::abs(last[3] - 0.731929378423707), 1e-3);
  }
  SUBCASE("always-worse region is empty cells") {
    const auto& first = t.rows.front();  // alpha1 = 0.005
    CHECK(std::isnan(first[1]));
    CHECK(std::isnan(first[2]));
    CHECK(std::isnan(first[3]));
  }
  SUBCASE("threshold ordering wherever curves exist") {
    for (const auto& row : t.rows) {
      if (!std::isnan(row[1]) && !std::isnan(row[2])) CHECK_GT(row[2], row[1]);
      if (!std::isnan(row[2]) && !std::isnan(row[3])) CHECK_GT(row[3], row[2]);
    }
  }
  SUBCASE("swap symmetry: the N2 curve re-enters near alpha2 = 1") {
    // The first row with a break-even sits within one grid step above
    // sqrt(2)-1; the frontier is nearly vertical there, so alpha2* has
    // already dropped a little below 1 at that row.
    for (const auto& row : t.rows) {
      if (!std::isnan(row[1])) {
        CHECK_LT(std::abs(row[0] - (std::numbers::sqrt2 - 1.0)), 0.006);
        CHECK_GT(row[1], 0.85);
        break;
      }
    }
  }
}

TEST_CASE("montecarlo table") {
  MonteCarloSpec spec;
  spec.trials = 50;
  spec.shots = 400;
  const Table t = montecarlo_table(spec);

  SUBCASE("one row per trial, estimates on the branch") {
    REQUIRE_EQ(t.rows.size(), 50);
    for (const auto& row : t.rows) {
      CHECK_EQ(row[1] + row[2] + row[3], 400.0);  // noon: one draw per shot
      CHECK_GE(row[4], 0.0);
      CHECK_LE(row[4], std::numbers::pi / 2.0 + 1e-12);
    }
  }
  SUBCASE("metadata records the generator contract") {
    bool has_prng = false, has_summary = false;
    for (const auto& line : t.meta) {
      if (line.find("mt19937_64") != std::string::npos) has_prng = true;
      if (line.find("empirical_sd") != std::string::npos) has_summary = true;
    }
    CHECK(has_prng);
    CHECK(has_summary);
  }
  SUBCASE("byte-identical reruns with the same seed") {
    CHECK_EQ(to_csv(t), to_csv(montecarlo_table(spec)));
    MonteCarloSpec other = spec;
    other.seed += 1;
    CHECK_NE(to_csv(t), to_csv(montecarlo_table(other)));
  }
  SUBCASE("separable rows tally N draws per shot") {
    MonteCarloSpec sep = spec;
    sep.method = Method::separable;
    sep.n = 3;
    const Table ts = montecarlo_table(sep);
    for (const auto& row : ts.rows) {
      CHECK_EQ(row[1] + row[2] + row[3], 1200.0);
    }
  }
}

TEST_CASE("svg quick look") {
  const Table t = phase_error_table(PhaseErrorSpec{});
  std::ostringstream os;
  write_svg(os, t);
  const std::string svg = os.str();
  CHECK_NE(svg.find("<svg"), std::string::npos);
  CHECK_NE(svg.find("<polyline"), std::string::npos);
  CHECK_NE(svg.find("delta_phi_N2"), std::string::npos);
}

TEST_CASE("validation suite passes on a healthy build") {
  // The empirical runs are exercised by the acceptance suite; here the
  // fast checks only.
  const auto results = validation::run_all(false);
  for (const auto& r : results) {
    CAPTURE(r.name); CAPTURE(r.max_residual); CAPTURE(r.detail);
    CHECK(r.passed);
  }
  CHECK_GE(results.size(), 9);
}
