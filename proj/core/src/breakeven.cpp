#include "noonsim/breakeven.hpp"

#include <cmath>
#include <stdexcept>

#include "noonsim/analytic.hpp"

namespace noonsim::breakeven {

namespace {

constexpr double kAlpha2Lo = 1e-6;
constexpr int kMaxIterations = 200;
constexpr double kAlpha2Tol = 1e-12;
constexpr int kScanPoints = 512;

void require_args(int n, double alpha1) {
  if (n < 2) {
    throw std::invalid_argument(
        "breakeven: n must be >= 2 (the methods coincide at n = 1)");
  }
  if (!(alpha1 > 0.0) || !(alpha1 <= 1.0)) {
    throw std::invalid_argument("breakeven: alpha1 must lie in (0, 1]");
  }
}

}  // namespace

double min_error_gap(int n, double alpha1, double alpha2) {
  require_args(n, alpha1);
  const ChannelPair ch(alpha1, alpha2, 0.0);
  return analytic::noon_min_phase_error(n, ch).value -
         analytic::separable_min_phase_error(n, ch).value;
}

BreakEvenPoint breakeven_alpha2(int n, double alpha1) {
  require_args(n, alpha1);
  BreakEvenPoint point{n, alpha1, std::nullopt, 0.0};

  const double gap_hi = min_error_gap(n, alpha1, 1.0);
  if (gap_hi > 0.0) {
    // N00N worse even with a perfect long arm; no break-even anywhere.
    double min_gap = gap_hi;
    for (int i = 0; i < kScanPoints; ++i) {
      const double a2 =
          kAlpha2Lo + (1.0 - kAlpha2Lo) * double(i) / double(kScanPoints - 1);
      min_gap = std::min(min_gap, min_error_gap(n, alpha1, a2));
    }
    point.gap_at_root = min_gap;
    return point;
  }

  double lo = kAlpha2Lo;
  double hi = 1.0;
  const double gap_lo = min_error_gap(n, alpha1, lo);
  if (!(gap_lo > 0.0)) {
    throw std::logic_error(
        "breakeven_alpha2: gap not positive near alpha2 = 0");
  }
  for (int i = 0; i < kMaxIterations && hi - lo > kAlpha2Tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (min_error_gap(n, alpha1, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  point.alpha2_star = root;
  point.gap_at_root = min_error_gap(n, alpha1, root);
  return point;
}

double breakeven_polynomial_root(int n) {
  if (n < 2) throw std::invalid_argument("breakeven: n must be >= 2");
  const auto poly = [n](double x) {
    return std::pow(x, n) - n * x + (1.0 - n);
  };
  double lo = 1.0;  // poly(1) = 2 - 2n < 0
  double hi = 2.0;
  while (poly(hi) <= 0.0) hi *= 2.0;
  for (int i = 0; i < kMaxIterations && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (poly(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 1.0 / (0.5 * (lo + hi));
}

BreakEvenCurve breakeven_curve(int n, std::span<const double> alpha1_grid) {
  BreakEvenCurve curve{n, {}};
  curve.points.reserve(alpha1_grid.size());
  double prev = 0.0;
  for (double a1 : alpha1_grid) {
    if (!(a1 > prev) || !(a1 <= 1.0)) {
      throw std::invalid_argument(
          "breakeven_curve: grid must be strictly increasing within (0, 1]");
    }
    prev = a1;
    curve.points.push_back(breakeven_alpha2(n, a1));
  }
  return curve;
}

}  // namespace noonsim::breakeven
