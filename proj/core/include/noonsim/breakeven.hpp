#pragma once

#include <optional>
#include <span>
#include <vector>

#include "noonsim/channel.hpp"

// Locates the transmittance frontier where the N00N method's minimum phase
// error equals the separable method's. Plain bisection throughout: the sign
// of the gap is monotone in alpha2, so the bracket is reliable, and fixed
// iteration counts keep results bit-identical across runs.

namespace noonsim::breakeven {

struct BreakEvenPoint {
  int n_photons = 0;
  double alpha1 = 0.0;
  /// Long-arm transmittance where the two minima coincide; absent when the
  /// N00N method is worse for every alpha2 (the "always worse" region).
  std::optional<double> alpha2_star;
  /// Gap at the root when present, otherwise the smallest gap observed
  /// over the search interval.
  double gap_at_root = 0.0;
};

struct BreakEvenCurve {
  int n_photons = 0;
  std::vector<BreakEvenPoint> points;
};

/// noon_min_phase_error - separable_min_phase_error at the given channel
/// (phi0 plays no role in either minimum). Positive means N00N is worse.
/// Rejects n < 2: at n = 1 the two methods coincide identically.
double min_error_gap(int n, double alpha1, double alpha2);

/// Bisection on alpha2 in [1e-6, 1] for the root of min_error_gap; at most
/// 200 iterations, 1e-12 tolerance on alpha2. The sign at alpha2 = 1 decides
/// existence; the sign at the lower bracket edge is computed, not assumed.
BreakEvenPoint breakeven_alpha2(int n, double alpha1);

/// Independent cross-check for the alpha1 = 1 column: solves
/// x^N - N x + (1 - N) = 0 for the root x > 1 and returns alpha2* = 1/x.
double breakeven_polynomial_root(int n);

/// breakeven_alpha2 over a strictly increasing alpha1 grid in (0, 1].
/// Points without a break-even mark the always-worse region.
BreakEvenCurve breakeven_curve(int n, std::span<const double> alpha1_grid);

}  // namespace noonsim::breakeven
