#include "noonsim/validation.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "noonsim/analytic.hpp"
#include "noonsim/breakeven.hpp"
#include "noonsim/channel.hpp"
#include "noonsim/fock.hpp"
#include "noonsim/montecarlo.hpp"

namespace noonsim::validation {

namespace {

constexpr std::array<double, 5> kAlphaGrid = {0.1, 0.3, 0.6, 0.999999, 1.0};
constexpr int kPhaseCount = 32;
constexpr double kGridPhi0 = 0.3;  // nonzero so the dispersion path is live
constexpr int kMaxN = 6;

struct Residual {
  double value = 0.0;
  std::string where;

  void update(double r, const std::string& loc) {
    if (r > value) {
      value = r;
      where = loc;
    }
  }
};

std::string grid_location(int n, double a1, double a2, double phi_rel) {
  std::ostringstream os;
  os << "N=" << n << " a1=" << a1 << " a2=" << a2 << " phi-phi0=" << phi_rel;
  return os.str();
}

CheckResult make_result(std::string name, const Residual& res, double tol) {
  CheckResult r;
  r.name = std::move(name);
  r.max_residual = res.value;
  r.tolerance = tol;
  r.passed = res.value <= tol;
  r.detail = res.where;
  return r;
}

}  // namespace

std::vector<CheckResult> oracle_grid_checks() {
  using namespace noonsim::fock;
  Residual noon_mean_res, noon_var_res, sep_mean_res, sep_var_res, moment_res;

  for (int n = 1; n <= kMaxN; ++n) {
    const FockOperator ad = observable_ad(n, n);
    for (double a1 : kAlphaGrid) {
      for (double a2 : kAlphaGrid) {
        const ChannelPair ch(a1, a2, kGridPhi0);
        // Loss is hoisted out of the phase loop; it commutes with the
        // phase shift, and the composition below is exactly the one
        // oracle_noon_stats applies.
        TwoModeDensityMatrix lossy = noon_state(n, n);
        lossy = loss_channel(lossy, a1, Arm::one);
        lossy = loss_channel(lossy, a2, Arm::two);
        const double second_expected =
            0.5 * (std::pow(a1, n) + std::pow(a2, n));

        for (int k = 0; k < kPhaseCount; ++k) {
          const double phi_rel = 2.0 * std::numbers::pi * k / kPhaseCount;
          const double phi = ch.phi0() + phi_rel;
          const auto loc = grid_location(n, a1, a2, phi_rel);

          const MomentStats noon =
              observable_stats(phase_shift(lossy, phi_rel), ad);
          noon_mean_res.update(
              std::abs(noon.mean - analytic::noon_mean(n, ch, phi)), loc);
          const double noon_noise = analytic::noon_noise(n, ch, phi);
          noon_var_res.update(
              std::abs(noon.variance - noon_noise * noon_noise), loc);
          moment_res.update(
              std::abs(noon.variance + noon.mean * noon.mean -
                       second_expected),
              loc);

          const MomentStats sep = oracle_separable_stats(n, ch, phi);
          sep_mean_res.update(
              std::abs(sep.mean - analytic::separable_mean(n, ch, phi)), loc);
          const double sep_noise = analytic::separable_noise(n, ch, phi);
          sep_var_res.update(
              std::abs(sep.variance - sep_noise * sep_noise), loc);

          // Pin the public one-call pipeline on a thinned subgrid.
          if (k % 8 == 0) {
            const MomentStats direct = oracle_noon_stats(n, ch, phi);
            noon_mean_res.update(std::abs(direct.mean - noon.mean), loc);
            noon_var_res.update(std::abs(direct.variance - noon.variance),
                                loc);
          }
        }
      }
    }
  }

  return {
      make_result("oracle-noon-mean", noon_mean_res, 1e-10),
      make_result("oracle-noon-variance", noon_var_res, 1e-10),
      make_result("oracle-separable-mean", sep_mean_res, 1e-10),
      make_result("oracle-separable-variance", sep_var_res, 1e-10),
      make_result("moment-identity", moment_res, 1e-10),
  };
}

CheckResult probability_closure_check() {
  using montecarlo::outcome_probabilities;
  Residual res;
  for (int n : {1, 2, 4, 6}) {
    for (double a1 : kAlphaGrid) {
      for (double a2 : kAlphaGrid) {
        const ChannelPair ch(a1, a2, kGridPhi0);
        for (int k = 0; k < kPhaseCount; ++k) {
          const double phi =
              ch.phi0() + 2.0 * std::numbers::pi * k / kPhaseCount;
          for (Method m : {Method::noon, Method::separable}) {
            const auto p = outcome_probabilities(m, n, ch, phi);
            const auto loc = grid_location(n, a1, a2, phi - ch.phi0());
            res.update(std::abs(p.p_plus + p.p_minus + p.p_zero - 1.0), loc);
            const int mm = m == Method::noon ? n : 1;
            const double second =
                0.5 * (std::pow(a1, mm) + std::pow(a2, mm));
            res.update(std::abs(p.p_plus + p.p_minus - second), loc);
          }
        }
      }
    }
  }
  return make_result("probability-closure", res, 1e-12);
}

CheckResult limit_recovery_check() {
  Residual res;
  const ChannelPair lossless = ChannelPair::lossless();
  for (int n = 1; n <= 20; ++n) {
    res.update(std::abs(analytic::noon_min_phase_error(n, lossless).value -
                        analytic::heisenberg_limit(n)),
               "noon N=" + std::to_string(n));
    res.update(
        std::abs(analytic::separable_min_phase_error(n, lossless).value -
                 analytic::standard_quantum_limit(n)),
        "separable N=" + std::to_string(n));
  }
  return make_result("limit-recovery", res, 1e-14);
}

CheckResult responsivity_fd_check() {
  Residual res;
  const double h = 1e-6;
  for (int n : {1, 2, 4}) {
    for (auto [a1, a2] : {std::pair{1.0, 1.0}, {0.6, 0.1}, {0.8, 0.6}}) {
      const ChannelPair ch(a1, a2, 0.2);
      for (double phi : {0.3, 0.7, 1.1}) {
        const auto loc = grid_location(n, a1, a2, phi - ch.phi0());
        const double noon_fd =
            (fock::oracle_noon_stats(n, ch, phi + h).mean -
             fock::oracle_noon_stats(n, ch, phi - h).mean) /
            (2.0 * h);
        res.update(std::abs(noon_fd - analytic::noon_responsivity(n, ch, phi)),
                   "noon " + loc);
        const double sep_fd =
            (fock::oracle_separable_stats(n, ch, phi + h).mean -
             fock::oracle_separable_stats(n, ch, phi - h).mean) /
            (2.0 * h);
        res.update(
            std::abs(sep_fd - analytic::separable_responsivity(n, ch, phi)),
            "separable " + loc);
      }
    }
  }
  return make_result("responsivity-finite-difference", res, 1e-6);
}

CheckResult polynomial_root_check() {
  Residual res;
  for (int n : {2, 3, 4, 6, 10}) {
    const auto point = breakeven::breakeven_alpha2(n, 1.0);
    const double poly = breakeven::breakeven_polynomial_root(n);
    res.update(point.alpha2_star ? std::abs(*point.alpha2_star - poly) : 1.0,
               "N=" + std::to_string(n));
  }
  return make_result("breakeven-polynomial-root", res, 1e-9);
}

std::vector<CheckResult> empirical_checks(std::uint64_t seed) {
  using namespace noonsim::montecarlo;
  std::vector<CheckResult> results;
  const std::int64_t shots = 10000;
  const int trials = 2000;
  int config = 0;
  for (int n : {2, 4}) {
    for (Method m : {Method::noon, Method::separable}) {
      for (auto [a1, a2] : {std::pair{1.0, 1.0}, {0.6, 0.1}}) {
        const ChannelPair ch(a1, a2, 0.0);
        const double phi = operating_point(m, n, ch);
        const auto r = empirical_phase_error(
            m, n, ch, phi, shots, trials, trial_stream_seed(seed, config));
        Residual res;
        std::ostringstream os;
        os << method_name(m) << " N=" << n << " a1=" << a1 << " a2=" << a2
           << " sd=" << r.empirical_sd << " predicted=" << r.predicted;
        res.update(std::abs(r.empirical_sd / r.predicted - 1.0), os.str());
        results.push_back(make_result(
            "error-propagation-" + std::string(method_name(m)) + "-N" +
                std::to_string(n) + (a1 == 1.0 ? "-lossless" : "-lossy"),
            res, 0.1));
        ++config;
      }
    }
  }
  return results;
}

std::vector<CheckResult> run_all(bool empirical, std::uint64_t seed) {
  std::vector<CheckResult> all = oracle_grid_checks();
  all.push_back(probability_closure_check());
  all.push_back(limit_recovery_check());
  all.push_back(responsivity_fd_check());
  all.push_back(polynomial_root_check());
  if (empirical) {
    auto emp = empirical_checks(seed);
    all.insert(all.end(), emp.begin(), emp.end());
  }
  return all;
}

}  // namespace noonsim::validation
