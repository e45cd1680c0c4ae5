#include "noonsim/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "noonsim/analytic.hpp"
#include "noonsim/fock.hpp"

namespace noonsim::montecarlo {

namespace {

constexpr double kProbabilityTol = 1e-12;
constexpr double kOracleAgreementTol = 1e-10;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double next_uniform(std::mt19937_64& eng) {
  return double(eng() >> 11) * 0x1.0p-53;
}

double clamp_probability(double p, const char* name) {
  if (p < -kProbabilityTol || p > 1.0 + kProbabilityTol) {
    throw std::logic_error(std::string("outcome_probabilities: ") + name +
                           " = " + std::to_string(p) + " outside [0, 1]");
  }
  return std::min(std::max(p, 0.0), 1.0);
}

// Eigen-projection of the pipeline state onto the +1 / -1 eigenvectors of
// the swap observable, (|N0> +- |0N>)/sqrt(2).
OutcomeProbabilities fock_projection(int n, const ChannelPair& ch,
                                     double phi) {
  using namespace noonsim::fock;
  TwoModeDensityMatrix rho = noon_state(n, n);
  rho = loss_channel(rho, ch.alpha1(), Arm::one);
  rho = loss_channel(rho, ch.alpha2(), Arm::two);
  rho = phase_shift(rho, phi - ch.phi0());
  const FockBasis& basis = rho.basis();
  Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(basis.dim());
  Eigen::VectorXcd minus = Eigen::VectorXcd::Zero(basis.dim());
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  plus(basis.index(n, 0)) = inv_sqrt2;
  plus(basis.index(0, n)) = inv_sqrt2;
  minus(basis.index(n, 0)) = inv_sqrt2;
  minus(basis.index(0, n)) = -inv_sqrt2;
  OutcomeProbabilities p;
  p.p_plus = (plus.adjoint() * rho.matrix() * plus).value().real();
  p.p_minus = (minus.adjoint() * rho.matrix() * minus).value().real();
  p.p_zero = 1.0 - p.p_plus - p.p_minus;
  return p;
}

}  // namespace

OutcomeProbabilities outcome_probabilities(Method method, int n,
                                           const ChannelPair& ch,
                                           double phi) {
  if (n < 1) throw std::invalid_argument("outcome_probabilities: n >= 1");
  // Closed forms; the separable method uses the per-photon (N = 1) shape.
  const int m = method == Method::noon ? n : 1;
  const double a1m = std::pow(ch.alpha1(), m);
  const double a2m = std::pow(ch.alpha2(), m);
  const double coherence = std::pow(ch.alpha1() * ch.alpha2(), 0.5 * m) *
                           std::cos(m * (phi - ch.phi0()));
  OutcomeProbabilities p;
  p.p_plus = 0.25 * (a1m + a2m) + 0.5 * coherence;
  p.p_minus = 0.25 * (a1m + a2m) - 0.5 * coherence;
  p.p_zero = 1.0 - p.p_plus - p.p_minus;

  const OutcomeProbabilities projected = fock_projection(m, ch, phi);
  const double dev = std::max({std::abs(p.p_plus - projected.p_plus),
                               std::abs(p.p_minus - projected.p_minus),
                               std::abs(p.p_zero - projected.p_zero)});
  if (dev > kOracleAgreementTol) {
    throw std::logic_error(
        "outcome_probabilities: closed form deviates from Fock projection by " +
        std::to_string(dev));
  }

  p.p_plus = clamp_probability(p.p_plus, "p_plus");
  p.p_minus = clamp_probability(p.p_minus, "p_minus");
  p.p_zero = clamp_probability(p.p_zero, "p_zero");
  return p;
}

ShotRecord sample_outcomes(const OutcomeProbabilities& probs,
                           int draws_per_shot, std::int64_t shots,
                           std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_outcomes: shots >= 1");
  if (draws_per_shot < 1) {
    throw std::invalid_argument("sample_outcomes: draws_per_shot >= 1");
  }
  ShotRecord record;
  record.shots = shots;
  record.draws_per_shot = draws_per_shot;
  record.seed = seed;
  std::mt19937_64 eng(seed);
  const double cut_plus = probs.p_plus;
  const double cut_minus = probs.p_plus + probs.p_minus;
  const std::int64_t draws = shots * draws_per_shot;
  for (std::int64_t i = 0; i < draws; ++i) {
    const double u = next_uniform(eng);
    if (u < cut_plus) {
      ++record.n_plus;
    } else if (u < cut_minus) {
      ++record.n_minus;
    } else {
      ++record.n_zero;
    }
  }
  return record;
}

ShotRecord sample_shots(Method method, int n, const ChannelPair& ch,
                        double phi, std::int64_t shots, std::uint64_t seed) {
  const OutcomeProbabilities probs = outcome_probabilities(method, n, ch, phi);
  const int draws_per_shot = method == Method::noon ? 1 : n;
  return sample_outcomes(probs, draws_per_shot, shots, seed);
}

double estimate_phase(const ShotRecord& record, Method method, int n,
                      const ChannelPair& ch) {
  if (record.shots < 1 ||
      record.total_draws() != record.shots * record.draws_per_shot) {
    throw std::invalid_argument("estimate_phase: inconsistent record");
  }
  const double a_hat =
      double(record.n_plus - record.n_minus) / double(record.shots);
  const double scale = method == Method::noon
                           ? std::pow(ch.alpha1() * ch.alpha2(), 0.5 * n)
                           : n * std::sqrt(ch.alpha1() * ch.alpha2());
  const double c = std::clamp(a_hat / scale, -1.0, 1.0);
  const double branch = method == Method::noon ? 1.0 / n : 1.0;
  return ch.phi0() + branch * std::acos(c);
}

double operating_point(Method method, int n, const ChannelPair& ch) {
  if (n < 1) throw std::invalid_argument("operating_point: n >= 1");
  const double period = method == Method::noon ? std::numbers::pi / (2.0 * n)
                                               : std::numbers::pi / 2.0;
  return ch.phi0() + period;
}

std::uint64_t trial_stream_seed(std::uint64_t seed, int trial_index) {
  return splitmix64(seed ^
                    ((std::uint64_t(trial_index) + 1) * 0x9E3779B97F4A7C15ULL));
}

TrialEnsemble run_trials(Method method, int n, const ChannelPair& ch,
                         double phi_true, std::int64_t shots, int trials,
                         std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_trials: trials >= 1");
  const OutcomeProbabilities probs =
      outcome_probabilities(method, n, ch, phi_true);
  const int draws_per_shot = method == Method::noon ? 1 : n;
  TrialEnsemble ensemble;
  ensemble.estimates.reserve(trials);
  ensemble.phi_true = phi_true;
  ensemble.shots_per_trial = shots;
  ensemble.trials = trials;
  ensemble.method = method;
  for (int t = 0; t < trials; ++t) {
    const ShotRecord record = sample_outcomes(
        probs, draws_per_shot, shots, trial_stream_seed(seed, t));
    ensemble.estimates.push_back(estimate_phase(record, method, n, ch));
  }
  return ensemble;
}

EmpiricalPhaseError empirical_phase_error(Method method, int n,
                                          const ChannelPair& ch,
                                          double phi_true, std::int64_t shots,
                                          int trials, std::uint64_t seed) {
  const TrialEnsemble ensemble =
      run_trials(method, n, ch, phi_true, shots, trials, seed);
  double mean = 0.0;
  for (double e : ensemble.estimates) mean += e;
  mean /= ensemble.estimates.size();
  double ss = 0.0;
  for (double e : ensemble.estimates) ss += (e - mean) * (e - mean);
  const double sd = std::sqrt(ss / (ensemble.estimates.size() - 1));

  const double predicted =
      (method == Method::noon
           ? analytic::noon_phase_error(n, ch, phi_true).value
           : analytic::separable_phase_error(n, ch, phi_true).value) /
      std::sqrt(double(shots));
  return EmpiricalPhaseError{sd, predicted};
}

}  // namespace noonsim::montecarlo
