#pragma once

#include <cstdint>
#include <vector>

#include "noonsim/channel.hpp"

// Seeded shot-level simulation of the two measurements. Outcomes are the
// observable eigenvalues +1 / -1 and 0 (the probe, or one of its photons,
// was lost outside the signal subspace). Lost events are not post-selected
// away: estimates divide by the full shot count, consistent with the
// closed-form variances, which carry the loss terms.
//
// All randomness comes from std::mt19937_64. Uniforms are produced as
// (engine() >> 11) * 2^-53 and turned into outcomes by inverse CDF over
// (p_plus, p_minus, p_zero); standard-library distributions are avoided so
// that committed outputs are portable across implementations.

namespace noonsim::montecarlo {

/// PRNG contract recorded in output metadata so golden files are portable.
inline constexpr const char* kPrngDescription =
    "mt19937_64; uniform = (engine() >> 11) * 2^-53; outcome by inverse CDF "
    "over (p_plus, p_minus, p_zero); trial stream seed = "
    "splitmix64(seed ^ ((trial_index + 1) * 0x9E3779B97F4A7C15))";

struct OutcomeProbabilities {
  double p_plus = 0.0;
  double p_minus = 0.0;
  double p_zero = 0.0;
};

/// Probabilities of the +1 / -1 / 0 outcomes. For the N00N method these
/// describe one A_D measurement of the full probe; for the separable method
/// they describe a single photon (the per-shot record then draws N of them).
/// Each call evaluates both the closed forms and the Fock-pipeline
/// projection onto the observable eigenspaces; disagreement beyond 1e-10,
/// or probabilities outside [0, 1] by more than 1e-12, is a hard error.
OutcomeProbabilities outcome_probabilities(Method method, int n,
                                           const ChannelPair& ch, double phi);

/// Tallied outcomes of one measurement run. For the N00N method each shot
/// is a single draw; for the separable method each shot draws one outcome
/// per photon, so the tallies total shots * draws_per_shot.
struct ShotRecord {
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  std::int64_t n_zero = 0;
  std::int64_t shots = 0;
  int draws_per_shot = 1;
  std::uint64_t seed = 0;

  std::int64_t total_draws() const { return n_plus + n_minus + n_zero; }
};

/// Deterministic multinomial sampler; same seed, same record.
ShotRecord sample_shots(Method method, int n, const ChannelPair& ch,
                        double phi, std::int64_t shots, std::uint64_t seed);

/// Building block used by sample_shots and the trial loop: draws
/// shots * draws_per_shot outcomes from fixed probabilities.
ShotRecord sample_outcomes(const OutcomeProbabilities& probs,
                           int draws_per_shot, std::int64_t shots,
                           std::uint64_t seed);

/// Inverts the mean-observable relation on its principal branch:
///   noon:      phi = phi0 + arccos(A / (a1 a2)^(N/2)) / N
///   separable: phi = phi0 + arccos(A / (N sqrt(a1 a2)))
/// with A = (n_plus - n_minus)/shots, clamped into [-1, 1] before the
/// arccos so sampling overshoot lands on the branch endpoint.
double estimate_phase(const ShotRecord& record, Method method, int n,
                      const ChannelPair& ch);

/// Phase where the error-propagation minimum sits: phi0 + pi/(2N) for the
/// N00N method, phi0 + pi/2 for the separable method.
double operating_point(Method method, int n, const ChannelPair& ch);

/// Stream seed for one trial, derived from the run seed and trial index so
/// trials are independent of scheduling order.
std::uint64_t trial_stream_seed(std::uint64_t seed, int trial_index);

struct TrialEnsemble {
  std::vector<double> estimates;
  double phi_true = 0.0;
  std::int64_t shots_per_trial = 0;
  int trials = 0;
  Method method = Method::noon;
};

/// Repeats sample_shots + estimate_phase over independent trial streams.
TrialEnsemble run_trials(Method method, int n, const ChannelPair& ch,
                         double phi_true, std::int64_t shots, int trials,
                         std::uint64_t seed);

struct EmpiricalPhaseError {
  double empirical_sd = 0.0;  // sample SD of the per-trial estimates
  double predicted = 0.0;     // delta-phi(phi_true) / sqrt(shots)
};

/// Empirical check of the error-propagation formula: the spread of phase
/// estimates across trials against the predicted delta-phi / sqrt(shots).
EmpiricalPhaseError empirical_phase_error(Method method, int n,
                                          const ChannelPair& ch,
                                          double phi_true, std::int64_t shots,
                                          int trials, std::uint64_t seed);

}  // namespace noonsim::montecarlo
