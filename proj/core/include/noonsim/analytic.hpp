#pragma once

#include "noonsim/channel.hpp"

// Closed-form phase-estimation quantities for both methods, written
// entirely in transmittance form. All phases are radians; phi enters only
// through phi - phi0 and is never reduced modulo the period.

namespace noonsim::analytic {

/// |sin| below this counts as a vanishing responsivity: the error-propagation
/// quotient diverges and the phase error is reported as +infinity.
inline constexpr double kSinTol = 1e-14;

struct PhaseErrorResult {
  double value = 0.0;   // radians; +infinity where the responsivity vanishes
  double at_phi = 0.0;  // phase the value was evaluated (or attained) at
  Method method = Method::noon;
  int n_photons = 0;
};

// --- N00N-state method -----------------------------------------------------

/// Mean of the swap observable, (alpha1 alpha2)^(N/2) cos N(phi - phi0).
double noon_mean(int n, const ChannelPair& ch, double phi);

/// Measurement noise Delta A_D:
/// sqrt( (a1^N - 2 a1^N a2^N + a2^N)/2 + (a1 a2)^N sin^2 N(phi-phi0) ).
double noon_noise(int n, const ChannelPair& ch, double phi);

/// Responsivity d<A_D>/dphi = -N (alpha1 alpha2)^(N/2) sin N(phi - phi0).
double noon_responsivity(int n, const ChannelPair& ch, double phi);

/// Error-propagation phase error Delta A_D / |d<A_D>/dphi|, simplified to
/// sqrt( (1/a1^N - 2 + 1/a2^N)/2 + sin^2 N(phi-phi0) ) / (N |sin N(phi-phi0)|).
PhaseErrorResult noon_phase_error(int n, const ChannelPair& ch, double phi);

/// Minimum of the above over phi, attained at sin^2 N(phi-phi0) = 1:
/// sqrt(a1^-N + a2^-N) / (N sqrt(2)), reported at phi0 + pi/(2N).
PhaseErrorResult noon_min_phase_error(int n, const ChannelPair& ch);

// --- N-photon separable method ----------------------------------------------

/// Mean of A_R, N sqrt(alpha1 alpha2) cos(phi - phi0).
double separable_mean(int n, const ChannelPair& ch, double phi);

/// Delta A_R = sqrt( N [ (a1 - 2 a1 a2 + a2)/2 + a1 a2 sin^2(phi-phi0) ] ).
double separable_noise(int n, const ChannelPair& ch, double phi);

/// d<A_R>/dphi = -N sqrt(alpha1 alpha2) sin(phi - phi0).
double separable_responsivity(int n, const ChannelPair& ch, double phi);

/// sqrt( (1/a1 - 2 + 1/a2)/2 + sin^2(phi-phi0) ) / (sqrt(N) |sin(phi-phi0)|).
PhaseErrorResult separable_phase_error(int n, const ChannelPair& ch, double phi);

/// Minimum at sin^2(phi-phi0) = 1: sqrt(1/a1 + 1/a2) / sqrt(2N),
/// reported at phi0 + pi/2.
PhaseErrorResult separable_min_phase_error(int n, const ChannelPair& ch);

// --- Reference limits --------------------------------------------------------

double heisenberg_limit(int n);        // 1/N
double standard_quantum_limit(int n);  // 1/sqrt(N)

}  // namespace noonsim::analytic
