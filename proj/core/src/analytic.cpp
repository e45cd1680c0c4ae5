#include "noonsim/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace noonsim::analytic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

}  // namespace

double noon_mean(int n, const ChannelPair& ch, double phi) {
  require_n(n);
  return std::pow(ch.alpha1() * ch.alpha2(), 0.5 * n) *
         std::cos(n * (phi - ch.phi0()));
}

double noon_noise(int n, const ChannelPair& ch, double phi) {
  require_n(n);
  const double a1n = std::pow(ch.alpha1(), n);
  const double a2n = std::pow(ch.alpha2(), n);
  const double s = std::sin(n * (phi - ch.phi0()));
  return std::sqrt(0.5 * (a1n - 2.0 * a1n * a2n + a2n) + a1n * a2n * s * s);
}

double noon_responsivity(int n, const ChannelPair& ch, double phi) {
  require_n(n);
  return -n * std::pow(ch.alpha1() * ch.alpha2(), 0.5 * n) *
         std::sin(n * (phi - ch.phi0()));
}

PhaseErrorResult noon_phase_error(int n, const ChannelPair& ch, double phi) {
  require_n(n);
  const double s = std::sin(n * (phi - ch.phi0()));
  PhaseErrorResult r{kInf, phi, Method::noon, n};
  if (std::abs(s) < kSinTol) return r;
  const double inv1 = std::pow(ch.alpha1(), -n);
  const double inv2 = std::pow(ch.alpha2(), -n);
  r.value = std::sqrt(0.5 * (inv1 - 2.0 + inv2) + s * s) / (n * std::abs(s));
  return r;
}

PhaseErrorResult noon_min_phase_error(int n, const ChannelPair& ch) {
  require_n(n);
  const double inv1 = std::pow(ch.alpha1(), -n);
  const double inv2 = std::pow(ch.alpha2(), -n);
  return PhaseErrorResult{std::sqrt(inv1 + inv2) / (n * std::numbers::sqrt2),
                          ch.phi0() + std::numbers::pi / (2.0 * n),
                          Method::noon, n};
}

double separable_mean(int n, const ChannelPair& ch, double phi) {
  require_n(n);
  return n * std::sqrt(ch.alpha1() * ch.alpha2()) *
         std::cos(phi - ch.phi0());
}

double separable_noise(int n, const ChannelPair& ch, double phi) {
  require_n(n);
  const double a1 = ch.alpha1();
  const double a2 = ch.alpha2();
  const double s = std::sin(phi - ch.phi0());
  return std::sqrt(n * (0.5 * (a1 - 2.0 * a1 * a2 + a2) + a1 * a2 * s * s));
}

double separable_responsivity(int n, const ChannelPair& ch, double phi) {
  require_n(n);
  return -n * std::sqrt(ch.alpha1() * ch.alpha2()) *
         std::sin(phi - ch.phi0());
}

PhaseErrorResult separable_phase_error(int n, const ChannelPair& ch,
                                       double phi) {
  require_n(n);
  const double s = std::sin(phi - ch.phi0());
  PhaseErrorResult r{kInf, phi, Method::separable, n};
  if (std::abs(s) < kSinTol) return r;
  r.value = std::sqrt(0.5 * (1.0 / ch.alpha1() - 2.0 + 1.0 / ch.alpha2()) +
                      s * s) /
            (std::sqrt(double(n)) * std::abs(s));
  return r;
}

PhaseErrorResult separable_min_phase_error(int n, const ChannelPair& ch) {
  require_n(n);
  return PhaseErrorResult{
      std::sqrt(1.0 / ch.alpha1() + 1.0 / ch.alpha2()) / std::sqrt(2.0 * n),
      ch.phi0() + std::numbers::pi / 2.0, Method::separable, n};
}

double heisenberg_limit(int n) {
  require_n(n);
  return 1.0 / n;
}

double standard_quantum_limit(int n) {
  require_n(n);
  return 1.0 / std::sqrt(double(n));
}

}  // namespace noonsim::analytic
