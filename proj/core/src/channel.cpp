#include "noonsim/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace noonsim {

const char* method_name(Method m) {
  return m == Method::noon ? "noon" : "separable";
}

void PhysicalArm::validate() const {
  if (!(refractive_index > 0.0)) {
    throw std::invalid_argument("PhysicalArm: refractive index must be > 0");
  }
  if (!(attenuation_coeff >= 0.0)) {
    throw std::invalid_argument("PhysicalArm: attenuation coefficient must be >= 0");
  }
  if (!(path_length >= 0.0)) {
    throw std::invalid_argument("PhysicalArm: path length must be >= 0");
  }
}

double transmittance(double attenuation_coeff, double path_length) {
  if (!(attenuation_coeff >= 0.0) || !(path_length >= 0.0)) {
    throw std::invalid_argument("transmittance: K and L must be >= 0");
  }
  return std::exp(-attenuation_coeff * path_length);
}

double dispersion_shift(const PhysicalArm& arm1, const PhysicalArm& arm2,
                        double omega_over_c) {
  arm1.validate();
  arm2.validate();
  if (!(omega_over_c > 0.0)) {
    throw std::invalid_argument("dispersion_shift: omega/c must be > 0");
  }
  return omega_over_c * (arm2.refractive_index * arm2.path_length -
                         arm1.refractive_index * arm1.path_length);
}

ChannelPair::ChannelPair(double alpha1, double alpha2, double phi0)
    : alpha1_(alpha1), alpha2_(alpha2), phi0_(phi0) {
  auto check_alpha = [](double a, const char* name) {
    if (!(a > 0.0) || !(a <= 1.0)) {
      throw std::invalid_argument(std::string("ChannelPair: ") + name +
                                  " must lie in (0, 1]");
    }
  };
  check_alpha(alpha1_, "alpha1");
  check_alpha(alpha2_, "alpha2");
  if (!std::isfinite(phi0_)) {
    throw std::invalid_argument("ChannelPair: phi0 must be finite");
  }
}

ChannelPair ChannelPair::from_physical(const PhysicalArm& arm1,
                                       const PhysicalArm& arm2,
                                       double omega_over_c) {
  return ChannelPair(
      transmittance(arm1.attenuation_coeff, arm1.path_length),
      transmittance(arm2.attenuation_coeff, arm2.path_length),
      dispersion_shift(arm1, arm2, omega_over_c));
}

}  // namespace noonsim
