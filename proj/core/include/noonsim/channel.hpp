#pragma once

namespace noonsim {

/// Which interferometer arm an operation acts on. Arm 1 is the short
/// (reference) arm kept in the controlled environment, arm 2 the long arm
/// that contacts the phase object.
enum class Arm { one = 1, two = 2 };

/// Phase-estimation method: entangled N00N probe measured with the
/// two-mode swap observable, or N independent dual-rail photons measured
/// photon by photon.
enum class Method { noon, separable };

const char* method_name(Method m);

/// Role label for a physical arm: the short arm sits in the controlled
/// environment, the long arm spans the sensing path.
enum class ArmRole { short_arm, long_arm };

/// Physical description of one arm: refractive index eta, attenuation
/// coefficient K (1/length), path length L and its role label.
struct PhysicalArm {
  double refractive_index = 1.0;
  double attenuation_coeff = 0.0;
  double path_length = 0.0;
  ArmRole role = ArmRole::short_arm;

  /// Throws std::invalid_argument unless eta > 0, K >= 0, L >= 0.
  void validate() const;
};

/// Transmittance exp(-K L) of an attenuating path, in (0, 1].
double transmittance(double attenuation_coeff, double path_length);

/// Static phase offset between the arms, (omega/c) * (eta2 L2 - eta1 L1).
double dispersion_shift(const PhysicalArm& arm1, const PhysicalArm& arm2,
                        double omega_over_c);

/// Loss/dispersion description of both arms: transmittances alpha1, alpha2
/// in (0, 1] and the fixed dispersion shift phi0. Immutable once built.
class ChannelPair {
 public:
  ChannelPair(double alpha1, double alpha2, double phi0 = 0.0);

  static ChannelPair lossless() { return ChannelPair(1.0, 1.0, 0.0); }

  /// Derives (alpha1, alpha2, phi0) from the physical arm parameters;
  /// the only place K, L, eta and omega/c enter the formulas.
  static ChannelPair from_physical(const PhysicalArm& arm1,
                                   const PhysicalArm& arm2,
                                   double omega_over_c);

  double alpha1() const { return alpha1_; }
  double alpha2() const { return alpha2_; }
  double phi0() const { return phi0_; }

 private:
  double alpha1_;
  double alpha2_;
  double phi0_;
};

}  // namespace noonsim
