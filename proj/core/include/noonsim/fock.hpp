#pragma once

#include <complex>

#include <Eigen/Dense>

#include "noonsim/channel.hpp"

// Exact two-mode Fock-space machinery: dense density matrices, the
// photon-loss (amplitude-damping) channel in Kraus form, the arm-2 phase
// shift and the swap observables. Deliberately brute force; it is the
// independent oracle against which the closed-form layer is checked.

namespace noonsim::fock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Photon-number label |n1, n2> of the two-mode basis.
struct FockLabel {
  int n1 = 0;
  int n2 = 0;
};

/// Two bosonic modes truncated at n_max photons each. Basis ordering is
/// lexicographic, n1 major and n2 minor: index = n1 * (n_max + 1) + n2.
/// Fixed here so on-disk fixtures are portable.
class FockBasis {
 public:
  explicit FockBasis(int n_max);

  int n_max() const { return n_max_; }
  int levels() const { return n_max_ + 1; }
  int dim() const { return levels() * levels(); }

  int index(int n1, int n2) const;
  int index(const FockLabel& l) const { return index(l.n1, l.n2); }
  FockLabel label(int index) const;

  bool operator==(const FockBasis&) const = default;

 private:
  int n_max_;
};

/// General operator over the two-mode basis. Houses ladder operators as
/// well as the (Hermitian) measurement observables.
class FockOperator {
 public:
  FockOperator(FockBasis basis, Matrix entries);

  const FockBasis& basis() const { return basis_; }
  const Matrix& matrix() const { return entries_; }

  FockOperator adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;

 private:
  FockBasis basis_;
  Matrix entries_;
};

/// Mixed state of the two modes. Construction checks hermiticity and unit
/// trace (1e-12); positivity is available through min_eigenvalue().
/// Values are immutable; every operation returns a new state.
class TwoModeDensityMatrix {
 public:
  /// Validates hermiticity and unit trace; throws std::logic_error on
  /// violation (a failure here means a broken pipeline, not bad input).
  TwoModeDensityMatrix(FockBasis basis, Matrix entries);

  const FockBasis& basis() const { return basis_; }
  const Matrix& matrix() const { return entries_; }

  double trace() const { return entries_.trace().real(); }
  double purity() const;
  double min_eigenvalue() const;

 private:
  FockBasis basis_;
  Matrix entries_;
};

/// Creation operator a_i^dag on the given arm: <n+1| a^dag |n> = sqrt(n+1),
/// identity on the other arm. Amplitudes that would exceed the truncation
/// are dropped. Rejects n_max < 1.
FockOperator creation_op(Arm mode, int n_max);

/// Conjugate transpose of creation_op.
FockOperator annihilation_op(Arm mode, int n_max);

/// Swap observable |N0><0N| + |0N><N0|; eigenvalues +1, -1 and 0.
FockOperator observable_ad(int n, int n_max);

/// Pure N00N state (|N0> + |0N>)/sqrt(2) as a rank-1 density matrix.
/// Rejects n < 1 or n > n_max.
TwoModeDensityMatrix noon_state(int n, int n_max);

/// Single dual-rail photon (|10> + |01>)/sqrt(2); equals noon_state(1).
/// The N-photon separable probe is handled photon by photon, so one copy
/// of this state is all the oracle ever needs.
TwoModeDensityMatrix separable_photon_state(int n_max);

/// Conjugation by the diagonal unitary U|n1,n2> = exp(i n2 phi)|n1,n2>
/// (the arm-2 phase shift). Trace and spectrum preserved.
TwoModeDensityMatrix phase_shift(const TwoModeDensityMatrix& rho, double phi);

/// Photon-loss channel with transmittance alpha on the given arm, in
/// operator-sum form with Kraus operators
///   <n-k| E_k |n> = sqrt( C(n,k) alpha^(n-k) (1-alpha)^k ),  k = 0..n_max.
/// Trace preserving. Rejects alpha outside (0, 1]; alpha = 0 is rejected
/// as degenerate (state fully lost).
TwoModeDensityMatrix loss_channel(const TwoModeDensityMatrix& rho,
                                  double alpha, Arm mode);

/// Tr(rho A). The imaginary residue must stay below 1e-10; exceeding it
/// throws std::logic_error. Rejects mismatched truncations.
double expectation(const TwoModeDensityMatrix& rho, const FockOperator& a);

struct MomentStats {
  double mean = 0.0;
  double variance = 0.0;
};

/// Mean and variance of an observable in a state: Tr(rho A), Tr(rho A^2) - Tr(rho A)^2.
MomentStats observable_stats(const TwoModeDensityMatrix& rho,
                             const FockOperator& a);

/// Full-pipeline statistics of the swap observable A_D on the attenuated,
/// phase-shifted N00N probe: noon_state -> per-arm loss -> net arm-2 phase
/// (phi - phi0). Truncation n_max = n (loss never adds photons).
MomentStats oracle_noon_stats(int n, const ChannelPair& ch, double phi);

/// Statistics of the separable-method observable A_R, computed from the
/// single-photon pipeline and scaled: the N photons are independent and
/// A_R is a sum of commuting per-photon terms, so mean and variance are
/// both N times the per-photon values.
MomentStats oracle_separable_stats(int n, const ChannelPair& ch, double phi);

}  // namespace noonsim::fock
