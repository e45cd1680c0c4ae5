#include "noonsim/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace noonsim::fock {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kImagResidueTol = 1e-10;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Lifts a single-mode operator to the two-mode space (identity on the
// other mode), respecting the lexicographic ordering.
Matrix lift_to_mode(const Matrix& single, Arm mode, const FockBasis& basis) {
  const int levels = basis.levels();
  Matrix full = Matrix::Zero(basis.dim(), basis.dim());
  for (int r = 0; r < levels; ++r) {
    for (int c = 0; c < levels; ++c) {
      const Complex v = single(r, c);
      if (v == Complex(0.0, 0.0)) continue;
      for (int other = 0; other < levels; ++other) {
        if (mode == Arm::one) {
          full(basis.index(r, other), basis.index(c, other)) = v;
        } else {
          full(basis.index(other, r), basis.index(other, c)) = v;
        }
      }
    }
  }
  return full;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * double(n - i) / double(i + 1);
  return b;
}

}  // namespace

FockBasis::FockBasis(int n_max) : n_max_(n_max) {
  require(n_max >= 1, "FockBasis: n_max must be >= 1");
}

int FockBasis::index(int n1, int n2) const {
  require(n1 >= 0 && n1 <= n_max_ && n2 >= 0 && n2 <= n_max_,
          "FockBasis: photon number outside truncation");
  return n1 * levels() + n2;
}

FockLabel FockBasis::label(int index) const {
  require(index >= 0 && index < dim(), "FockBasis: index out of range");
  return FockLabel{index / levels(), index % levels()};
}

FockOperator::FockOperator(FockBasis basis, Matrix entries)
    : basis_(basis), entries_(std::move(entries)) {
  if (entries_.rows() != basis_.dim() || entries_.cols() != basis_.dim()) {
    throw std::invalid_argument("FockOperator: matrix does not match basis");
  }
}

FockOperator FockOperator::adjoint() const {
  return FockOperator(basis_, entries_.adjoint());
}

bool FockOperator::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

TwoModeDensityMatrix::TwoModeDensityMatrix(FockBasis basis, Matrix entries)
    : basis_(basis), entries_(std::move(entries)) {
  if (entries_.rows() != basis_.dim() || entries_.cols() != basis_.dim()) {
    throw std::invalid_argument("TwoModeDensityMatrix: matrix does not match basis");
  }
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw std::logic_error("TwoModeDensityMatrix: not Hermitian, deviation " +
                           std::to_string(herm));
  }
  const double tr_err = std::abs(entries_.trace() - Complex(1.0, 0.0));
  if (tr_err > kTraceTol) {
    throw std::logic_error("TwoModeDensityMatrix: trace differs from 1 by " +
                           std::to_string(tr_err));
  }
}

double TwoModeDensityMatrix::purity() const {
  return (entries_ * entries_).trace().real();
}

double TwoModeDensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

FockOperator creation_op(Arm mode, int n_max) {
  require(n_max >= 1, "creation_op: n_max must be >= 1");
  const FockBasis basis(n_max);
  Matrix single = Matrix::Zero(basis.levels(), basis.levels());
  for (int n = 0; n < n_max; ++n) {
    single(n + 1, n) = std::sqrt(double(n + 1));
  }
  return FockOperator(basis, lift_to_mode(single, mode, basis));
}

FockOperator annihilation_op(Arm mode, int n_max) {
  return creation_op(mode, n_max).adjoint();
}

FockOperator observable_ad(int n, int n_max) {
  require(n >= 1, "observable_ad: n must be >= 1");
  require(n <= n_max, "observable_ad: n exceeds truncation");
  const FockBasis basis(n_max);
  Matrix m = Matrix::Zero(basis.dim(), basis.dim());
  m(basis.index(n, 0), basis.index(0, n)) = 1.0;
  m(basis.index(0, n), basis.index(n, 0)) = 1.0;
  return FockOperator(basis, m);
}

TwoModeDensityMatrix noon_state(int n, int n_max) {
  require(n >= 1, "noon_state: n must be >= 1");
  require(n <= n_max, "noon_state: n exceeds truncation");
  const FockBasis basis(n_max);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(basis.dim());
  psi(basis.index(n, 0)) = 1.0 / std::sqrt(2.0);
  psi(basis.index(0, n)) = 1.0 / std::sqrt(2.0);
  return TwoModeDensityMatrix(basis, psi * psi.adjoint());
}

TwoModeDensityMatrix separable_photon_state(int n_max) {
  return noon_state(1, n_max);
}

TwoModeDensityMatrix phase_shift(const TwoModeDensityMatrix& rho, double phi) {
  require(std::isfinite(phi), "phase_shift: phi must be finite");
  const FockBasis& basis = rho.basis();
  Eigen::VectorXcd u(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) {
    u(i) = std::polar(1.0, basis.label(i).n2 * phi);
  }
  Matrix out = u.asDiagonal() * rho.matrix() * u.conjugate().asDiagonal();
  return TwoModeDensityMatrix(basis, std::move(out));
}

TwoModeDensityMatrix loss_channel(const TwoModeDensityMatrix& rho,
                                  double alpha, Arm mode) {
  require(alpha > 0.0 && alpha <= 1.0,
          "loss_channel: alpha must lie in (0, 1]");
  const FockBasis& basis = rho.basis();
  const int levels = basis.levels();
  Matrix out = Matrix::Zero(basis.dim(), basis.dim());
  for (int k = 0; k <= basis.n_max(); ++k) {
    Matrix ek = Matrix::Zero(levels, levels);
    for (int n = k; n <= basis.n_max(); ++n) {
      ek(n - k, n) = std::sqrt(binomial(n, k) * std::pow(alpha, n - k) *
                               std::pow(1.0 - alpha, k));
    }
    const Matrix full = lift_to_mode(ek, mode, basis);
    out += full * rho.matrix() * full.adjoint();
  }
  return TwoModeDensityMatrix(basis, std::move(out));
}

double expectation(const TwoModeDensityMatrix& rho, const FockOperator& a) {
  if (!(rho.basis() == a.basis())) {
    throw std::invalid_argument("expectation: truncation mismatch");
  }
  // Tr(rho A) = sum_ij rho_ij A_ji, no need for the full product.
  const Complex value =
      (rho.matrix().transpose().cwiseProduct(a.matrix())).sum();
  if (std::abs(value.imag()) > kImagResidueTol) {
    throw std::logic_error("expectation: imaginary residue " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

MomentStats observable_stats(const TwoModeDensityMatrix& rho,
                             const FockOperator& a) {
  const FockOperator a2(a.basis(), a.matrix() * a.matrix());
  const double mean = expectation(rho, a);
  const double second = expectation(rho, a2);
  return MomentStats{mean, second - mean * mean};
}

MomentStats oracle_noon_stats(int n, const ChannelPair& ch, double phi) {
  TwoModeDensityMatrix rho = noon_state(n, n);
  rho = loss_channel(rho, ch.alpha1(), Arm::one);
  rho = loss_channel(rho, ch.alpha2(), Arm::two);
  rho = phase_shift(rho, phi - ch.phi0());
  return observable_stats(rho, observable_ad(n, n));
}

MomentStats oracle_separable_stats(int n, const ChannelPair& ch, double phi) {
  require(n >= 1, "oracle_separable_stats: n must be >= 1");
  TwoModeDensityMatrix rho = separable_photon_state(1);
  rho = loss_channel(rho, ch.alpha1(), Arm::one);
  rho = loss_channel(rho, ch.alpha2(), Arm::two);
  rho = phase_shift(rho, phi - ch.phi0());
  const MomentStats per_photon = observable_stats(rho, observable_ad(1, 1));
  return MomentStats{n * per_photon.mean, n * per_photon.variance};
}

}  // namespace noonsim::fock
