#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace gqr {

/// Scaling convention of the covariance matrix: vacuum covariance is
/// (1/2)*I (VacuumHalf) or I (VacuumOne).  Conversion is lossless:
/// cov scales by 1/2 and disp by 1/sqrt(2) going VacuumOne -> VacuumHalf.
enum class Convention { VacuumHalf, VacuumOne };

/// Two-mode Gaussian state: quadrature means (x1, p1, x2, p2), 4x4
/// symmetric covariance matrix, and an explicit scaling convention.
struct GaussianState {
  Eigen::Vector4d disp = Eigen::Vector4d::Zero();
  Eigen::Matrix4d cov = Eigen::Matrix4d::Identity();
  Convention convention = Convention::VacuumOne;

  /// Lossless conversion to another convention.
  GaussianState to(Convention target) const;

  /// Vacuum symplectic eigenvalue in this state's convention.
  double vacuum_nu() const {
    return convention == Convention::VacuumHalf ? 0.5 : 1.0;
  }
};

/// Named physical parameters of the state families.
struct StateParams {
  double r = 0.0;        // two-mode squeezing
  double n_th1 = 0.0;    // mean thermal photons, mode 1
  double n_th2 = 0.0;    // mean thermal photons, mode 2
  std::complex<double> alpha = 0.0;  // single-mode displacement amplitude
  double r_prime = 0.0;  // secondary squeezing (STSDS family)

  double squeezed_photons() const { return std::sinh(r) * std::sinh(r); }
};

enum class Family { Sts, Tss, CoherentThermal, Sdts, Stsds };

/// Squeezed thermal state: two-mode squeezing applied to a (possibly
/// non-symmetric) thermal state.  VacuumOne convention, zero displacement.
GaussianState make_sts(double r, double n1, double n2);

/// Thermal squeezed state: squeezed vacuum subsequently thermalized.
/// Parameterized by the number of squeezed photons n_s = sinh^2(r).
GaussianState make_tss(double n_s, double n1, double n2);

/// Displaced two-mode thermal state; displacement acts on mode 1.
GaussianState make_coherent_thermal(std::complex<double> alpha, double n1,
                                    double n2);

/// Squeezed displaced thermal state S(r) D(alpha) rho_th D+ S+.
GaussianState make_sdts(double r, std::complex<double> alpha, double n1,
                        double n2);

/// S(r) Phi_{n1,n2}[ S(r') D(alpha) |00><00| D+ S'(r')+ ] S(r)+, where Phi
/// adds 2*n_i to the diagonal covariance entries (VacuumOne).
GaussianState make_stsds(double r, double n1, double n2, double r_prime,
                         std::complex<double> alpha);

/// Dispatch to the family constructors above.
GaussianState make_state(Family family, const StateParams& p);

/// <a1+ a1 + a2+ a2> for a physical state.
double total_photons(const GaussianState& state);

/// mu = 1/sqrt(16 det sigma), sigma in VacuumHalf convention.
double purity(const GaussianState& state);

/// Heisenberg uncertainty in symplectic form: all symplectic eigenvalues
/// >= vacuum value - 1e-9.
bool is_physical(const GaussianState& state);

/// Symplectic spectrum {nu1, nu2}, sorted descending, in the state's
/// convention.
Eigen::Vector2d symplectic_spectrum(const GaussianState& state);

}  // namespace gqr
