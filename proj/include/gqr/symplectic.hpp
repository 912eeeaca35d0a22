#pragma once

#include <optional>

#include <Eigen/Dense>

#include "gqr/gaussian_state.hpp"

namespace gqr {

/// Euler parameters (theta, xi, phi) of a single-mode symplectic
/// R(phi) diag(xi, 1/xi) R(theta).
struct EulerParams {
  double theta = 0.0;
  double xi = 1.0;
  double phi = 0.0;
};

/// A 2x2 (local) or 4x4 (two-mode) real symplectic matrix.
struct SympTransform {
  Eigen::MatrixXd mat;
  bool traceless = false;
  std::optional<EulerParams> euler;
};

enum class Mode { A, B };

/// Symplectic form, block-diagonal in (x1,p1,...,xn,pn) ordering.
Eigen::MatrixXd symplectic_form(int n_modes);

/// S^T Omega S == Omega within tol.
bool is_symplectic(const Eigen::MatrixXd& s, double tol = 1e-12);

/// R(pi/2 - theta) diag(xi, 1/xi) R(theta): the general single-mode
/// traceless symplectic (Euler decomposition with phi = pi/2 - theta).
SympTransform euler_traceless(double theta, double xi);

/// Phase-shift symplectic F_phi = [[cos, sin], [-sin, cos]].
SympTransform phase_shift(double phi);

/// Two-mode squeeze symplectic of S(r) = exp(r(a1+ a2+ - a1 a2)).
Eigen::Matrix4d two_mode_squeeze(double r);

/// Conjugate the covariance by (S (+) 1) (mode A) or (1 (+) S) (mode B)
/// and transform the displacement accordingly.  Convention preserved.
GaussianState apply_local(const GaussianState& state, const SympTransform& s,
                          Mode mode = Mode::A);

/// Williamson decomposition cov = S diag(nu1,nu1,nu2,nu2) S^T in the
/// state's convention, spectrum sorted descending, S symplectic.
struct WilliamsonResult {
  SympTransform s;
  Eigen::Vector2d spectrum;
};
WilliamsonResult williamson(const GaussianState& state);

}  // namespace gqr
