#include "gqr/symplectic.hpp"

#include <cmath>

namespace gqr {

namespace {

Eigen::Matrix2d rotation(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), std::sin(angle),  //
      -std::sin(angle), std::cos(angle);
  return r;
}

Eigen::Matrix4d embed_local(const Eigen::Matrix2d& s, Mode mode) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  if (mode == Mode::A) {
    m.topLeftCorner<2, 2>() = s;
  } else {
    m.bottomRightCorner<2, 2>() = s;
  }
  return m;
}

}  // namespace

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

bool is_symplectic(const Eigen::MatrixXd& s, double tol) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0) return false;
  const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(s.rows()) / 2);
  return (s.transpose() * omega * s - omega).cwiseAbs().maxCoeff() <= tol;
}

SympTransform euler_traceless(double theta, double xi) {
  if (xi <= 0.0) throw std::domain_error("euler_traceless: xi must be > 0");
  const Eigen::Matrix2d sq = Eigen::Vector2d(xi, 1.0 / xi).asDiagonal();
  SympTransform t;
  t.mat = rotation(M_PI / 2.0 - theta) * sq * rotation(theta);
  t.traceless = true;
  t.euler = EulerParams{theta, xi, M_PI / 2.0 - theta};
  return t;
}

SympTransform phase_shift(double phi) {
  SympTransform t;
  t.mat = rotation(phi);
  t.traceless = std::abs(std::cos(phi)) < 1e-15;
  t.euler = EulerParams{phi, 1.0, 0.0};
  return t;
}

Eigen::Matrix4d two_mode_squeeze(double r) {
  const double ch = std::cosh(r), sh = std::sinh(r);
  Eigen::Matrix4d s;
  s << ch, 0, sh, 0,  //
      0, ch, 0, -sh,  //
      sh, 0, ch, 0,   //
      0, -sh, 0, ch;
  return s;
}

GaussianState apply_local(const GaussianState& state, const SympTransform& s,
                          Mode mode) {
  Eigen::Matrix4d m;
  if (s.mat.rows() == 2) {
    if (!is_symplectic(s.mat, 1e-10)) {
      throw std::invalid_argument("apply_local: matrix is not symplectic");
    }
    m = embed_local(s.mat, mode);
  } else if (s.mat.rows() == 4) {
    if (!is_symplectic(s.mat, 1e-10)) {
      throw std::invalid_argument("apply_local: matrix is not symplectic");
    }
    m = s.mat;
  } else {
    throw std::invalid_argument("apply_local: expected a 2x2 or 4x4 matrix");
  }
  GaussianState out = state;
  const Eigen::Matrix4d moved = m * state.cov * m.transpose();
  out.cov = 0.5 * (moved + moved.transpose());
  out.disp = m * state.disp;
  return out;
}

WilliamsonResult williamson(const GaussianState& state) {
  if (!is_physical(state)) {
    throw std::domain_error("williamson: unphysical state");
  }
  const Eigen::Matrix4d omega = symplectic_form(2);
  // cov^(1/2) via the self-adjoint eigendecomposition.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(state.cov);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("williamson: eigendecomposition failed");
  }
  const Eigen::Matrix4d root =
      es.eigenvectors() *
      es.eigenvalues().cwiseSqrt().asDiagonal() *
      es.eigenvectors().transpose();
  // K = cov^(1/2) Omega cov^(1/2) is antisymmetric; its real Schur form is
  // block diagonal with blocks nu_k J.
  const Eigen::Matrix4d k = root * omega * root;
  // K is antisymmetric, so iK is Hermitian with eigenvalues {±nu_k}; the
  // self-adjoint solver is guaranteed to converge (unlike the real Schur
  // iteration, which can fail on badly scaled antisymmetric matrices).
  const Eigen::Matrix4cd h =
      std::complex<double>(0.0, 1.0) * k.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> hes(h);
  if (hes.info() != Eigen::Success) {
    throw std::runtime_error("williamson: Schur decomposition failed");
  }
  // Eigenvalues ascend as (-nu_max, -nu_min, nu_min, nu_max); each positive
  // eigenvector w = u_r + i u_i has |u_r| = |u_i| = 1/sqrt(2) with u_r, u_i
  // orthogonal, and K maps sqrt(2) u_i -> -nu sqrt(2) u_r, giving a real
  // orthonormal basis in which K is block diagonal with [[0, nu], [-nu, 0]].
  Eigen::Matrix4d u;
  Eigen::Vector2d nu;
  for (int blk = 0; blk < 2; ++blk) {
    const int idx = 3 - blk;  // descending by nu
    nu(blk) = hes.eigenvalues()(idx);
    const Eigen::Vector4cd w = hes.eigenvectors().col(idx);
    u.col(2 * blk) = std::sqrt(2.0) * w.imag();
    u.col(2 * blk + 1) = std::sqrt(2.0) * w.real();
  }
  Eigen::Vector4d inv_root_nu;
  inv_root_nu << 1.0 / std::sqrt(nu(0)), 1.0 / std::sqrt(nu(0)),
      1.0 / std::sqrt(nu(1)), 1.0 / std::sqrt(nu(1));
  WilliamsonResult res;
  res.s.mat = root * u * Eigen::Matrix4d(inv_root_nu.asDiagonal());
  res.s.traceless = false;
  res.spectrum = nu;
  const Eigen::Matrix4d lam =
      Eigen::Vector4d(nu(0), nu(0), nu(1), nu(1)).asDiagonal();
  const double resid =
      (res.s.mat * lam * res.s.mat.transpose() - state.cov)
          .cwiseAbs()
          .maxCoeff();
  if (resid > 1e-9 || !is_symplectic(res.s.mat, 1e-8)) {
    throw std::runtime_error("williamson: reconstruction residual " +
                             std::to_string(resid));
  }
  return res;
}

}  // namespace gqr
