#include "gqr/gaussian_state.hpp"

#include <cmath>

#include "gqr/symplectic.hpp"

namespace gqr {

namespace {

void check_thermal(double n1, double n2) {
  if (n1 < 0.0 || n2 < 0.0) {
    throw std::domain_error("thermal photon numbers must be >= 0");
  }
}

Eigen::Matrix4d thermal_cov(double n1, double n2) {
  Eigen::Vector4d d;
  d << 1.0 + 2.0 * n1, 1.0 + 2.0 * n1, 1.0 + 2.0 * n2, 1.0 + 2.0 * n2;
  return d.asDiagonal();
}

// VacuumOne displacement of a coherent amplitude on mode 1.
Eigen::Vector4d coherent_disp(std::complex<double> alpha) {
  Eigen::Vector4d d = Eigen::Vector4d::Zero();
  d(0) = 2.0 * alpha.real();
  d(1) = 2.0 * alpha.imag();
  return d;
}

}  // namespace

GaussianState GaussianState::to(Convention target) const {
  if (target == convention) return *this;
  GaussianState out = *this;
  out.convention = target;
  if (target == Convention::VacuumHalf) {
    out.cov = 0.5 * cov;
    out.disp = disp / std::sqrt(2.0);
  } else {
    out.cov = 2.0 * cov;
    out.disp = disp * std::sqrt(2.0);
  }
  return out;
}

GaussianState make_sts(double r, double n1, double n2) {
  check_thermal(n1, n2);
  const double ch2 = std::cosh(2.0 * r);
  const double sh2 = std::sinh(2.0 * r);
  const double c2 = std::cosh(r) * std::cosh(r);
  const double s2 = std::sinh(r) * std::sinh(r);
  const double a = ch2 + 2.0 * n1 * c2 + 2.0 * n2 * s2;
  const double b = ch2 + 2.0 * n2 * c2 + 2.0 * n1 * s2;
  const double c = (1.0 + n1 + n2) * sh2;
  GaussianState st;
  st.cov << a, 0, c, 0,  //
      0, a, 0, -c,       //
      c, 0, b, 0,        //
      0, -c, 0, b;
  st.convention = Convention::VacuumOne;
  return st;
}

GaussianState make_tss(double n_s, double n1, double n2) {
  if (n_s < 0.0) throw std::domain_error("squeezed photons must be >= 0");
  check_thermal(n1, n2);
  const double a = 2.0 * n_s + 1.0 + 2.0 * n1;
  const double b = 2.0 * n_s + 1.0 + 2.0 * n2;
  const double c = 2.0 * std::sqrt(n_s * (n_s + 1.0));
  GaussianState st;
  st.cov << a, 0, c, 0,  //
      0, a, 0, -c,       //
      c, 0, b, 0,        //
      0, -c, 0, b;
  st.convention = Convention::VacuumOne;
  return st;
}

GaussianState make_coherent_thermal(std::complex<double> alpha, double n1,
                                    double n2) {
  check_thermal(n1, n2);
  GaussianState st;
  st.cov = thermal_cov(n1, n2);
  st.disp = coherent_disp(alpha);
  st.convention = Convention::VacuumOne;
  return st;
}

GaussianState make_sdts(double r, std::complex<double> alpha, double n1,
                        double n2) {
  check_thermal(n1, n2);
  const Eigen::Matrix4d s = two_mode_squeeze(r);
  GaussianState st;
  st.cov = s * thermal_cov(n1, n2) * s.transpose();
  st.disp = s * coherent_disp(alpha);
  st.convention = Convention::VacuumOne;
  return st;
}

GaussianState make_stsds(double r, double n1, double n2, double r_prime,
                         std::complex<double> alpha) {
  check_thermal(n1, n2);
  const Eigen::Matrix4d sp = two_mode_squeeze(r_prime);
  Eigen::Matrix4d cov = sp * sp.transpose();  // squeezed displaced vacuum
  Eigen::Vector4d disp = sp * coherent_disp(alpha);
  // Phi adds the thermal photons to the diagonal entries (VacuumOne).
  Eigen::Vector4d add;
  add << 2.0 * n1, 2.0 * n1, 2.0 * n2, 2.0 * n2;
  cov += Eigen::Matrix4d(add.asDiagonal());
  const Eigen::Matrix4d s = two_mode_squeeze(r);
  GaussianState st;
  st.cov = s * cov * s.transpose();
  st.disp = s * disp;
  st.convention = Convention::VacuumOne;
  return st;
}

GaussianState make_state(Family family, const StateParams& p) {
  switch (family) {
    case Family::Sts:
      return make_sts(p.r, p.n_th1, p.n_th2);
    case Family::Tss:
      return make_tss(p.squeezed_photons(), p.n_th1, p.n_th2);
    case Family::CoherentThermal:
      return make_coherent_thermal(p.alpha, p.n_th1, p.n_th2);
    case Family::Sdts:
      return make_sdts(p.r, p.alpha, p.n_th1, p.n_th2);
    case Family::Stsds:
      return make_stsds(p.r, p.n_th1, p.n_th2, p.r_prime, p.alpha);
  }
  throw std::invalid_argument("unknown family");
}

double total_photons(const GaussianState& state) {
  if (!is_physical(state)) {
    throw std::domain_error("total_photons: unphysical state");
  }
  const GaussianState s = state.to(Convention::VacuumOne);
  return (s.cov.trace() + s.disp.squaredNorm()) / 4.0 - 1.0;
}

double purity(const GaussianState& state) {
  if (!is_physical(state)) {
    throw std::domain_error("purity: unphysical state");
  }
  const GaussianState s = state.to(Convention::VacuumHalf);
  return 1.0 / std::sqrt(16.0 * s.cov.determinant());
}

bool is_physical(const GaussianState& state) {
  const double asym =
      (state.cov - state.cov.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, state.cov.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("covariance matrix is not symmetric");
  }
  const Eigen::Vector2d nu = symplectic_spectrum(state);
  // The spectrum carries eigensolver error proportional to the matrix
  // scale, so the tolerance must grow with it (pure states sit exactly on
  // the boundary nu = vacuum).
  const double tol =
      1e-9 * std::max(1.0, state.cov.cwiseAbs().maxCoeff());
  return nu.minCoeff() >= state.vacuum_nu() - tol;
}

Eigen::Vector2d symplectic_spectrum(const GaussianState& state) {
  const Eigen::Matrix4d m = symplectic_form(2) * state.cov;
  Eigen::EigenSolver<Eigen::Matrix4d> es(m, false);
  // Eigenvalues come in pairs +/- i nu; collect the positive imaginary
  // parts.
  std::vector<double> nus;
  for (int i = 0; i < 4; ++i) {
    const double im = es.eigenvalues()(i).imag();
    if (im > 0.0) nus.push_back(im);
  }
  if (nus.size() != 2) {
    // Degenerate or defective numerics; fall back to absolute values.
    nus.clear();
    for (int i = 0; i < 4; ++i) {
      nus.push_back(std::abs(es.eigenvalues()(i)));
    }
    std::sort(nus.begin(), nus.end());
    return {nus[3], nus[1]};
  }
  std::sort(nus.begin(), nus.end());
  return {nus[1], nus[0]};
}

}  // namespace gqr
