#include "gqr/metrics.hpp"

#include <cmath>

#include "gqr/optim.hpp"
#include "gqr/symplectic.hpp"

namespace gqr {

namespace {

// Thermal-mode kernels of the Gaussian Q_t formula, in VacuumOne units.
// Both tend to 1 as nu -> 1 (pure mode); the raw expressions are 0/0 there.
double g_kernel(double t, double nu) {
  if (std::abs(nu - 1.0) < 1e-12) return 1.0;
  return std::pow(2.0, t) /
         (std::pow(nu + 1.0, t) - std::pow(nu - 1.0, t));
}

double lambda_kernel(double t, double nu) {
  if (std::abs(nu - 1.0) < 1e-12) return 1.0;
  const double up = std::pow(nu + 1.0, t);
  const double dn = std::pow(nu - 1.0, t);
  return (up + dn) / (up - dn);
}

// Normal-mode data of a state pair, precomputed once per pair so that the
// Chernoff minimization reuses it across t evaluations.
struct PairData {
  Eigen::Matrix4d s1, s2;
  Eigen::Vector2d nu1, nu2;
  Eigen::Vector4d delta;
};

PairData make_pair_data(const GaussianState& a, const GaussianState& b) {
  const GaussianState g1 = a.to(Convention::VacuumOne);
  const GaussianState g2 = b.to(Convention::VacuumOne);
  const WilliamsonResult w1 = williamson(g1);
  const WilliamsonResult w2 = williamson(g2);
  PairData d;
  d.s1 = w1.s.mat;
  d.s2 = w2.s.mat;
  d.nu1 = w1.spectrum.cwiseMax(1.0);
  d.nu2 = w2.spectrum.cwiseMax(1.0);
  d.delta = g1.disp - g2.disp;
  return d;
}

double q_t_eval(const PairData& d, double t) {
  if (t <= 0.0 || t >= 1.0) {
    throw std::domain_error("q_t: t must be in (0,1)");
  }
  const double u = 1.0 - t;
  Eigen::Vector4d lam1, lam2;
  lam1 << lambda_kernel(t, d.nu1(0)), lambda_kernel(t, d.nu1(0)),
      lambda_kernel(t, d.nu1(1)), lambda_kernel(t, d.nu1(1));
  lam2 << lambda_kernel(u, d.nu2(0)), lambda_kernel(u, d.nu2(0)),
      lambda_kernel(u, d.nu2(1)), lambda_kernel(u, d.nu2(1));
  const Eigen::Matrix4d v =
      d.s1 * Eigen::Matrix4d(lam1.asDiagonal()) * d.s1.transpose() +
      d.s2 * Eigen::Matrix4d(lam2.asDiagonal()) * d.s2.transpose();
  const double det = v.determinant();
  if (det <= 0.0) throw std::runtime_error("q_t: singular V1 + V2");
  const double qbar = 4.0 * g_kernel(t, d.nu1(0)) * g_kernel(t, d.nu1(1)) *
                      g_kernel(u, d.nu2(0)) * g_kernel(u, d.nu2(1)) /
                      std::sqrt(det);
  const double expo = -0.5 * d.delta.dot(v.ldlt().solve(d.delta));
  return qbar * std::exp(expo);
}

// Theorem-1 hypothesis: undisplaced standard-form pair related by a
// traceless local symplectic on mode A.  When it holds the Chernoff
// infimum sits at t = 1/2.
bool theorem1_applies(const GaussianState& a, const GaussianState& b) {
  const GaussianState g1 = a.to(Convention::VacuumOne);
  const GaussianState g2 = b.to(Convention::VacuumOne);
  const double scale = g1.cov.cwiseAbs().maxCoeff();
  const double tol = 1e-10 * std::max(1.0, scale);
  if (g1.disp.cwiseAbs().maxCoeff() > tol) return false;
  if (g2.disp.cwiseAbs().maxCoeff() > tol) return false;
  const Eigen::Matrix2d a1 = g1.cov.topLeftCorner<2, 2>();
  const Eigen::Matrix2d b1 = g1.cov.bottomRightCorner<2, 2>();
  const Eigen::Matrix2d c1 = g1.cov.topRightCorner<2, 2>();
  // Standard form: diagonal blocks proportional to the identity, cross
  // block diag(c, -c).
  auto is_scalar = [tol](const Eigen::Matrix2d& m) {
    return std::abs(m(0, 0) - m(1, 1)) <= tol &&
           std::abs(m(0, 1)) <= tol && std::abs(m(1, 0)) <= tol;
  };
  if (!is_scalar(a1) || !is_scalar(b1)) return false;
  if (std::abs(c1(0, 1)) > tol || std::abs(c1(1, 0)) > tol) return false;
  if (std::abs(c1(0, 0) + c1(1, 1)) > tol) return false;
  if (std::abs(c1.determinant()) < tol) return false;  // c == 0: no unique S
  // Recover the candidate local transform from the cross blocks.
  const Eigen::Matrix2d c2 = g2.cov.topRightCorner<2, 2>();
  const Eigen::Matrix2d s = c2 * c1.inverse();
  const double stol = 1e-8;
  if (std::abs(s.trace()) > stol) return false;
  if (!is_symplectic(s, stol)) return false;
  if ((g2.cov.bottomRightCorner<2, 2>() - b1).cwiseAbs().maxCoeff() > tol) {
    return false;
  }
  return (s * a1 * s.transpose() - g2.cov.topLeftCorner<2, 2>())
             .cwiseAbs()
             .maxCoeff() <= 1e-8 * std::max(1.0, scale);
}

void require_physical(const GaussianState& s, const char* who) {
  if (!is_physical(s)) {
    throw std::domain_error(std::string(who) + ": unphysical state");
  }
}

}  // namespace

double uhlmann_fidelity(const GaussianState& s1, const GaussianState& s2) {
  require_physical(s1, "uhlmann_fidelity");
  require_physical(s2, "uhlmann_fidelity");
  const GaussianState g1 = s1.to(Convention::VacuumHalf);
  const GaussianState g2 = s2.to(Convention::VacuumHalf);
  const Eigen::Matrix4d omega = symplectic_form(2);
  const Eigen::Matrix4d sum = g1.cov + g2.cov;
  const double delta_det = sum.determinant();
  if (delta_det <= 0.0) {
    throw std::runtime_error("uhlmann_fidelity: singular sigma1 + sigma2");
  }
  const double gamma =
      16.0 *
      ((omega * g1.cov) * (omega * g2.cov) -
       0.25 * Eigen::Matrix4d::Identity())
          .determinant();
  const std::complex<double> half_i(0.0, 0.5);
  const Eigen::Matrix4cd m1 =
      g1.cov.cast<std::complex<double>>() + half_i * omega.cast<std::complex<double>>();
  const Eigen::Matrix4cd m2 =
      g2.cov.cast<std::complex<double>>() + half_i * omega.cast<std::complex<double>>();
  const double lambda = 16.0 * (m1.determinant() * m2.determinant()).real();
  const double w = std::sqrt(std::max(0.0, gamma)) +
                   std::sqrt(std::max(0.0, lambda));
  // Rationalized form of [w - sqrt(w^2 - Delta)]^{-1}; avoids cancellation
  // for near-identical states.
  const double root = std::sqrt(std::max(0.0, w * w - delta_det));
  double f = (w + root) / delta_det;
  const Eigen::Vector4d delta = g1.disp - g2.disp;
  f *= std::exp(-0.5 * delta.dot(sum.ldlt().solve(delta)));
  return std::clamp(f, 0.0, 1.0);
}

double q_t(const GaussianState& s1, const GaussianState& s2, double t) {
  require_physical(s1, "q_t");
  require_physical(s2, "q_t");
  return q_t_eval(make_pair_data(s1, s2), t);
}

double affinity(const GaussianState& s1, const GaussianState& s2) {
  return q_t(s1, s2, 0.5);
}

QcbResult qcb(const GaussianState& s1, const GaussianState& s2, int copies) {
  if (copies < 1) throw std::domain_error("qcb: copies must be >= 1");
  require_physical(s1, "qcb");
  require_physical(s2, "qcb");
  const PairData data = make_pair_data(s1, s2);
  double t_star, q_star;
  if (theorem1_applies(s1, s2)) {
    t_star = 0.5;
    q_star = q_t_eval(data, 0.5);
  } else {
    // Q_t is convex in t, so unimodal search is safe.
    const ScalarMin m = golden_section_min(
        [&](double t) { return q_t_eval(data, t); }, 1e-6, 1.0 - 1e-6,
        1e-12);
    t_star = m.x;
    q_star = m.fx;
  }
  return {0.5 * std::pow(q_star, copies), t_star};
}

MetricReport helstrom_bounds(const GaussianState& s1, const GaussianState& s2,
                             int copies) {
  MetricReport r;
  r.copies = copies;
  r.fidelity = uhlmann_fidelity(s1, s2);
  r.affinity = affinity(s1, s2);
  const QcbResult q = qcb(s1, s2, copies);
  r.qcb = q.qcb;
  r.t_star = q.t_star;
  r.ubp = q.qcb;
  r.lbp = (1.0 - std::sqrt(1.0 - std::pow(r.fidelity, copies))) / 2.0;
  return r;
}

double pure_perr(const GaussianState& s1, const GaussianState& s2) {
  if (std::abs(purity(s1) - 1.0) > 1e-8 ||
      std::abs(purity(s2) - 1.0) > 1e-8) {
    throw std::domain_error("pure_perr: states must be pure");
  }
  const double f = uhlmann_fidelity(s1, s2);
  return 0.5 - 0.5 * std::sqrt(1.0 - f);
}

double closed_qcb_sym(double a, double c) {
  const double den = 2.0 * a * a - c * c;
  if (den <= 0.0) {
    throw std::domain_error("closed_qcb_sym: unphysical entries");
  }
  return (a * a - c * c) / den;
}

double closed_fid_sym(double a, double c) {
  const double d = c * c - a * a;
  const double root = std::sqrt(d * d + 1.0 + 2.0 * a * a);
  const double bracket = 1.0 + d + root;
  return 4.0 / (bracket * bracket);
}

double closed_qcb_asym(double a, double b, double c) {
  const double den = 2.0 * a * b - c * c;
  if (den <= 0.0) {
    throw std::domain_error("closed_qcb_asym: unphysical entries");
  }
  return (a * b - c * c) / den;
}

PartialDerivs qcb_derivs(double a, double c) {
  const double d = c * c - 2.0 * a * a;
  const double d2 = d * d;
  return {2.0 * a * c * c / d2, -2.0 * a * a * c / d2};
}

PartialDerivs fid_derivs(double a, double c) {
  const double r =
      std::sqrt(a * a * a * a - 2.0 * (c * c - 1.0) * a * a +
                c * c * c * c + 1.0);
  const double s = std::abs(1.0 + c * c - a * a);
  const double rs = r - s;
  const double d_da =
      16.0 * a * (c * c - a * a + r - 1.0) / (r * rs * rs * rs);
  const double num_c = 2.0 * (a - c) * c * (a + c) - 2.0 * c * r;
  const double sr = s - r;
  const double d_dc = -8.0 * num_c / (r * sr * sr * sr);
  return {d_da, d_dc};
}

double qcb_noise_deriv(double r, double n1, double n2) {
  const double sh = std::sinh(2.0 * r);
  const double ch4 = std::cosh(4.0 * r);
  const double s = n1 + n2 + 1.0;
  const double den = n1 * n1 - 2.0 * (7.0 * n2 + 3.0) * n1 +
                     (n2 - 6.0) * n2 - s * s * ch4 - 3.0;
  const double g = 8.0 * s * (2.0 * n2 + 1.0) * sh * sh / (den * den);
  return -(n1 - n2) * g;
}

int copies_needed(double fidelity_single, double qstar_single, double target,
                  BoundSide side) {
  if (target <= 0.0 || target > 0.5) {
    throw std::domain_error("copies_needed: target must be in (0, 1/2]");
  }
  double n_real;
  if (side == BoundSide::Upper) {
    if (qstar_single >= 1.0) {
      throw std::domain_error("copies_needed: target unreachable (Q* = 1)");
    }
    n_real = std::log(2.0 * target) / std::log(qstar_single);
  } else {
    if (fidelity_single >= 1.0) {
      throw std::domain_error("copies_needed: target unreachable (F = 1)");
    }
    // LBP(n) <= target  <=>  F^n <= 4 target (1 - target).
    n_real = std::log(4.0 * target * (1.0 - target)) /
             std::log(fidelity_single);
  }
  const int n = static_cast<int>(std::ceil(n_real - 1e-9));
  return std::max(1, n);
}

int copies_needed(const GaussianState& s1, const GaussianState& s2,
                  double target, BoundSide side) {
  const double f = uhlmann_fidelity(s1, s2);
  const double qstar = 2.0 * qcb(s1, s2, 1).qcb;
  return copies_needed(f, qstar, target, side);
}

}  // namespace gqr
