#include "gqr/fock.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "gqr/optim.hpp"
#include "gqr/symplectic.hpp"

namespace gqr::fock {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

Eigensystem hermitian_eig(const MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  Eigensystem es;
  es.vectors = h;
  es.values.resize(n);
  const int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, es.vectors.data(), n,
                     es.values.data());
  if (info != 0) {
    throw std::runtime_error("zheevd failed, info = " + std::to_string(info));
  }
  return es;
}

VectorXd hermitian_eigvals(const MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  MatrixXcd a = h;
  VectorXd w(n);
  const int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
  if (info != 0) {
    throw std::runtime_error("zheevd failed, info = " + std::to_string(info));
  }
  return w;
}

// Eigenvalue floor for fractional powers; negative numerical eigenvalues
// are clipped to zero.
MatrixXcd hermitian_power(const Eigensystem& es, double p) {
  VectorXd lam = es.values;
  for (int i = 0; i < lam.size(); ++i) {
    lam(i) = lam(i) < 1e-14 ? 0.0 : std::pow(lam(i), p);
  }
  return es.vectors * lam.asDiagonal() * es.vectors.adjoint();
}

double trace_of_product(const MatrixXcd& a, const MatrixXcd& b) {
  // tr(AB) = sum_ij A_ij B_ji; avoids forming the product.
  return a.cwiseProduct(b.transpose()).sum().real();
}

template <typename M1, typename M2>
auto kron(const M1& a, const M2& b) {
  using Scalar = decltype(typename M1::Scalar() * typename M2::Scalar());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b;
    }
  }
  return out;
}

MatrixXd thermal_diag(double mean, int dim) {
  MatrixXd rho = MatrixXd::Zero(dim, dim);
  const double q = mean / (1.0 + mean);
  double w = 1.0 / (1.0 + mean);
  for (int j = 0; j < dim; ++j) {
    rho(j, j) = w;
    w *= q;
  }
  return rho;
}

// Single-mode squeeze implementing x -> xi x, p -> p / xi on the state.
MatrixXcd xi_squeeze_op(double xi, int dim) {
  const MatrixXd a = ladder(dim);
  const MatrixXd gen =
      -0.5 * std::log(xi) * (a * a - (a * a).transpose().eval());
  return MatrixXd(gen.exp()).cast<std::complex<double>>();
}

}  // namespace

const Eigensystem& FockOperator::eig() const {
  if (!eig_) {
    eig_ = std::make_shared<Eigensystem>(hermitian_eig(mat));
  }
  return *eig_;
}

Eigen::MatrixXd ladder(int dim) {
  MatrixXd a = MatrixXd::Zero(dim, dim);
  for (int j = 1; j < dim; ++j) a(j - 1, j) = std::sqrt(double(j));
  return a;
}

Eigen::MatrixXd squeeze_two_mode(double r, int dim) {
  const MatrixXd a = ladder(dim);
  const MatrixXd id = MatrixXd::Identity(dim, dim);
  const MatrixXd a1 = kron(a, id);
  const MatrixXd a2 = kron(id, a);
  const MatrixXd lower = a1 * a2;  // a1 a2
  const MatrixXd gen = r * (lower.transpose() - lower);
  return gen.exp();
}

Eigen::MatrixXcd displacement(std::complex<double> alpha, int dim, int mode) {
  const MatrixXcd a = ladder(dim).cast<std::complex<double>>();
  const MatrixXcd gen = alpha * a.adjoint() - std::conj(alpha) * a;
  const MatrixXcd d = gen.exp();
  const MatrixXcd id = MatrixXcd::Identity(dim, dim);
  return mode == 1 ? MatrixXcd(kron(d, id)) : MatrixXcd(kron(id, d));
}

Eigen::MatrixXcd phase_shift_op(double phi, int dim) {
  Eigen::VectorXcd diag(dim);
  for (int j = 0; j < dim; ++j) {
    diag(j) = std::exp(std::complex<double>(0.0, -phi * j));
  }
  const MatrixXcd p = diag.asDiagonal();
  return kron(p, MatrixXcd::Identity(dim, dim));
}

Eigen::MatrixXcd euler_traceless_op(double theta, double xi, int dim) {
  Eigen::VectorXcd d1(dim), d2(dim);
  for (int j = 0; j < dim; ++j) {
    d1(j) = std::exp(std::complex<double>(0.0, -(M_PI / 2.0 - theta) * j));
    d2(j) = std::exp(std::complex<double>(0.0, -theta * j));
  }
  const MatrixXcd u =
      MatrixXcd(d1.asDiagonal()) * xi_squeeze_op(xi, dim) *
      MatrixXcd(d2.asDiagonal());
  return kron(u, MatrixXcd::Identity(dim, dim));
}

int auto_cutoff(const GaussianState& state) {
  const GaussianState g = state.to(Convention::VacuumOne);
  int cutoff = 8;
  for (int mode = 0; mode < 2; ++mode) {
    const double nbar =
        (g.cov(2 * mode, 2 * mode) + g.cov(2 * mode + 1, 2 * mode + 1) +
         g.disp(2 * mode) * g.disp(2 * mode) +
         g.disp(2 * mode + 1) * g.disp(2 * mode + 1)) /
            4.0 -
        0.5;
    if (nbar <= 1e-12) continue;
    const double q = nbar / (nbar + 1.0);
    const int n = static_cast<int>(
        std::ceil(std::log(1e-8 * (1.0 - q)) / std::log(q))) + 8;
    cutoff = std::max(cutoff, n);
  }
  return std::min(cutoff, 96);
}

FockOperator from_gaussian(const GaussianState& state, int cutoff) {
  if (cutoff < 8) throw std::invalid_argument("cutoff must be >= 8");
  const GaussianState g = state.to(Convention::VacuumOne);
  const Eigen::Matrix4d& cov = g.cov;
  const double a = cov(0, 0), b = cov(2, 2), c = cov(0, 2);
  // Standard form check: diagonal blocks scalar, cross block diag(c, -c).
  Eigen::Matrix4d ref;
  ref << a, 0, c, 0,  //
      0, a, 0, -c,    //
      c, 0, b, 0,     //
      0, -c, 0, b;
  if ((cov - ref).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, a)) {
    throw std::invalid_argument(
        "from_gaussian: covariance is not in standard form (c1 = -c2)");
  }
  // Any such state is a two-mode-squeezed non-symmetric thermal state:
  // solve a+b = 2 cosh(2s)(1 + m1 + m2), a-b = 2(m1 - m2),
  //       c = (1 + m1 + m2) sinh(2s).
  double s = 0.0, m1, m2;
  if (std::abs(c) > 1e-13) {
    s = 0.5 * std::atanh(2.0 * c / (a + b));
  }
  const double msum = (a + b) / (2.0 * std::cosh(2.0 * s)) - 1.0;
  const double mdiff = (a - b) / 2.0;
  m1 = std::max(0.0, (msum + mdiff) / 2.0);
  m2 = std::max(0.0, (msum - mdiff) / 2.0);

  const MatrixXd rho_th = kron(thermal_diag(m1, cutoff),
                               thermal_diag(m2, cutoff));
  FockOperator op;
  op.dim = cutoff;
  if (std::abs(s) > 1e-13) {
    const MatrixXd u = squeeze_two_mode(s, cutoff);
    op.mat = (u * rho_th * u.transpose()).cast<std::complex<double>>();
  } else {
    op.mat = rho_th.cast<std::complex<double>>();
  }
  if (g.disp.cwiseAbs().maxCoeff() > 1e-13) {
    const std::complex<double> b1(g.disp(0) / 2.0, g.disp(1) / 2.0);
    const std::complex<double> b2(g.disp(2) / 2.0, g.disp(3) / 2.0);
    MatrixXcd d = MatrixXcd::Identity(cutoff * cutoff, cutoff * cutoff);
    if (std::abs(b1) > 0.0) d = displacement(b1, cutoff, 1) * d;
    if (std::abs(b2) > 0.0) d = displacement(b2, cutoff, 2) * d;
    op.mat = d * op.mat * d.adjoint();
  }
  op.tail_mass = 1.0 - op.mat.trace().real();
  if (op.tail_mass > 1e-6) {
    throw TruncationError(op.tail_mass, cutoff + cutoff / 2);
  }
  return op;
}

FockOperator fock_state(const StateParams& params, Family family,
                        int cutoff) {
  return from_gaussian(make_state(family, params), cutoff);
}

GaussianState moments(const FockOperator& rho) {
  const int dim = rho.dim;
  const MatrixXcd a = ladder(dim).cast<std::complex<double>>();
  const MatrixXcd id = MatrixXcd::Identity(dim, dim);
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  const std::complex<double> mi(0.0, -1.0);
  std::array<MatrixXcd, 4> u;
  u[0] = kron(MatrixXcd((a + a.adjoint()) * inv_rt2), id);
  u[1] = kron(MatrixXcd(mi * (a - a.adjoint()) * inv_rt2), id);
  u[2] = kron(id, MatrixXcd((a + a.adjoint()) * inv_rt2));
  u[3] = kron(id, MatrixXcd(mi * (a - a.adjoint()) * inv_rt2));
  GaussianState g;
  g.convention = Convention::VacuumHalf;
  for (int i = 0; i < 4; ++i) {
    g.disp(i) = trace_of_product(rho.mat, u[i]);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const MatrixXcd sym = 0.5 * (u[i] * u[j] + u[j] * u[i]);
      g.cov(i, j) = trace_of_product(rho.mat, sym) - g.disp(i) * g.disp(j);
      g.cov(j, i) = g.cov(i, j);
    }
  }
  return g.to(Convention::VacuumOne);
}

double oracle_fidelity(const FockOperator& rho1, const FockOperator& rho2) {
  if (rho1.dim != rho2.dim) {
    throw std::invalid_argument("oracle_fidelity: cutoff mismatch");
  }
  const MatrixXcd root1 = hermitian_power(rho1.eig(), 0.5);
  const MatrixXcd inner = root1 * rho2.mat * root1;
  const VectorXd lam = hermitian_eigvals(inner);
  double sum = 0.0;
  for (int i = 0; i < lam.size(); ++i) {
    sum += std::sqrt(std::max(0.0, lam(i)));
  }
  return std::clamp(sum * sum, 0.0, 1.0);
}

double oracle_affinity(const FockOperator& rho1, const FockOperator& rho2) {
  return oracle_q_t(rho1, rho2, 0.5);
}

double oracle_q_t(const FockOperator& rho1, const FockOperator& rho2,
                  double t) {
  if (rho1.dim != rho2.dim) {
    throw std::invalid_argument("oracle_q_t: cutoff mismatch");
  }
  if (t <= 0.0 || t >= 1.0) {
    throw std::domain_error("oracle_q_t: t must be in (0,1)");
  }
  const MatrixXcd p1 = hermitian_power(rho1.eig(), t);
  const MatrixXcd p2 = hermitian_power(rho2.eig(), 1.0 - t);
  return trace_of_product(p1, p2);
}

double oracle_trace_distance(const FockOperator& rho1,
                             const FockOperator& rho2) {
  if (rho1.dim != rho2.dim) {
    throw std::invalid_argument("oracle_trace_distance: cutoff mismatch");
  }
  const VectorXd lam = hermitian_eigvals(rho1.mat - rho2.mat);
  return lam.cwiseAbs().sum();
}

double oracle_helstrom(const FockOperator& rho1, const FockOperator& rho2) {
  return 0.5 - oracle_trace_distance(rho1, rho2) / 4.0;
}

TraceDiscordResult oracle_trace_discord(const GaussianState& state,
                                        int cutoff) {
  const FockOperator rho = from_gaussian(state, cutoff);
  auto objective = [&](double theta, double log2_xi) {
    const MatrixXcd u = euler_traceless_op(theta, std::exp2(log2_xi), cutoff);
    FockOperator moved;
    moved.dim = cutoff;
    moved.mat = u * rho.mat * u.adjoint();
    const double dtr = oracle_trace_distance(rho, moved);
    return 0.25 * dtr * dtr;
  };
  // Coarse grid, then simplex refinement.
  double best_theta = 0.0, best_lx = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 9; ++i) {
    const double theta = M_PI * i / 9.0;
    for (int j = 0; j < 9; ++j) {
      const double lx = -2.0 + 4.0 * j / 8.0;
      const double v = objective(theta, lx);
      if (v < best - 1e-15) {
        best = v;
        best_theta = theta;
        best_lx = lx;
      }
    }
  }
  const Min2d refined = nelder_mead_2d(objective, {best_theta, best_lx},
                                       {M_PI / 18.0, 0.25}, 1e-9, 80);
  TraceDiscordResult res;
  res.value = refined.fx;
  res.theta = refined.x[0];
  res.xi = std::exp2(refined.x[1]);
  res.perr_max = 0.5 - 0.5 * std::sqrt(std::clamp(res.value, 0.0, 1.0));
  return res;
}

}  // namespace gqr::fock
