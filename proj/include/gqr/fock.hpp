#pragma once

#include <memory>
#include <stdexcept>

#include <Eigen/Dense>

#include "gqr/gaussian_state.hpp"

namespace gqr::fock {

/// Thrown when the truncated representation loses more probability mass
/// than the oracle tolerates; carries a suggested larger cutoff.
struct TruncationError : std::runtime_error {
  TruncationError(double tail, int suggested)
      : std::runtime_error("fock truncation tail mass " +
                           std::to_string(tail) + ", retry with cutoff >= " +
                           std::to_string(suggested)),
        tail_mass(tail),
        suggested_cutoff(suggested) {}
  double tail_mass;
  int suggested_cutoff;
};

struct Eigensystem {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

/// Dense operator on the truncated two-mode number basis |j,k>,
/// 0 <= j,k < dim, index j*dim + k.
struct FockOperator {
  int dim = 0;
  Eigen::MatrixXcd mat;
  double tail_mass = 0.0;  // 1 - trace, for states

  /// Hermitian eigendecomposition, computed once and cached.
  const Eigensystem& eig() const;

 private:
  mutable std::shared_ptr<Eigensystem> eig_;
};

/// Single-mode ladder operator a on a dim-dimensional truncation.
Eigen::MatrixXd ladder(int dim);

/// Truncated two-mode squeeze exp(r(a1+ a2+ - a1 a2)) via matrix
/// exponential of the (real) generator.
Eigen::MatrixXd squeeze_two_mode(double r, int dim);

/// Truncated single-mode displacement exp(alpha a+ - conj(alpha) a),
/// embedded on the requested mode.
Eigen::MatrixXcd displacement(std::complex<double> alpha, int dim, int mode);

/// Phase shift exp(-i phi n1) on mode 1 (diagonal).
Eigen::MatrixXcd phase_shift_op(double phi, int dim);

/// Fock representation of the traceless local symplectic
/// R(pi/2-theta) diag(xi,1/xi) R(theta) acting on mode 1.
Eigen::MatrixXcd euler_traceless_op(double theta, double xi, int dim);

/// Smallest cutoff whose geometric tail bound falls below 1e-8 for this
/// state, clamped to [8, 96].
int auto_cutoff(const GaussianState& state);

/// Density matrix of an arbitrary standard-form (c1 = -c2) Gaussian state
/// on the truncated basis.  Throws TruncationError if the tail mass
/// exceeds 1e-6.
FockOperator from_gaussian(const GaussianState& state, int cutoff);

/// Density matrix of a family state per its defining composition.
FockOperator fock_state(const StateParams& params, Family family, int cutoff);

/// Covariance matrix and displacement extracted from quadrature moments,
/// VacuumOne convention.
GaussianState moments(const FockOperator& rho);

double oracle_fidelity(const FockOperator& rho1, const FockOperator& rho2);
double oracle_affinity(const FockOperator& rho1, const FockOperator& rho2);
double oracle_q_t(const FockOperator& rho1, const FockOperator& rho2,
                  double t);
double oracle_trace_distance(const FockOperator& rho1,
                             const FockOperator& rho2);
double oracle_helstrom(const FockOperator& rho1, const FockOperator& rho2);

struct TraceDiscordResult {
  double value;
  double perr_max;
  double theta;
  double xi;
};

/// Trace discord of response by brute-force minimization over the Fock
/// representation of traceless local symplectics.
TraceDiscordResult oracle_trace_discord(const GaussianState& state,
                                        int cutoff);

}  // namespace gqr::fock
