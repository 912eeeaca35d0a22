#pragma once

#include "gqr/gaussian_state.hpp"

namespace gqr {

/// Distinguishability report for a state pair and copy count n.
struct MetricReport {
  double fidelity = 1.0;  // Uhlmann fidelity, in [0,1]
  double affinity = 1.0;  // tr sqrt(rho1) sqrt(rho2) = Q_{1/2}
  double t_star = 0.5;    // Chernoff minimizer
  double qcb = 0.5;       // (1/2) (inf_t Q_t)^n
  double lbp = 0.5;       // (1 - sqrt(1 - F^n)) / 2
  double ubp = 0.5;       // equals qcb
  int copies = 1;
};

/// Uhlmann fidelity of two two-mode Gaussian states.
double uhlmann_fidelity(const GaussianState& s1, const GaussianState& s2);

/// Q_t = tr rho1^t rho2^(1-t), 0 < t < 1.
double q_t(const GaussianState& s1, const GaussianState& s2, double t);

/// Bhattacharyya affinity Q_{1/2}.
double affinity(const GaussianState& s1, const GaussianState& s2);

struct QcbResult {
  double qcb;
  double t_star;
};

/// Quantum Chernoff bound (1/2)(inf_t Q_t)^n.  Uses the t = 1/2 shortcut
/// for undisplaced standard-form pairs related by a traceless local
/// symplectic; golden-section minimization otherwise.
QcbResult qcb(const GaussianState& s1, const GaussianState& s2,
              int copies = 1);

/// Full bound hierarchy for n copies.
MetricReport helstrom_bounds(const GaussianState& s1, const GaussianState& s2,
                             int copies = 1);

/// Exact Helstrom error for a pure pair: 1/2 - sqrt(1 - F)/2.
double pure_perr(const GaussianState& s1, const GaussianState& s2);

/// QCB of a symmetric standard-form state and its pi/2 shift:
/// (a^2 - c^2) / (2a^2 - c^2).  VacuumOne entries.
double closed_qcb_sym(double a, double c);

/// Fidelity of the same pair: 4 / [1 + c^2 - a^2 + sqrt((c^2-a^2)^2
/// + 1 + 2a^2)]^2.
double closed_fid_sym(double a, double c);

/// Non-symmetric generalization: (ab - c^2) / (2ab - c^2).
double closed_qcb_asym(double a, double b, double c);

struct PartialDerivs {
  double d_da;
  double d_dc;
};

/// Partial derivatives of closed_qcb_sym over (a, c).
PartialDerivs qcb_derivs(double a, double c);

/// Partial derivatives of closed_fid_sym over (a, c).
PartialDerivs fid_derivs(double a, double c);

/// dQCB/dN_th1 for an STS at fixed r, N_th2: -(N_th1 - N_th2) g.
double qcb_noise_deriv(double r, double n1, double n2);

enum class BoundSide { Upper, Lower };

/// Least n with (1/2) qstar^n <= target (Upper) or with
/// (1 - sqrt(1 - F^n))/2 <= target (Lower).
int copies_needed(double fidelity_single, double qstar_single, double target,
                  BoundSide side);

/// Convenience overload computing the single-copy quantities first.
int copies_needed(const GaussianState& s1, const GaussianState& s2,
                  double target, BoundSide side);

}  // namespace gqr
