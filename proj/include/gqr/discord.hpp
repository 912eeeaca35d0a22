#pragma once

#include "gqr/gaussian_state.hpp"
#include "gqr/symplectic.hpp"

namespace gqr {

enum class DiscordMetric { Hellinger, Bures };

struct DiscordResult {
  double value = 0.0;         // in [0, 1]
  double argmin_theta = 0.0;  // minimizing Euler angle
  double argmin_xi = 1.0;     // minimizing Euler squeeze parameter
  DiscordMetric metric = DiscordMetric::Hellinger;
  double perr_max_lower = 0.5;
  double perr_max_upper = 0.5;
};

/// Gaussian discord of response: min over traceless local symplectics
/// F_A of d_x^2(rho, F rho F^T) / 2.
DiscordResult discord_response(const GaussianState& state,
                               DiscordMetric metric);

struct PerrMaxBounds {
  double lower;
  double upper;
};

/// Worst-case error bounds: upper = (1 - GD_Hell)/2,
/// lower = (1 - sqrt(1 - (1 - GD_Bu)^2))/2.
PerrMaxBounds perr_max_bounds(const GaussianState& state);

/// True iff the covariance is in block-diagonal product form (zero
/// cross-block), i.e. the state is classical-quantum.
bool is_classical_quantum(const GaussianState& state);

struct ExtremalReport {
  bool is_extremal;
  double theta;
  double xi;
};

/// Runs the Hellinger minimization on an undisplaced standard-form state
/// and reports whether the minimizer sits at xi = 1 (the pi/2 shift).
ExtremalReport verify_pi_half_extremal(const GaussianState& state);

/// Worst-case error from a trace discord of response value (Fock oracle
/// supplied): 1/2 - sqrt(value)/2.
double perr_from_trace_discord(double trace_discord);

}  // namespace gqr
