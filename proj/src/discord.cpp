#include "gqr/discord.hpp"

#include <cmath>
#include <vector>

#include "gqr/metrics.hpp"
#include "gqr/optim.hpp"

namespace gqr {

namespace {

constexpr int kThetaPoints = 64;   // over [0, pi)
constexpr int kXiPoints = 33;      // log grid 2^-4 .. 2^4
constexpr double kLogXiRange = 4.0;

double objective(const GaussianState& state, DiscordMetric metric,
                 double theta, double xi) {
  const GaussianState moved = apply_local(state, euler_traceless(theta, xi));
  if (metric == DiscordMetric::Hellinger) {
    // d_Hell^2 / 2 = 1 - affinity.
    return 1.0 - affinity(state, moved);
  }
  // d_Bu^2 / 2 = 1 - sqrt(F).
  return 1.0 - std::sqrt(uhlmann_fidelity(state, moved));
}

struct GridMin {
  double theta;
  double log2_xi;
  double value;
  bool on_xi_boundary;
};

GridMin grid_scan(const GaussianState& state, DiscordMetric metric,
                  double log2_range) {
  GridMin best{0.0, 0.0, std::numeric_limits<double>::infinity(), false};
  for (int i = 0; i < kThetaPoints; ++i) {
    const double theta = M_PI * i / kThetaPoints;
    for (int j = 0; j < kXiPoints; ++j) {
      const double lx =
          -log2_range + 2.0 * log2_range * j / (kXiPoints - 1);
      const double v = objective(state, metric, theta, std::exp2(lx));
      if (v < best.value - 1e-15) {
        best = {theta, lx, v, j == 0 || j == kXiPoints - 1};
      }
    }
  }
  return best;
}

}  // namespace

DiscordResult discord_response(const GaussianState& state,
                               DiscordMetric metric) {
  if (!is_physical(state)) {
    throw std::domain_error("discord_response: unphysical state");
  }
  GridMin best = grid_scan(state, metric, kLogXiRange);
  if (best.on_xi_boundary) {
    // The objective diverges as xi -> 0 or inf for discordant states, so
    // an interior minimum is expected; widen once if the grid missed it.
    best = grid_scan(state, metric, 2.0 * kLogXiRange);
  }
  auto f = [&](double theta, double lx) {
    return objective(state, metric, theta, std::exp2(lx));
  };
  Min2d refined = nelder_mead_2d(f, {best.theta, best.log2_xi},
                                 {M_PI / kThetaPoints, 0.25}, 1e-12, 600);
  // Coordinate-wise golden polish: pins the minimizer itself (not just the
  // objective) to high accuracy, which the xi-extremality report needs.
  double theta = refined.x[0], lx = refined.x[1];
  for (int round = 0; round < 3; ++round) {
    const ScalarMin mt = golden_section_min(
        [&](double t) { return f(t, lx); }, theta - 0.05, theta + 0.05,
        1e-10);
    theta = mt.x;
    const ScalarMin mx = golden_section_min(
        [&](double x) { return f(theta, x); }, lx - 0.05, lx + 0.05, 1e-10);
    lx = mx.x;
  }
  DiscordResult res;
  res.metric = metric;
  res.value = std::clamp(f(theta, lx), 0.0, 1.0);
  // A flat objective (classical states) leaves the minimizer arbitrary;
  // report the canonical pi/2 shift.
  if (res.value < 1e-12 &&
      std::abs(objective(state, metric, 0.0, 1.0) - res.value) < 1e-12) {
    theta = 0.0;
    lx = 0.0;
  }
  res.argmin_theta = theta - M_PI * std::floor(theta / M_PI);
  res.argmin_xi = std::exp2(lx);
  if (metric == DiscordMetric::Hellinger) {
    res.perr_max_upper = 0.5 * (1.0 - res.value);
  } else {
    const double one_minus = 1.0 - res.value;
    res.perr_max_lower =
        0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - one_minus * one_minus)));
  }
  return res;
}

PerrMaxBounds perr_max_bounds(const GaussianState& state) {
  const DiscordResult hell = discord_response(state, DiscordMetric::Hellinger);
  const DiscordResult bures = discord_response(state, DiscordMetric::Bures);
  return {bures.perr_max_lower, hell.perr_max_upper};
}

bool is_classical_quantum(const GaussianState& state) {
  if (!is_physical(state)) {
    throw std::domain_error("is_classical_quantum: unphysical state");
  }
  // Local symplectics act on the cross block as S_A C S_B^T with both
  // factors invertible, so block-diagonal product form is equivalent to a
  // vanishing cross block in any local frame.
  const GaussianState g = state.to(Convention::VacuumOne);
  return g.cov.topRightCorner<2, 2>().cwiseAbs().maxCoeff() < 1e-10;
}

ExtremalReport verify_pi_half_extremal(const GaussianState& state) {
  const DiscordResult res =
      discord_response(state, DiscordMetric::Hellinger);
  ExtremalReport rep;
  rep.theta = res.argmin_theta;
  rep.xi = res.argmin_xi;
  rep.is_extremal = std::abs(res.argmin_xi - 1.0) <= 1e-6;
  return rep;
}

double perr_from_trace_discord(double trace_discord) {
  return 0.5 - 0.5 * std::sqrt(std::clamp(trace_discord, 0.0, 1.0));
}

Min2d nelder_mead_2d(const std::function<double(double, double)>& f,
                     std::array<double, 2> x0, std::array<double, 2> step,
                     double ftol, int max_iter) {
  struct Vertex {
    std::array<double, 2> x;
    double fx;
  };
  auto eval = [&](std::array<double, 2> x) {
    return Vertex{x, f(x[0], x[1])};
  };
  std::array<Vertex, 3> v = {
      eval(x0), eval({x0[0] + step[0], x0[1]}), eval({x0[0], x0[1] + step[1]})};
  auto order = [&] {
    std::sort(v.begin(), v.end(),
              [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
  };
  order();
  for (int it = 0; it < max_iter; ++it) {
    if (v[2].fx - v[0].fx < ftol) break;
    const std::array<double, 2> centroid = {(v[0].x[0] + v[1].x[0]) / 2.0,
                                            (v[0].x[1] + v[1].x[1]) / 2.0};
    auto along = [&](double coeff) {
      return eval({centroid[0] + coeff * (centroid[0] - v[2].x[0]),
                   centroid[1] + coeff * (centroid[1] - v[2].x[1])});
    };
    const Vertex refl = along(1.0);
    if (refl.fx < v[0].fx) {
      const Vertex exp = along(2.0);
      v[2] = exp.fx < refl.fx ? exp : refl;
    } else if (refl.fx < v[1].fx) {
      v[2] = refl;
    } else {
      const Vertex contr = along(refl.fx < v[2].fx ? 0.5 : -0.5);
      if (contr.fx < std::min(refl.fx, v[2].fx)) {
        v[2] = contr;
      } else {
        // Shrink toward the best vertex.
        for (int i = 1; i < 3; ++i) {
          v[i] = eval({(v[i].x[0] + v[0].x[0]) / 2.0,
                       (v[i].x[1] + v[0].x[1]) / 2.0});
        }
      }
    }
    order();
  }
  return {v[0].x, v[0].fx};
}

}  // namespace gqr
