#pragma once

#include <array>
#include <cmath>
#include <functional>

namespace gqr {

struct ScalarMin {
  double x;
  double fx;
};

/// Golden-section search for a unimodal f on [lo, hi], absolute x
/// tolerance xtol.
template <typename F>
ScalarMin golden_section_min(F&& f, double lo, double hi,
                             double xtol = 1e-12) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

struct Min2d {
  std::array<double, 2> x;
  double fx;
};

/// Deterministic Nelder-Mead on two variables, objective tolerance ftol.
Min2d nelder_mead_2d(const std::function<double(double, double)>& f,
                     std::array<double, 2> x0, std::array<double, 2> step,
                     double ftol = 1e-10, int max_iter = 500);

}  // namespace gqr
