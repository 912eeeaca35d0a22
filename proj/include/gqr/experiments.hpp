#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gqr/gaussian_state.hpp"
#include "gqr/metrics.hpp"

namespace gqr {

struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;  // number of grid points, >= 2

  std::vector<double> values() const;
};

/// A plain numeric table with named columns and provenance comments.
struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> meta;  // emitted as '#' comment lines

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
};

/// Data behind one of the paper-style figures (1..9).  `fixed` overrides
/// the figure's default fixed parameters; `grid` overrides the swept
/// range.
DataTable figure_data(int figure_id,
                      const std::map<std::string, double>& fixed = {},
                      const std::optional<GridSpec>& grid = std::nullopt);

/// Thermal-photon threshold n1* solving
/// closed_qcb_asym(STS(r, n1, n2)) = pure_perr(TMSV(r) vs pi/2 shift).
double run_threshold(double r, double n2);

/// Copies needed to reach the target error: STS uses the upper (worst
/// case) bound, TSS the lower (best case) bound.
int run_copies(Family family, double n_s, double n_th, double target);

struct ValidationBox {
  double r_max = 1.0;
  double nth_max = 2.0;
  double alpha_max = 1.5;
};

struct ValidationPoint {
  std::string label;
  double tail_mass = 0.0;
  bool skipped = false;  // truncation warning at this cutoff
  double dev_fidelity = 0.0;
  double dev_affinity = 0.0;
  double dev_q_t = 0.0;  // at t = 0.3
  bool sandwich_ok = true;  // lbp <= oracle helstrom <= ubp
};

struct ValidationReport {
  std::vector<ValidationPoint> points;
  double max_dev_fidelity = 0.0;
  double max_dev_affinity = 0.0;
  double max_dev_q_t = 0.0;
  int sandwich_violations = 0;

  bool ok(double tol = 1e-5) const {
    return max_dev_fidelity <= tol && max_dev_affinity <= tol &&
           max_dev_q_t <= tol && sandwich_violations == 0;
  }
};

/// Sweeps family states inside the box, comparing every Gaussian metric
/// to its Fock-oracle counterpart at the given cutoff.
ValidationReport run_validate(const ValidationBox& box, int cutoff);

}  // namespace gqr
