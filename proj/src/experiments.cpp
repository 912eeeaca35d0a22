#include "gqr/experiments.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gqr/fock.hpp"
#include "gqr/symplectic.hpp"

namespace gqr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

GaussianState pi_half_shift(const GaussianState& s) {
  return apply_local(s, phase_shift(M_PI / 2.0));
}

double lbp_from_fidelity(double f) {
  return 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - f)));
}

/// STS squeezing reaching total photon number nt at thermal occupations
/// (n1, n2): 2 sinh^2(r)(1 + n1 + n2) + n1 + n2 = nt.  NaN if infeasible.
double sts_r_from_nt(double nt, double n1, double n2) {
  const double s2 = (nt - n1 - n2) / (2.0 * (1.0 + n1 + n2));
  if (s2 <= 0.0) return kNaN;
  return std::asinh(std::sqrt(s2));
}

double qcb_vs_shift(const GaussianState& s) {
  return qcb(s, pi_half_shift(s)).qcb;
}

double lbp_vs_shift(const GaussianState& s) {
  return lbp_from_fidelity(uhlmann_fidelity(s, pi_half_shift(s)));
}

/// Classical reference of figures 1-2: thermal coherent state with the
/// same thermal occupations and the equal-photon displacement
/// |alpha|^2 = 2 sinh^2(r)(1 + n1 + n2).
double lbp_coh_th(double r, double n1, double n2) {
  const double alpha2 = 2.0 * std::sinh(r) * std::sinh(r) * (1.0 + n1 + n2);
  const GaussianState coh = make_coherent_thermal(std::sqrt(alpha2), n1, n2);
  return lbp_vs_shift(coh);
}

double perr_tmsv(double nt) {
  const GaussianState sv = make_sts(std::asinh(std::sqrt(nt / 2.0)), 0, 0);
  return pure_perr(sv, pi_half_shift(sv));
}

double fixed_or(const std::map<std::string, double>& fixed,
                const std::string& key, double fallback) {
  const auto it = fixed.find(key);
  return it == fixed.end() ? fallback : it->second;
}

void format_value(std::ostream& os, double v) {
  std::ostringstream tmp;
  tmp << std::setprecision(12) << v;
  os << tmp.str();
}

}  // namespace

std::vector<double> GridSpec::values() const {
  if (steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
  if (!(min < max)) throw std::invalid_argument("grid needs min < max");
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i) {
    out[i] = min + (max - min) * i / (steps - 1);
  }
  return out;
}

void DataTable::write_csv(std::ostream& os) const {
  for (const auto& line : meta) os << "# " << line << "\n";
  for (size_t j = 0; j < columns.size(); ++j) {
    os << (j ? "," : "") << columns[j];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ",";
      format_value(os, row[j]);
    }
    os << "\n";
  }
}

void DataTable::write_json(std::ostream& os) const {
  os << "{\n  \"meta\": [";
  for (size_t i = 0; i < meta.size(); ++i) {
    os << (i ? ", " : "") << "\"" << meta[i] << "\"";
  }
  os << "],\n  \"columns\": [";
  for (size_t j = 0; j < columns.size(); ++j) {
    os << (j ? ", " : "") << "\"" << columns[j] << "\"";
  }
  os << "],\n  \"rows\": [\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    os << "    [";
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) os << ", ";
      if (std::isnan(rows[i][j])) {
        os << "null";
      } else {
        format_value(os, rows[i][j]);
      }
    }
    os << "]" << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
}

DataTable figure_data(int figure_id,
                      const std::map<std::string, double>& fixed,
                      const std::optional<GridSpec>& grid) {
  DataTable t;
  auto note = [&t](const std::string& s) { t.meta.push_back(s); };
  note("figure_id=" + std::to_string(figure_id));
  for (const auto& [k, v] : fixed) {
    std::ostringstream os;
    os << "fixed " << k << "=" << std::setprecision(12) << v;
    note(os.str());
  }

  switch (figure_id) {
    case 1: {
      // Error probabilities of noiseless transmitters plus the noisy
      // quantum-vs-classical bound comparison, all versus total photons.
      const double n1c = fixed_or(fixed, "nth1", 5.0);
      const double n1l = fixed_or(fixed, "nth1_lower", 8.0);
      const double n2 = fixed_or(fixed, "nth2", 0.0);
      const GridSpec g = grid.value_or(GridSpec{10.0, 60.0, 26});
      t.columns = {"n_t",        "perr_sq_vac",    "perr_coh",
                   "perr_sq_coh", "qcb_sq_vac",    "qcb_sq_th",
                   "lbp_coh_th",  "qcb_sq_th_lower", "lbp_coh_th_lower"};
      note("central panel nth1=" + std::to_string(n1c) +
           ", lower panel nth1=" + std::to_string(n1l));
      for (const double nt : g.values()) {
        std::vector<double> row(t.columns.size(), kNaN);
        row[0] = nt;
        if (nt > 0.0) {
          const GaussianState sv =
              make_sts(std::asinh(std::sqrt(nt / 2.0)), 0, 0);
          row[1] = pure_perr(sv, pi_half_shift(sv));
          row[4] = qcb_vs_shift(sv);
          const GaussianState coh =
              make_coherent_thermal(std::sqrt(nt), 0, 0);
          row[2] = pure_perr(coh, pi_half_shift(coh));
          // Squeezed displaced vacuum splitting nt - |beta|^2 = nt/2
          // between displacement and squeezed photons.
          const double beta2 = nt / 2.0;
          const double rp =
              0.5 * std::acosh((1.0 + nt) / (1.0 + beta2));
          const GaussianState sdv =
              make_stsds(0.0, 0.0, 0.0, rp, std::sqrt(beta2));
          row[3] = pure_perr(sdv, pi_half_shift(sdv));
        }
        const double rc = sts_r_from_nt(nt, n1c, n2);
        if (std::isfinite(rc)) {
          row[5] = qcb_vs_shift(make_sts(rc, n1c, n2));
          row[6] = lbp_coh_th(rc, n1c, n2);
        }
        const double rl = sts_r_from_nt(nt, n1l, n2);
        if (std::isfinite(rl)) {
          row[7] = qcb_vs_shift(make_sts(rl, n1l, n2));
          row[8] = lbp_coh_th(rl, n1l, n2);
        }
        t.rows.push_back(row);
      }
      break;
    }
    case 2: {
      // Contour data for QCB^sq-th - LBP^coh-th over (n_t, nth1) at two
      // asymmetries.
      const double n2a = fixed_or(fixed, "nth2_a", 0.0);
      const double n2b = fixed_or(fixed, "nth2_b", 0.5);
      const double n1max = fixed_or(fixed, "nth1_max", 10.0);
      const int n1steps = static_cast<int>(fixed_or(fixed, "nth1_steps", 21));
      const GridSpec g = grid.value_or(GridSpec{2.0, 60.0, 30});
      t.columns = {"n_t", "nth1", "diff_nth2_a", "diff_nth2_b"};
      const GridSpec inner{0.0, n1max, n1steps};
      for (const double nt : g.values()) {
        for (const double n1 : inner.values()) {
          std::vector<double> row{nt, n1, kNaN, kNaN};
          const double ra = sts_r_from_nt(nt, n1, n2a);
          if (std::isfinite(ra)) {
            row[2] = qcb_vs_shift(make_sts(ra, n1, n2a)) -
                     lbp_coh_th(ra, n1, n2a);
          }
          const double rb = sts_r_from_nt(nt, n1, n2b);
          if (std::isfinite(rb)) {
            row[3] = qcb_vs_shift(make_sts(rb, n1, n2b)) -
                     lbp_coh_th(rb, n1, n2b);
          }
          t.rows.push_back(row);
        }
      }
      break;
    }
    case 3: {
      // STS vs TSS bounds at fixed symmetric noise, undisplaced and
      // displaced (|alpha|^2 = (n_t - 2 n_th)/2), versus total photons.
      const double nl = fixed_or(fixed, "nth_low", 0.2);
      const double nh = fixed_or(fixed, "nth_high", 2.0);
      const GridSpec g = grid.value_or(GridSpec{4.5, 20.0, 32});
      t.columns = {"n_t",
                   "sts_qcb_low",  "sts_lbp_low",  "tss_qcb_low",
                   "tss_lbp_low",  "sts_qcb_high", "sts_lbp_high",
                   "tss_qcb_high", "tss_lbp_high", "dsts_ubp_low",
                   "dsts_lbp_low", "dtss_ubp_low", "dtss_lbp_low",
                   "dsts_ubp_high", "dsts_lbp_high", "dtss_ubp_high",
                   "dtss_lbp_high"};
      for (const double nt : g.values()) {
        std::vector<double> row(t.columns.size(), kNaN);
        row[0] = nt;
        int col = 1;
        for (const double nth : {nl, nh}) {
          const double r = sts_r_from_nt(nt, nth, nth);
          if (std::isfinite(r)) {
            const GaussianState sts = make_sts(r, nth, nth);
            row[col] = qcb_vs_shift(sts);
            row[col + 1] = lbp_vs_shift(sts);
            const GaussianState tss =
                make_tss((nt - 2.0 * nth) / 2.0, nth, nth);
            row[col + 2] = qcb_vs_shift(tss);
            row[col + 3] = lbp_vs_shift(tss);
          }
          col += 4;
        }
        for (const double nth : {nl, nh}) {
          if (nt > 2.0 * nth) {
            const double a2 = (nt - 2.0 * nth) / 2.0;
            const double alpha = std::sqrt(a2);
            // Displaced STS: rho(r, nth, nth, 0, alpha); the outer squeeze
            // amplifies both the noise and the displaced vacuum, so
            // N_T = (1 + 2 n_th + |alpha|^2) cosh(2r) - 1.
            const double chr = (nt + 1.0) / (1.0 + 2.0 * nth + a2);
            const GaussianState dsts = make_stsds(
                0.5 * std::acosh(chr), nth, nth, 0.0, alpha);
            row[col] = 0.5 * affinity(dsts, pi_half_shift(dsts));
            row[col + 1] = lbp_vs_shift(dsts);
            // Displaced TSS: rho(0, nth, nth, r', alpha); the noise is added
            // after the squeeze, so N_T = 2 n_th + (1 + |alpha|^2) cosh(2r') - 1.
            const double chrp = (nt + 1.0 - 2.0 * nth) / (1.0 + a2);
            const GaussianState dtss = make_stsds(
                0.0, nth, nth, 0.5 * std::acosh(chrp), alpha);
            row[col + 2] = 0.5 * affinity(dtss, pi_half_shift(dtss));
            row[col + 3] = lbp_vs_shift(dtss);
          }
          col += 4;
        }
        t.rows.push_back(row);
      }
      break;
    }
    case 4: {
      // Bounds versus thermal photons at fixed squeezed photons.
      const double ns = fixed_or(fixed, "ns", 1.0);
      const double r = std::asinh(std::sqrt(ns));
      const GridSpec g = grid.value_or(GridSpec{0.0, 4.0, 41});
      t.columns = {"n_th", "qcb_tss", "lbp_tss", "qcb_sts", "lbp_sts"};
      for (const double nth : g.values()) {
        const GaussianState tss = make_tss(ns, nth, nth);
        const GaussianState sts = make_sts(r, nth, nth);
        t.rows.push_back({nth, qcb_vs_shift(tss), lbp_vs_shift(tss),
                          qcb_vs_shift(sts), lbp_vs_shift(sts)});
      }
      break;
    }
    case 5: {
      // Chernoff bound of non-symmetric STSs versus nth1 at fixed r.
      const double r = fixed_or(fixed, "r", 0.5);
      const double n2a = fixed_or(fixed, "nth2_a", 0.01);
      const double n2b = fixed_or(fixed, "nth2_b", 0.1);
      const double n2c = fixed_or(fixed, "nth2_c", 1.0);
      const GridSpec g = grid.value_or(GridSpec{0.0, 10.0, 41});
      t.columns = {"nth1", "qcb_nth2_a", "qcb_nth2_b", "qcb_nth2_c"};
      for (const double n1 : g.values()) {
        std::vector<double> row{n1};
        for (const double n2 : {n2a, n2b, n2c}) {
          const GaussianState sts = make_sts(r, n1, n2);
          row.push_back(closed_qcb_asym(sts.cov(0, 0), sts.cov(2, 2),
                                        sts.cov(0, 2)));
        }
        t.rows.push_back(row);
      }
      break;
    }
    case 6: {
      // TMSV exact error versus the STS lower bound at equal photons.
      const double n1 = fixed_or(fixed, "nth1", 1.0);
      const double n2 = fixed_or(fixed, "nth2", 0.0);
      const GridSpec g = grid.value_or(GridSpec{1.5, 30.0, 30});
      t.columns = {"n_t", "perr_sq_vac", "lbp_sq_th"};
      for (const double nt : g.values()) {
        std::vector<double> row{nt, kNaN, kNaN};
        if (nt > 0.0) row[1] = perr_tmsv(nt);
        const double r = sts_r_from_nt(nt, n1, n2);
        if (std::isfinite(r)) row[2] = lbp_vs_shift(make_sts(r, n1, n2));
        t.rows.push_back(row);
      }
      break;
    }
    case 7:
    case 8: {
      // STS bounds at fixed squeezing versus TMSV exact error, with the
      // total photon number driven by nth1.
      const double r = fixed_or(fixed, "r", figure_id == 7 ? 0.5 : 1.0);
      const double n2 = fixed_or(fixed, "nth2", 0.0);
      const GridSpec g = grid.value_or(GridSpec{0.0, 10.0, 41});
      t.columns = {"nth1", "n_t", "perr_sq_vac", "lbp_sq_th", "qcb_sq_th"};
      for (const double n1 : g.values()) {
        const GaussianState sts = make_sts(r, n1, n2);
        const double nt = total_photons(sts);
        t.rows.push_back({n1, nt, nt > 0.0 ? perr_tmsv(nt) : 0.5,
                          lbp_vs_shift(sts), qcb_vs_shift(sts)});
      }
      break;
    }
    case 9: {
      // Bound decay with copies at fixed squeezed and thermal photons.
      const double ns = fixed_or(fixed, "ns", 0.1);
      const double nth = fixed_or(fixed, "nth", 1.0);
      const GridSpec g = grid.value_or(GridSpec{1.0, 30.0, 30});
      t.columns = {"n", "qcb_sts", "lbp_sts", "qcb_tss", "lbp_tss"};
      const GaussianState sts =
          make_sts(std::asinh(std::sqrt(ns)), nth, nth);
      const GaussianState tss = make_tss(ns, nth, nth);
      for (const double x : g.values()) {
        const int n = std::max(1, static_cast<int>(std::lround(x)));
        const MetricReport ms = helstrom_bounds(sts, pi_half_shift(sts), n);
        const MetricReport mt = helstrom_bounds(tss, pi_half_shift(tss), n);
        t.rows.push_back(
            {static_cast<double>(n), ms.qcb, ms.lbp, mt.qcb, mt.lbp});
      }
      break;
    }
    default:
      throw std::invalid_argument("figure_id must be 1..9");
  }
  return t;
}

double run_threshold(double r, double n2) {
  if (r <= 0.0) throw std::invalid_argument("threshold needs r > 0");
  const GaussianState sv = make_sts(r, 0, 0);
  const double p_ref = pure_perr(sv, pi_half_shift(sv));
  auto objective = [&](double n1) {
    const GaussianState sts = make_sts(r, n1, n2);
    return closed_qcb_asym(sts.cov(0, 0), sts.cov(2, 2), sts.cov(0, 2)) -
           p_ref;
  };
  double lo = 0.0, hi = 1000.0;
  double flo = objective(lo);
  if (flo <= 0.0) return 0.0;
  if (objective(hi) > 0.0) {
    throw std::runtime_error("threshold not found on [0, 1000]");
  }
  while (true) {
    const double mid = 0.5 * (lo + hi);
    const double fm = objective(mid);
    if (std::abs(fm) <= 1e-6 || hi - lo < 1e-12) return mid;
    (fm > 0.0 ? lo : hi) = mid;
  }
}

int run_copies(Family family, double n_s, double n_th, double target) {
  GaussianState s;
  BoundSide side;
  switch (family) {
    case Family::Sts:
      s = make_sts(std::asinh(std::sqrt(n_s)), n_th, n_th);
      side = BoundSide::Upper;
      break;
    case Family::Tss:
      s = make_tss(n_s, n_th, n_th);
      side = BoundSide::Lower;
      break;
    default:
      throw std::invalid_argument("copies supports STS and TSS only");
  }
  return copies_needed(s, pi_half_shift(s), target, side);
}

ValidationReport run_validate(const ValidationBox& box, int cutoff) {
  struct Case {
    std::string label;
    Family family;
    StateParams p;
  };
  const std::vector<Case> cases = {
      {"sts r=0.4 n1=0.3", Family::Sts, {.r = 0.4, .n_th1 = 0.3}},
      {"sts r=0.8 n1=0.5 n2=0.2",
       Family::Sts,
       {.r = 0.8, .n_th1 = 0.5, .n_th2 = 0.2}},
      {"tss ns=0.5 n1=1 n2=0.5",
       Family::Tss,
       {.r = std::asinh(std::sqrt(0.5)), .n_th1 = 1.0, .n_th2 = 0.5}},
      {"coh-th alpha=1 n1=0.5",
       Family::CoherentThermal,
       {.n_th1 = 0.5, .alpha = 1.0}},
      {"sdts r=0.5 alpha=0.8+0.3i n1=0.5 n2=0.1",
       Family::Sdts,
       {.r = 0.5, .n_th1 = 0.5, .n_th2 = 0.1, .alpha = {0.8, 0.3}}},
      {"stsds r=0.4 n1=0.3 n2=0.2 r'=0.3 alpha=0.5",
       Family::Stsds,
       {.r = 0.4, .n_th1 = 0.3, .n_th2 = 0.2, .alpha = 0.5,
        .r_prime = 0.3}},
  };
  ValidationReport report;
  for (const auto& c : cases) {
    if (c.p.r > box.r_max || c.p.r_prime > box.r_max ||
        c.p.n_th1 > box.nth_max || c.p.n_th2 > box.nth_max ||
        std::abs(c.p.alpha) > box.alpha_max) {
      continue;
    }
    ValidationPoint point;
    point.label = c.label;
    const GaussianState s1 = make_state(c.family, c.p);
    const GaussianState s2 = pi_half_shift(s1);
    try {
      const fock::FockOperator rho1 = fock::from_gaussian(s1, cutoff);
      // The shifted partner is produced by the oracle's own coding
      // operator, keeping the two paths fully independent.
      const Eigen::MatrixXcd shift = fock::phase_shift_op(M_PI / 2.0, cutoff);
      fock::FockOperator rho2;
      rho2.dim = cutoff;
      rho2.mat = shift * rho1.mat * shift.adjoint();
      rho2.tail_mass = 1.0 - rho2.mat.trace().real();
      point.tail_mass = std::max(rho1.tail_mass, rho2.tail_mass);
      point.dev_fidelity = std::abs(uhlmann_fidelity(s1, s2) -
                                    fock::oracle_fidelity(rho1, rho2));
      point.dev_affinity =
          std::abs(affinity(s1, s2) - fock::oracle_affinity(rho1, rho2));
      point.dev_q_t =
          std::abs(q_t(s1, s2, 0.3) - fock::oracle_q_t(rho1, rho2, 0.3));
      const MetricReport bounds = helstrom_bounds(s1, s2);
      const double perr = fock::oracle_helstrom(rho1, rho2);
      point.sandwich_ok =
          bounds.lbp - 1e-9 <= perr && perr <= bounds.ubp + 1e-9;
    } catch (const fock::TruncationError& e) {
      point.skipped = true;
      point.tail_mass = e.tail_mass;
    }
    if (!point.skipped) {
      report.max_dev_fidelity =
          std::max(report.max_dev_fidelity, point.dev_fidelity);
      report.max_dev_affinity =
          std::max(report.max_dev_affinity, point.dev_affinity);
      report.max_dev_q_t = std::max(report.max_dev_q_t, point.dev_q_t);
      if (!point.sandwich_ok) ++report.sandwich_violations;
    }
    report.points.push_back(std::move(point));
  }
  return report;
}

}  // namespace gqr
