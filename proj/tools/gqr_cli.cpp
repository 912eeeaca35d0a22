#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gqr/discord.hpp"
#include "gqr/experiments.hpp"
#include "gqr/fock.hpp"
#include "gqr/gaussian_state.hpp"
#include "gqr/metrics.hpp"
#include "gqr/symplectic.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

gqr::Family parse_family(const std::string& name) {
  if (name == "sts") return gqr::Family::Sts;
  if (name == "tss") return gqr::Family::Tss;
  if (name == "coherent-thermal") return gqr::Family::CoherentThermal;
  if (name == "sdts") return gqr::Family::Sdts;
  if (name == "stsds") return gqr::Family::Stsds;
  throw CLI::ValidationError(
      "family must be one of sts, tss, coherent-thermal, sdts, stsds");
}

gqr::GridSpec parse_grid(const std::string& text) {
  // "name:min:max:steps"; the leading name is informational.
  std::istringstream is(text);
  std::string name, smin, smax, ssteps;
  if (!std::getline(is, name, ':') || !std::getline(is, smin, ':') ||
      !std::getline(is, smax, ':') || !std::getline(is, ssteps)) {
    throw CLI::ValidationError("grid must be <name>:<min>:<max>:<steps>");
  }
  gqr::GridSpec g;
  try {
    g.min = std::stod(smin);
    g.max = std::stod(smax);
    g.steps = std::stoi(ssteps);
  } catch (const std::exception&) {
    throw CLI::ValidationError("grid must be <name>:<min>:<max>:<steps>");
  }
  return g;
}

void emit_table(const gqr::DataTable& table, const std::string& out_path,
                const std::string& format) {
  std::ostringstream buf;
  if (format == "json") {
    table.write_json(buf);
  } else {
    table.write_csv(buf);
  }
  if (out_path.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open " + out_path);
    os << buf.str();
  }
}

struct StateFlags {
  std::string family = "sts";
  double r = 0.5;
  double nth1 = 0.0;
  double nth2 = 0.0;
  double ns = -1.0;  // if set, overrides r for tss via n_s = sinh^2 r
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  double rprime = 0.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "sts | tss | coherent-thermal | sdts | stsds");
    cmd->add_option("--r", r, "two-mode squeezing");
    cmd->add_option("--nth1", nth1, "thermal photons, mode 1");
    cmd->add_option("--nth2", nth2, "thermal photons, mode 2");
    cmd->add_option("--ns", ns, "squeezed photons sinh^2(r)");
    cmd->add_option("--alpha", alpha_re, "displacement, real part");
    cmd->add_option("--alpha-im", alpha_im, "displacement, imaginary part");
    cmd->add_option("--rprime", rprime, "secondary squeezing (stsds)");
  }

  gqr::GaussianState build() const {
    gqr::StateParams p;
    p.r = ns >= 0.0 ? std::asinh(std::sqrt(ns)) : r;
    p.n_th1 = nth1;
    p.n_th2 = nth2;
    p.alpha = {alpha_re, alpha_im};
    p.r_prime = rprime;
    return gqr::make_state(parse_family(family), p);
  }
};

gqr::GaussianState pi_half_shift(const gqr::GaussianState& s) {
  return gqr::apply_local(s, gqr::phase_shift(M_PI / 2.0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Distinguishability metrics and discords of response for two-mode "
      "Gaussian states"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  app.add_option("--out", out_path, "output path (default: stdout)")
      ->capture_default_str();
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  StateFlags sf;

  auto* c_state = app.add_subcommand("state", "print a family state");
  sf.add_to(c_state);

  auto* c_metric = app.add_subcommand(
      "metric", "distinguishability bounds for a state vs its pi/2 shift");
  sf.add_to(c_metric);
  int copies = 1;
  c_metric->add_option("--copies", copies, "copy count n")
      ->check(CLI::PositiveNumber);

  auto* c_discord =
      app.add_subcommand("discord", "Gaussian discords of response");
  sf.add_to(c_discord);

  auto* c_figure = app.add_subcommand("figure", "emit figure data");
  int figure_id = 1;
  std::string grid_text;
  std::vector<std::string> fix_args;
  c_figure->add_option("--id", figure_id, "figure id, 1..9")
      ->required()
      ->check(CLI::Range(1, 9));
  c_figure->add_option("--grid", grid_text,
                       "swept range, <name>:<min>:<max>:<steps>");
  c_figure->add_option("--fix", fix_args,
                       "override a fixed parameter, <key>=<value>");

  auto* c_threshold = app.add_subcommand(
      "threshold", "thermal-photon threshold where the STS Chernoff bound "
                   "meets the squeezed-vacuum error");
  double th_r = 0.5, th_n2 = 0.0;
  c_threshold->add_option("--r", th_r, "fixed squeezing")->required();
  c_threshold->add_option("--nth2", th_n2, "thermal photons, mode 2");

  auto* c_copies = app.add_subcommand(
      "copies", "copies needed to reach a target error probability");
  std::string cp_family = "sts";
  double cp_ns = 0.1, cp_nth = 1.0, cp_target = 0.125;
  c_copies->add_option("--family", cp_family, "sts | tss");
  c_copies->add_option("--ns", cp_ns, "squeezed photons per copy");
  c_copies->add_option("--nth", cp_nth, "thermal photons per copy");
  c_copies->add_option("--target", cp_target, "target error, in (0, 1/2]");

  auto* c_validate = app.add_subcommand(
      "validate", "compare Gaussian metrics with the Fock oracle");
  int cutoff = 40;
  gqr::ValidationBox box;
  c_validate->add_option("--cutoff", cutoff, "Fock truncation dimension")
      ->check(CLI::Range(8, 96));
  c_validate->add_option("--rmax", box.r_max, "box limit on squeezing");
  c_validate->add_option("--nthmax", box.nth_max,
                         "box limit on thermal photons");
  c_validate->add_option("--alphamax", box.alpha_max,
                         "box limit on |alpha|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_state) {
      const gqr::GaussianState s = sf.build();
      gqr::DataTable t;
      t.meta = {"subcommand=state", "family=" + sf.family};
      t.columns = {"x1", "p1", "x2", "p2"};
      t.rows.push_back({s.disp(0), s.disp(1), s.disp(2), s.disp(3)});
      for (int i = 0; i < 4; ++i) {
        t.rows.push_back(
            {s.cov(i, 0), s.cov(i, 1), s.cov(i, 2), s.cov(i, 3)});
      }
      t.meta.push_back("rows: displacement, then covariance (vacuum = I)");
      std::ostringstream info;
      info << "total_photons=" << gqr::total_photons(s)
           << " purity=" << gqr::purity(s)
           << " physical=" << (gqr::is_physical(s) ? "yes" : "no");
      t.meta.push_back(info.str());
      emit_table(t, out_path, format);
    } else if (*c_metric) {
      const gqr::GaussianState s = sf.build();
      const gqr::MetricReport m =
          gqr::helstrom_bounds(s, pi_half_shift(s), copies);
      gqr::DataTable t;
      t.meta = {"subcommand=metric", "family=" + sf.family,
                "copies=" + std::to_string(copies)};
      t.columns = {"fidelity", "affinity", "t_star", "qcb", "lbp", "ubp"};
      t.rows.push_back(
          {m.fidelity, m.affinity, m.t_star, m.qcb, m.lbp, m.ubp});
      emit_table(t, out_path, format);
    } else if (*c_discord) {
      const gqr::GaussianState s = sf.build();
      const auto hel =
          gqr::discord_response(s, gqr::DiscordMetric::Hellinger);
      const auto bur = gqr::discord_response(s, gqr::DiscordMetric::Bures);
      gqr::DataTable t;
      t.meta = {"subcommand=discord", "family=" + sf.family};
      t.columns = {"hellinger",   "bures",       "perr_max_lower",
                   "perr_max_upper", "theta_hellinger", "xi_hellinger"};
      t.rows.push_back({hel.value, bur.value, bur.perr_max_lower,
                        hel.perr_max_upper, hel.argmin_theta,
                        hel.argmin_xi});
      emit_table(t, out_path, format);
    } else if (*c_figure) {
      std::map<std::string, double> fixed;
      for (const auto& kv : fix_args) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
          std::cerr << "--fix needs <key>=<value>\n";
          return kExitUsage;
        }
        fixed[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      }
      std::optional<gqr::GridSpec> grid;
      if (!grid_text.empty()) grid = parse_grid(grid_text);
      emit_table(gqr::figure_data(figure_id, fixed, grid), out_path, format);
    } else if (*c_threshold) {
      const double n1 = gqr::run_threshold(th_r, th_n2);
      gqr::DataTable t;
      t.meta = {"subcommand=threshold", "r=" + std::to_string(th_r),
                "nth2=" + std::to_string(th_n2)};
      t.columns = {"nth1_threshold"};
      t.rows.push_back({n1});
      emit_table(t, out_path, format);
    } else if (*c_copies) {
      const gqr::Family family = parse_family(cp_family);
      const int n = gqr::run_copies(family, cp_ns, cp_nth, cp_target);
      gqr::DataTable t;
      t.meta = {"subcommand=copies", "family=" + cp_family};
      t.columns = {"copies"};
      t.rows.push_back({static_cast<double>(n)});
      emit_table(t, out_path, format);
    } else if (*c_validate) {
      const gqr::ValidationReport report = gqr::run_validate(box, cutoff);
      gqr::DataTable t;
      t.meta = {"subcommand=validate", "cutoff=" + std::to_string(cutoff)};
      t.columns = {"point", "skipped", "tail_mass", "dev_fidelity",
                   "dev_affinity", "dev_q_t", "sandwich_ok"};
      for (size_t i = 0; i < report.points.size(); ++i) {
        const auto& p = report.points[i];
        t.meta.push_back("point " + std::to_string(i) + ": " + p.label +
                         (p.skipped ? " (skipped: truncation)" : ""));
        t.rows.push_back({static_cast<double>(i), p.skipped ? 1.0 : 0.0,
                          p.tail_mass, p.dev_fidelity, p.dev_affinity,
                          p.dev_q_t, p.sandwich_ok ? 1.0 : 0.0});
      }
      std::ostringstream sum;
      sum << "max deviations: fidelity=" << report.max_dev_fidelity
          << " affinity=" << report.max_dev_affinity
          << " q_t=" << report.max_dev_q_t
          << " sandwich_violations=" << report.sandwich_violations;
      t.meta.push_back(sum.str());
      emit_table(t, out_path, format);
      if (!report.ok()) {
        std::cerr << "validation failed: " << sum.str() << "\n";
        return kExitFailure;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
