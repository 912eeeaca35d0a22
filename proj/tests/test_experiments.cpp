#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gqr/experiments.hpp"

using namespace gqr;

namespace {
int column_index(const DataTable& t, const std::string& name) {
  for (size_t j = 0; j < t.columns.size(); ++j) {
    if (t.columns[j] == name) return static_cast<int>(j);
  }
  FAIL("missing column ", name);
  return -1;
}
}  // namespace

TEST_CASE("grid spec") {
  const GridSpec g{0.0, 1.0, 5};
  const auto v = g.values();
  REQUIRE(v.size() == 5);
  CHECK(v.front() == doctest::Approx(0.0));
  CHECK(v.back() == doctest::Approx(1.0));
  CHECK(v[2] == doctest::Approx(0.5));
  const GridSpec too_few{0.0, 1.0, 1};
  CHECK_THROWS_AS(too_few.values(), std::invalid_argument);
  const GridSpec reversed{2.0, 1.0, 4};
  CHECK_THROWS_AS(reversed.values(), std::invalid_argument);
}

TEST_CASE("csv output is deterministic with 12 significant digits") {
  DataTable t;
  t.columns = {"x", "y"};
  t.meta = {"figure_id=0"};
  t.rows = {{1.0 / 3.0, 2.0}, {0.1, 123456789.123}};
  std::ostringstream a, b;
  t.write_csv(a);
  t.write_csv(b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# figure_id=0\n") == 0);
  CHECK(a.str().find("x,y") != std::string::npos);
  CHECK(a.str().find("0.333333333333") != std::string::npos);
  CHECK(a.str().find("123456789.123") != std::string::npos);
}

TEST_CASE("json output carries null for missing points") {
  DataTable t;
  t.columns = {"x"};
  t.rows = {{std::numeric_limits<double>::quiet_NaN()}};
  std::ostringstream os;
  t.write_json(os);
  CHECK(os.str().find("null") != std::string::npos);
}

TEST_CASE("figure 4 keeps the sts chernoff bound constant") {
  const DataTable t = figure_data(4);
  const int qcb_sts = column_index(t, "qcb_sts");
  const int qcb_tss = column_index(t, "qcb_tss");
  for (const auto& row : t.rows) {
    CHECK(row[qcb_sts] == doctest::Approx(0.1).epsilon(1e-9));
  }
  // TSS bound rises towards the maximum 1/2 with noise.
  CHECK(t.rows.front()[qcb_tss] < t.rows.back()[qcb_tss]);
  CHECK(t.rows.back()[qcb_tss] < 0.5);
}

TEST_CASE("figure 1 orderings") {
  const DataTable t = figure_data(1, {}, GridSpec{0.5, 60.0, 40});
  const int perr_coh = column_index(t, "perr_coh");
  const int perr_sq = column_index(t, "perr_sq_vac");
  const int qcb_c = column_index(t, "qcb_sq_th");
  const int lbp_c = column_index(t, "lbp_coh_th");
  const int qcb_l = column_index(t, "qcb_sq_th_lower");
  const int lbp_l = column_index(t, "lbp_coh_th_lower");
  int advantage_central = 0, advantage_lower = 0;
  for (const auto& row : t.rows) {
    CHECK(row[perr_coh] < row[perr_sq]);  // classical wins without noise
    if (std::isfinite(row[qcb_c]) && row[qcb_c] < row[lbp_c]) {
      advantage_central++;
    }
    if (std::isfinite(row[qcb_l]) && row[qcb_l] < row[lbp_l]) {
      advantage_lower++;
    }
  }
  CHECK(advantage_central > 0);        // a quantum-advantage window exists
  CHECK(advantage_lower > advantage_central);  // and grows with noise
}

TEST_CASE("figure 2 advantage region shrinks with symmetry") {
  const DataTable t = figure_data(2, {}, GridSpec{2.0, 60.0, 15});
  const int da = column_index(t, "diff_nth2_a");
  const int db = column_index(t, "diff_nth2_b");
  int neg_a = 0, neg_b = 0;
  for (const auto& row : t.rows) {
    if (std::isfinite(row[da]) && row[da] < 0) neg_a++;
    if (std::isfinite(row[db]) && row[db] < 0) neg_b++;
  }
  CHECK(neg_a > 0);
  CHECK(neg_b < neg_a);
}

TEST_CASE("figure 5 decays with local noise") {
  const DataTable t = figure_data(5);
  const int q1 = column_index(t, "qcb_nth2_c");  // nth2 = 1
  // QCB peaks at the symmetric point nth1 = nth2 = 1 and then decays.
  double peak_n1 = -1, peak = -1;
  for (const auto& row : t.rows) {
    if (row[q1] > peak) {
      peak = row[q1];
      peak_n1 = row[0];
    }
  }
  CHECK(peak_n1 == doctest::Approx(1.0).epsilon(0.26));
  CHECK(t.rows.back()[q1] < peak);
}

TEST_CASE("figure 9 bounds decay with copies") {
  const DataTable t = figure_data(9);
  const int qcb_sts = column_index(t, "qcb_sts");
  const int lbp_tss = column_index(t, "lbp_tss");
  for (size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i][qcb_sts] < t.rows[i - 1][qcb_sts]);
    CHECK(t.rows[i][lbp_tss] < t.rows[i - 1][lbp_tss]);
  }
  // STS reaches 1/8 by 7 copies; TSS not before 20.
  CHECK(t.rows[6][qcb_sts] <= 0.125);
  CHECK(t.rows[5][qcb_sts] > 0.125);
  CHECK(t.rows[18][lbp_tss] > 0.125);
}

TEST_CASE("invalid figure id") {
  CHECK_THROWS_AS(figure_data(0), std::invalid_argument);
  CHECK_THROWS_AS(figure_data(10), std::invalid_argument);
}

TEST_CASE("thresholds") {
  CHECK(run_threshold(0.5, 0.0) == doctest::Approx(3.6).epsilon(0.015));
  CHECK(run_threshold(1.0, 0.0) == doctest::Approx(2.6).epsilon(0.015));
  CHECK(run_threshold(1.0, 0.0) < run_threshold(0.5, 0.0));
  CHECK_THROWS_AS(run_threshold(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("copy counts") {
  CHECK(run_copies(Family::Sts, 0.1, 1.0, 0.125) == 7);
  const int n = run_copies(Family::Tss, 0.1, 1.0, 0.125);
  CHECK((n == 20 || n == 21));
  CHECK(run_copies(Family::Sts, 0.1, 1.0, 0.49) == 1);
  CHECK(run_copies(Family::Tss, 0.1, 1.0, 0.49) == 1);
  CHECK_THROWS_AS(run_copies(Family::Sdts, 0.1, 1.0, 0.125),
                  std::invalid_argument);
}

TEST_CASE("validate: empty box yields an empty passing report") {
  ValidationBox box;
  box.r_max = -1.0;
  box.nth_max = -1.0;
  box.alpha_max = -1.0;
  const ValidationReport r = run_validate(box, 16);
  CHECK(r.points.empty());
  CHECK(r.ok());
}

TEST_CASE("validate at a low cutoff stays within the loose tolerance") {
  ValidationBox box;  // defaults
  const ValidationReport r = run_validate(box, 24);
  CHECK(!r.points.empty());
  CHECK(r.sandwich_violations == 0);
  for (const auto& p : r.points) CHECK_FALSE(p.skipped);
  CHECK(r.max_dev_fidelity < 1e-4);
  CHECK(r.max_dev_affinity < 1e-4);
}
