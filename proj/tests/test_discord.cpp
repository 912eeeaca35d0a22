#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gqr/discord.hpp"
#include "gqr/metrics.hpp"

using namespace gqr;

namespace {
GaussianState shifted(const GaussianState& s) {
  return apply_local(s, phase_shift(M_PI / 2.0));
}
}  // namespace

TEST_CASE("thermal state has zero discord of response") {
  const GaussianState th = make_coherent_thermal(0.0, 1.0, 0.5);
  const DiscordResult h = discord_response(th, DiscordMetric::Hellinger);
  const DiscordResult b = discord_response(th, DiscordMetric::Bures);
  CHECK(h.value == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(b.value == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(is_classical_quantum(th));
  const PerrMaxBounds pb = perr_max_bounds(th);
  CHECK(pb.lower == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(pb.upper == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("sts discords match the pi/2 shift values") {
  // Frozen: STS r=0.5, n1=1, n2=0; the pi/2 shift is the minimizer.
  const GaussianState s = make_sts(0.5, 1, 0);
  const DiscordResult h = discord_response(s, DiscordMetric::Hellinger);
  CHECK(h.value == doctest::Approx(0.580025658385974).epsilon(1e-8));
  CHECK(h.argmin_xi == doctest::Approx(1.0).epsilon(1e-6));
  const DiscordResult b = discord_response(s, DiscordMetric::Bures);
  CHECK(b.value == doctest::Approx(0.375164883835010).epsilon(1e-8));
  CHECK(b.argmin_xi == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(is_classical_quantum(s));
}

TEST_CASE("hellinger discord reproduces the chernoff worst case") {
  // QCB^max = (1 - GD_Hell)/2 must equal the pi/2 Chernoff bound for
  // standard-form states (the shift is the worst traceless coding).
  for (const auto& s : {make_sts(0.5, 1, 0), make_sts(0.8, 2, 0.5),
                        make_tss(1.0, 0.5, 0.5)}) {
    const DiscordResult h = discord_response(s, DiscordMetric::Hellinger);
    CHECK(h.perr_max_upper ==
          doctest::Approx(qcb(s, shifted(s)).qcb).epsilon(1e-7));
  }
}

TEST_CASE("bures discord reproduces the fidelity worst case") {
  const GaussianState s = make_sts(0.5, 1, 0);
  const DiscordResult b = discord_response(s, DiscordMetric::Bures);
  const double f = uhlmann_fidelity(s, shifted(s));
  // GD_Bu = 1 - sqrt(F); lower bound from Eq. (22).
  CHECK(b.value == doctest::Approx(1.0 - std::sqrt(f)).epsilon(1e-8));
  const double expect_lower =
      0.5 * (1.0 - std::sqrt(1.0 - std::pow(1.0 - b.value, 2)));
  CHECK(b.perr_max_lower == doctest::Approx(expect_lower).epsilon(1e-10));
  CHECK(expect_lower ==
        doctest::Approx(0.5 * (1.0 - std::sqrt(1.0 - f))).epsilon(1e-8));
}

TEST_CASE("perr_max_bounds ordering") {
  for (const auto& s : {make_sts(0.5, 1, 0), make_tss(0.3, 1, 1),
                        make_sts(1.0, 0, 0)}) {
    const PerrMaxBounds pb = perr_max_bounds(s);
    CHECK(pb.lower <= pb.upper + 1e-10);
    CHECK(pb.lower >= 0.0);
    CHECK(pb.upper <= 0.5 + 1e-12);
  }
}

TEST_CASE("symmetric sts hellinger plateau") {
  // n_s = 1 symmetric STS: QCB = 0.1 independent of noise, so the
  // Hellinger discord is 0.8 and the worst-case upper bound is 0.1.
  const double r = std::asinh(1.0);
  for (double nth : {0.0, 0.5, 2.0}) {
    const DiscordResult h =
        discord_response(make_sts(r, nth, nth), DiscordMetric::Hellinger);
    CHECK(h.value == doctest::Approx(0.8).epsilon(1e-7));
    CHECK(h.perr_max_upper == doctest::Approx(0.1).epsilon(1e-7));
  }
}

TEST_CASE("tmsv discord grows towards one with squeezing") {
  const double v1 =
      discord_response(make_sts(0.5, 0, 0), DiscordMetric::Hellinger).value;
  const double v2 =
      discord_response(make_sts(1.5, 0, 0), DiscordMetric::Hellinger).value;
  const double v3 =
      discord_response(make_sts(2.5, 0, 0), DiscordMetric::Hellinger).value;
  CHECK(v1 < v2);
  CHECK(v2 < v3);
  CHECK(v3 > 0.98);
}

TEST_CASE("pi/2 extremality on standard-form states") {
  for (double r : {0.25, 0.5, 1.0}) {
    for (double n1 : {0.0, 1.0, 4.0}) {
      const ExtremalReport e = verify_pi_half_extremal(make_sts(r, n1, 0.5));
      CHECK(e.is_extremal);
      CHECK(e.xi == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("perr_from_trace_discord") {
  CHECK(perr_from_trace_discord(0.0) == doctest::Approx(0.5));
  CHECK(perr_from_trace_discord(1.0) == doctest::Approx(0.0));
  CHECK(perr_from_trace_discord(0.25) == doctest::Approx(0.25));
}

TEST_CASE("discord rejects unphysical states") {
  GaussianState bad = make_sts(0.5, 0, 0);
  bad.cov *= 0.4;
  CHECK_THROWS(discord_response(bad, DiscordMetric::Hellinger));
}
