#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gqr/gaussian_state.hpp"

using namespace gqr;

TEST_CASE("sts covariance entries") {
  const double r = 0.5, n1 = 1.0, n2 = 0.0;
  const GaussianState s = make_sts(r, n1, n2);
  const double ch = std::cosh(r), sh = std::sinh(r);
  CHECK(s.cov(0, 0) ==
        doctest::Approx(std::cosh(2 * r) + 2 * n1 * ch * ch + 2 * n2 * sh * sh)
            .epsilon(1e-12));
  CHECK(s.cov(2, 2) ==
        doctest::Approx(std::cosh(2 * r) + 2 * n2 * ch * ch + 2 * n1 * sh * sh)
            .epsilon(1e-12));
  CHECK(s.cov(0, 2) ==
        doctest::Approx((1 + n1 + n2) * std::sinh(2 * r)).epsilon(1e-12));
  CHECK(s.cov(1, 3) == doctest::Approx(-s.cov(0, 2)).epsilon(1e-12));
  CHECK(s.cov(1, 1) == doctest::Approx(s.cov(0, 0)).epsilon(1e-12));
  CHECK(s.disp.norm() == 0.0);
  CHECK(is_physical(s));
}

TEST_CASE("tss covariance entries") {
  const double ns = 0.1, n1 = 1.0, n2 = 0.5;
  const GaussianState s = make_tss(ns, n1, n2);
  CHECK(s.cov(0, 0) == doctest::Approx(2 * ns + 1 + 2 * n1).epsilon(1e-12));
  CHECK(s.cov(2, 2) == doctest::Approx(2 * ns + 1 + 2 * n2).epsilon(1e-12));
  CHECK(s.cov(0, 2) ==
        doctest::Approx(2 * std::sqrt(ns * (ns + 1))).epsilon(1e-12));
  CHECK(is_physical(s));
}

TEST_CASE("sts and tss coincide for pure squeezed vacuum") {
  const double r = 0.7;
  const GaussianState a = make_sts(r, 0, 0);
  const GaussianState b = make_tss(std::sinh(r) * std::sinh(r), 0, 0);
  CHECK((a.cov - b.cov).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("coherent thermal state") {
  const std::complex<double> alpha{0.8, -0.4};
  const GaussianState s = make_coherent_thermal(alpha, 0.5, 0.2);
  CHECK(s.cov(0, 0) == doctest::Approx(2.0).epsilon(1e-12));  // 1 + 2*0.5
  CHECK(s.cov(2, 2) == doctest::Approx(1.4).epsilon(1e-12));
  CHECK(s.cov(0, 2) == 0.0);
  CHECK(s.disp(0) == doctest::Approx(2 * alpha.real()).epsilon(1e-12));
  CHECK(s.disp(1) == doctest::Approx(2 * alpha.imag()).epsilon(1e-12));
  CHECK(s.disp(2) == 0.0);
}

TEST_CASE("convention conversion roundtrip") {
  const GaussianState one = make_sts(0.5, 1, 0);
  const GaussianState half = one.to(Convention::VacuumHalf);
  CHECK(half.cov(0, 0) == doctest::Approx(one.cov(0, 0) / 2).epsilon(1e-14));
  const GaussianState back = half.to(Convention::VacuumOne);
  CHECK((back.cov - one.cov).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((back.disp - one.disp).cwiseAbs().maxCoeff() < 1e-14);

  const GaussianState coh = make_coherent_thermal(1.0, 0, 0);
  CHECK(coh.to(Convention::VacuumHalf).disp(0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("total photons") {
  // STS: 2 sinh^2(r)(1 + n1 + n2) + n1 + n2.
  const double r = 0.5, n1 = 1.0, n2 = 0.25;
  const double sh2 = std::sinh(r) * std::sinh(r);
  CHECK(total_photons(make_sts(r, n1, n2)) ==
        doctest::Approx(2 * sh2 * (1 + n1 + n2) + n1 + n2).epsilon(1e-12));
  // Coherent state: |alpha|^2.
  CHECK(total_photons(make_coherent_thermal({0.6, 0.8}, 0, 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Vacuum: 0.
  CHECK(total_photons(make_sts(0, 0, 0)) == doctest::Approx(0.0));
}

TEST_CASE("purity equals inverse product of symplectic eigenvalues") {
  const GaussianState s = make_tss(0.3, 0.7, 0.1);
  const Eigen::Vector2d nu = symplectic_spectrum(s);
  CHECK(purity(s) == doctest::Approx(1.0 / (nu(0) * nu(1))).epsilon(1e-10));
  CHECK(purity(make_sts(0.8, 0, 0)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("symplectic spectrum of sts") {
  // Thermal state: nu_i = 1 + 2 n_i; squeezing preserves nu for n1 = n2.
  const Eigen::Vector2d nu = symplectic_spectrum(make_sts(0.5, 1, 1));
  CHECK(nu(0) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(nu(1) == doctest::Approx(3.0).epsilon(1e-10));
  const Eigen::Vector2d nu2 = symplectic_spectrum(make_sts(0.7, 2, 0.5));
  CHECK(nu2(0) == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(nu2(1) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("physicality detects bad states") {
  GaussianState s = make_sts(0.5, 0, 0);
  s.cov *= 0.5;  // below the vacuum floor
  CHECK_FALSE(is_physical(s));
  GaussianState asym = make_sts(0.5, 0, 0);
  asym.cov(0, 1) = 0.3;  // not symmetric
  CHECK_THROWS_AS(is_physical(asym), std::invalid_argument);
}

TEST_CASE("stsds composes channel and squeezings") {
  // r' = 0, alpha = 0 reduces to STS.
  const GaussianState a = make_stsds(0.5, 1, 0.5, 0, 0);
  const GaussianState b = make_sts(0.5, 1, 0.5);
  CHECK((a.cov - b.cov).cwiseAbs().maxCoeff() < 1e-12);
  // r = 0, noise after squeeze: TSS with ns = sinh^2(r').
  const GaussianState c = make_stsds(0, 0.7, 0.7, 0.4, 0);
  const GaussianState d = make_tss(std::sinh(0.4) * std::sinh(0.4), 0.7, 0.7);
  CHECK((c.cov - d.cov).cwiseAbs().maxCoeff() < 1e-12);
  // Total photon formula of the STSDS family. The channel noise is injected
  // between the two squeezers, so it is amplified by the outer squeezing r
  // only; the inner/outer squeezings compose for the pure part.
  const GaussianState e = make_stsds(0.3, 0.5, 0.2, 0.2, {0.4, 0.1});
  const double alpha2 = 0.4 * 0.4 + 0.1 * 0.1;
  const double expected = (0.5 + 0.2) * std::cosh(2 * 0.3) +
                          (1 + alpha2) * std::cosh(2 * (0.3 + 0.2)) - 1;
  CHECK(total_photons(e) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(is_physical(e));
}

TEST_CASE("make_state dispatch") {
  StateParams p;
  p.r = 0.5;
  p.n_th1 = 1.0;
  const GaussianState via = make_state(Family::Sts, p);
  const GaussianState direct = make_sts(0.5, 1.0, 0.0);
  CHECK((via.cov - direct.cov).cwiseAbs().maxCoeff() < 1e-15);
  // Tss dispatch uses n_s = sinh^2(r).
  const GaussianState t = make_state(Family::Tss, p);
  const GaussianState td = make_tss(p.squeezed_photons(), 1.0, 0.0);
  CHECK((t.cov - td.cov).cwiseAbs().maxCoeff() < 1e-12);
}
