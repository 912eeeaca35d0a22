#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gqr/symplectic.hpp"

using namespace gqr;

TEST_CASE("symplectic form blocks") {
  const Eigen::MatrixXd om = symplectic_form(2);
  CHECK(om.rows() == 4);
  CHECK(om(0, 1) == 1.0);
  CHECK(om(1, 0) == -1.0);
  CHECK(om(2, 3) == 1.0);
  CHECK((om + om.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("euler_traceless properties") {
  const SympTransform s = euler_traceless(0.3, 1.7);
  CHECK(is_symplectic(s.mat, 1e-12));
  CHECK(s.traceless);
  CHECK(std::abs(s.mat.trace()) < 1e-12);
  CHECK(s.euler.has_value());
  CHECK(s.euler->xi == doctest::Approx(1.7));
  // xi = 1 gives the pi/2 rotation regardless of theta.
  const SympTransform p = euler_traceless(1.234, 1.0);
  const SympTransform q = phase_shift(M_PI / 2.0);
  CHECK((p.mat - q.mat).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(euler_traceless(0.1, -2.0), std::domain_error);
}

TEST_CASE("phase shift is a rotation") {
  const SympTransform s = phase_shift(0.4);
  CHECK(s.mat(0, 0) == doctest::Approx(std::cos(0.4)));
  CHECK(s.mat(0, 1) == doctest::Approx(std::sin(0.4)));
  CHECK(is_symplectic(s.mat));
  CHECK_FALSE(s.traceless);
}

TEST_CASE("two mode squeeze is symplectic and hyperbolic") {
  const Eigen::Matrix4d s = two_mode_squeeze(0.6);
  CHECK(is_symplectic(s, 1e-12));
  CHECK(s(0, 0) == doctest::Approx(std::cosh(0.6)));
  CHECK(s(0, 2) == doctest::Approx(std::sinh(0.6)));
  CHECK(s(1, 3) == doctest::Approx(-std::sinh(0.6)));
  // S(r) S(-r) = identity.
  CHECK((two_mode_squeeze(0.6) * two_mode_squeeze(-0.6) -
         Eigen::Matrix4d::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("apply_local conjugates one mode") {
  const GaussianState s = make_sts(0.5, 1, 0);
  const GaussianState rot = apply_local(s, phase_shift(M_PI / 2), Mode::A);
  // pi/2 on mode A maps the cross block diag(c,-c) to antidiagonal.
  CHECK(rot.cov(0, 2) == doctest::Approx(0.0));
  CHECK(std::abs(rot.cov(0, 3)) ==
        doctest::Approx(std::abs(s.cov(0, 2))).epsilon(1e-12));
  CHECK(rot.cov(0, 0) == doctest::Approx(s.cov(1, 1)).epsilon(1e-12));
  // Mode B leaves the A block alone.
  const GaussianState rb = apply_local(s, phase_shift(0.3), Mode::B);
  CHECK((rb.cov.topLeftCorner<2, 2>() - s.cov.topLeftCorner<2, 2>())
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK(is_physical(rot));
  CHECK(is_physical(rb));
}

TEST_CASE("apply_local transforms displacement") {
  GaussianState s = make_coherent_thermal(1.0, 0, 0);  // disp (2, 0, 0, 0)
  const GaussianState rot = apply_local(s, phase_shift(M_PI / 2));
  CHECK(rot.disp(0) == doctest::Approx(0.0));
  CHECK(std::abs(rot.disp(1)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("williamson reconstructs the covariance") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const GaussianState s =
        make_sts(ur(rng), 3 * ur(rng), 3 * ur(rng));
    const GaussianState t =
        apply_local(s, euler_traceless(M_PI * ur(rng), 0.5 + ur(rng)));
    const WilliamsonResult w = williamson(t);
    CHECK(is_symplectic(w.s.mat, 1e-8));
    Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
    d.diagonal() << w.spectrum(0), w.spectrum(0), w.spectrum(1),
        w.spectrum(1);
    const Eigen::Matrix4d rec = w.s.mat * d * w.s.mat.transpose();
    CHECK((rec - t.cov).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(w.spectrum(0) >= w.spectrum(1));
    CHECK(w.spectrum(1) >= 1.0 - 1e-9);
  }
}

TEST_CASE("williamson spectrum matches symplectic_spectrum") {
  const GaussianState s = make_sts(0.7, 2, 0.5);
  const WilliamsonResult w = williamson(s);
  const Eigen::Vector2d nu = symplectic_spectrum(s);
  CHECK(w.spectrum(0) == doctest::Approx(nu(0)).epsilon(1e-9));
  CHECK(w.spectrum(1) == doctest::Approx(nu(1)).epsilon(1e-9));
}

TEST_CASE("apply_local rejects non-symplectic input") {
  SympTransform bogus;
  bogus.mat = Eigen::Matrix2d::Identity() * 2.0;
  CHECK_THROWS_AS(apply_local(make_sts(0.2, 0, 0), bogus),
                  std::invalid_argument);
}
