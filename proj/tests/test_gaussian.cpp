#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "su11/fock.hpp"
#include "su11/gaussian.hpp"

using namespace su11;

namespace {

constexpr double kPi = std::numbers::pi;

// Heisenberg evolution R -> e^{Delta Hq} R of the quadratic form Hq of
// theta N + kappa a1^dag a2^dag + h.c.; the symplectic is its transpose.
Mat4 expm_oracle(double theta, std::complex<double> kappa) {
  const double re = kappa.real(), im = kappa.imag();
  Mat4 h = theta * Mat4::Identity();
  h(0, 2) = h(2, 0) = re;
  h(1, 3) = h(3, 1) = -re;
  h(0, 3) = h(3, 0) = h(1, 2) = h(2, 1) = im;
  const Mat4 m = -h * symplectic_form();
  return m.exp();
}

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("model params validate and reduce phi") {
  CHECK_THROWS_AS(ModelParams(-0.1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(1, NAN, 0), std::invalid_argument);
  const ModelParams p(1, 0, 2 * kPi + 0.5);
  CHECK(p.phi() == doctest::Approx(0.5).epsilon(1e-15));
  const ModelParams q(1, 0, -0.5);
  CHECK(q.phi() == doctest::Approx(2 * kPi - 0.5));
  CHECK(ModelParams(1, 0, kPi).lambda() == doctest::Approx(2));
  CHECK(ModelParams(1, 0, kPi).xi() == doctest::Approx(0).epsilon(1e-15));
}

TEST_CASE("domain classification") {
  CHECK(classify_domain({1, 1, kPi}) == Domain::kDomain2);
  CHECK(classify_domain({1, 2, kPi}) == Domain::kBoundary);
  CHECK(classify_domain({1, 3, kPi}) == Domain::kDomain1);
  CHECK(classify_domain({1, -3, kPi}) == Domain::kDomain1);
  CHECK(classify_domain({0, 0, 1}) == Domain::kBoundary);
}

TEST_CASE("closed-form symplectic matches matrix exponential of the generator") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ug(0, 1.5), ut(-4, 4), up(0, 2 * kPi);
  for (int k = 0; k < 60; ++k) {
    const ModelParams p(ug(rng), ut(rng), up(rng));
    const Mat4 t = symplectic_transform(p).m;
    CHECK(max_abs(t - expm_oracle(p.theta(), p.pair_coupling())) < 1e-12 * std::max(1.0, t.norm()));
  }
  // Points on and next to the boundary use the series.
  for (double d : {0.0, 1e-10, -1e-10, 1e-7, -1e-7}) {
    const ModelParams p(1, 2 + d, kPi);
    CHECK(max_abs(symplectic_transform(p).m - expm_oracle(p.theta(), p.pair_coupling())) < 1e-12);
  }
}

TEST_CASE("free evolution and theta = 0 structure") {
  const double t = 0.7;
  const Mat4 m = symplectic_transform({0, t, 1.3}).m;
  Eigen::Matrix2d rot;
  rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  CHECK((m.topLeftCorner<2, 2>() - rot).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((m.bottomRightCorner<2, 2>() - rot).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(m.topRightCorner<2, 2>().cwiseAbs().maxCoeff() == 0);

  const double g = 0.8;
  const Mat4 s = symplectic_transform({g, 0, kPi}).m;
  Mat4 expect = std::cosh(2 * g) * Mat4::Identity();
  expect(0, 3) = expect(1, 2) = expect(2, 1) = expect(3, 0) = -std::sinh(2 * g);
  CHECK(max_abs(s - expect) < 1e-14);
}

TEST_CASE("symplectic invariants") {
  const ModelParams p(1, 3, kPi);
  CHECK(symplectic_defect(symplectic_transform(p).m) < 1e-12);
  CHECK(symplectic_transform(p).m.determinant() == doctest::Approx(1).epsilon(1e-10));
}

TEST_CASE("composition order of pair symplectics") {
  // U = U_b U_a has symplectic T_a T_b; checked against the Fock covariance.
  const double ta = 0.3, tb = -0.5;
  const std::complex<double> ka(0.2, -0.4), kb(0, 0.7);
  const Mat4 t = pair_symplectic(ta, ka).m * pair_symplectic(tb, kb).m;
  const FockState psi = apply(PairGenerator{2 * tb, 0, kb}, apply(PairGenerator{2 * ta, 0, ka}, vacuum(64)));
  CHECK((fock_covariance(psi).m - 0.5 * t.transpose() * t).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(max_abs(pair_symplectic(ta, ka).m - expm_oracle(ta, ka)) < 1e-14);
}

TEST_CASE("state moments") {
  const StateMoments vac = state_moments({0, 0.4, 2});
  CHECK(max_abs(vac.cov.m - 0.5 * Mat4::Identity()) < 1e-15);
  CHECK(vac.energy == doctest::Approx(1));
  CHECK(vac.reduced_nu == doctest::Approx(0.5));

  const StateMoments m = state_moments({0.5, 0, kPi});
  CHECK(m.energy == doctest::Approx(3.7621956910836314596).epsilon(1e-14));
  CHECK(m.reduced_nu == doctest::Approx(1.8810978455418157298).epsilon(1e-14));
  // B = -sinh(4g) X at theta = 0, phi = pi.
  CHECK(m.cov.a()(0, 0) == doctest::Approx(std::cosh(2.0)));
  CHECK(m.cov.b()(0, 1) == doctest::Approx(-std::sinh(2.0)));
  CHECK(m.cov.b()(0, 0) == doctest::Approx(0).epsilon(1e-15));
}

TEST_CASE("energy closed forms agree with the trace and across the boundary") {
  for (double th : {0.0, 0.5, 1.9, 2.1, 3.0, 7.5}) {
    for (double phi : {kPi, 1.0, 4.0}) {
      const ModelParams p(1, th, phi);
      CHECK(energy_closed_form(p) == doctest::Approx(state_moments(p).energy).epsilon(1e-12));
    }
  }
  for (double g : {0.3, 1.0, 1.5}) {
    const double b = 2 * g;
    const double lo = energy_closed_form({g, b - 1e-6, kPi});
    const double hi = energy_closed_form({g, b + 1e-6, kPi});
    const double at = energy_closed_form({g, b, kPi});
    CHECK(std::abs(0.5 * (lo + hi) - at) < 1e-8);
    CHECK(std::abs(state_moments({g, b, kPi}).energy - at) < 1e-12 * at);
  }
}

TEST_CASE("tmsv parameters reproduce the covariance") {
  const SqueezingParams s = tmsv_params(ModelParams(1, 0, kPi));
  CHECK(s.f == doctest::Approx(2).epsilon(1e-14));
  CHECK(s.u == doctest::Approx(-kPi / 2).epsilon(1e-14));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ug(0, 1.2), ut(-3, 3), up(0, 2 * kPi);
  for (int k = 0; k < 50; ++k) {
    const ModelParams p(ug(rng), ut(rng), up(rng));
    const CovarianceMatrix c = state_moments(p).cov;
    CHECK(max_abs(tmsv_covariance(tmsv_params(p)).m - c.m) < 1e-9);
    const double u = tmsv_params(p).u;
    CHECK(u > -kPi);
    CHECK(u <= kPi);
  }
}

TEST_CASE("tmsv parameter limits") {
  // lambda -> theta+: f -> acosh(1 + 2 lambda^2) / 2, phase -> pi.
  const double theta = 1.0;
  const SqueezingParams near = tmsv_params(ModelParams((theta + 1e-9) / 2, theta, kPi));
  CHECK(near.f == doctest::Approx(0.5 * std::acosh(1 + 2 * theta * theta)).epsilon(1e-7));
  // Large lambda: the model state approaches the asymptotic TMSV.
  const SqueezingParams far = tmsv_params(ModelParams(20.0 / 2, theta, kPi));
  const SqueezingParams approx = large_lambda_tmsv(theta, 20.0);
  CHECK(far.f == doctest::Approx(approx.f).epsilon(1e-3));
  CHECK(std::abs(std::remainder(far.u - approx.u, 2 * kPi)) < 1e-2);
}

TEST_CASE("symplectic eigenvalues") {
  auto [a, b] = symplectic_eigenvalues({0.5 * Mat4::Identity()});
  CHECK(a == doctest::Approx(0.5));
  CHECK(b == doctest::Approx(0.5));

  const StateMoments m = state_moments({0.5, 0, kPi});
  const auto nu = symplectic_spectrum(m.cov.reduced());
  REQUIRE(nu.size() == 1);
  CHECK(nu[0] == doctest::Approx(1.8810978455418157298).epsilon(1e-12));

  // Thermal-like mixed state.
  Mat4 mixed = Mat4::Identity();
  mixed.topLeftCorner<2, 2>() *= 1.5;
  auto [n1, n2] = symplectic_eigenvalues({mixed});
  CHECK(n1 == doctest::Approx(1.5));
  CHECK(n2 == doctest::Approx(1.0));

  Mat4 bad = 0.5 * Mat4::Identity();
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(symplectic_eigenvalues({bad}), std::invalid_argument);
  CHECK_THROWS_AS(symplectic_eigenvalues({-Mat4::Identity()}), std::invalid_argument);
  CHECK_THROWS_AS(symplectic_spectrum(Eigen::MatrixXd::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("gaussian fidelity") {
  const ModelParams p(0.7, 0.3, 2.0);
  const ModelParams q(0.7, 0.31, 2.0);
  const CovarianceMatrix c1 = state_moments(p).cov;
  const CovarianceMatrix c2 = state_moments(q).cov;
  CHECK(gaussian_fidelity(c1, c1) == doctest::Approx(1).epsilon(1e-12));
  const double f = gaussian_fidelity(c1, c2);
  const double inf = gaussian_infidelity(symplectic_transform(p), symplectic_transform(q));
  CHECK(1 - f == doctest::Approx(inf).epsilon(1e-6));
  // Against the Fock overlap.
  const FockState a = evolve_vacuum(p);
  const FockState b = evolve_vacuum(q, TruncationPolicy{a.nmax(), 1e-12, 0});
  CHECK(inf == doctest::Approx(infidelity(a, b)).epsilon(1e-7));
  CHECK(gaussian_infidelity(symplectic_transform(p), symplectic_transform(p)) < 1e-14);
}

TEST_CASE("tmsv overlap closed form") {
  const SqueezingParams a{1.0, 0.0}, b{1.3, 0.4};
  const TruncationPolicy tp{64, 1e-20, 6};
  const FockState sa = tmsv_state(a, tp);
  const FockState sb = tmsv_state(b, tp);
  CHECK(tmsv_overlap_abs(a, b) == doctest::Approx(std::abs(overlap(sa, sb))).epsilon(1e-13));
  CHECK(tmsv_distance(a, b) == doctest::Approx(phase_aligned_distance(sa, sb)).epsilon(1e-12));
  CHECK(tmsv_overlap_abs({0, 0}, a) == doctest::Approx(1 / std::cosh(1.0)));
  CHECK(tmsv_distance(a, a) == 0);
}
