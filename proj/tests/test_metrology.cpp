#include <cmath>
#include <numbers>

#include "doctest.h"
#include "su11/metrology.hpp"

using namespace su11;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("closed forms") {
  CHECK(qfi_phi_closed(0, 1.2).value == 0);
  CHECK(qfi_phi_closed(0.5, kPi).value == doctest::Approx(3.2885291045020608287).epsilon(1e-14));
  CHECK(qfi_phi_closed(1, 0).value == doctest::Approx(4).epsilon(1e-15));
  CHECK(qfi_theta0_closed(1).value == doctest::Approx(173.03077873851401776).epsilon(1e-14));
  CHECK(qfi_phi_closed(1, 0).step == 0);
}

TEST_CASE("circuit benchmarks") {
  const CircuitBenchmarks z = circuit_benchmarks(0);
  CHECK(z.qfi_theta == 0);
  CHECK(z.snr_limit_ntot == 0);
  CHECK(z.energy == 1);
  const CircuitBenchmarks b = circuit_benchmarks(1);
  CHECK(b.qfi_theta == doctest::Approx(13.154116418008243315).epsilon(1e-14));
  CHECK(b.snr_limit_ntot == doctest::Approx(b.qfi_theta).epsilon(1e-14));
  CHECK(b.qfi_theta == doctest::Approx(b.energy * b.energy - 1).epsilon(1e-14));
}

TEST_CASE("theta = 0 scaling") {
  const Theta0Scaling s5 = theta0_scaling(5);
  CHECK(s5.qfi_exact == doctest::Approx(588463162240898.02442).epsilon(1e-13));
  CHECK(s5.ratio > 0.95);
  CHECK(s5.ratio < 1.05);
  CHECK(theta0_scaling(1e-4).qfi_exact == doctest::Approx(16e-8).epsilon(1e-6));
}

TEST_CASE("numeric QFI agrees with closed forms") {
  const ModelParams p(1, 0, kPi);
  CHECK(qfi_numeric(p, Param::kTheta, QfiMethod::kGaussianFormula, kDefaultCovarianceStep).value ==
        doctest::Approx(173.03077873851401776).epsilon(1e-9));
  CHECK(qfi_numeric(p, Param::kTheta, QfiMethod::kFidelityFD, kDefaultFidelityStep).value ==
        doctest::Approx(173.03077873851401776).epsilon(1e-6));
  const ModelParams q(0.5, 0, kPi);
  CHECK(qfi_numeric(q, Param::kPhi, QfiMethod::kFidelityFD, 1e-3, {Model::kHamiltonian, Backend::kFock})
            .value == doctest::Approx(3.2885291045020608287).epsilon(1e-5));
  CHECK(qfi_numeric(q, Param::kPhi, QfiMethod::kClosedForm, 0).value ==
        doctest::Approx(3.2885291045020608287).epsilon(1e-14));
}

TEST_CASE("circuit QFI is independent of theta") {
  const NumericOptions circ{Model::kCircuit, Backend::kGaussian, std::nullopt};
  for (double th : {0.0, 0.5, 2.0}) {
    const double v = qfi_numeric({1, th, 0}, Param::kTheta, QfiMethod::kGaussianFormula,
                                 kDefaultCovarianceStep, circ)
                         .value;
    CHECK(v == doctest::Approx(13.154116418008243315).epsilon(1e-8));
  }
  CHECK_THROWS_AS(qfi_numeric({1, 0, 0}, Param::kPhi, QfiMethod::kGaussianFormula, 1e-4, circ),
                  std::invalid_argument);
}

TEST_CASE("qfi_numeric argument validation") {
  const ModelParams p(1, 0, kPi);
  CHECK_THROWS_AS(qfi_numeric(p, Param::kPhi, QfiMethod::kFidelityFD, 1e-7), std::invalid_argument);
  CHECK_THROWS_AS(qfi_numeric(p, Param::kPhi, QfiMethod::kFidelityFD, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(qfi_numeric(p, Param::kPhi, QfiMethod::kGaussianFormula, 1e-4,
                              {Model::kHamiltonian, Backend::kFock, std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(qfi_numeric({1, 0.3, 1}, Param::kPhi, QfiMethod::kClosedForm, 0),
                  std::invalid_argument);
  CHECK(qfi_numeric({0, 0.3, 1}, Param::kPhi, QfiMethod::kGaussianFormula, 1e-4).value == 0);
}

TEST_CASE("covariance-route QFI matches at moderate squeezing") {
  const ModelParams p(0.3, 0, kPi);
  const double h = 1e-5;
  const Mat4 sp = state_moments({0.3, h, kPi}).cov.m;
  const Mat4 sm = state_moments({0.3, -h, kPi}).cov.m;
  const Mat4 ds = (sp - sm) / (2 * h);
  const double v = gaussian_qfi_covariance_route(state_moments(p).cov, ds);
  CHECK(v == doctest::Approx(qfi_theta0_closed(0.3).value).epsilon(1e-6));
}

TEST_CASE("signal-to-noise") {
  const SnrReport o = snr_numeric(Observable::kWeightedShift, {0.5, 0, kPi}, Param::kPhi, 1e-4,
                                  {Model::kHamiltonian, Backend::kFock, std::nullopt});
  CHECK(o.signal == doctest::Approx(-1.0518360479677444957).epsilon(1e-7));
  CHECK(o.noise == doctest::Approx(0.58002565838597393061).epsilon(1e-10));
  CHECK(o.snr == doctest::Approx(1.9074312589602450989).epsilon(1e-7));
  CHECK(o.snr <= qfi_phi_closed(0.5, kPi).value + 1e-6);

  const SnrReport n = snr_numeric(Observable::kTotalPhotonN, {0.7, 0, kPi}, Param::kPhi, 1e-4);
  CHECK(n.snr == doctest::Approx(0).epsilon(1e-12));
  CHECK_THROWS_AS(snr_numeric(Observable::kWeightedShift, {0.5, 0, kPi}, Param::kPhi, 1e-4),
                  std::invalid_argument);
}

TEST_CASE("total photon moments from the covariance") {
  const ObservableStats s = total_photon_stats(state_moments({0.4, 0.3, 2.0}).cov);
  const ObservableStats f =
      observable_stats(evolve_vacuum({0.4, 0.3, 2.0}), Observable::kTotalPhotonN);
  CHECK(s.mean == doctest::Approx(f.mean).epsilon(1e-10));
  CHECK(s.variance == doctest::Approx(f.variance).epsilon(1e-10));
}

TEST_CASE("SLD structure") {
  const TruncationPolicy tp{32, 1e-12, 6};
  for (double g : {0.05, 0.4}) CHECK(numerical_rank(sld_operator(g, tp)) <= 2);
  const double r1 = sld_smallg_residual(0.1) / 0.1;
  const double r2 = sld_smallg_residual(0.05) / 0.05;
  const double r3 = sld_smallg_residual(0.025) / 0.025;
  CHECK(r1 > r2);
  CHECK(r2 > r3);
  CHECK_THROWS_AS(sld_smallg_residual(0.2), std::invalid_argument);
}

TEST_CASE("log exponent fit") {
  const std::vector<double> e{1, 2, 4, 8};
  const std::vector<double> q{3, 12, 48, 192};
  CHECK(fit_log_exponent(e, q) == doctest::Approx(2).epsilon(1e-14));
}

TEST_CASE("vacuum readout has zero signal and zero noise") {
  const SnrReport r = snr_numeric(Observable::kTotalPhotonN, {0, 0.2, 1.0}, Param::kTheta, 1e-4);
  CHECK(r.noise == doctest::Approx(0).epsilon(1e-14));
  CHECK(r.snr == 0);
}
