#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "su11/circuit.hpp"
#include "su11/fock.hpp"

using namespace su11;

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0, 1);

Mat2c expi_oracle(const HamiltonianCoeffs& h) {
  Mat2c k1, k2, k3;
  k1 << 0, -0.5 * kI, -0.5 * kI, 0;
  k2 << 0, -0.5, 0.5, 0;
  k3 << 0.5, 0, 0, -0.5;
  const Mat2c a = -kI * (h.s1 * k1 + h.s2 * k2 + h.s3 * k3);
  return a.exp();
}

double dist(const Mat2c& a, const Mat2c& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("expi matches the matrix exponential") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 50; ++k) {
    const HamiltonianCoeffs h{u(rng), u(rng), u(rng)};
    CHECK(dist(expi(h), expi_oracle(h)) < 1e-12 * std::max(1.0, expi(h).norm()));
  }
  // Parabolic generator: s1^2 + s2^2 = s3^2.
  const HamiltonianCoeffs p{0.6, 0.8, 1.0};
  CHECK(dist(expi(p), expi_oracle(p)) < 1e-14);
  CHECK(std::abs(expi(p).determinant() - 1.0) < 1e-14);
}

TEST_CASE("2x2 circuit representation") {
  const Mat2c m = rep2_matrix({0.3, 0.5, 1.2}).m;
  CHECK(std::abs(m.determinant() - 1.0) < 1e-14);
  // SU(1,1): M^dag Z M = Z.
  Mat2c z;
  z << 1, 0, 0, -1;
  CHECK(dist(m.adjoint() * z * m, z) < 1e-14);
  CHECK(dist(rep2_matrix({-0.4, 0.4, 0}).m, Mat2c::Identity()) < 1e-15);
}

TEST_CASE("hamiltonian log round trip and classes") {
  HamiltonianLog e = hamiltonian_log(CircuitSpec{0.2, 0.3, 1.0});
  CHECK(e.exists);
  CHECK(e.kind == ConjugacyClass::kElliptic);
  CHECK(e.residual < 1e-12);
  CHECK(dist(expi(e.coeffs), rep2_matrix({0.2, 0.3, 1.0}).m) < 1e-12);

  HamiltonianLog h = hamiltonian_log(CircuitSpec{0.5, 0.5, 0.2});
  CHECK(h.exists);
  CHECK(h.kind == ConjugacyClass::kHyperbolic);
  CHECK(h.residual < 1e-12);

  // Trace below -2: no real logarithm.
  HamiltonianLog n = hamiltonian_log(CircuitSpec{1.0, 1.0, 2 * kPi - 0.2});
  CHECK(n.trace < -2);
  CHECK_FALSE(n.exists);
  CHECK_FALSE(trace_condition({1.0, 1.0, 2 * kPi - 0.2}));

  // -I sits in the window and has a logarithm.
  HamiltonianLog mi = hamiltonian_log(CircuitSpec{0, 0, 2 * kPi});
  CHECK(mi.exists);
  CHECK(mi.kind == ConjugacyClass::kMinusIdentity);
  CHECK(dist(expi(mi.coeffs), -Mat2c::Identity()) < 1e-14);

  HamiltonianLog id = hamiltonian_log(CircuitSpec{0, 0, 0});
  CHECK(id.exists);
  CHECK(id.kind == ConjugacyClass::kParabolic);
  CHECK(id.warning.empty());
}

TEST_CASE("KAK factors compose back") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 40; ++k) {
    const HamiltonianCoeffs h{u(rng), u(rng), u(rng)};
    const KakFactors f = kak_decompose(h);
    CHECK(dist(kak_compose(f), expi(h)) < 1e-11 * std::max(1.0, expi(h).norm()));
    CHECK(f.alpha == doctest::Approx(f.beta));
  }
}

TEST_CASE("KAK Fock state matches direct evolution") {
  const ModelParams p(0.6, 0.7, 2.0);
  const KakFactors f = kak_decompose(model_coeffs(p));
  const TruncationPolicy tight{64, 1e-20, 6};
  CHECK(phase_aligned_distance(kak_state(f, tight), evolve_vacuum(p, tight)) < 1e-9);
}

TEST_CASE("model coefficients generate the model symplectic") {
  // Free-field check: theta N = 2 theta K3.
  CHECK(model_coeffs({0, 0.4, 1}).s3 == doctest::Approx(0.8));
  CHECK(model_coeffs({0, 0.4, 1}).s1 == 0);
}

TEST_CASE("Mach-Zehnder identity") {
  CHECK(verify_su2_mzi(0.3, 1.1) < 1e-12);
  CHECK(verify_su2_mzi(0, 0) < 1e-12);
}

TEST_CASE("circuit symplectic is symplectic and matches layers") {
  const Mat4 t = circuit_symplectic({0.4, -0.4, 0}).m;
  CHECK((t - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(symplectic_defect(circuit_symplectic({0.4, 0.9, 2.5}).m) < 1e-12);
}
