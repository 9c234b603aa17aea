#include "su11/circuit.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "series.hpp"

namespace su11 {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cd kI(0, 1);

// |tr -/+ 2| below this is treated as parabolic.
constexpr double kParabolicTol = 1e-9;
constexpr double kIdentityTol = 1e-10;

Mat2c pauli_x() { return (Mat2c() << 0, 1, 1, 0).finished(); }
Mat2c pauli_y() { return (Mat2c() << 0, -kI, kI, 0).finished(); }
Mat2c pauli_z() { return (Mat2c() << 1, 0, 0, -1).finished(); }

double max_abs(const Mat2c& m) { return m.cwiseAbs().maxCoeff(); }

Mat2c exp_y(double g) {
  return std::cosh(g) * Mat2c::Identity() + std::sinh(g) * pauli_y();
}

Mat2c phase_z(double angle) {
  Mat2c m = Mat2c::Zero();
  m(0, 0) = std::exp(kI * angle);
  m(1, 1) = std::exp(-kI * angle);
  return m;
}

}  // namespace

const char* to_string(ConjugacyClass c) {
  switch (c) {
    case ConjugacyClass::kElliptic:
      return "elliptic";
    case ConjugacyClass::kParabolic:
      return "parabolic";
    case ConjugacyClass::kHyperbolic:
      return "hyperbolic";
    case ConjugacyClass::kMinusIdentity:
      return "minus-identity";
  }
  return "?";
}

Rep2x2 rep2_matrix(const CircuitSpec& spec) {
  return {exp_y(spec.g2) * phase_z(spec.theta / 2) * exp_y(spec.g1)};
}

Mat2c expi(const HamiltonianCoeffs& h) {
  const Mat2c a = -0.5 * h.s1 * pauli_x() - 0.5 * h.s2 * pauli_y() -
                  0.5 * kI * h.s3 * pauli_z();
  const double mu2 = 0.25 * (h.s1 * h.s1 + h.s2 * h.s2 - h.s3 * h.s3);
  const auto [c, s] = detail::cosh_sinhc(mu2);
  return c * Mat2c::Identity() + s * a;
}

HamiltonianLog hamiltonian_log(const Rep2x2& rep) {
  const Mat2c& m = rep.m;
  HamiltonianLog out;
  out.trace = m.trace().real();
  const double t = out.trace;
  const double tau = t / 2;

  const bool minus_identity = max_abs(m + Mat2c::Identity()) < kIdentityTol;
  const bool identity = max_abs(m - Mat2c::Identity()) < kIdentityTol;
  if (minus_identity) {
    out.kind = ConjugacyClass::kMinusIdentity;
  } else if (std::abs(t - 2) < kParabolicTol || std::abs(t + 2) < kParabolicTol) {
    out.kind = ConjugacyClass::kParabolic;
    if (!identity) {
      out.ill_conditioned = true;
      out.warning = "near-parabolic element: |tr -/+ 2| < 1e-9, logarithm is ill-conditioned";
    }
  } else if (std::abs(t) < 2) {
    out.kind = ConjugacyClass::kElliptic;
  } else {
    out.kind = ConjugacyClass::kHyperbolic;
  }

  out.exists = t > -2 || minus_identity;
  if (!out.exists) return out;

  if (minus_identity) {
    out.coeffs = {0, 0, -2 * kPi};
  } else {
    // m = C(mu^2) I + S(mu^2) A with A^2 = mu^2 I and C = tau.
    double mu2;
    if (tau >= 1) {
      const double mu = std::acosh(tau);
      mu2 = mu * mu;
    } else {
      const double w = std::acos(std::max(tau, -1.0));
      mu2 = -w * w;
    }
    const double s = detail::cosh_sinhc(mu2).s;
    const Mat2c a = (m - tau * Mat2c::Identity()) / s;
    const cd alpha = 0.5 * (a(0, 1) + a(1, 0));
    const cd beta = 0.5 * kI * (a(0, 1) - a(1, 0));
    const cd gamma = 0.5 * (a(0, 0) - a(1, 1));
    out.coeffs = {-2 * alpha.real(), -2 * beta.real(), (2.0 * kI * gamma).real()};
  }
  out.residual = max_abs(expi(out.coeffs) - m);
  return out;
}

HamiltonianLog hamiltonian_log(const CircuitSpec& spec) {
  return hamiltonian_log(rep2_matrix(spec));
}

bool trace_condition(const CircuitSpec& spec) {
  return std::cosh(spec.g1 + spec.g2) * std::abs(std::cos(spec.theta / 2)) <= 1;
}

KakFactors kak_decompose(const Mat2c& m) {
  KakFactors k;
  k.alpha = k.beta = -std::arg(m(0, 0));
  const double r = 2 * std::asinh(std::abs(m(0, 1)));
  if (r > 0) {
    const double chi = kPi - std::arg(m(0, 1));
    k.p1 = r * std::cos(chi);
    k.p2 = r * std::sin(chi);
  }
  return k;
}

KakFactors kak_decompose(const HamiltonianCoeffs& h) {
  return kak_decompose(expi(h));
}

Mat2c kak_compose(const KakFactors& k) {
  return expi({0, 0, k.alpha}) * expi({k.p1, k.p2, 0}) * expi({0, 0, k.beta});
}

HamiltonianCoeffs model_coeffs(const ModelParams& params) {
  const cd kappa = params.pair_coupling();
  return {2 * kappa.real(), -2 * kappa.imag(), 2 * params.theta()};
}

double verify_su2_mzi(double theta, double phi) {
  const double r = 1 / std::sqrt(2.0);
  Eigen::Vector2cd vp(r, r * std::exp(kI * phi));
  Eigen::Vector2cd vm(-r * std::exp(-kI * phi), r);
  const Mat2c pp = vp * vp.adjoint();
  const Mat2c pm = vm * vm.adjoint();
  const Mat2c lhs = std::exp(-kI * (theta / 2)) * pp + std::exp(kI * (theta / 2)) * pm;

  const Mat2c a = 0.5 * (std::sin(phi) * pauli_x() - std::cos(phi) * pauli_y());
  const Mat2c rot_p = r * Mat2c::Identity() + kI * r * 2.0 * a;
  const Mat2c rot_m = r * Mat2c::Identity() - kI * r * 2.0 * a;
  const Mat2c rhs = rot_p * phase_z(-theta / 2) * rot_m;

  cd phase = (rhs.adjoint() * lhs).trace();
  phase = std::abs(phase) > 0 ? phase / std::abs(phase) : cd(1);
  return max_abs(lhs - phase * rhs);
}

SymplecticMatrix circuit_symplectic(const CircuitSpec& spec) {
  const Mat4 t1 = pair_symplectic(0, {0, spec.g1}).m;
  const Mat4 t2 = pair_symplectic(-spec.theta / 2, 0).m;
  const Mat4 t3 = pair_symplectic(0, {0, spec.g2}).m;
  return {t1 * t2 * t3};
}

}  // namespace su11
