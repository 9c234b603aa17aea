// su(1,1) circuits in the 2x2 defining representation
//   K1 = -i/2 X, K2 = -i/2 Y, K3 = 1/2 Z,  expi(H) := exp(-i H).
#pragma once

#include <Eigen/Dense>

#include <string>

#include "su11/gaussian.hpp"

namespace su11 {

using Mat2c = Eigen::Matrix2cd;

// V(g1, g2, theta) = e^{g2 G} e^{i theta/2 N} e^{g1 G}, G = a1^dag a2^dag - h.c.
struct CircuitSpec {
  double g1 = 0.0;
  double g2 = 0.0;
  double theta = 0.0;
};

struct Rep2x2 {
  Mat2c m;
};

struct HamiltonianCoeffs {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
};

enum class ConjugacyClass { kElliptic, kParabolic, kHyperbolic, kMinusIdentity };

const char* to_string(ConjugacyClass c);

struct HamiltonianLog {
  bool exists = false;
  HamiltonianCoeffs coeffs;  // meaningful only when exists
  ConjugacyClass kind = ConjugacyClass::kElliptic;
  double trace = 0.0;
  double residual = 0.0;  // max-abs of expi(coeffs) - M when exists
  bool ill_conditioned = false;
  std::string warning;
};

struct KakFactors {
  double alpha = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double beta = 0.0;
};

Rep2x2 rep2_matrix(const CircuitSpec& spec);

// exp(-i (s1 K1 + s2 K2 + s3 K3)).
Mat2c expi(const HamiltonianCoeffs& h);

HamiltonianLog hamiltonian_log(const Rep2x2& rep);
HamiltonianLog hamiltonian_log(const CircuitSpec& spec);

// cosh(g1 + g2) <= 1 / |cos(theta / 2)|, the existence condition on the
// window theta in [pi, 3pi].
bool trace_condition(const CircuitSpec& spec);

// expi(H) = expi(alpha K3) expi(p1 K1 + p2 K2) expi(beta K3).
KakFactors kak_decompose(const HamiltonianCoeffs& h);
KakFactors kak_decompose(const Mat2c& m);
Mat2c kak_compose(const KakFactors& k);

// Coefficients of the model Hamiltonian in the K basis.
HamiltonianCoeffs model_coeffs(const ModelParams& params);

// Max-abs difference, modulo global phase, between the two sides of the
// Mach-Zehnder identity exp(-i H') = e^{i pi/2 A} e^{-i theta Jz} e^{-i pi/2 A}.
double verify_su2_mzi(double theta, double phi);

// Phase-space symplectic of the circuit, composed from layer symplectics.
SymplecticMatrix circuit_symplectic(const CircuitSpec& spec);

}  // namespace su11
