// Truncated Fock-space oracle on the pair sector span{|n, n>}.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

#include "su11/circuit.hpp"
#include "su11/gaussian.hpp"

namespace su11 {

struct TruncationPolicy {
  int initial_nmax = 32;
  double tail_tolerance = 1e-12;
  int max_doublings = 6;

  // max(32, ceil(8 (1 + 2 g max(1, sin(phi/2)) e)))
  static TruncationPolicy for_model(const ModelParams& params);
  static TruncationPolicy for_squeezing(double f);
  void validate() const;
};

class TruncationError : public std::runtime_error {
 public:
  TruncationError(int nmax, double tail);
  int nmax() const { return nmax_; }
  double tail() const { return tail_; }

 private:
  int nmax_;
  double tail_;
};

struct FockState {
  Eigen::VectorXcd amplitudes;  // c_n, n = 0..nmax

  int nmax() const { return static_cast<int>(amplitudes.size()) - 1; }
  double norm() const { return amplitudes.norm(); }
  // Mass in the last five levels.
  double tail_mass() const;
};

enum class Observable { kWeightedShift, kTotalPhotonN };

const char* to_string(Observable o);

struct ObservableStats {
  double mean = 0.0;
  double variance = 0.0;
};

// Pair-sector quadratic generator
//   H = slope * n + offset + kappa (n + 1) |n+1><n| + h.c.
struct PairGenerator {
  double slope = 0.0;
  double offset = 0.0;
  std::complex<double> kappa = 0.0;
};

FockState vacuum(int nmax);

// exp(-i H) psi at the truncation of psi.
FockState apply(const PairGenerator& h, const FockState& psi);

FockState evolve_vacuum(const ModelParams& params);
FockState evolve_vacuum(const ModelParams& params, const TruncationPolicy& trunc);

FockState tmsv_state(double f, double u, const TruncationPolicy& trunc);
FockState tmsv_state(const SqueezingParams& sq, const TruncationPolicy& trunc);

FockState circuit_state(const CircuitSpec& spec);
FockState circuit_state(const CircuitSpec& spec, const TruncationPolicy& trunc);

// Layers expi(beta K3), expi(p1 K1 + p2 K2), expi(alpha K3) applied to vacuum.
FockState kak_state(const KakFactors& k, const TruncationPolicy& trunc);

ObservableStats observable_stats(const FockState& psi, Observable obs);
// <O^2> from ||O psi||^2, for cross-checking the decomposition.
double weighted_shift_second_moment_direct(const FockState& psi);

std::complex<double> overlap(const FockState& a, const FockState& b);
// || b - <a|b> a ||^2 for normalized states, i.e. 1 - |<a|b>|^2.
double infidelity(const FockState& a, const FockState& b);
double phase_aligned_distance(const FockState& a, const FockState& b);

// Quadrature covariance from amplitudes.
CovarianceMatrix fock_covariance(const FockState& psi);

// Signal-to-noise of the un-squeezed total photon number for theta near 0
// at phi = pi. Evaluated at theta0 = theta_step with a central difference
// of width theta_step / 100.
double unsqueezed_snr(double g, double theta_step);
double unsqueezed_snr(double g, double theta_step, const TruncationPolicy& trunc);

}  // namespace su11
