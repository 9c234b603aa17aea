// Quantum Fisher information and signal-to-noise analysis for the
// Hamiltonian model and the circuit model V(g, -g, theta).
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "su11/fock.hpp"
#include "su11/gaussian.hpp"

namespace su11 {

enum class Param { kPhi, kTheta };
enum class QfiMethod { kClosedForm, kGaussianFormula, kFidelityFD };
enum class Backend { kGaussian, kFock };
enum class Model { kHamiltonian, kCircuit };

const char* to_string(Param p);
const char* to_string(QfiMethod m);
const char* to_string(Backend b);
const char* to_string(Model m);

inline constexpr double kDefaultFidelityStep = 1e-4;
inline constexpr double kDefaultCovarianceStep = 1e-5;

struct QfiReport {
  double value = 0.0;
  QfiMethod method = QfiMethod::kClosedForm;
  Param wrt = Param::kPhi;
  double step = 0.0;
  ModelParams params;
  Model model = Model::kHamiltonian;
  Backend backend = Backend::kGaussian;
};

struct SnrReport {
  double signal = 0.0;
  double noise = 0.0;
  double snr = 0.0;
  Observable observable = Observable::kWeightedShift;
  Param wrt = Param::kPhi;
  double step = 0.0;
  ModelParams params;
  Model model = Model::kHamiltonian;
};

// Noise vanishes while the signal does not.
class DegenerateReadout : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct NumericOptions {
  Model model = Model::kHamiltonian;
  Backend backend = Backend::kGaussian;
  // Defaults to the policy derived from the operating point.
  std::optional<TruncationPolicy> truncation;
};

// 1/4 sinh^2(4 g sin(phi/2)) + 4 g^2 cos^2(phi/2), Hamiltonian model, theta = 0.
QfiReport qfi_phi_closed(double g, double phi);
// sinh^4(2g) / g^2, Hamiltonian model at theta = 0, phi = pi.
QfiReport qfi_theta0_closed(double g);

// The circuit model is V(g, -g, theta); params.phi is ignored there.
// Throws std::invalid_argument for a step outside [1e-6, 1e-2] or an
// unsupported method/backend/model combination.
QfiReport qfi_numeric(const ModelParams& params, Param wrt, QfiMethod method,
                      double step, const NumericOptions& opts = {});

// Literal 1/4 tr[(Sigma^-1 dSigma)^2]; loses roughly e^{2f} digits.
double gaussian_qfi_covariance_route(const CovarianceMatrix& sigma,
                                     const Mat4& dsigma);

SnrReport snr_numeric(Observable obs, const ModelParams& params, Param wrt,
                      double step, const NumericOptions& opts = {});

// Total photon number moments of a zero-mean Gaussian state.
ObservableStats total_photon_stats(const CovarianceMatrix& cov);

struct CircuitBenchmarks {
  double qfi_theta = 0.0;
  double snr_limit_ntot = 0.0;
  double energy = 0.0;
};
CircuitBenchmarks circuit_benchmarks(double g);

struct Theta0Scaling {
  double qfi_exact = 0.0;
  double asymptote = 0.0;
  double ratio = 0.0;
};
Theta0Scaling theta0_scaling(double g);

// SLD for phi at phi = pi, theta = 0 on the truncated pair sector.
Eigen::MatrixXcd sld_operator(double g, const TruncationPolicy& trunc);
// Operator norm of the SLD minus its small-g rank-two form. 0 < g <= 0.1.
double sld_smallg_residual(double g);
double sld_smallg_residual(double g, const TruncationPolicy& trunc);
int numerical_rank(const Eigen::MatrixXcd& m, double tol = 1e-10);

// Phase-aligned distance between the model state at (g = lambda/2, theta,
// phi = pi) and its large-lambda TMSV approximant.
double large_lambda_distance(double theta, double lambda);

// Least-squares slope of log(qfi) against log(energy).
double fit_log_exponent(const std::vector<double>& energy,
                        const std::vector<double>& qfi);

}  // namespace su11
