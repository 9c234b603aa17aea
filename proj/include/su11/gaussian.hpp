// Phase-space description of the reduced two-mode SU(1,1) model
//   H = theta (n1 + n2) + lambda i e^{-i phi/2} a1^dag a2^dag + h.c.,
// lambda = 2 g sin(phi/2), acting on the two-mode vacuum.
//
// Conventions: R = (q1, p1, q2, p2), hbar = 1, vacuum covariance I/2,
// Delta = blockdiag(J, J) with J = [[0, 1], [-1, 0]].
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

namespace su11 {

using Mat4 = Eigen::Matrix4d;

// |theta^2 - lambda^2| below this is treated as the domain boundary and
// evaluated by series.
inline constexpr double kBoundaryEps = 1e-8;

enum class Domain { kDomain1, kDomain2, kBoundary };

const char* to_string(Domain d);

class ModelParams {
 public:
  ModelParams() = default;
  // Throws std::invalid_argument on g < 0 or non-finite input. phi is
  // reduced into [0, 2pi).
  ModelParams(double g, double theta, double phi);

  double g() const { return g_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }

  double lambda() const;
  double xi() const;
  // sqrt(|theta^2 - lambda^2|)
  double x() const;
  // Coefficient of a1^dag a2^dag in H.
  std::complex<double> pair_coupling() const;

 private:
  double g_ = 0.0;
  double theta_ = 0.0;
  double phi_ = 0.0;
};

struct SymplecticMatrix {
  Mat4 m;
};

struct CovarianceMatrix {
  Mat4 m;

  // Blocks of Sigma = 1/2 [[A, B], [B^T, A']].
  Eigen::Matrix2d a() const { return 2.0 * m.topLeftCorner<2, 2>(); }
  Eigen::Matrix2d b() const { return 2.0 * m.topRightCorner<2, 2>(); }
  // Reduced single-mode covariance of mode 1.
  Eigen::Matrix2d reduced() const { return m.topLeftCorner<2, 2>(); }
};

struct SqueezingParams {
  double f = 0.0;
  double u = 0.0;  // in (-pi, pi]
};

struct StateMoments {
  CovarianceMatrix cov;
  double energy = 0.0;
  double reduced_nu = 0.0;
};

Mat4 symplectic_form();
Eigen::MatrixXd symplectic_form(int modes);

// Max-abs entry of T^T Delta T - Delta.
double symplectic_defect(const Mat4& t);

Domain classify_domain(const ModelParams& params);

// Symplectic matrix of exp(-i (theta N + kappa a1^dag a2^dag + conj(kappa) a1 a2)),
// N = n1 + n2, acting on R by Heisenberg evolution. Composition is
// reversed: U2 U1 maps to T1 T2.
SymplecticMatrix pair_symplectic(double theta, std::complex<double> kappa);

SymplecticMatrix symplectic_transform(const ModelParams& params);

StateMoments state_moments(const ModelParams& params);
CovarianceMatrix covariance_from(const SymplecticMatrix& t);

// Energy from the domain-specific closed forms (series at the boundary).
double energy_closed_form(const ModelParams& params);

SqueezingParams tmsv_params(const ModelParams& params);
SqueezingParams tmsv_params(const CovarianceMatrix& cov);
CovarianceMatrix tmsv_covariance(const SqueezingParams& sq);

// Large-lambda TMSV approximant of the model state at phi = pi:
// f = sqrt(lambda^2 - theta^2), u = pi + acos(theta / lambda), wrapped into
// (-pi, pi]. Requires lambda^2 > theta^2.
SqueezingParams large_lambda_tmsv(double theta, double lambda);

// Williamson spectrum, descending. Throws std::invalid_argument unless the
// input is symmetric positive definite with even dimension.
std::pair<double, double> symplectic_eigenvalues(const CovarianceMatrix& cov);
std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& cov);

// |<psi1|psi2>|^2 = 1 / sqrt(det(Sigma1 + Sigma2)) for zero-mean pure states.
double gaussian_fidelity(const CovarianceMatrix& c1, const CovarianceMatrix& c2);
// 1 - fidelity evaluated without cancellation from the two symplectics.
double gaussian_infidelity(const SymplecticMatrix& t1,
                           const SymplecticMatrix& t2);

// |<tmsv(a)|tmsv(b)>| and the phase-aligned l2 distance min_alpha
// || psi_a - e^{i alpha} psi_b ||.
double tmsv_overlap_abs(const SqueezingParams& a, const SqueezingParams& b);
double tmsv_distance(const SqueezingParams& a, const SqueezingParams& b);

}  // namespace su11
