#include "su11/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "series.hpp"

namespace su11 {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_phase(double u) {
  // (-pi, pi]
  u = std::remainder(u, 2 * kPi);
  if (u <= -kPi) u += 2 * kPi;
  return u;
}

// det(I + S) - 1 for symmetric 4x4 S, from power sums via Newton's
// identities so that small S does not cancel against the 1.
double det_one_plus_minus_one(const Mat4& s) {
  const Mat4 s2 = s * s;
  const double p1 = s.trace();
  const double p2 = s2.trace();
  const double p3 = (s2 * s).trace();
  const double p4 = (s2 * s2).trace();
  const double e1 = p1;
  const double e2 = (e1 * p1 - p2) / 2;
  const double e3 = (e2 * p1 - e1 * p2 + p3) / 3;
  const double e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4;
  return e1 + e2 + e3 + e4;
}

}  // namespace

const char* to_string(Domain d) {
  switch (d) {
    case Domain::kDomain1:
      return "domain1";
    case Domain::kDomain2:
      return "domain2";
    case Domain::kBoundary:
      return "boundary";
  }
  return "?";
}

ModelParams::ModelParams(double g, double theta, double phi)
    : g_(g), theta_(theta) {
  if (!std::isfinite(g) || !std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("ModelParams: non-finite input");
  }
  if (g < 0) throw std::invalid_argument("ModelParams: g must be >= 0");
  phi_ = std::fmod(phi, 2 * kPi);
  if (phi_ < 0) phi_ += 2 * kPi;
  if (phi_ >= 2 * kPi) phi_ = 0;
}

double ModelParams::lambda() const { return 2 * g_ * std::sin(phi_ / 2); }

double ModelParams::xi() const { return kPi / 2 - phi_ / 2; }

double ModelParams::x() const {
  const double l = lambda();
  return std::sqrt(std::abs(theta_ * theta_ - l * l));
}

std::complex<double> ModelParams::pair_coupling() const {
  const double l = lambda();
  return {l * std::sin(phi_ / 2), l * std::cos(phi_ / 2)};
}

Mat4 symplectic_form() {
  Mat4 d = Mat4::Zero();
  d(0, 1) = d(2, 3) = 1;
  d(1, 0) = d(3, 2) = -1;
  return d;
}

Eigen::MatrixXd symplectic_form(int modes) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    d(2 * k, 2 * k + 1) = 1;
    d(2 * k + 1, 2 * k) = -1;
  }
  return d;
}

double symplectic_defect(const Mat4& t) {
  const Mat4 d = symplectic_form();
  return (t.transpose() * d * t - d).cwiseAbs().maxCoeff();
}

Domain classify_domain(const ModelParams& params) {
  const double l = params.lambda();
  const double diff = params.theta() * params.theta() - l * l;
  if (std::abs(diff) <= kBoundaryEps) return Domain::kBoundary;
  return diff > 0 ? Domain::kDomain1 : Domain::kDomain2;
}

SymplecticMatrix pair_symplectic(double theta, std::complex<double> kappa) {
  const double y = std::norm(kappa) - theta * theta;
  const auto [c, s] = detail::cosh_sinhc(y, kBoundaryEps);
  const double a = theta * s;
  const double b = kappa.imag() * s;
  const double k = kappa.real() * s;
  SymplecticMatrix t;
  // clang-format off
  t.m << c, -a,  b, -k,
         a,  c, -k, -b,
         b, -k,  c, -a,
        -k, -b,  a,  c;
  // clang-format on
  return t;
}

SymplecticMatrix symplectic_transform(const ModelParams& params) {
  return pair_symplectic(params.theta(), params.pair_coupling());
}

CovarianceMatrix covariance_from(const SymplecticMatrix& t) {
  CovarianceMatrix cov;
  cov.m = 0.5 * t.m.transpose() * t.m;
  cov.m = 0.5 * (cov.m + cov.m.transpose()).eval();
  return cov;
}

StateMoments state_moments(const ModelParams& params) {
  StateMoments out;
  out.cov = covariance_from(symplectic_transform(params));
  out.energy = 0.5 * out.cov.m.trace();
  out.reduced_nu = out.energy / 2;
  return out;
}

double energy_closed_form(const ModelParams& params) {
  const double th2 = params.theta() * params.theta();
  const double l = params.lambda();
  const double l2 = l * l;
  const double x = params.x();
  switch (classify_domain(params)) {
    case Domain::kDomain1:
      return (th2 - l2 * std::cos(2 * x)) / (x * x);
    case Domain::kDomain2:
      return (l2 * std::cosh(2 * x) - th2) / (x * x);
    case Domain::kBoundary:
      break;
  }
  const auto [c, s] = detail::cosh_sinhc(l2 - th2, 2 * kBoundaryEps);
  return c * c + (th2 + l2) * s * s;
}

SqueezingParams tmsv_params(const CovarianceMatrix& cov) {
  const double b11 = 2 * cov.m(0, 2);
  const double b12 = 2 * cov.m(0, 3);
  SqueezingParams sq;
  sq.f = 0.5 * std::asinh(std::hypot(b11, b12));
  sq.u = sq.f == 0 ? 0.0 : wrap_phase(std::atan2(b12, b11));
  return sq;
}

SqueezingParams tmsv_params(const ModelParams& params) {
  return tmsv_params(state_moments(params).cov);
}

CovarianceMatrix tmsv_covariance(const SqueezingParams& sq) {
  const double ch = std::cosh(2 * sq.f);
  const double sc = std::sinh(2 * sq.f) * std::cos(sq.u);
  const double ss = std::sinh(2 * sq.f) * std::sin(sq.u);
  CovarianceMatrix cov;
  // clang-format off
  cov.m << ch,  0,  sc,  ss,
            0, ch,  ss, -sc,
           sc, ss,  ch,   0,
           ss, -sc,  0,  ch;
  // clang-format on
  cov.m *= 0.5;
  return cov;
}

SqueezingParams large_lambda_tmsv(double theta, double lambda) {
  if (!(lambda * lambda > theta * theta)) {
    throw std::invalid_argument("large_lambda_tmsv: requires lambda^2 > theta^2");
  }
  SqueezingParams sq;
  sq.f = std::sqrt(lambda * lambda - theta * theta);
  sq.u = wrap_phase(kPi + std::acos(theta / std::abs(lambda)));
  return sq;
}

std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& cov) {
  const auto n = cov.rows();
  if (n == 0 || n != cov.cols() || n % 2 != 0) {
    throw std::invalid_argument("symplectic_spectrum: need square even-dimensional matrix");
  }
  if (!cov.allFinite()) {
    throw std::invalid_argument("symplectic_spectrum: non-finite entries");
  }
  const double scale = cov.cwiseAbs().maxCoeff();
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, scale)) {
    throw std::invalid_argument("symplectic_spectrum: matrix is not symmetric");
  }
  const Eigen::MatrixXd sym = 0.5 * (cov + cov.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.eigenvalues().minCoeff() <= 0) {
    throw std::invalid_argument("symplectic_spectrum: matrix is not positive definite");
  }
  const Eigen::MatrixXd root = es.operatorSqrt();
  const Eigen::MatrixXd d = symplectic_form(static_cast<int>(n / 2));
  const Eigen::MatrixXcd k =
      std::complex<double>(0, 1) * (root * d * root).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(k, Eigen::EigenvaluesOnly);
  std::vector<double> ev(hs.eigenvalues().data(), hs.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  ev.resize(n / 2);
  return ev;
}

std::pair<double, double> symplectic_eigenvalues(const CovarianceMatrix& cov) {
  const auto nu = symplectic_spectrum(cov.m);
  return {nu[0], nu[1]};
}

double gaussian_fidelity(const CovarianceMatrix& c1, const CovarianceMatrix& c2) {
  return 1.0 / std::sqrt((c1.m + c2.m).determinant());
}

double gaussian_infidelity(const SymplecticMatrix& t1, const SymplecticMatrix& t2) {
  const Mat4 d = symplectic_form();
  const Mat4 t1_inv = -d * t1.m.transpose() * d;
  const Mat4 w = t2.m * t1_inv;
  Mat4 s = 0.5 * (w.transpose() * w - Mat4::Identity());
  s = 0.5 * (s + s.transpose()).eval();
  const double delta = det_one_plus_minus_one(s);
  return -std::expm1(-0.5 * std::log1p(delta));
}

double tmsv_overlap_abs(const SqueezingParams& a, const SqueezingParams& b) {
  const double d = a.f - b.f;
  const double delta = b.u - a.u;
  const double ss = std::sinh(a.f) * std::sinh(b.f);
  const double sh = std::sinh(d / 2);
  const double sn = std::sin(delta / 2);
  // z = cosh(d) + ss (1 - e^{i delta}) = 1 + w
  const double wr = 2 * sh * sh + 2 * ss * sn * sn;
  const double wi = -ss * std::sin(delta);
  return 1.0 / std::sqrt((1 + wr) * (1 + wr) + wi * wi);
}

double tmsv_distance(const SqueezingParams& a, const SqueezingParams& b) {
  const double d = a.f - b.f;
  const double delta = b.u - a.u;
  const double ss = std::sinh(a.f) * std::sinh(b.f);
  const double sh = std::sinh(d / 2);
  const double sn = std::sin(delta / 2);
  const double wr = 2 * sh * sh + 2 * ss * sn * sn;
  const double wi = -ss * std::sin(delta);
  const double z2 = (1 + wr) * (1 + wr) + wi * wi;
  // infidelity 1 - |ov|^2 = (|z|^2 - 1) / |z|^2
  const double inf = (2 * wr + wr * wr + wi * wi) / z2;
  return std::sqrt(2 * inf / (1 + std::sqrt(1 - inf)));
}

}  // namespace su11
