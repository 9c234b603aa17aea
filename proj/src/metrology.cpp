#include "su11/metrology.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "su11/circuit.hpp"

namespace su11 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinStep = 1e-6;
constexpr double kMaxStep = 1e-2;

void check_step(double step) {
  if (!(step >= kMinStep && step <= kMaxStep)) {
    throw std::invalid_argument("step must lie in [1e-6, 1e-2]");
  }
}

ModelParams shifted(const ModelParams& p, Param wrt, double dx) {
  if (wrt == Param::kPhi) return {p.g(), p.theta(), p.phi() + dx};
  return {p.g(), p.theta() + dx, p.phi()};
}

void check_model(const NumericOptions& opts, Param wrt) {
  if (opts.model == Model::kCircuit && wrt == Param::kPhi) {
    throw std::invalid_argument("circuit model has no phi parameter");
  }
}

CircuitSpec circuit_of(const ModelParams& p) { return {p.g(), -p.g(), p.theta()}; }

SymplecticMatrix transform_at(const ModelParams& p, Model model) {
  return model == Model::kCircuit ? circuit_symplectic(circuit_of(p))
                                  : symplectic_transform(p);
}

TruncationPolicy policy_for(const ModelParams& p, const NumericOptions& opts) {
  if (opts.truncation) return *opts.truncation;
  if (opts.model == Model::kCircuit) return TruncationPolicy::for_squeezing(2 * p.g());
  return TruncationPolicy::for_model(p);
}

FockState state_at(const ModelParams& p, Model model, const TruncationPolicy& trunc) {
  return model == Model::kCircuit ? circuit_state(circuit_of(p), trunc)
                                  : evolve_vacuum(p, trunc);
}

// Fixed truncation for neighbours of an already-converged centre state.
TruncationPolicy pinned(const TruncationPolicy& base, int nmax) {
  TruncationPolicy p = base;
  p.initial_nmax = nmax;
  p.max_doublings = 0;
  return p;
}

double richardson(const std::function<double(double)>& q, double h) {
  return (4 * q(h / 2) - q(h)) / 3;
}

}  // namespace

const char* to_string(Param p) { return p == Param::kPhi ? "phi" : "theta"; }

const char* to_string(QfiMethod m) {
  switch (m) {
    case QfiMethod::kClosedForm:
      return "closed";
    case QfiMethod::kGaussianFormula:
      return "gaussian";
    case QfiMethod::kFidelityFD:
      return "fidelity";
  }
  return "?";
}

const char* to_string(Backend b) { return b == Backend::kGaussian ? "gaussian" : "fock"; }

const char* to_string(Model m) { return m == Model::kHamiltonian ? "hamiltonian" : "circuit"; }

QfiReport qfi_phi_closed(double g, double phi) {
  if (!(g >= 0)) throw std::invalid_argument("qfi_phi_closed: g must be >= 0");
  QfiReport r;
  r.params = ModelParams(g, 0, phi);
  const double s = std::sinh(4 * g * std::sin(r.params.phi() / 2));
  const double c = std::cos(r.params.phi() / 2);
  r.value = 0.25 * s * s + 4 * g * g * c * c;
  r.method = QfiMethod::kClosedForm;
  r.wrt = Param::kPhi;
  return r;
}

QfiReport qfi_theta0_closed(double g) {
  if (!(g >= 0)) throw std::invalid_argument("qfi_theta0_closed: g must be >= 0");
  QfiReport r;
  r.params = ModelParams(g, 0, kPi);
  if (g > 0) {
    const double s = std::sinh(2 * g);
    r.value = s * s * s * s / (g * g);
  }
  r.method = QfiMethod::kClosedForm;
  r.wrt = Param::kTheta;
  return r;
}

double gaussian_qfi_covariance_route(const CovarianceMatrix& sigma, const Mat4& dsigma) {
  const Mat4 x = sigma.m.fullPivLu().solve(dsigma);
  return 0.25 * (x * x).trace();
}

QfiReport qfi_numeric(const ModelParams& params, Param wrt, QfiMethod method,
                      double step, const NumericOptions& opts) {
  check_model(opts, wrt);
  QfiReport r;
  r.params = params;
  r.wrt = wrt;
  r.method = method;
  r.model = opts.model;
  r.backend = opts.backend;

  if (method == QfiMethod::kClosedForm) {
    r.backend = Backend::kGaussian;
    if (opts.model == Model::kCircuit) {
      r.value = circuit_benchmarks(params.g()).qfi_theta;
      return r;
    }
    if (wrt == Param::kPhi && params.theta() == 0) {
      r.value = qfi_phi_closed(params.g(), params.phi()).value;
      return r;
    }
    if (wrt == Param::kTheta && params.theta() == 0 && params.phi() == kPi) {
      r.value = qfi_theta0_closed(params.g()).value;
      return r;
    }
    throw std::invalid_argument("no closed form at this operating point");
  }

  check_step(step);
  r.step = step;
  if (method == QfiMethod::kGaussianFormula && opts.backend != Backend::kGaussian) {
    throw std::invalid_argument("Gaussian formula requires the gaussian backend");
  }
  // Vacuum for every parameter value in both models.
  if (params.g() == 0) return r;

  if (method == QfiMethod::kGaussianFormula) {
    const Mat4 t = transform_at(params, opts.model).m;
    auto dt = [&](double h) -> Mat4 {
      return (transform_at(shifted(params, wrt, h), opts.model).m -
              transform_at(shifted(params, wrt, -h), opts.model).m) /
             (2 * h);
    };
    const Mat4 dtr = (4 * dt(step / 2) - dt(step)) / 3;
    // Sigma^-1 dSigma = T^-1 (L + L^T) T with L = dT T^-1.
    const Mat4 d = symplectic_form();
    const Mat4 l = dtr * (-d * t.transpose() * d);
    r.value = 0.25 * (l + l.transpose()).squaredNorm();
    return r;
  }

  // Fidelity finite difference: QFI ~ 2 (D(+h) + D(-h)) / h^2.
  std::function<double(double)> q;
  if (opts.backend == Backend::kGaussian) {
    const SymplecticMatrix t0 = transform_at(params, opts.model);
    q = [&](double h) {
      const double dp = gaussian_infidelity(t0, transform_at(shifted(params, wrt, h), opts.model));
      const double dm = gaussian_infidelity(t0, transform_at(shifted(params, wrt, -h), opts.model));
      return 2 * (dp + dm) / (h * h);
    };
    r.value = richardson(q, step);
  } else {
    const TruncationPolicy base = policy_for(params, opts);
    const FockState c0 = state_at(params, opts.model, base);
    const TruncationPolicy fixed = pinned(base, c0.nmax());
    q = [&](double h) {
      const double dp = infidelity(c0, state_at(shifted(params, wrt, h), opts.model, fixed));
      const double dm = infidelity(c0, state_at(shifted(params, wrt, -h), opts.model, fixed));
      return 2 * (dp + dm) / (h * h);
    };
    r.value = richardson(q, step);
  }
  if (r.value < 0) r.value = 0;
  return r;
}

ObservableStats total_photon_stats(const CovarianceMatrix& cov) {
  ObservableStats s;
  s.mean = 0.5 * cov.m.trace() - 1;
  s.variance = 0.5 * (cov.m * cov.m).trace() - 0.5;
  return s;
}

SnrReport snr_numeric(Observable obs, const ModelParams& params, Param wrt,
                      double step, const NumericOptions& opts) {
  check_model(opts, wrt);
  check_step(step);
  SnrReport r;
  r.observable = obs;
  r.params = params;
  r.wrt = wrt;
  r.step = step;
  r.model = opts.model;

  ObservableStats plus, minus, center;
  if (opts.backend == Backend::kGaussian) {
    if (obs != Observable::kTotalPhotonN) {
      throw std::invalid_argument("gaussian backend supports only the total photon number");
    }
    auto stats = [&](const ModelParams& p) {
      return total_photon_stats(covariance_from(transform_at(p, opts.model)));
    };
    plus = stats(shifted(params, wrt, step));
    minus = stats(shifted(params, wrt, -step));
    center = stats(params);
  } else {
    const TruncationPolicy base = policy_for(params, opts);
    const FockState c0 = state_at(params, opts.model, base);
    const TruncationPolicy fixed = pinned(base, c0.nmax());
    plus = observable_stats(state_at(shifted(params, wrt, step), opts.model, fixed), obs);
    minus = observable_stats(state_at(shifted(params, wrt, -step), opts.model, fixed), obs);
    center = observable_stats(c0, obs);
  }
  r.signal = (plus.mean - minus.mean) / (2 * step);
  r.noise = center.variance;
  if (r.noise <= 0) {
    if (r.signal != 0) throw DegenerateReadout("zero variance with nonzero signal");
    r.snr = 0;
    return r;
  }
  r.snr = r.signal * r.signal / r.noise;
  return r;
}

CircuitBenchmarks circuit_benchmarks(double g) {
  if (!(g >= 0)) throw std::invalid_argument("circuit_benchmarks: g must be >= 0");
  CircuitBenchmarks b;
  const double sh = std::sinh(g);
  const double n = sh * sh;
  b.qfi_theta = 4 * n * (n + 1);
  const double s2 = std::sinh(2 * g);
  b.snr_limit_ntot = s2 * s2;
  b.energy = 2 * n + 1;
  return b;
}

Theta0Scaling theta0_scaling(double g) {
  if (!(g > 0)) throw std::invalid_argument("theta0_scaling: g must be > 0");
  Theta0Scaling s;
  s.qfi_exact = qfi_theta0_closed(g).value;
  const double e = std::cosh(4 * g);
  const double r = e / std::log(2 * e);
  s.asymptote = 4 * r * r;
  s.ratio = s.qfi_exact / s.asymptote;
  return s;
}

Eigen::MatrixXcd sld_operator(double g, const TruncationPolicy& trunc) {
  const FockState psi = evolve_vacuum(ModelParams(g, 0, kPi), trunc);
  const Eigen::VectorXcd& c = psi.amplitudes;
  Eigen::VectorXcd nc = c;
  for (int k = 0; k < c.size(); ++k) nc[k] *= k;
  const std::complex<double> i(0, 1);
  return -i * nc * c.adjoint() + i * c * nc.adjoint();
}

double sld_smallg_residual(double g) {
  return sld_smallg_residual(g, TruncationPolicy::for_model(ModelParams(g, 0, kPi)));
}

double sld_smallg_residual(double g, const TruncationPolicy& trunc) {
  if (!(g > 0 && g <= 0.1)) throw std::invalid_argument("sld_smallg_residual: need 0 < g <= 0.1");
  Eigen::MatrixXcd l = sld_operator(g, trunc);
  l(1, 0) += 2 * g;
  l(0, 1) += 2 * g;
  // Hermitian, so the operator norm is the largest |eigenvalue|.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(l, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

int numerical_rank(const Eigen::MatrixXcd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int k = 0; k < s.size(); ++k) rank += s[k] > tol;
  return rank;
}

double large_lambda_distance(double theta, double lambda) {
  const SqueezingParams exact = tmsv_params(ModelParams(lambda / 2, theta, kPi));
  return tmsv_distance(exact, large_lambda_tmsv(theta, lambda));
}

double fit_log_exponent(const std::vector<double>& energy, const std::vector<double>& qfi) {
  if (energy.size() != qfi.size() || energy.size() < 2) {
    throw std::invalid_argument("fit_log_exponent: need two or more matched points");
  }
  const double n = static_cast<double>(energy.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t k = 0; k < energy.size(); ++k) {
    const double x = std::log(energy[k]);
    const double y = std::log(qfi[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0) throw std::invalid_argument("fit_log_exponent: degenerate energies");
  return (n * sxy - sx * sy) / den;
}

}  // namespace su11
