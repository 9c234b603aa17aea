#include "su11/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tridiagonal_expm.hpp"

namespace su11 {

namespace {

using cd = std::complex<double>;

template <typename Build>
FockState adaptive(const TruncationPolicy& trunc, Build build) {
  trunc.validate();
  int nmax = trunc.initial_nmax;
  double tail = 0;
  for (int attempt = 0; attempt <= trunc.max_doublings; ++attempt, nmax *= 2) {
    auto [psi, worst_tail] = build(nmax);
    if (worst_tail < trunc.tail_tolerance) return psi;
    tail = worst_tail;
  }
  throw TruncationError(nmax / 2, tail);
}

struct Built {
  FockState psi;
  double tail;
};

}  // namespace

TruncationPolicy TruncationPolicy::for_squeezing(double f) {
  TruncationPolicy p;
  p.initial_nmax = std::max(
      32, static_cast<int>(std::ceil(8 * (1 + std::abs(f) * std::numbers::e))));
  return p;
}

TruncationPolicy TruncationPolicy::for_model(const ModelParams& params) {
  const double s = std::max(1.0, std::sin(params.phi() / 2));
  return for_squeezing(2 * params.g() * s);
}

void TruncationPolicy::validate() const {
  if (initial_nmax < 8) throw std::invalid_argument("TruncationPolicy: Nmax must be >= 8");
  if (!(tail_tolerance > 0)) throw std::invalid_argument("TruncationPolicy: tail tolerance must be > 0");
  if (max_doublings < 0) throw std::invalid_argument("TruncationPolicy: max doublings must be >= 0");
}

namespace {
std::string truncation_message(int nmax, double tail) {
  std::ostringstream os;
  os << "truncation failed: tail mass " << tail << " at Nmax = " << nmax;
  return os.str();
}
}  // namespace

TruncationError::TruncationError(int nmax, double tail)
    : std::runtime_error(truncation_message(nmax, tail)), nmax_(nmax), tail_(tail) {}

double FockState::tail_mass() const {
  const auto n = amplitudes.size();
  const auto k = std::min<Eigen::Index>(5, n);
  return amplitudes.tail(k).squaredNorm();
}

const char* to_string(Observable o) {
  return o == Observable::kWeightedShift ? "O" : "Ntot";
}

FockState vacuum(int nmax) {
  FockState psi;
  psi.amplitudes = Eigen::VectorXcd::Zero(nmax + 1);
  psi.amplitudes[0] = 1;
  return psi;
}

FockState apply(const PairGenerator& h, const FockState& psi) {
  const int n = static_cast<int>(psi.amplitudes.size());
  Eigen::VectorXd diag(n);
  for (int k = 0; k < n; ++k) diag[k] = h.slope * k + h.offset;
  const double mag = std::abs(h.kappa);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int k = 0; k + 1 < n; ++k) off[k] = mag * (k + 1);
  // Gauge diag(e^{i gamma n}) makes the off-diagonal real.
  const double gamma = std::arg(h.kappa);
  Eigen::VectorXcd v = psi.amplitudes;
  if (gamma != 0) {
    for (int k = 0; k < n; ++k) v[k] *= std::polar(1.0, -gamma * k);
  }
  v = detail::expm_tridiagonal(diag, off, v);
  if (gamma != 0) {
    for (int k = 0; k < n; ++k) v[k] *= std::polar(1.0, gamma * k);
  }
  return {v};
}

FockState evolve_vacuum(const ModelParams& params) {
  return evolve_vacuum(params, TruncationPolicy::for_model(params));
}

FockState evolve_vacuum(const ModelParams& params, const TruncationPolicy& trunc) {
  const PairGenerator h{2 * params.theta(), 0.0, params.pair_coupling()};
  return adaptive(trunc, [&](int nmax) {
    FockState psi = apply(h, vacuum(nmax));
    return Built{psi, psi.tail_mass()};
  });
}

FockState tmsv_state(double f, double u, const TruncationPolicy& trunc) {
  if (!(f >= 0)) throw std::invalid_argument("tmsv_state: f must be >= 0");
  const cd ratio = std::polar(std::tanh(f), u);
  const double c0 = 1 / std::cosh(f);
  return adaptive(trunc, [&](int nmax) {
    FockState psi;
    psi.amplitudes.resize(nmax + 1);
    cd c = c0;
    for (int k = 0; k <= nmax; ++k, c *= ratio) psi.amplitudes[k] = c;
    return Built{psi, psi.tail_mass()};
  });
}

FockState tmsv_state(const SqueezingParams& sq, const TruncationPolicy& trunc) {
  return tmsv_state(sq.f, sq.u, trunc);
}

FockState circuit_state(const CircuitSpec& spec) {
  return circuit_state(
      spec, TruncationPolicy::for_squeezing(std::abs(spec.g1) + std::abs(spec.g2)));
}

FockState circuit_state(const CircuitSpec& spec, const TruncationPolicy& trunc) {
  const PairGenerator first{0, 0, cd(0, spec.g1)};
  const PairGenerator middle{-spec.theta, 0, 0};
  const PairGenerator last{0, 0, cd(0, spec.g2)};
  return adaptive(trunc, [&](int nmax) {
    FockState psi = apply(first, vacuum(nmax));
    double tail = psi.tail_mass();
    psi = apply(middle, psi);
    psi = apply(last, psi);
    tail = std::max(tail, psi.tail_mass());
    return Built{psi, tail};
  });
}

FockState kak_state(const KakFactors& k, const TruncationPolicy& trunc) {
  // K3 = n + 1/2, p1 K1 + p2 K2 couples with (p1 - i p2) / 2.
  const PairGenerator right{k.beta, k.beta / 2, 0};
  const PairGenerator mid{0, 0, cd(k.p1, -k.p2) / 2.0};
  const PairGenerator left{k.alpha, k.alpha / 2, 0};
  return adaptive(trunc, [&](int nmax) {
    FockState psi = apply(right, vacuum(nmax));
    psi = apply(mid, psi);
    double tail = psi.tail_mass();
    psi = apply(left, psi);
    return Built{psi, tail};
  });
}

ObservableStats observable_stats(const FockState& psi, Observable obs) {
  const Eigen::VectorXcd& c = psi.amplitudes;
  const int n = static_cast<int>(c.size());
  ObservableStats out;
  if (obs == Observable::kTotalPhotonN) {
    for (int k = 0; k < n; ++k) out.mean += 2.0 * k * std::norm(c[k]);
    for (int k = 0; k < n; ++k) {
      const double d = 2.0 * k - out.mean;
      out.variance += std::norm(c[k]) * d * d;
    }
    return out;
  }
  // O = sum_n n (|n+1><n| + h.c.)
  for (int k = 1; k + 1 < n; ++k) {
    out.mean += 2.0 * k * (std::conj(c[k + 1]) * c[k]).real();
  }
  double intensity = 0;
  for (int k = 1; k < n; ++k) {
    const double up = k + 1 < n ? std::norm(c[k + 1]) : 0.0;
    intensity += double(k) * k * (up + std::norm(c[k]));
  }
  double coherence = 0;
  for (int k = 1; k + 2 < n; ++k) {
    coherence += double(k) * (k + 1) * (std::conj(c[k]) * c[k + 2]).real();
  }
  out.variance = intensity + 2 * coherence - out.mean * out.mean;
  return out;
}

double weighted_shift_second_moment_direct(const FockState& psi) {
  const Eigen::VectorXcd& c = psi.amplitudes;
  const int n = static_cast<int>(c.size());
  double total = 0;
  // (O psi)_m = (m - 1) c_{m-1} + m c_{m+1}, m = 0..n
  for (int m = 0; m <= n; ++m) {
    cd v = 0;
    if (m >= 1 && m - 1 < n) v += double(m - 1) * c[m - 1];
    if (m + 1 < n) v += double(m) * c[m + 1];
    total += std::norm(v);
  }
  return total;
}

std::complex<double> overlap(const FockState& a, const FockState& b) {
  const auto k = std::min(a.amplitudes.size(), b.amplitudes.size());
  return a.amplitudes.head(k).dot(b.amplitudes.head(k));
}

double infidelity(const FockState& a, const FockState& b) {
  const auto n = std::max(a.amplitudes.size(), b.amplitudes.size());
  Eigen::VectorXcd va = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd vb = Eigen::VectorXcd::Zero(n);
  va.head(a.amplitudes.size()) = a.amplitudes;
  vb.head(b.amplitudes.size()) = b.amplitudes;
  const cd ov = va.dot(vb);
  return (vb - ov * va).squaredNorm();
}

double phase_aligned_distance(const FockState& a, const FockState& b) {
  const double d = std::clamp(infidelity(a, b), 0.0, 1.0);
  return std::sqrt(2 * d / (1 + std::sqrt(1 - d)));
}

CovarianceMatrix fock_covariance(const FockState& psi) {
  const Eigen::VectorXcd& c = psi.amplitudes;
  double nbar = 0;
  cd m = 0;
  for (int k = 1; k < c.size(); ++k) {
    nbar += k * std::norm(c[k]);
    m += double(k) * std::conj(c[k - 1]) * c[k];
  }
  const double d = nbar + 0.5;
  const double re = m.real();
  const double im = m.imag();
  CovarianceMatrix cov;
  // clang-format off
  cov.m <<  d,   0,  re,  im,
            0,   d,  im, -re,
           re,  im,   d,   0,
           im, -re,   0,   d;
  // clang-format on
  return cov;
}

double unsqueezed_snr(double g, double theta_step) {
  return unsqueezed_snr(g, theta_step,
                        TruncationPolicy::for_model(ModelParams(g, 0, std::numbers::pi)));
}

double unsqueezed_snr(double g, double theta_step, const TruncationPolicy& trunc) {
  if (!(g >= 0)) throw std::invalid_argument("unsqueezed_snr: g must be >= 0");
  if (!(theta_step > 0 && theta_step <= 1e-2)) {
    throw std::invalid_argument("unsqueezed_snr: theta_step must be in (0, 1e-2]");
  }
  if (g == 0) return 0;
  const double pi = std::numbers::pi;
  // <O_sq> on e^{-iH}|0,0> is <N> on U e^{-iH}|0,0>, U = e^{2ig(a1^dag a2^dag + h.c.)}.
  // Expanding O_sq = U^-1 N U in the probe basis cancels O(E) terms down to
  // O(theta^2), so the composed element is formed first and realized in Fock
  // space through its KAK layers; <N> is then a sum of small positive terms.
  const Mat2c unsqueeze = expi(HamiltonianCoeffs{-4 * g, 0, 0});
  auto stats_at = [&](double theta) {
    const Mat2c m = unsqueeze * expi(model_coeffs(ModelParams(g, theta, pi)));
    return observable_stats(kak_state(kak_decompose(m), trunc), Observable::kTotalPhotonN);
  };
  const double theta0 = theta_step;
  const double h = theta_step * 1e-2;
  const double signal = (stats_at(theta0 + h).mean - stats_at(theta0 - h).mean) / (2 * h);
  const double noise = stats_at(theta0).variance;
  return noise > 0 ? signal * signal / noise : 0.0;
}

}  // namespace su11
