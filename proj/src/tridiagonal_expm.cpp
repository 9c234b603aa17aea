#include "tridiagonal_expm.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace su11::detail {

namespace {

using cd = std::complex<double>;

// Below this size the full spectrum is cheap.
constexpr int kDenseLimit = 256;
// Edge coefficients must fall below this fraction of |v|.
constexpr double kEdgeTol = 1e-15;

Eigen::VectorXcd apply_spectral(const double* z, int n, int m, const double* w,
                                const Eigen::VectorXcd& v) {
  Eigen::Map<const Eigen::MatrixXd> zm(z, n, m);
  const Eigen::VectorXd a_re = zm.transpose() * v.real();
  const Eigen::VectorXd a_im = zm.transpose() * v.imag();
  Eigen::VectorXd b_re(m), b_im(m);
  for (int k = 0; k < m; ++k) {
    const cd ph = std::exp(cd(0, -w[k])) * cd(a_re[k], a_im[k]);
    b_re[k] = ph.real();
    b_im[k] = ph.imag();
  }
  Eigen::VectorXcd out(n);
  out.real() = zm * b_re;
  out.imag() = zm * b_im;
  return out;
}

Eigen::VectorXcd dense(const Eigen::VectorXd& diag, const Eigen::VectorXd& off,
                       const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> d(diag.data(), diag.data() + n);
  std::vector<double> e(std::max(n - 1, 1), 0.0);
  std::copy(off.data(), off.data() + n - 1, e.begin());
  std::vector<double> z(static_cast<size_t>(n) * n);
  const lapack_int info =
      LAPACKE_dstevd(LAPACK_COL_MAJOR, 'V', n, d.data(), e.data(), z.data(), n);
  if (info != 0) throw std::runtime_error("dstevd failed");
  return apply_spectral(z.data(), n, n, d.data(), v);
}

}  // namespace

Eigen::VectorXcd expm_tridiagonal(const Eigen::VectorXd& diag,
                                  const Eigen::VectorXd& off,
                                  const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(diag.size());
  if (off.size() != std::max(n - 1, 0) || v.size() != n) {
    throw std::invalid_argument("expm_tridiagonal: size mismatch");
  }
  if (n == 0) return v;
  if (off.size() == 0 || off.cwiseAbs().maxCoeff() == 0) {
    Eigen::VectorXcd out(n);
    for (int i = 0; i < n; ++i) out[i] = std::exp(cd(0, -diag[i])) * v[i];
    return out;
  }
  if (n <= kDenseLimit) return dense(diag, off, v);

  const double vnorm = v.norm();
  if (vnorm == 0) return v;

  Eigen::VectorXcd hv = diag.cast<cd>().cwiseProduct(v);
  hv.head(n - 1) += off.cast<cd>().cwiseProduct(v.tail(n - 1));
  hv.tail(n - 1) += off.cast<cd>().cwiseProduct(v.head(n - 1));
  const double mu = v.dot(hv).real() / (vnorm * vnorm);
  const double sigma =
      std::sqrt(std::max(hv.squaredNorm() / (vnorm * vnorm) - mu * mu, 0.0));

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                     (i < n - 1 ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }

  std::vector<double> d(diag.data(), diag.data() + n);
  std::vector<double> e(off.data(), off.data() + n - 1);
  std::vector<double> w(n);
  std::vector<lapack_int> iblock(n), isplit(n), ifail(n);
  std::vector<double> z;
  const double abstol = 2 * LAPACKE_dlamch('S');

  for (double half = 16 * sigma + 16;; half *= 2) {
    const double vl = mu - half;
    const double vu = mu + half;
    const bool clip_lo = vl <= lo;
    const bool clip_hi = vu >= hi;
    if (clip_lo && clip_hi) return dense(diag, off, v);

    lapack_int m = 0, nsplit = 0;
    lapack_int info = LAPACKE_dstebz('V', 'B', n, vl, vu, 0, 0, abstol, d.data(),
                                     e.data(), &m, &nsplit, w.data(),
                                     iblock.data(), isplit.data());
    if (info != 0) throw std::runtime_error("dstebz failed");
    if (m == 0) continue;
    z.assign(static_cast<size_t>(n) * m, 0.0);
    info = LAPACKE_dstein(LAPACK_COL_MAJOR, n, d.data(), e.data(), m, w.data(),
                          iblock.data(), isplit.data(), z.data(), n, ifail.data());
    if (info < 0) throw std::runtime_error("dstein failed");
    if (info > 0) continue;  // unconverged vectors: widen and retry

    Eigen::Map<const Eigen::MatrixXd> zm(z.data(), n, m);
    const Eigen::VectorXd a_re = zm.transpose() * v.real();
    const Eigen::VectorXd a_im = zm.transpose() * v.imag();
    double edge = 0;
    int n_lo = 0, n_hi = 0;
    for (lapack_int k = 0; k < m; ++k) {
      const double dist = w[k] - mu;
      const bool upper = dist > 0.75 * half && !clip_hi;
      const bool lower = dist < -0.75 * half && !clip_lo;
      n_hi += upper;
      n_lo += lower;
      if (upper || lower) edge = std::max(edge, std::hypot(a_re[k], a_im[k]));
    }
    // An empty outer band says nothing about decay.
    const bool sampled = (clip_lo || n_lo > 0) && (clip_hi || n_hi > 0);
    if (sampled && edge < kEdgeTol * vnorm) {
      return apply_spectral(z.data(), n, static_cast<int>(m), w.data(), v);
    }
  }
}

}  // namespace su11::detail
