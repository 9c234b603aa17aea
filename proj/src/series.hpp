#pragma once

#include <cmath>

namespace su11::detail {

// c = cosh(sqrt(y)), s = sinh(sqrt(y)) / sqrt(y), both entire in y. For
// y < 0 these are cos and sinc of sqrt(-y).
struct CoshSinhc {
  double c;
  double s;
};

inline CoshSinhc cosh_sinhc(double y, double series_band = 1e-8) {
  if (std::abs(y) < series_band) {
    return {1 + y / 2 * (1 + y / 12 * (1 + y / 30 * (1 + y / 56))),
            1 + y / 6 * (1 + y / 20 * (1 + y / 42 * (1 + y / 72)))};
  }
  if (y > 0) {
    const double x = std::sqrt(y);
    return {std::cosh(x), std::sinh(x) / x};
  }
  const double x = std::sqrt(-y);
  return {std::cos(x), std::sin(x) / x};
}

}  // namespace su11::detail
