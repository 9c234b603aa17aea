#pragma once

#include <Eigen/Dense>

namespace su11::detail {

// exp(-i H) v for real symmetric tridiagonal H with diagonal `diag` and
// off-diagonal `off` (size n - 1). Only the eigenpairs in an energy window
// around v's Rayleigh quotient are computed; the window grows until the
// coefficients at its edges are negligible.
Eigen::VectorXcd expm_tridiagonal(const Eigen::VectorXd& diag,
                                  const Eigen::VectorXd& off,
                                  const Eigen::VectorXcd& v);

}  // namespace su11::detail
