#pragma once

#include <complex>
#include <functional>

namespace atgeo {

struct QuadratureResult {
  std::complex<double> value;
  double error = 0.0;  // estimated absolute error
  long subcells = 0;
  bool converged = false;
};

/// Adaptive tensor Gauss-Kronrod (7/15) rule on the polar rectangle
/// [r0, r1] x [t0, t1] for the integral of f(r, theta) r dr dtheta.
QuadratureResult integrate_polar(const std::function<std::complex<double>(double, double)>& f,
                                 double r0, double r1, double t0, double t1,
                                 double abs_tol = 1e-9, long max_subcells = 1L << 20);

}  // namespace atgeo
