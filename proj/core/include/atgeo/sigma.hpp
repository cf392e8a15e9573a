#pragma once

#include <string>
#include <utility>
#include <vector>

namespace atgeo {

enum class SigmaClass { sigma, sigma_prime, sigma_double_prime };
std::string to_string(SigmaClass c);

/// A real profile sigma on [0, domain_end].
struct SigmaProfile {
  enum class Kind { piecewise_linear, hyperbolic_loop, linear_ramp };

  Kind kind = Kind::piecewise_linear;
  std::vector<std::pair<double, double>> knots;  // piecewise-linear and ramp kinds
  double k = 0.0;                                // hyperbolic loop
  double domain_end = 0.0;

  double operator()(double t) const;
  std::string kind_name() const;

  static SigmaProfile zero(double end);
  static SigmaProfile piecewise(std::vector<std::pair<double, double>> knots);
  /// sigma(t) = (k - t) / (1 - t k) on [0, k].
  static SigmaProfile hyperbolic_loop(double k);
  /// Tent: alpha t on [0, t0/2], down to 0 at t0, 0 on [t0, end].
  static SigmaProfile linear_ramp(double alpha, double t0, double end);
  /// lambda t on [0, t0], then linear up to sigma(end) = end.
  static SigmaProfile ramp_to_end(double lambda, double t0, double end);
};

/// Parameters of condition (B): rho and beta (Sigma, Sigma''), alpha
/// (Sigma'), and the domain end h, k or b.
struct SigmaParams {
  double rho = 0.0;
  double beta = 0.0;
  double alpha = 1.0;
  double end = 0.0;
};

struct SigmaReport {
  bool ok = false;
  bool grid_ok = false;
  bool diagonal_ok = false;
  double worst_margin = 0.0;  // min over pairs of rhs - lhs
  double worst_s = 0.0;
  double worst_t = 0.0;
  double worst_rate_margin = 0.0;  // min over the diagonal of the rate form
  long pairs_checked = 0;
};

/// Condition (B) on a grid_n x grid_n grid plus knot pairs, and the rate form
/// along the diagonal (closed-form minima per linear segment). Throws
/// PreconditionError when condition (A) fails.
SigmaReport check_sigma_admissible(const SigmaProfile& sigma, SigmaClass cls,
                                   const SigmaParams& params, int grid_n = 101,
                                   double tol = 1e-12);

/// lhs and rhs of condition (B) at one pair.
std::pair<double, double> condition_b(const SigmaProfile& sigma, SigmaClass cls,
                                      const SigmaParams& params, double s, double t);

}  // namespace atgeo
