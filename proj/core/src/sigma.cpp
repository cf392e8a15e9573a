#include "atgeo/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "atgeo/errors.hpp"

namespace atgeo {
namespace {

constexpr double kEndpointTol = 1e-12;

void check_condition_a(const SigmaProfile& sigma, SigmaClass cls, double end) {
  if (std::abs(sigma.domain_end - end) > kEndpointTol) {
    throw PreconditionError("sigma domain end " + std::to_string(sigma.domain_end) +
                            " differs from the class parameter " + std::to_string(end));
  }
  if (std::abs(sigma(0.0)) > kEndpointTol) throw PreconditionError("condition (A): sigma(0) != 0");
  const double want = cls == SigmaClass::sigma_prime ? end : 0.0;
  if (std::abs(sigma(end) - want) > kEndpointTol) {
    throw PreconditionError("condition (A): sigma(end) != " + std::to_string(want));
  }
}

// Minimum of a t^2 + b t + c on [lo, hi].
double quadratic_min(double a, double b, double c, double lo, double hi) {
  auto q = [&](double t) { return (a * t + b) * t + c; };
  double m = std::min(q(lo), q(hi));
  if (a > 0.0) {
    const double v = -b / (2.0 * a);
    if (v > lo && v < hi) m = std::min(m, q(v));
  }
  return m;
}

// Rate form of (B) as s -> t along a linear piece with slope m, written as
// q(t) >= 0 with q quadratic in t (sigma(t) = sigma0 + m (t - t0)).
double segment_rate_margin(SigmaClass cls, const SigmaParams& p, double t0, double t1,
                           double sigma0, double m) {
  const double am = std::abs(m);
  const double c0 = sigma0 - m * t0;  // sigma(t) = c0 + m t
  switch (cls) {
    case SigmaClass::sigma_double_prime:
      return 1.0 - p.rho / p.end - am * p.beta;
    case SigmaClass::sigma_prime: {
      // 1 - alpha^2 sigma^2 - alpha |m| (1 - t^2) >= 0
      const double a2 = p.alpha * p.alpha;
      const double a = -a2 * m * m + p.alpha * am;
      const double b = -2.0 * a2 * c0 * m;
      const double c = 1.0 - a2 * c0 * c0 - p.alpha * am;
      return quadratic_min(a, b, c, t0, t1);
    }
    case SigmaClass::sigma: {
      // 1 - g(t)^2 - R (1 - t^2) >= 0 with g = t rho/h + |sigma| beta, R = rho/h + |m| beta.
      // Split at a sign change of sigma so |sigma| is linear on each part.
      const double r = p.rho / p.end;
      const double R = r + am * p.beta;
      double lo = t0;
      double out = std::numeric_limits<double>::infinity();
      std::vector<double> cuts{t0};
      if (m != 0.0) {
        const double z = -c0 / m;
        if (z > t0 && z < t1) cuts.push_back(z);
      }
      cuts.push_back(t1);
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        lo = cuts[i];
        const double hi = cuts[i + 1];
        const double mid = c0 + m * 0.5 * (lo + hi);
        const double sg = mid >= 0.0 ? 1.0 : -1.0;
        const double gs = r + sg * m * p.beta;   // slope of g
        const double gc = sg * c0 * p.beta;      // intercept of g
        const double a = -gs * gs + R;
        const double b = -2.0 * gs * gc;
        const double c = 1.0 - gc * gc - R;
        out = std::min(out, quadratic_min(a, b, c, lo, hi));
      }
      return out;
    }
  }
  return 0.0;
}

}  // namespace

std::string to_string(SigmaClass c) {
  switch (c) {
    case SigmaClass::sigma: return "Sigma";
    case SigmaClass::sigma_prime: return "Sigma'";
    case SigmaClass::sigma_double_prime: return "Sigma''";
  }
  return "Sigma";
}

double SigmaProfile::operator()(double t) const {
  if (kind == Kind::hyperbolic_loop) return (k - t) / (1.0 - t * k);
  if (knots.empty()) return 0.0;
  if (t <= knots.front().first) return knots.front().second;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const auto [a, fa] = knots[i];
    const auto [b, fb] = knots[i + 1];
    if (t <= b) {
      if (t == b) return fb;
      return fa + (fb - fa) * (t - a) / (b - a);
    }
  }
  return knots.back().second;
}

std::string SigmaProfile::kind_name() const {
  switch (kind) {
    case Kind::piecewise_linear: return "piecewise-linear";
    case Kind::hyperbolic_loop: return "hyperbolic-loop";
    case Kind::linear_ramp: return "linear-ramp";
  }
  return "piecewise-linear";
}

SigmaProfile SigmaProfile::zero(double end) { return piecewise({{0.0, 0.0}, {end, 0.0}}); }

SigmaProfile SigmaProfile::piecewise(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw PreconditionError("sigma profile needs at least two knots");
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i].first < knots[i + 1].first)) {
      throw PreconditionError("sigma knots must be strictly increasing in t");
    }
  }
  if (knots.front().first != 0.0) throw PreconditionError("sigma knots must start at t = 0");
  SigmaProfile s;
  s.domain_end = knots.back().first;
  s.knots = std::move(knots);
  return s;
}

SigmaProfile SigmaProfile::hyperbolic_loop(double k) {
  if (!(k > 0.0 && k < 1.0)) throw PreconditionError("hyperbolic loop requires 0 < k < 1");
  SigmaProfile s;
  s.kind = Kind::hyperbolic_loop;
  s.k = k;
  s.domain_end = k;
  return s;
}

SigmaProfile SigmaProfile::linear_ramp(double alpha, double t0, double end) {
  if (!(t0 > 0.0 && t0 <= end)) throw PreconditionError("linear ramp requires 0 < t0 <= end");
  std::vector<std::pair<double, double>> k{{0.0, 0.0}, {t0 / 2, alpha * t0 / 2}, {t0, 0.0}};
  if (t0 < end) k.emplace_back(end, 0.0);
  SigmaProfile s = piecewise(std::move(k));
  s.kind = Kind::linear_ramp;
  return s;
}

SigmaProfile SigmaProfile::ramp_to_end(double lambda, double t0, double end) {
  if (!(t0 > 0.0 && t0 < end)) throw PreconditionError("ramp requires 0 < t0 < end");
  SigmaProfile s = piecewise({{0.0, 0.0}, {t0, lambda * t0}, {end, end}});
  s.kind = Kind::linear_ramp;
  return s;
}

std::pair<double, double> condition_b(const SigmaProfile& sigma, SigmaClass cls,
                                      const SigmaParams& p, double s, double t) {
  const double ds = std::abs(s - t);
  const double dsig = std::abs(sigma(s) - sigma(t));
  switch (cls) {
    case SigmaClass::sigma: {
      const double r = p.rho / p.end;
      const double num = ds * r + dsig * p.beta;
      const double den = 1.0 - (s * r + std::abs(sigma(s)) * p.beta) *
                                   (t * r + std::abs(sigma(t)) * p.beta);
      return {num / den, ds / (1.0 - s * t)};
    }
    case SigmaClass::sigma_prime:
      return {dsig * p.alpha / std::abs(1.0 - sigma(t) * sigma(s) * p.alpha * p.alpha),
              ds / (1.0 - s * t)};
    case SigmaClass::sigma_double_prime:
      return {ds * p.rho / p.end + dsig * p.beta, ds};
  }
  return {0.0, 0.0};
}

SigmaReport check_sigma_admissible(const SigmaProfile& sigma, SigmaClass cls,
                                   const SigmaParams& params, int grid_n, double tol) {
  if (grid_n < 2) throw PreconditionError("check_sigma_admissible: grid_n must be >= 2");
  if (!(params.end > 0.0)) throw PreconditionError("check_sigma_admissible: end must be > 0");
  check_condition_a(sigma, cls, params.end);

  std::vector<double> ts;
  for (int i = 0; i < grid_n; ++i) ts.push_back(params.end * i / (grid_n - 1));
  for (const auto& [t, v] : sigma.knots) ts.push_back(t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  SigmaReport rep;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const auto [lhs, rhs] = condition_b(sigma, cls, params, ts[i], ts[j]);
      ++rep.pairs_checked;
      if (rhs - lhs < rep.worst_margin) {
        rep.worst_margin = rhs - lhs;
        rep.worst_s = ts[i];
        rep.worst_t = ts[j];
      }
    }
  }
  rep.grid_ok = rep.worst_margin >= -tol;

  rep.worst_rate_margin = std::numeric_limits<double>::infinity();
  if (sigma.kind == SigmaProfile::Kind::hyperbolic_loop) {
    // Rate form of (B) for sigma' = -(1 - k^2)/(1 - t k)^2, sampled densely.
    for (int i = 0; i <= 4096; ++i) {
      const double t = params.end * i / 4096.0;
      const double sv = sigma(t);
      const double d = (1.0 - sigma.k * sigma.k) / ((1.0 - t * sigma.k) * (1.0 - t * sigma.k));
      const double a = params.alpha;
      const double lhs = cls == SigmaClass::sigma_prime ? d * a / (1.0 - sv * sv * a * a) : d;
      rep.worst_rate_margin = std::min(rep.worst_rate_margin, 1.0 / (1.0 - t * t) - lhs);
    }
  } else {
    for (std::size_t i = 0; i + 1 < sigma.knots.size(); ++i) {
      const auto [a, fa] = sigma.knots[i];
      const auto [b, fb] = sigma.knots[i + 1];
      rep.worst_rate_margin = std::min(
          rep.worst_rate_margin, segment_rate_margin(cls, params, a, b, fa, (fb - fa) / (b - a)));
    }
  }
  rep.diagonal_ok = rep.worst_rate_margin >= -tol;
  rep.ok = rep.grid_ok && rep.diagonal_ok;
  return rep;
}

}  // namespace atgeo
