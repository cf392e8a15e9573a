#include "atgeo/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "atgeo/errors.hpp"

namespace atgeo {
namespace {

template <class Fn>
BeltramiSpec map_amplitudes(const BeltramiSpec& spec, Fn fn) {
  BeltramiSpec out = spec;
  for (auto& c : out.cells) c.term.amplitude = fn(c.term.amplitude);
  for (auto& s : out.tail.sectors) {
    s.odd = fn(s.odd);
    s.even = fn(s.even);
  }
  out.norm_class = NormClass::unrestricted;
  return out;
}

Complex i_weight(Complex a) { return a / (1.0 - std::norm(a)); }
Complex delta_weight(Complex a) { return std::norm(a) / (1.0 - std::norm(a)); }

double parity_limit(const BeltramiSpec& spec, Parity parity) {
  return schedule_pairing_limit(spec, parity).value_or(0.0);
}

// Lower estimate of limsup of int w |phi_n| with w >= 0 cellwise constant.
double delta_finite(const BeltramiSpec& weights, const DegeneratingFamily& family, int depth) {
  double best = 0.0;
  const int D = std::min(depth, family.max_members());
  const Materialized mat = materialize(weights, ReichSchedule::kHorizon);
  for (int i = D - (D + 1) / 2 + 1; i <= D; ++i) {
    const auto m = std::get<MonomialQD>(family.member(i));
    Real sum = 0.0L;
    for (const auto& c : mat.cells) {
      sum += static_cast<Real>(c.term.amplitude.real()) * l1_mass_annulus(m, c.r_in, c.r_out) *
             (c.theta_hi - c.theta_lo) / kTwoPi;
    }
    best = std::max(best, static_cast<double>(sum));
  }
  return best;
}

}  // namespace

AsymptoticQuantities estimate_IJdelta(const BeltramiSpec& spec, const DegeneratingFamily& family,
                                      int depth) {
  if (!(sup_modulus(spec) < 1.0)) throw PreconditionError("estimate_IJdelta: requires sup < 1");
  AsymptoticQuantities q;
  q.upper_envelope = h_star(spec);
  const BeltramiSpec wi = map_amplitudes(spec, i_weight);
  const BeltramiSpec wd = map_amplitudes(spec, delta_weight);
  const bool monomial = family.kind == DegeneratingFamily::Kind::monomial_schedule;
  if (monomial && spec.tail.kind != TailKind::constant) {
    q.J_lower = parity_limit(spec, family.parity);
    q.I_lower = parity_limit(wi, family.parity);
    q.delta_lower = parity_limit(wd, family.parity);
    q.method = "schedule-limit " + family.name();
    return q;
  }
  q.J_lower = std::max(0.0, pairing_limsup(spec, family, depth, {0.0, depth}).lower);
  q.I_lower = std::max(0.0, pairing_limsup(wi, family, depth, {0.0, depth}).lower);
  q.delta_lower = monomial ? delta_finite(wd, family, depth) : 0.0;
  q.method = family.name() + " depth " + std::to_string(depth);
  return q;
}

FundamentalReport check_fundamental_inequalities(const BeltramiSpec& spec,
                                                 const DegeneratingFamily& family, int depth,
                                                 double tol) {
  FundamentalReport rep;
  rep.q = estimate_IJdelta(spec, family, depth);
  const auto& q = rep.q;
  rep.certified = q.upper_envelope - q.J_lower <= tol;
  rep.h = q.upper_envelope;
  const double h = rep.h;
  rep.margin_upper = h / (1.0 + h) + q.delta_lower - q.I_lower;
  rep.margin_lower = q.I_lower - (h / (1.0 - h) - q.delta_lower);
  rep.ok = !rep.certified || (rep.margin_upper >= -tol && rep.margin_lower >= -tol);
  return rep;
}

VariationReport binary_variation_check(const BeltramiSpec& mu, const BeltramiSpec& nu,
                                       const std::vector<double>& t_schedule,
                                       const std::vector<DegeneratingFamily>& families,
                                       double final_tol, double extrapolation_tol) {
  if (t_schedule.size() < 2) throw PreconditionError("binary_variation_check: needs two t values");
  VariationReport rep;
  const BeltramiSpec diff = linear_combination(1.0, mu, -1.0, nu);
  for (const auto& f : families) {
    if (f.kind == DegeneratingFamily::Kind::monomial_schedule && diff.tail.kind != TailKind::constant) {
      rep.J_hat = std::max(rep.J_hat, parity_limit(diff, f.parity));
    } else {
      rep.J_hat = std::max(rep.J_hat, pairing_limsup(diff, f, 12, {1e-12, 32}).lower);
    }
  }
  rep.all_certified = true;
  rep.decreasing = true;
  for (double t : t_schedule) {
    VariationRow row;
    row.t = t;
    row.distance = certify_distance(scale(mu, t), scale(nu, t), families, 1e-11);
    row.ratio = row.distance.midpoint() / t;
    row.residual = std::abs(row.ratio - rep.J_hat);
    if (row.distance.status != CertStatus::certified) rep.all_certified = false;
    if (!rep.rows.empty() && !(row.residual < rep.rows.back().residual)) rep.decreasing = false;
    rep.rows.push_back(row);
  }
  const auto& a = rep.rows[rep.rows.size() - 2];
  const auto& b = rep.rows.back();
  rep.extrapolated = (4.0 * b.ratio - a.ratio) / 3.0;
  rep.extrapolated_residual = std::abs(rep.extrapolated - rep.J_hat);
  rep.ok = rep.all_certified && rep.decreasing && b.residual <= final_tol &&
           rep.extrapolated_residual <= extrapolation_tol;
  return rep;
}

CertifiedInterval az_norm_sandwich(const BeltramiSpec& spec,
                                   const std::vector<DegeneratingFamily>& families, int depth,
                                   double tol) {
  const double upper = h_star(spec);
  double best = 0.0;
  std::string method = "none";
  for (const auto& f : families) {
    const auto ci = pairing_limsup(spec, f, depth, {tol, 32});
    if (ci.lower > best) {
      best = ci.lower;
      method = ci.lower_method;
    }
  }
  return CertifiedInterval::make(best, upper, method, "b*", tol);
}

AzReport certify_az_geodesic(const GeodesicFamilySpec& family, const std::vector<double>& grid,
                             const std::vector<DegeneratingFamily>& families, double tol) {
  if (family.kind != FamilyKind::infinitesimal) {
    throw PreconditionError("certify_az_geodesic: requires an infinitesimal family");
  }
  std::vector<double> ts = grid;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<BeltramiSpec> specs;
  for (double t : ts) specs.push_back(family.eval(t));
  AzReport rep;
  bool all = true;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      AzRow row;
      row.s = ts[i];
      row.t = ts[j];
      row.target = std::abs(ts[i] - ts[j]);
      row.norm = az_norm_sandwich(linear_combination(1.0, specs[i], -1.0, specs[j]), families, 12,
                                  0.1 * tol);
      row.contains = row.norm.lower - tol <= row.target && row.target <= row.norm.upper + tol;
      if (row.norm.upper < row.target - tol) rep.hard_failure = true;
      rep.max_deviation = std::max(rep.max_deviation, std::abs(row.norm.midpoint() - row.target));
      if (!row.contains) all = false;
      rep.rows.push_back(row);
    }
  }
  rep.ok = all && !rep.hard_failure;
  return rep;
}

}  // namespace atgeo
