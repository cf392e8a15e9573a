#include "atgeo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "atgeo/errors.hpp"
#include "atgeo/metric.hpp"

namespace atgeo {
namespace {

constexpr double kSupTol = 1e-15;

double sgn(double t) { return t < 0.0 ? -1.0 : 1.0; }

bool sector_in_cap(const PatchGeometry& g, double lo, double hi) {
  return g.contains_angle(0.5 * (lo + hi));
}

// (odd, even) amplitudes of loop edge e at t.
std::pair<double, double> loop_amplitudes(int edge, double sigma, double t) {
  switch (edge) {
    case 1: return {sigma, t};
    case 2: return {-t, sigma};
    case 3: return {-sigma, -t};
    case 4: return {t, -sigma};
  }
  throw PreconditionError("closed loop edge must be 1..4");
}

void require_patch_support(const BeltramiSpec& delta, const PatchGeometry& g) {
  for (const auto& c : delta.cells) {
    if (c.term.amplitude == 0.0) continue;
    if (c.schedule_index < g.start_index || !g.contains_angle(0.5 * (c.theta_lo + c.theta_hi))) {
      throw PreconditionError("delta must be supported in the patch region");
    }
  }
  if (delta.tail.kind == TailKind::none) return;
  if (delta.tail.kind != TailKind::schedule || delta.tail.first_index < g.start_index) {
    throw PreconditionError("delta tail must start inside the patch region");
  }
  for (const auto& s : delta.tail.sectors) {
    if (delta.tail.sector_modulus(s) > 0.0 && !sector_in_cap(g, s.theta_lo, s.theta_hi)) {
      throw PreconditionError("delta must be supported in the patch region");
    }
  }
}

double patch_boundary_sup(const BeltramiSpec& base, const PatchGeometry& g) {
  double m = boundary_dilatation(base, BoundaryPoint(g.center));
  for (const auto& s : base.tail.sectors) {
    if (sector_in_cap(g, s.theta_lo, s.theta_hi)) m = std::max(m, base.tail.sector_modulus(s));
  }
  return m;
}

GeodesicFamilySpec patched_family(FamilyKind kind, const BeltramiSpec& base,
                                  const BeltramiSpec& delta, const SigmaProfile& sigma,
                                  double scale, double rho, double beta,
                                  const PatchGeometry& patch) {
  const char* what = kind == FamilyKind::nonsubstantial ? "nonsubstantial family: "
                                                          : "infinitesimal family: ";
  auto fail = [&](const std::string& m) { throw PreconditionError(what + m); };
  if (std::abs(sup_modulus(base) - scale) > kSupTol) fail("sup_modulus(base) must equal h");
  if (!(patch_boundary_sup(base, patch) <= rho)) fail("base exceeds rho on the patch sector");
  if (kind == FamilyKind::nonsubstantial && !(rho < scale)) fail("requires rho < h");
  if (!(sup_modulus(delta) <= beta)) fail("sup_modulus(delta) exceeds beta");
  if (kind == FamilyKind::nonsubstantial && !(beta < scale - rho)) fail("requires beta < h - rho");
  require_patch_support(delta, patch);
  const SigmaClass cls =
      kind == FamilyKind::nonsubstantial ? SigmaClass::sigma : SigmaClass::sigma_double_prime;
  const auto rep = check_sigma_admissible(sigma, cls, {rho, beta, 1.0, scale});
  if (!rep.ok) fail("sigma violates condition (B) for " + to_string(cls));
  GeodesicFamilySpec f;
  f.kind = kind;
  f.schedule = base.tail.schedule;
  f.base = base;
  f.delta = delta;
  f.sigma = sigma;
  f.scale = scale;
  f.rho = rho;
  f.beta = beta;
  f.patch = patch;
  f.t_min = 0.0;
  f.t_max = scale;
  return f;
}

}  // namespace

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::nonsubstantial: return "nonsubstantial";
    case FamilyKind::substantial_example: return "substantial-example";
    case FamilyKind::straight_line: return "straight-line";
    case FamilyKind::closed_loop_edge: return "closed-loop";
    case FamilyKind::infinitesimal: return "infinitesimal";
  }
  return "unknown";
}

BeltramiSpec GeodesicFamilySpec::eval(double t) const {
  switch (kind) {
    case FamilyKind::nonsubstantial:
    case FamilyKind::infinitesimal:
      return linear_combination(t / scale, base, sigma(t), delta);
    case FamilyKind::substantial_example: {
      const Complex odd = sigma(t) * alpha;
      const Complex even = t;
      return schedule_spec(schedule, schedule->J(), odd, even, {TailSector{0.0, kTwoPi, odd, even}});
    }
    case FamilyKind::closed_loop_edge: {
      const auto [odd, even] = loop_amplitudes(edge, sigma(t), t);
      return schedule_spec(schedule, schedule->J(), odd, even,
                           {TailSector{0.0, kTwoPi, odd, even}});
    }
    case FamilyKind::straight_line: {
      if (!(std::abs(t) < 1.0)) throw DomainError("straight line parameter must satisfy |t| < 1");
      if (std::abs(t) <= scale) return scale_spec(t);
      BeltramiSpec out = base;
      const double off = sgn(t);
      for (auto& c : out.cells) c.term.amplitude *= off;
      for (auto& s : out.tail.sectors) {
        const double f = sector_in_cap(patch, s.theta_lo, s.theta_hi) ? t / scale : off;
        s.odd *= f;
        s.even *= f;
      }
      return out;
    }
  }
  throw PreconditionError("unknown family kind");
}

BeltramiSpec GeodesicFamilySpec::scale_spec(double t) const {
  return atgeo::scale(base, t / this->scale);
}

std::string GeodesicFamilySpec::name() const {
  std::string n = to_string(kind);
  if (kind == FamilyKind::closed_loop_edge) n += "[" + std::to_string(edge) + "]";
  return n;
}

GeodesicFamilySpec family_nonsubstantial(const BeltramiSpec& base, const BeltramiSpec& delta,
                                         const SigmaProfile& sigma, double h, double rho,
                                         double beta, const PatchGeometry& patch) {
  return patched_family(FamilyKind::nonsubstantial, base, delta, sigma, h, rho, beta, patch);
}

GeodesicFamilySpec family_infinitesimal(const BeltramiSpec& base, const BeltramiSpec& delta,
                                        const SigmaProfile& sigma, double b, double rho,
                                        double beta, const PatchGeometry& patch) {
  return patched_family(FamilyKind::infinitesimal, base, delta, sigma, b, rho, beta, patch);
}

GeodesicFamilySpec family_substantial_example(const SchedulePtr& schedule,
                                              const SigmaProfile& sigma, double alpha) {
  if (!schedule) throw PreconditionError("substantial example: missing schedule");
  if (!(alpha > 0.0 && alpha < 1.0)) throw PreconditionError("substantial example: requires 0 < alpha < 1");
  const double k = schedule->k();
  const auto rep = check_sigma_admissible(sigma, SigmaClass::sigma_prime, {0.0, 0.0, alpha, k});
  if (!rep.ok) throw PreconditionError("substantial example: sigma violates condition (B) for Sigma'");
  GeodesicFamilySpec f;
  f.kind = FamilyKind::substantial_example;
  f.schedule = schedule;
  f.base = build_modulated(schedule, alpha, 1.0);
  f.sigma = sigma;
  f.scale = k;
  f.alpha = alpha;
  f.t_min = 0.0;
  f.t_max = k;
  return f;
}

GeodesicFamilySpec family_straight_line(const BeltramiSpec& base, const PatchGeometry& cap,
                                        double h) {
  if (!(h > 0.0 && h < 1.0)) throw PreconditionError("straight line: requires 0 < h < 1");
  if (std::abs(sup_modulus(base) - h) > kSupTol || std::abs(h_star(base) - h) > kSupTol) {
    throw PreconditionError("straight line: requires sup_modulus(base) = h_star(base) = h");
  }
  if (base.tail.kind != TailKind::schedule || base.tail.first_index < cap.start_index) {
    throw PreconditionError("straight line: base tail must start inside the cap region");
  }
  GeodesicFamilySpec f;
  f.kind = FamilyKind::straight_line;
  f.schedule = base.tail.schedule;
  f.base = base;
  f.scale = h;
  f.patch = cap;
  f.t_min = -1.0;
  f.t_max = 1.0;
  return f;
}

std::array<BeltramiSpec, 4> loop_vertices(const SchedulePtr& schedule) {
  const double k = schedule->k();
  std::array<BeltramiSpec, 4> out;
  const std::array<std::pair<double, double>, 4> amps{{{k, 0.0}, {0.0, k}, {-k, 0.0}, {0.0, -k}}};
  for (int i = 0; i < 4; ++i) {
    const auto [o, e] = amps[i];
    out[i] = schedule_spec(schedule, schedule->J(), o, e, {TailSector{0.0, kTwoPi, o, e}});
  }
  return out;
}

std::array<GeodesicFamilySpec, 4> family_closed_loop(const SchedulePtr& schedule) {
  if (!schedule) throw PreconditionError("closed loop: missing schedule");
  std::array<GeodesicFamilySpec, 4> out;
  for (int e = 1; e <= 4; ++e) {
    auto& f = out[e - 1];
    f.kind = FamilyKind::closed_loop_edge;
    f.schedule = schedule;
    f.sigma = SigmaProfile::hyperbolic_loop(schedule->k());
    f.scale = schedule->k();
    f.edge = e;
    f.t_min = 0.0;
    f.t_max = schedule->k();
  }
  return out;
}

std::vector<DegeneratingFamily> monomial_dictionary(const SchedulePtr& schedule) {
  return {DegeneratingFamily::monomials(schedule, Parity::all),
          DegeneratingFamily::monomials(schedule, Parity::odd),
          DegeneratingFamily::monomials(schedule, Parity::even)};
}

CertifiedInterval certify_distance(const BeltramiSpec& a, const BeltramiSpec& b,
                                   const std::vector<DegeneratingFamily>& families, double tol) {
  const double u = cellwise_combo_bound(a, b);
  const double upper = std::atanh(u);
  const std::string upper_method = "cellwise-combo-bound";
  if (u == 0.0) return CertifiedInterval::make(0.0, 0.0, "zero combination", upper_method, tol);
  const ComboSpec combo = combine_spec(a, b);
  if (!combo.exact) {
    auto ci = CertifiedInterval::make(0.0, upper, "none (mixed twists)", upper_method, tol);
    ci.status = CertStatus::partial;
    return ci;
  }
  const double tol_dil = 0.5 * tol * (1.0 - u * u);
  double best = 0.0;
  std::string method = "none";
  for (const auto& fam : families) {
    const auto ci = pairing_limsup(combo.spec, fam, 12, {tol_dil, ReichSchedule::kHorizon});
    if (ci.lower > best) {
      best = ci.lower;
      method = ci.lower_method;
    }
    if (u - best <= tol_dil) break;
  }
  return CertifiedInterval::make(std::atanh(std::min(best, u)), upper, method, upper_method, tol);
}

CertifiedInterval certify_distance(const BeltramiSpec& a, const BeltramiSpec& b,
                                   const DegeneratingFamily& family, double tol) {
  return certify_distance(a, b, std::vector<DegeneratingFamily>{family}, tol);
}

std::vector<double> default_grid(const GeodesicFamilySpec& family, int points) {
  if (family.kind == FamilyKind::straight_line) {
    throw PreconditionError("straight line families need an explicit grid");
  }
  std::set<double> ts;
  for (int i = 0; i < points; ++i) {
    ts.insert(family.t_min + (family.t_max - family.t_min) * i / (points - 1));
  }
  for (const auto& [t, v] : family.sigma.knots) {
    if (t >= family.t_min && t <= family.t_max) ts.insert(t);
  }
  return {ts.begin(), ts.end()};
}

GeodesicReport certify_geodesic(const GeodesicFamilySpec& family, const std::vector<double>& grid,
                                const std::vector<DegeneratingFamily>& families, double tol) {
  if (grid.size() < 2) throw PreconditionError("certify_geodesic: grid needs at least two points");
  std::vector<double> ts = grid;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (double t : ts) {
    if (t < family.t_min || t > family.t_max) throw PreconditionError("grid point outside the family domain");
  }
  std::vector<BeltramiSpec> specs;
  for (double t : ts) specs.push_back(family.eval(t));
  GeodesicReport rep;
  const bool partial_allowed = family.kind == FamilyKind::nonsubstantial;
  bool all_ok = true;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      GeodesicRow row;
      row.s = ts[i];
      row.t = ts[j];
      row.target = hyperbolic_distance(HyperbolicParam(ts[i]), HyperbolicParam(ts[j]));
      row.interval = certify_distance(specs[i], specs[j], families, tol);
      const auto& ci = row.interval;
      row.contains = ci.lower - tol <= row.target && row.target <= ci.upper + tol;
      if (ci.upper < row.target - tol) rep.hard_failure = true;
      if (ci.status == CertStatus::certified) {
        ++rep.certified;
        rep.max_deviation = std::max(rep.max_deviation, std::abs(ci.midpoint() - row.target));
      } else {
        ++rep.partial;
        if (!partial_allowed) all_ok = false;
      }
      if (!row.contains) all_ok = false;
      rep.rows.push_back(row);
    }
  }
  rep.ok = all_ok && !rep.hard_failure;
  return rep;
}

namespace {

BeltramiSpec direction_difference(const GeodesicFamilySpec& f1, const GeodesicFamilySpec& f2,
                                  double t) {
  if (!(t > 0.0)) throw PreconditionError("distinctness probe must satisfy t > 0");
  return linear_combination(1.0 / t, f1.eval(t), -1.0 / t, f2.eval(t));
}

}  // namespace

double distinctness_gap(const GeodesicFamilySpec& f1, const GeodesicFamilySpec& f2,
                        double t_probe, const DegeneratingFamily& family) {
  const BeltramiSpec diff = direction_difference(f1, f2, t_probe);
  if (sup_modulus(diff) == 0.0) return 0.0;
  return std::max(0.0, pairing_limsup(diff, family, 12, {1e-12, 32}).lower);
}

double distinctness_limit(const GeodesicFamilySpec& f1, const GeodesicFamilySpec& f2,
                          double t_probe, Parity parity) {
  return schedule_pairing_limit(direction_difference(f1, f2, t_probe), parity).value_or(0.0);
}

PropagationReport substantial_propagation_check(const GeodesicFamilySpec& family,
                                                const std::vector<double>& grid,
                                                const std::vector<double>& p_samples,
                                                double alpha) {
  PropagationReport rep;
  rep.exact = true;
  for (double t : grid) {
    const BeltramiSpec spec = family.eval(t);
    for (double p : p_samples) {
      const double v = boundary_dilatation(spec, BoundaryPoint(p));
      rep.rows.push_back({t, p, v, t});
      if (v != t) rep.exact = false;
    }
    const double h = (t + alpha) / (1.0 + t * alpha);
    const double err = std::abs(dilatation_to_distance(DilatationValue(h)) -
                                dilatation_to_distance(DilatationValue(t)) -
                                dilatation_to_distance(DilatationValue(alpha)));
    rep.additivity_error = std::max(rep.additivity_error, err);
  }
  rep.ok = rep.exact && rep.additivity_error <= 1e-12;
  return rep;
}

}  // namespace atgeo
