#include "atgeo/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "atgeo/errors.hpp"
#include "atgeo/estimators.hpp"
#include "atgeo/metric.hpp"
#include "atgeo/reich.hpp"
#include "atgeo/sigma.hpp"
#include "json.hpp"

namespace atgeo {
namespace {

std::string num(double x) { return csv_number(x); }

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

CheckResult make_check(int id, std::string tag, std::string title) {
  CheckResult r;
  r.criterion = id;
  r.tag = std::move(tag);
  r.title = std::move(title);
  return r;
}

void add_table(ReportBundle* b, std::string stem, CsvTable t) {
  if (b) b->tables.emplace_back(std::move(stem), std::move(t));
}

SchedulePtr make_schedule(const ReproduceConfig& c) {
  return std::make_shared<const ReichSchedule>(build_schedule(c.k, c.J));
}

std::vector<double> equispaced(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
  return out;
}

// ---- 1

CheckResult fs_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(1, "fs-inequalities", "schedule inequalities and corrupted control");
  const auto s = build_schedule(c.k, c.J);
  const auto rep = verify_fs_inequalities(s);
  CsvTable t({"tag", "j", "n", "one_minus_r", "inner", "outer", "middle", "bound", "ok"});
  Real worst = 1.0L;
  for (const auto& row : rep.rows) {
    char n[64], cm[64];
    std::snprintf(n, sizeof n, "%.21Lg", row.n);
    std::snprintf(cm, sizeof cm, "%.21Lg", row.one_minus_r);
    t.add_row({r.tag, std::to_string(row.j), n, cm, num(static_cast<double>(row.inner_mass)),
               num(static_cast<double>(row.outer_mass)), num(static_cast<double>(row.middle_mass)),
               num(static_cast<double>(row.bound)), row.ok() ? "1" : "0"});
    if (row.j >= 2) {
      worst = std::min({worst, (row.bound - row.inner_mass) / row.bound,
                        (row.bound - row.outer_mass) / row.bound});
    }
  }
  add_table(b, "fs_inequalities", std::move(t));
  const auto bad = ReichSchedule::from_prefix(c.k, {Winding(1), Winding(5)},
                                              {Radius::from_value(0.8L), Radius::from_value(0.9L)});
  const auto neg = verify_fs_inequalities(bad);
  const bool neg_outer =
      std::any_of(neg.violations.begin(), neg.violations.end(),
                  [](const FsViolation& v) { return v.j == 2 && v.inequality == "outer"; });
  r.pass = rep.ok() && neg_outer;
  r.detail = "J=" + std::to_string(c.J) + " violations=" + std::to_string(rep.violations.size()) +
             " min relative margin=" + num(static_cast<double>(worst)) +
             " corrupted r2=0.90 fails outer: " + (neg_outer ? "yes" : "no");
  return r;
}

// ---- 2

CheckResult hamilton_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(2, "hamilton-bound", "pairings of kappa with phi_{n_j}");
  const auto s = make_schedule(c);
  const auto kappa = build_kappa(s);
  CsvTable t({"tag", "j", "re", "im", "err", "lower_bound", "gap", "gap_bound"});
  bool ok = true;
  double worst = 1.0;
  for (int j = 2; j <= c.J; ++j) {
    const auto p = pair(kappa, MonomialQD{s->winding(j)});
    const double half = std::ldexp(1.0, -(j - 1));
    const double bound = c.k * (1.0 - half) - c.k * half;
    const double gap = c.k - p.value.real();
    const double gap_bound = c.k * std::ldexp(1.0, -(j - 2));
    if (!(p.value.real() - p.error >= bound) || !(gap + p.error <= gap_bound)) ok = false;
    worst = std::min(worst, p.value.real() - p.error - bound);
    t.add_row({r.tag, std::to_string(j), num(p.value.real()), num(p.value.imag()), num(p.error),
               num(bound), num(gap), num(gap_bound)});
  }
  add_table(b, "hamilton_bound", std::move(t));
  r.pass = ok;
  r.detail = "j=2.." + std::to_string(c.J) + " min margin=" + num(worst);
  return r;
}

// ---- 3

CheckResult step2_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(3, "step2-extremal", "modulated sandwiches collapse to max(alpha k, beta k)");
  const auto s = make_schedule(c);
  const auto dict = monomial_dictionary(s);
  CsvTable t({"tag", "alpha", "beta", "lower", "upper", "expected", "family", "status"});
  bool ok = true;
  double worst = 0.0;
  for (auto [a, be] : {std::pair{0.3, 1.0}, std::pair{1.0, 0.3}, std::pair{1.0, 1.0}}) {
    const auto mu = build_modulated(s, a, be);
    const auto ci = az_norm_sandwich(mu, dict, c.depth, 1e-4);
    const double expect = std::max(a * c.k, be * c.k);
    const double dev = std::max(std::abs(ci.lower - expect), std::abs(ci.upper - expect));
    worst = std::max(worst, dev);
    if (dev > 1e-4 || ci.status != CertStatus::certified) ok = false;
    t.add_row({r.tag, num(a), num(be), num(ci.lower), num(ci.upper), num(expect), ci.lower_method,
               to_string(ci.status)});
  }
  add_table(b, "step2_extremal", std::move(t));
  r.pass = ok;
  r.detail = "max deviation=" + num(worst) + " (tol 1e-4)";
  return r;
}

// ---- 4

GeodesicFamilySpec step3_family(const SchedulePtr& s, const ReproduceConfig& c, double lambda) {
  return family_substantial_example(
      s, SigmaProfile::ramp_to_end(lambda, c.step3_t0, c.k), c.step3_alpha);
}

CheckResult step3_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(4, "step3-geodesic", "ramp geodesics and their distinctness gap");
  const auto s = make_schedule(c);
  const auto dict = monomial_dictionary(s);
  bool geo_ok = true;
  double worst = 0.0;
  for (double lambda : {c.lambda2, c.lambda1}) {
    const auto f = step3_family(s, c, lambda);
    const auto rep = certify_geodesic(f, default_grid(f, c.grid_points), dict, 1e-9);
    if (rep.hard_failure) r.hard_failure = true;
    if (!rep.ok || rep.max_deviation > 1e-6) geo_ok = false;
    worst = std::max(worst, rep.max_deviation);
    add_table(b, "step3_geodesic_lambda" + fmt("%g", lambda), geodesic_csv(rep, r.tag));
  }
  const auto f1 = step3_family(s, c, c.lambda1);
  const auto f2 = step3_family(s, c, c.lambda2);
  const double probe = 0.5 * c.step3_t0;
  const double limit = distinctness_limit(f1, f2, probe, Parity::odd);
  const double gap = distinctness_gap(f1, f2, probe, DegeneratingFamily::monomials(s, Parity::odd));
  const double claimed = c.lambda1 - c.lambda2;
  CsvTable t({"tag", "lambda1", "lambda2", "t_probe", "limit", "certified_lower", "claimed"});
  t.add_row({r.tag, num(c.lambda1), num(c.lambda2), num(probe), num(limit), num(gap), num(claimed)});
  add_table(b, "distinctness", std::move(t));
  const bool gap_ok = std::abs(limit - claimed) <= 1e-12;
  r.pass = geo_ok && gap_ok;
  r.detail = "max |d - d_H|=" + num(worst) + " geodesics " + (geo_ok ? "ok" : "FAIL") +
             "; distinctness limit=" + num(limit) + " certified lower=" + num(gap) +
             " expected lambda1-lambda2=" + num(claimed);
  return r;
}

// ---- 5

CheckResult loop_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(5, "closed-loop", "four-edge closed geodesic");
  const auto s = make_schedule(c);
  const auto dict = monomial_dictionary(s);
  const auto eta = loop_vertices(s);
  const double R = dilatation_to_distance(DilatationValue(c.k));
  auto d = [&](int i, int j) { return certify_distance(eta[i - 1], eta[j - 1], dict, 1e-11); };
  CsvTable t({"tag", "from", "to", "lower", "upper", "expected", "status"});
  bool ok = true;
  double worst = 0.0;
  auto check = [&](int i, int j, double expect) {
    const auto ci = d(i, j);
    const double dev = std::max(std::abs(ci.lower - expect), std::abs(ci.upper - expect));
    worst = std::max(worst, dev);
    if (dev > 1e-9 || ci.status != CertStatus::certified) ok = false;
    if (ci.upper < expect - 1e-9) r.hard_failure = true;
    t.add_row({r.tag, "eta" + std::to_string(i), "eta" + std::to_string(j), num(ci.lower),
               num(ci.upper), num(expect), to_string(ci.status)});
    return ci.midpoint();
  };
  for (int e = 1; e <= 4; ++e) check(e, e % 4 + 1, R);
  const double d13 = check(1, 3, 2 * R);
  const double d24 = check(2, 4, 2 * R);
  const double path_a = d(2, 1).midpoint() + d(1, 4).midpoint();
  const double path_b = d(2, 3).midpoint() + d(3, 4).midpoint();
  const double path_dev = std::max(std::abs(path_a - d24), std::abs(path_b - d24));
  if (path_dev > 1e-9) ok = false;
  add_table(b, "closed_loop", std::move(t));
  const auto edges = family_closed_loop(s);
  const std::vector<double> grid{0.0, c.k / 4, c.k / 2, 3 * c.k / 4, c.k};
  for (const auto& f : edges) {
    const auto rep = certify_geodesic(f, grid, dict, 1e-9);
    if (rep.hard_failure) r.hard_failure = true;
    if (!rep.ok || rep.max_deviation > 1e-9) ok = false;
    worst = std::max(worst, rep.max_deviation);
    add_table(b, "closed_loop_edge" + std::to_string(f.edge), geodesic_csv(rep, r.tag));
  }
  r.pass = ok;
  r.detail = "R=" + num(R) + " d13=" + num(d13) + " d24=" + num(d24) +
             " paths eta2-eta1-eta4=" + num(path_a) + " eta2-eta3-eta4=" + num(path_b) +
             " max deviation=" + num(worst);
  return r;
}

// ---- 6

CheckResult line_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(6, "straight-line", "straight line beyond h");
  const auto s = make_schedule(c);
  const double h = c.line_h;
  const double q = 0.0;
  const auto cap = patch_geometry(*s, q, 2.0);
  const auto base = schedule_spec(s, std::max(c.J, cap.start_index - 1), h, h,
                                  cap_sectors(cap, h, h, h, h));
  const auto f = family_straight_line(base, cap, h);
  std::vector<DegeneratingFamily> fams{DegeneratingFamily::focused(s, Parity::all, q)};
  const auto grid = equispaced(h, c.line_rho, c.grid_points);
  const auto rep = certify_geodesic(f, grid, fams, 1e-7);
  add_table(b, "straight_line", geodesic_csv(rep, r.tag));
  const auto far = certify_distance(f.eval(-c.line_rho), f.eval(c.line_rho), fams, 1e-11);
  const auto half = certify_distance(f.eval(0.0), f.eval(c.line_rho), fams, 1e-11);
  const double sym = std::abs(far.midpoint() - 2.0 * half.midpoint());
  r.hard_failure = rep.hard_failure;
  r.pass = rep.ok && rep.max_deviation <= 1e-6 && sym <= 1e-9 &&
           far.status == CertStatus::certified && half.status == CertStatus::certified;
  r.detail = "max |d - d_H|=" + num(rep.max_deviation) + " d(-rho,rho)=" + num(far.midpoint()) +
             " 2 d(0,rho)=" + num(2.0 * half.midpoint()) + " asymmetry=" + num(sym);
  return r;
}

// ---- 7

CheckResult monotonicity_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(7, "f-monotonicity", "randomized monotonicity of F");
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto disk = [&] { return std::polar(std::sqrt(u(rng)) * 0.999, kTwoPi * u(rng)); };
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < c.property_samples; ++i) {
    const Complex t1 = disk(), t2 = disk();
    const double cap = 1.0 / std::sqrt(std::max(std::abs(t1 * t2), 1e-300));
    const double kmax = std::min(cap, 1e6) * (1.0 - 1e-9);
    double k1 = kmax * u(rng), k2 = kmax * u(rng);
    if (k1 > k2) std::swap(k1, k2);
    if (k1 <= 0.0) continue;
    const double f1 = lemma_dist_F(t1, t2, k1), f2 = lemma_dist_F(t1, t2, k2);
    const double excess = f1 - f2;
    if (excess > 1e-12 * std::max(1.0, std::abs(f2))) ++violations;
    worst = std::max(worst, excess);
  }
  CsvTable t({"tag", "samples", "violations", "max_excess"});
  t.add_row({r.tag, std::to_string(c.property_samples), std::to_string(violations), num(worst)});
  add_table(b, "f_monotonicity", std::move(t));
  r.pass = violations == 0;
  r.hard_failure = violations != 0;
  r.detail = std::to_string(c.property_samples) + " samples, " + std::to_string(violations) +
             " violations";
  return r;
}

// ---- 8

CheckResult sigma_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(8, "sigma-admissible", "tent profiles under condition (B)");
  const double h = 0.9;
  const SigmaParams p{0.5 * h, 0.2, 1.0, h};
  CsvTable t({"tag", "alpha", "t0", "ok", "worst_margin", "worst_s", "worst_t", "pairs"});
  auto run = [&](double alpha, double t0) {
    const auto rep =
        check_sigma_admissible(SigmaProfile::linear_ramp(alpha, t0, h), SigmaClass::sigma, p, c.sigma_grid);
    t.add_row({r.tag, num(alpha), num(t0), rep.ok ? "1" : "0", num(rep.worst_margin),
               num(rep.worst_s), num(rep.worst_t), std::to_string(rep.pairs_checked)});
    return rep;
  };
  const auto good = run(0.5, 0.1);
  const auto bad = run(3.0, 0.8);
  add_table(b, "sigma_admissible", std::move(t));
  r.pass = good.ok && !bad.ok;
  r.detail = "h=0.9 rho/h=0.5 beta=0.2: (0.5,0.1) margin=" + num(good.worst_margin) +
             " (3,0.8) margin=" + num(bad.worst_margin);
  return r;
}

// ---- 9

CheckResult fundamental_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(9, "fundamental-inequalities", "I, J, delta against h");
  const auto s = make_schedule(c);
  const auto kappa = build_kappa(s);
  const auto all = DegeneratingFamily::monomials(s, Parity::all);
  const auto even = DegeneratingFamily::monomials(s, Parity::even);
  CsvTable t({"tag", "instance", "certified", "h", "I", "J", "delta", "margin_upper",
              "margin_lower"});
  bool ok = true;
  double chain = 0.0;
  auto row = [&](const std::string& name, const BeltramiSpec& spec, const DegeneratingFamily& f) {
    const auto rep = check_fundamental_inequalities(spec, f, c.depth, 1e-9);
    if (rep.certified && !rep.ok) {
      ok = false;
      r.hard_failure = true;
    }
    t.add_row({r.tag, name, rep.certified ? "1" : "0", num(rep.h), num(rep.q.I_lower),
               num(rep.q.J_lower), num(rep.q.delta_lower), num(rep.margin_upper),
               num(rep.margin_lower)});
    return rep;
  };
  for (double tt : {0.2, 0.6, 0.9}) {
    const auto rep = row("t*kappa t=" + num(tt), scale(kappa, tt), all);
    if (!rep.certified) ok = false;
    chain = std::max({chain, std::abs(rep.margin_upper), std::abs(rep.margin_lower)});
  }
  row("zero", zero_spec(), all);
  row("modulated(0.3,1)", build_modulated(s, 0.3, 1.0), even);
  const auto f3 = step3_family(s, c, c.lambda1);
  for (double tt : equispaced(0.0, c.k, 5)) row("step3 t=" + num(tt), f3.eval(tt), even);
  add_table(b, "fundamental_inequalities", std::move(t));
  if (chain > 1e-12) ok = false;
  r.pass = ok;
  r.detail = "max |margin| on t*kappa=" + num(chain) + " (tol 1e-12)";
  return r;
}

// ---- 10

CheckResult variation_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(10, "binary-variation", "d(t)/t against the pairing limit");
  const auto s = make_schedule(c);
  const auto mu = build_kappa(s);
  const auto nu = build_modulated(s, 0.5, 1.0);
  const std::vector<double> ts{0.2, 0.1, 0.05, 0.025};
  const auto rep = binary_variation_check(mu, nu, ts, monomial_dictionary(s));
  CsvTable t({"tag", "t", "lower", "upper", "ratio", "residual", "status"});
  std::vector<std::vector<double>> dat;
  for (const auto& row : rep.rows) {
    t.add_row({r.tag, num(row.t), num(row.distance.lower), num(row.distance.upper), num(row.ratio),
               num(row.residual), to_string(row.distance.status)});
    dat.push_back({row.t, row.distance.midpoint(), row.ratio, row.residual});
  }
  add_table(b, "binary_variation", std::move(t));
  if (b) b->dat.emplace_back("binary_variation", dat_table({"t", "distance", "ratio", "residual"}, dat));
  r.pass = rep.ok;
  std::ostringstream d;
  d << "J=" << num(rep.J_hat) << " residuals";
  for (const auto& row : rep.rows) d << " " << fmt("%.3g", row.residual);
  d << " richardson residual=" << fmt("%.3g", rep.extrapolated_residual);
  r.detail = d.str();
  return r;
}

// ---- 11

CheckResult infinitesimal_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(11, "az-geodesic", "tangent-space ramps");
  const double bb = c.k;
  const double t0 = std::min(c.step3_t0, 0.5 * bb);
  CsvTable scan({"tag", "rho_over_b", "alpha", "beta", "gamma", "admissible"});
  int mismatches = 0;
  for (double rb : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double alpha : {0.25, 0.5, 1.0, 2.0, 3.0}) {
      for (double beta : {0.05, 0.2, 0.4}) {
        const double gamma = rb + alpha * beta;
        if (std::abs(gamma - 1.0) < 1e-6) continue;
        const SigmaParams p{rb * bb, beta, 1.0, bb};
        const bool adm = check_sigma_admissible(SigmaProfile::linear_ramp(alpha, t0, bb),
                                                SigmaClass::sigma_double_prime, p, c.sigma_grid)
                             .ok;
        if (adm != (gamma < 1.0)) ++mismatches;
        scan.add_row({r.tag, num(rb), num(alpha), num(beta), num(gamma), adm ? "1" : "0"});
      }
    }
  }
  add_table(b, "az_admissibility_scan", std::move(scan));
  const auto s = make_schedule(c);
  const auto patch = patch_geometry(*s, 0.0, 2.0);
  const double rho = 0.5 * bb, beta = 0.2, alpha = 0.5;
  const auto base = build_damped(s, patch, rho, DampParity::both);
  const auto delta = build_patch_delta(s, patch, beta, DampParity::both);
  const auto f = family_infinitesimal(base, delta, SigmaProfile::linear_ramp(alpha, t0, bb), bb,
                                      rho, beta, patch);
  std::vector<DegeneratingFamily> fams = monomial_dictionary(s);
  fams.push_back(DegeneratingFamily::focused(s, Parity::all, patch.center + kPi));
  const auto rep = certify_az_geodesic(f, default_grid(f, c.grid_points), fams, 1e-4);
  CsvTable t({"tag", "s", "t", "lower", "upper", "target", "status"});
  for (const auto& row : rep.rows) {
    t.add_row({r.tag, num(row.s), num(row.t), num(row.norm.lower), num(row.norm.upper),
               num(row.target), to_string(row.norm.status)});
  }
  add_table(b, "az_geodesic", std::move(t));
  r.hard_failure = rep.hard_failure;
  r.pass = mismatches == 0 && rep.ok && rep.max_deviation <= 1e-4;
  r.detail = "scan mismatches=" + std::to_string(mismatches) +
             " az max |norm - |s-t||=" + num(rep.max_deviation);
  return r;
}

// ---- 12

CheckResult propagation_check(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(12, "propagation", "boundary dilatation along the ramp family");
  const auto s = make_schedule(c);
  const auto f = step3_family(s, c, c.lambda1);
  std::vector<double> ps;
  for (int i = 0; i < 64; ++i) ps.push_back(kTwoPi * i / 64);
  std::vector<double> ts;
  for (double t : {0.1, 0.25, 0.4}) {
    if (t <= f.t_max) ts.push_back(t);
  }
  const auto rep = substantial_propagation_check(f, ts, ps, 0.4);
  CsvTable t({"tag", "t", "p", "value", "expected"});
  for (const auto& row : rep.rows) {
    t.add_row({r.tag, num(row.t), num(row.p), num(row.value), num(row.expected)});
  }
  add_table(b, "propagation", std::move(t));
  r.pass = rep.ok;
  r.detail = std::string("exact=") + (rep.exact ? "yes" : "no") +
             " additivity error=" + num(rep.additivity_error);
  return r;
}

// ---- supplementary

CheckResult nonsubstantial_table(const ReproduceConfig& c, ReportBundle* b) {
  CheckResult r = make_check(0, "nonsubstantial-geodesic", "damped base with a patch perturbation");
  const auto s = make_schedule(c);
  const double q = 0.0;
  const auto patch = patch_geometry(*s, q, 2.0);
  const double h = c.k, rho = 0.4 * c.k, beta = 0.2 * c.k;
  const auto base = build_damped(s, patch, rho, DampParity::both);
  const auto delta = build_patch_delta(s, patch, beta, DampParity::both);
  std::vector<DegeneratingFamily> fams = monomial_dictionary(s);
  fams.push_back(DegeneratingFamily::focused(s, Parity::all, q + kPi));
  auto make = [&](double alpha) {
    return family_nonsubstantial(base, delta, SigmaProfile::linear_ramp(alpha, 0.1, h), h, rho,
                                 beta, patch);
  };
  const auto f1 = make(0.5);
  const auto rep = certify_geodesic(f1, default_grid(f1, 9), fams, 1e-9);
  add_table(b, "nonsubstantial_geodesic", geodesic_csv(rep, r.tag));
  const auto f2 = make(0.25);
  const double gap = distinctness_gap(f1, f2, 0.025, DegeneratingFamily::focused(s, Parity::all, q));
  r.hard_failure = rep.hard_failure;
  r.pass = rep.ok;
  r.detail = "certified=" + std::to_string(rep.certified) + " partial=" +
             std::to_string(rep.partial) + " distinctness lower bound=" + num(gap);
  return r;
}

}  // namespace

bool ReportBundle::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool ReportBundle::hard_failure() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.hard_failure; });
}

std::string ReportBundle::summary_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["type"] = "reproduce-summary";
  auto& cfg = j["config"];
  cfg["k"] = config.k;
  cfg["J"] = config.J;
  cfg["grid_points"] = config.grid_points;
  cfg["sigma_grid"] = config.sigma_grid;
  cfg["depth"] = config.depth;
  cfg["seed"] = config.seed;
  cfg["property_samples"] = config.property_samples;
  cfg["step3_alpha"] = config.step3_alpha;
  cfg["step3_t0"] = config.step3_t0;
  cfg["lambda1"] = config.lambda1;
  cfg["lambda2"] = config.lambda2;
  cfg["line_h"] = config.line_h;
  cfg["line_rho"] = config.line_rho;
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json o;
    o["criterion"] = c.criterion;
    o["tag"] = c.tag;
    o["title"] = c.title;
    o["pass"] = c.pass;
    o["hard_failure"] = c.hard_failure;
    o["detail"] = c.detail;
    arr.push_back(o);
  }
  j["all_pass"] = all_pass();
  j["hard_failure"] = hard_failure();
  return j.dump(2) + "\n";
}

CheckResult run_criterion(int id, const ReproduceConfig& config, ReportBundle* bundle) {
  switch (id) {
    case 1: return fs_check(config, bundle);
    case 2: return hamilton_check(config, bundle);
    case 3: return step2_check(config, bundle);
    case 4: return step3_check(config, bundle);
    case 5: return loop_check(config, bundle);
    case 6: return line_check(config, bundle);
    case 7: return monotonicity_check(config, bundle);
    case 8: return sigma_check(config, bundle);
    case 9: return fundamental_check(config, bundle);
    case 10: return variation_check(config, bundle);
    case 11: return infinitesimal_check(config, bundle);
    case 12: return propagation_check(config, bundle);
    default: break;
  }
  throw PreconditionError("criterion must be in 1.." + std::to_string(kCriterionCount));
}

ReportBundle reproduce_paper(const ReproduceConfig& config) {
  ReportBundle b;
  b.config = config;
  std::vector<int> ids = config.criteria;
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  for (int id : ids) {
    b.checks.push_back(run_criterion(id, config, &b));
    if (b.checks.back().hard_failure) return b;
  }
  if (config.criteria.empty()) b.checks.push_back(nonsubstantial_table(config, &b));
  return b;
}

void write_bundle(const ReportBundle& bundle, const std::string& dir, bool with_dat) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir + "': " + ec.message());
  const std::filesystem::path root(dir);
  write_file((root / "summary.json").string(), bundle.summary_json());
  for (const auto& [stem, table] : bundle.tables) {
    write_file((root / (stem + ".csv")).string(), table.str());
  }
  if (with_dat) {
    for (const auto& [stem, text] : bundle.dat) write_file((root / (stem + ".dat")).string(), text);
  }
}

}  // namespace atgeo
