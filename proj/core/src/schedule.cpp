#include "atgeo/schedule.hpp"

#include <cmath>
#include <string>

#include "atgeo/errors.hpp"

namespace atgeo {
namespace {

constexpr Real kLn2 = 0.693147180559945309417232121458176568L;

Real two_pow_neg(int j) { return std::ldexp(1.0L, -j); }

// r = sqrt(L) expressed through complements.
Radius geometric_midpoint(Radius lower) {
  const Real comp = -std::expm1(0.5L * std::log1p(-lower.complement()));
  return Radius::from_complement(comp);
}

ScheduleEntry next_entry(int j, const ScheduleEntry* prev) {
  const Radius r_prev = prev ? prev->r : Radius::zero();
  const Winding n_prev = prev ? prev->n : Winding(0.0L);
  const Winding n = prev ? smallest_admissible_winding(r_prev, j, n_prev) : Winding(1.0L);
  return {n, geometric_midpoint(admissible_radius_window(n, j, r_prev).lower)};
}

void extend(std::vector<ScheduleEntry>& entries, int horizon) {
  while (static_cast<int>(entries.size()) < horizon) {
    const int j = static_cast<int>(entries.size()) + 1;
    entries.push_back(next_entry(j, entries.empty() ? nullptr : &entries.back()));
  }
}

}  // namespace

Winding smallest_admissible_winding(Radius r_prev, int j, Winding n_prev) {
  const Real target = -static_cast<Real>(j) * kLn2;
  const Real log_r = r_prev.log();
  if (!(log_r < 0.0L)) {
    throw PreconditionError("smallest_admissible_winding: r_prev must be < 1");
  }
  auto admissible = [&](Real n_plus_2) { return n_plus_2 * log_r < target; };
  if (std::isinf(log_r)) return Winding(n_prev.value() + 1.0L);  // r_prev = 0

  const Real quotient = target / log_r;  // need n + 2 > quotient
  Real n_plus_2;
  if (quotient < 0x1p60L) {
    n_plus_2 = std::floor(quotient) + 1.0L;
    while (!admissible(n_plus_2)) n_plus_2 += 1.0L;
    while (n_plus_2 > 3.0L && admissible(n_plus_2 - 1.0L)) n_plus_2 -= 1.0L;
  } else {
    n_plus_2 = std::ceil(quotient * (1.0L + 0x1p-50L));
    while (!admissible(n_plus_2)) n_plus_2 = std::ceil(n_plus_2 * (1.0L + 0x1p-50L));
  }
  Real n = n_plus_2 - 2.0L;
  if (n <= n_prev.value()) n = n_prev.value() + 1.0L;
  return Winding(n);
}

RadiusWindow admissible_radius_window(Winding n_j, int j, Radius r_prev) {
  // r^{n+2} > 1 - 2^-j  <=>  r > exp(log1p(-2^-j) / (n+2)).
  const Real p = n_j.value() + 2.0L;
  Real comp = -std::expm1(std::log1p(-two_pow_neg(j)) / p);
  if (j >= 2) comp = std::min(comp, r_prev.complement() / 2.0L);
  return {Radius::from_complement(comp)};
}

ReichSchedule ReichSchedule::build(double k, int J) {
  ReichSchedule s;
  s.k_ = k;
  s.J_ = J;
  extend(s.entries_, std::max(J, kHorizon));
  return s;
}

ReichSchedule ReichSchedule::from_prefix(double k, std::vector<Winding> n, std::vector<Radius> r) {
  if (n.size() != r.size() || n.empty()) {
    throw PreconditionError("schedule prefix: n[] and r[] must be nonempty and of equal length");
  }
  ReichSchedule s;
  s.k_ = k;
  s.J_ = static_cast<int>(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) s.entries_.push_back({n[i], r[i]});
  extend(s.entries_, std::max(s.J_, kHorizon));
  return s;
}

const ScheduleEntry& ReichSchedule::entry(int j) const {
  if (j < 1 || j > horizon()) {
    throw PreconditionError("schedule index " + std::to_string(j) + " outside 1.." +
                            std::to_string(horizon()));
  }
  return entries_[static_cast<std::size_t>(j - 1)];
}

Radius ReichSchedule::radius(int j) const {
  if (j == 0) return Radius::zero();
  return entry(j).r;
}

ReichSchedule ReichSchedule::with_prefix(int J) const {
  if (J < 1 || J > horizon()) throw PreconditionError("with_prefix: J outside the horizon");
  ReichSchedule s = *this;
  s.J_ = J;
  return s;
}

bool operator==(const ReichSchedule& a, const ReichSchedule& b) {
  if (a.k_ != b.k_ || a.J_ != b.J_) return false;
  for (int j = 1; j <= a.J_; ++j) {
    if (!(a.entry(j).n == b.entry(j).n) || !(a.entry(j).r == b.entry(j).r)) return false;
  }
  return true;
}

ReichSchedule build_schedule(double k, int J) {
  if (!(k > 0.0 && k < 1.0)) throw PreconditionError("build_schedule: requires 0 < k < 1");
  if (J < 2) throw PreconditionError("build_schedule: requires J >= 2");
  if (J > ReichSchedule::kHorizon) {
    throw PreconditionError("build_schedule: J exceeds the supported horizon of " +
                            std::to_string(ReichSchedule::kHorizon));
  }
  return ReichSchedule::build(k, J);
}

FsReport verify_fs_inequalities(const ReichSchedule& schedule, int depth) {
  if (depth <= 0) depth = schedule.J();
  FsReport report;
  for (int j = 1; j <= depth; ++j) {
    const auto& e = schedule.entry(j);
    const Radius prev = schedule.radius(j - 1);
    const Real p = e.n.value() + 2.0L;
    FsRow row;
    row.j = j;
    row.n = e.n.value();
    row.r = e.r.value();
    row.one_minus_r = e.r.complement();
    row.bound = two_pow_neg(j);
    row.inner_mass = prev.pow(p);
    row.outer_mass = e.r.one_minus_pow(p);
    row.middle_mass = e.r.pow(p) - row.inner_mass;
    row.inner_ok = row.inner_mass < row.bound;
    row.outer_ok = row.outer_mass < row.bound;
    if (j >= 2) {
      const auto& pe = schedule.entry(j - 1);
      row.spacing_ok = e.r.complement() < prev.complement() / 2.0L;
      row.monotone_ok = e.n > pe.n && e.r > pe.r;
    } else {
      row.monotone_ok = e.n.value() >= 1.0L && !e.r.is_zero() && !e.r.is_one();
    }
    if (!row.inner_ok) report.violations.push_back({j, "inner"});
    if (!row.outer_ok) report.violations.push_back({j, "outer"});
    if (!row.spacing_ok) report.violations.push_back({j, "spacing"});
    if (!row.monotone_ok) report.violations.push_back({j, "monotone"});
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace atgeo
