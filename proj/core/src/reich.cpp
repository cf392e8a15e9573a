#include "atgeo/reich.hpp"

#include <algorithm>
#include <cmath>

#include "atgeo/errors.hpp"

namespace atgeo {
namespace {

double wrap(double theta) {
  double a = std::fmod(theta, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

}  // namespace

BeltramiSpec schedule_spec(const SchedulePtr& s, int prefix_depth, Complex prefix_odd,
                           Complex prefix_even, std::vector<TailSector> tail_sectors,
                           NormClass norm_class) {
  if (!s) throw PreconditionError("schedule_spec: missing schedule");
  if (prefix_depth < 0 || prefix_depth >= s->horizon()) {
    throw PreconditionError("schedule_spec: prefix depth outside the horizon");
  }
  BeltramiSpec spec;
  spec.norm_class = norm_class;
  for (int j = 1; j <= prefix_depth; ++j) {
    const Complex amp = (j % 2 == 1) ? prefix_odd : prefix_even;
    spec.cells.push_back(
        {s->radius(j - 1), s->radius(j), 0.0, kTwoPi, TwistTerm{amp, s->winding(j)}, j});
  }
  spec.tail.kind = TailKind::schedule;
  spec.tail.schedule = s;
  spec.tail.first_index = prefix_depth + 1;
  spec.tail.start = s->radius(prefix_depth);
  spec.tail.sectors = std::move(tail_sectors);
  spec.validate();
  return spec;
}

BeltramiSpec build_kappa(const SchedulePtr& s) { return build_modulated(s, 1.0, 1.0); }

BeltramiSpec build_modulated(const SchedulePtr& s, double alpha, double beta,
                             NormClass norm_class) {
  if (!s) throw PreconditionError("build_modulated: missing schedule");
  const double k = s->k();
  if (alpha < 0.0 || beta < 0.0) throw PreconditionError("build_modulated: requires alpha, beta >= 0");
  if (norm_class == NormClass::unit_ball && !(alpha * k < 1.0 && beta * k < 1.0)) {
    throw PreconditionError("build_modulated: requires alpha, beta < 1/k for the unit ball");
  }
  const Complex odd = alpha * k;
  const Complex even = beta * k;
  return schedule_spec(s, s->J(), odd, even, {TailSector{0.0, kTwoPi, odd, even}}, norm_class);
}

bool PatchGeometry::contains_angle(double theta) const {
  double d = std::fabs(wrap(theta) - center);
  d = std::min(d, kTwoPi - d);
  return d <= half_width;
}

PatchGeometry patch_geometry(const ReichSchedule& s, double q, double patch_radius) {
  if (!(patch_radius > 0.0 && patch_radius <= 4.0)) {
    throw PreconditionError("patch radius must lie in (0, 4]");
  }
  PatchGeometry g;
  g.center = wrap(q);
  g.half_width = std::min(kPi, 2.0 * std::asin(patch_radius / 4.0));
  g.radius = patch_radius;
  int j = s.J() + 1;
  while (!(s.radius(j - 1).complement() < patch_radius / 2.0)) {
    if (++j > s.horizon()) throw PreconditionError("patch radius too small for the schedule horizon");
  }
  g.start_index = j;
  return g;
}

std::vector<TailSector> cap_sectors(const PatchGeometry& g, Complex in_odd, Complex in_even,
                                    Complex out_odd, Complex out_even) {
  // Cap endpoints in [0, 2 pi]; a cap through angle 0 becomes two sectors.
  std::vector<double> breaks{0.0, kTwoPi};
  if (g.half_width < kPi) {
    breaks.push_back(wrap(g.center - g.half_width));
    breaks.push_back(wrap(g.center + g.half_width));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<TailSector> out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const bool in = g.contains_angle(0.5 * (breaks[i] + breaks[i + 1]));
    out.push_back({breaks[i], breaks[i + 1], in ? in_odd : out_odd, in ? in_even : out_even});
  }
  return out;
}

BeltramiSpec build_damped(const SchedulePtr& s, const PatchGeometry& g, double rho,
                          DampParity parity) {
  const double k = s->k();
  if (!(rho >= 0.0 && rho <= k)) throw PreconditionError("build_damped: requires 0 <= rho <= k");
  const Complex even_in = parity == DampParity::both ? rho : k;
  return schedule_spec(s, g.start_index - 1, k, k, cap_sectors(g, rho, even_in, k, k));
}

BeltramiSpec build_patch_delta(const SchedulePtr& s, const PatchGeometry& g, double beta,
                               DampParity parity) {
  if (!(beta >= 0.0 && beta < 1.0)) throw PreconditionError("build_patch_delta: requires 0 <= beta < 1");
  const Complex even_in = parity == DampParity::both ? beta : 0.0;
  return schedule_spec(s, g.start_index - 1, 0.0, 0.0, cap_sectors(g, beta, even_in, 0.0, 0.0));
}

}  // namespace atgeo
