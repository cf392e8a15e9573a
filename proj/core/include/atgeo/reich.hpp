#pragma once

#include <memory>
#include <vector>

#include "atgeo/beltrami.hpp"
#include "atgeo/schedule.hpp"

namespace atgeo {

using SchedulePtr = std::shared_ptr<const ReichSchedule>;

/// Spec on the schedule annuli E_j: full-angle prefix cells for j <= prefix_depth
/// with per-parity amplitudes, then a schedule tail with the given sectors.
BeltramiSpec schedule_spec(const SchedulePtr& s, int prefix_depth, Complex prefix_odd,
                           Complex prefix_even, std::vector<TailSector> tail_sectors,
                           NormClass norm_class = NormClass::unit_ball);

/// kappa = k conj(z)^{n_j} / |z|^{n_j} on E_j.
BeltramiSpec build_kappa(const SchedulePtr& s);

/// alpha kappa on odd E_j, beta kappa on even E_j. For the unit-ball class
/// requires 0 <= alpha, beta < 1/k.
BeltramiSpec build_modulated(const SchedulePtr& s, double alpha, double beta,
                             NormClass norm_class = NormClass::unit_ball);

/// A sector-annular box {theta in [center - w, center + w], |z| >= r_{start-1}}
/// inside the disk B(q, radius): chord 2 sin(w/2) = radius/2 and
/// 1 - r_{start-1} < radius/2.
struct PatchGeometry {
  double center = 0.0;
  double half_width = 0.0;
  int start_index = 1;
  double radius = 0.0;

  bool contains_angle(double theta) const;
};
PatchGeometry patch_geometry(const ReichSchedule& s, double q, double patch_radius);

/// Tail sectors partitioning [0, 2 pi] with the cap [center +- w] marked:
/// amplitudes inside / outside per parity.
std::vector<TailSector> cap_sectors(const PatchGeometry& g, Complex in_odd, Complex in_even,
                                    Complex out_odd, Complex out_even);

enum class DampParity { both, odd_only };

/// kappa with the patch tail damped to modulus rho (on the chosen parities).
BeltramiSpec build_damped(const SchedulePtr& s, const PatchGeometry& g, double rho,
                          DampParity parity);

/// beta kappa / k on the patch box (chosen parities), zero elsewhere.
BeltramiSpec build_patch_delta(const SchedulePtr& s, const PatchGeometry& g, double beta,
                               DampParity parity);

}  // namespace atgeo
