#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "atgeo/metric.hpp"
#include "atgeo/precision.hpp"
#include "atgeo/schedule.hpp"

namespace atgeo {

using Complex = std::complex<double>;

/// amplitude * conj(z)^n / |z|^n = amplitude * exp(-i n theta). Winding 0 is a
/// constant.
struct TwistTerm {
  Complex amplitude{0.0, 0.0};
  Winding winding{};

  /// Value at angle theta. For windings beyond 2^63 the phase is not
  /// meaningful; only the modulus |amplitude| is.
  Complex value(double theta) const;
};

/// {r_in <= |z| < r_out, theta_lo <= arg z < theta_hi} with
/// 0 <= theta_lo < theta_hi <= 2 pi. Sectors never wrap through angle 0.
struct SectorAnnularCell {
  Radius r_in = Radius::zero();
  Radius r_out = Radius::one();
  double theta_lo = 0.0;
  double theta_hi = kTwoPi;
  TwistTerm term;
  int schedule_index = 0;  // j when the cell lies in E_j, 0 otherwise

  bool full_angle() const { return theta_lo == 0.0 && theta_hi == kTwoPi; }
  double angular_width() const { return theta_hi - theta_lo; }
};

/// One angular sector of the tail rule with its per-parity amplitudes.
struct TailSector {
  double theta_lo = 0.0;
  double theta_hi = kTwoPi;
  Complex odd{0.0, 0.0};
  Complex even{0.0, 0.0};
};

enum class TailKind {
  none,      // zero on start <= |z| < 1
  constant,  // sector amplitude `odd` with winding 0
  schedule,  // on E_j (j >= first_index): amplitude(parity of j) * twist n_j
};

/// The coefficient on the ring start <= |z| < 1 beyond the materialized
/// prefix. Sectors partition [0, 2 pi].
struct TailRule {
  TailKind kind = TailKind::none;
  Radius start = Radius::one();
  std::shared_ptr<const ReichSchedule> schedule;
  int first_index = 0;
  std::vector<TailSector> sectors;

  /// Amplitude of a sector on E_j (schedule kind) or on the whole ring.
  Complex amplitude(const TailSector& sector, int j) const;
  /// Largest modulus the rule attains on a sector.
  double sector_modulus(const TailSector& sector) const;
};

enum class NormClass { unit_ball, unrestricted };

/// Piecewise sector-annular coefficient: prefix cells on |z| < tail.start and
/// the tail rule beyond.
struct BeltramiSpec {
  std::vector<SectorAnnularCell> cells;
  TailRule tail;
  NormClass norm_class = NormClass::unit_ball;

  /// Structural checks: cell geometry, tail partition, and sup < 1 for the
  /// unit-ball class. Throws PreconditionError.
  void validate() const;
};

/// A point e^{i angle} of the unit circle, angle reduced to [0, 2 pi).
class BoundaryPoint {
 public:
  explicit BoundaryPoint(double angle);
  double angle() const { return angle_; }

 private:
  double angle_;
};

/// The zero coefficient.
BeltramiSpec zero_spec();

/// Pointwise value. Throws DomainError for |z| >= 1.
Complex eval(const BeltramiSpec& spec, Complex z);

/// Exact supremum of |spec| (finite max over cells and tail amplitudes).
double sup_modulus(const BeltramiSpec& spec);

/// h*_p: max of the tail moduli over sectors whose closure contains p, and of
/// prefix cells reaching |z| = 1.
double boundary_dilatation(const BeltramiSpec& spec, BoundaryPoint p);

/// h*(spec) = max_p h*_p.
double h_star(const BeltramiSpec& spec);

/// |(a(z) - b(z)) / (1 - conj(b(z)) a(z))|. Requires sup(a) sup(b) < 1.
double mobius_combine_modulus(const BeltramiSpec& a, const BeltramiSpec& b, Complex z);

/// Exact sup over the disk of mobius_combine_modulus(a, b, .).
double cellwise_combo_bound(const BeltramiSpec& a, const BeltramiSpec& b);

/// Grid-based estimate of the same sup: a grid_n x grid_n polar grid per
/// overlay piece. Used as an independent check of cellwise_combo_bound.
double grid_combo_sup(const BeltramiSpec& a, const BeltramiSpec& b, int grid_n = 256);

/// The Moebius combination (a - b)/(1 - conj(b) a) as a spec. Exact on
/// regions where a and b share a twist; regions with different windings are
/// dropped and reported through `exact`.
struct ComboSpec {
  BeltramiSpec spec;
  bool exact = true;
};
ComboSpec combine_spec(const BeltramiSpec& a, const BeltramiSpec& b);

/// ca * a + cb * b. Throws IncompatibleSpecs when a region carries different
/// nonzero windings.
BeltramiSpec linear_combination(Complex ca, const BeltramiSpec& a, Complex cb,
                                const BeltramiSpec& b);

/// c * spec (norm class becomes unrestricted when the result leaves the ball).
BeltramiSpec scale(const BeltramiSpec& spec, Complex c);

/// Amplitudes above h* are cut to h* with their phase kept.
BeltramiSpec clamp_to_nonstrebel(const BeltramiSpec& spec);

/// Explicit cells covering |z| < 1 as far as possible: the prefix, then the
/// tail cells of E_j for j up to `depth` (schedule kind, capped at the
/// horizon) or the whole ring (constant kind).
struct Materialized {
  std::vector<SectorAnnularCell> cells;
  Radius remainder_start = Radius::one();  // uncovered ring remainder_start <= |z| < 1
  double remainder_sup = 0.0;
};
Materialized materialize(const BeltramiSpec& spec, int depth);

}  // namespace atgeo
