#pragma once

#include <string>
#include <vector>

#include "atgeo/precision.hpp"

namespace atgeo {

struct ScheduleEntry {
  Winding n;
  Radius r;
};

/// Admissible open interval (lower, 1) for the radius r_j.
struct RadiusWindow {
  Radius lower;
};

/// Windings n_j and radii r_j of the iterative twisted-annuli construction:
///   r_{j-1}^{n_j+2} < 2^-j,  r_j^{n_j+2} > 1 - 2^-j,  r_j > r_{j-1} + (1 - r_{j-1})/2.
/// The first J entries form the materialized prefix. Entries beyond J are the
/// deterministic continuation (same strategy, seeded by entry J) and are
/// precomputed up to horizon().
class ReichSchedule {
 public:
  static constexpr int kHorizon = 64;

  /// Canonical strategy: n_1 = 1, then the smallest admissible n_j; r_j is the
  /// geometric midpoint sqrt(L) of the admissible window (L, 1).
  static ReichSchedule build(double k, int J);

  /// A schedule from explicit prefix values; not validated (see
  /// verify_fs_inequalities). The continuation starts from the last entry.
  static ReichSchedule from_prefix(double k, std::vector<Winding> n, std::vector<Radius> r);

  double k() const { return k_; }
  int J() const { return J_; }
  int horizon() const { return static_cast<int>(entries_.size()); }

  /// 1-based; requires 1 <= j <= horizon().
  const ScheduleEntry& entry(int j) const;
  Winding winding(int j) const { return entry(j).n; }
  /// r_j with r_0 = 0.
  Radius radius(int j) const;

  /// The same sequence with a different materialized prefix length.
  ReichSchedule with_prefix(int J) const;

  /// Same prefix values and k.
  friend bool operator==(const ReichSchedule& a, const ReichSchedule& b);

 private:
  double k_ = 0.0;
  int J_ = 0;
  std::vector<ScheduleEntry> entries_;
};

/// build_schedule: validates 0 < k < 1 and J >= 2.
ReichSchedule build_schedule(double k, int J);

/// Smallest admissible winding n > n_prev with r_prev^{n+2} < 2^-j. For
/// quotients beyond 2^60 the result is the smallest representable integer
/// above the quotient with a relative margin of 2^-50.
Winding smallest_admissible_winding(Radius r_prev, int j, Winding n_prev);

/// Lower end of the admissible window for r_j given n_j and r_{j-1}.
RadiusWindow admissible_radius_window(Winding n_j, int j, Radius r_prev);

/// One row of the fundamental-sequence inequality table.
struct FsRow {
  int j = 0;
  Real n = 0;
  Real r = 0;
  Real one_minus_r = 0;
  Real inner_mass = 0;       // r_{j-1}^{n_j+2}, bound 2^-j
  Real outer_mass = 0;       // 1 - r_j^{n_j+2}, bound 2^-j
  Real middle_mass = 0;      // r_j^{n_j+2} - r_{j-1}^{n_j+2}, bound 1 - 2^{1-j}
  Real bound = 0;            // 2^-j
  bool inner_ok = true;
  bool outer_ok = true;
  bool spacing_ok = true;    // r_j > r_{j-1} + (1 - r_{j-1})/2 (j >= 2)
  bool monotone_ok = true;   // n_j > n_{j-1}, r_j > r_{j-1}
  bool ok() const { return inner_ok && outer_ok && spacing_ok && monotone_ok; }
};

struct FsViolation {
  int j = 0;
  std::string inequality;  // "inner", "outer", "spacing", "monotone"
};

struct FsReport {
  std::vector<FsRow> rows;
  std::vector<FsViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every inequality for j = 1..depth (default: the prefix J).
FsReport verify_fs_inequalities(const ReichSchedule& schedule, int depth = 0);

}  // namespace atgeo
