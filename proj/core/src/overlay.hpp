#pragma once

#include <memory>
#include <vector>

#include "atgeo/beltrami.hpp"

namespace atgeo::detail {

/// One region of the common refinement of two specs.
struct OverlayPiece {
  Radius r_in;
  Radius r_out;
  double theta_lo = 0.0;
  double theta_hi = kTwoPi;
  TwistTerm a;
  TwistTerm b;
  int schedule_index = 0;

  bool full_angle() const { return theta_lo == 0.0 && theta_hi == kTwoPi; }
};

struct TailPiece {
  double theta_lo = 0.0;
  double theta_hi = kTwoPi;
  Complex a_odd, a_even, b_odd, b_even;
};

/// Common refinement: prefix pieces on |z| < tail_start, a tail overlay beyond.
struct Overlay {
  std::vector<OverlayPiece> prefix;
  Radius tail_start = Radius::one();
  TailKind a_kind = TailKind::none;
  TailKind b_kind = TailKind::none;
  std::shared_ptr<const ReichSchedule> schedule;  // set when the tails share one
  int first_index = 0;
  bool tail_mixed = false;  // the tails carry different twists
  std::vector<TailPiece> tail;
};

Overlay build_overlay(const BeltramiSpec& a, const BeltramiSpec& b);

/// True when two terms can be combined into one twist.
bool compatible(const TwistTerm& a, const TwistTerm& b);

/// max over theta in [lo, hi] of the pseudo-distance between A e^{-i n_a theta}
/// and B e^{-i n_b theta}.
double arc_combo_max(Complex A, Winding na, Complex B, Winding nb, double lo, double hi);

}  // namespace atgeo::detail
