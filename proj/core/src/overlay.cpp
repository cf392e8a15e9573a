#include "overlay.hpp"

#include <algorithm>
#include <cmath>

#include "atgeo/errors.hpp"

namespace atgeo {
namespace detail {
namespace {

double combo_modulus(Complex A, Complex B) {
  return std::abs(A - B) / std::abs(1.0 - std::conj(B) * A);
}

double full_circle_combo(double a, double b) { return (a + b) / (1.0 + a * b); }

bool same_sequence(const std::shared_ptr<const ReichSchedule>& x,
                   const std::shared_ptr<const ReichSchedule>& y) {
  if (x == y) return true;
  if (!x || !y || x->k() != y->k() || x->horizon() != y->horizon()) return false;
  for (int j = 1; j <= x->horizon(); ++j) {
    if (!(x->winding(j) == y->winding(j)) || !(x->radius(j) == y->radius(j))) return false;
  }
  return true;
}

Radius region_start(const BeltramiSpec& s) {
  if (s.tail.kind != TailKind::none) return s.tail.start;
  Radius m = Radius::zero();
  for (const auto& c : s.cells) m = std::max(m, c.r_out, [](Radius x, Radius y) { return x < y; });
  return m;
}

// Moves the tail start up to at least R, materializing the skipped ring.
BeltramiSpec advance(const BeltramiSpec& s, Radius R) {
  BeltramiSpec out = s;
  auto& tail = out.tail;
  switch (tail.kind) {
    case TailKind::none:
      tail.start = R;
      return out;
    case TailKind::constant:
      if (tail.start < R) {
        for (const auto& sec : tail.sectors) {
          out.cells.push_back(
              {tail.start, R, sec.theta_lo, sec.theta_hi, TwistTerm{sec.odd, Winding(0.0L)}, 0});
        }
        tail.start = R;
      }
      return out;
    case TailKind::schedule:
      break;
  }
  int j = tail.first_index - 1;
  while (tail.schedule->radius(j) < R) {
    if (++j > tail.schedule->horizon()) {
      throw IncompatibleSpecs("a prefix cell reaches beyond the schedule horizon of the other spec");
    }
  }
  for (int i = tail.first_index; i <= j; ++i) {
    for (const auto& sec : tail.sectors) {
      out.cells.push_back({tail.schedule->radius(i - 1), tail.schedule->radius(i), sec.theta_lo,
                           sec.theta_hi, TwistTerm{tail.amplitude(sec, i), tail.schedule->winding(i)},
                           i});
    }
  }
  tail.first_index = j + 1;
  tail.start = tail.schedule->radius(j);
  return out;
}

const SectorAnnularCell* find_cell(const std::vector<const SectorAnnularCell*>& cells,
                                   double theta) {
  for (const auto* c : cells) {
    if (c->theta_lo <= theta && theta < c->theta_hi) return c;
  }
  return nullptr;
}

bool trivially_full(const std::vector<const SectorAnnularCell*>& cells) {
  return cells.empty() || (cells.size() == 1 && cells.front()->full_angle());
}

void angular_breaks(std::vector<double>& out, const std::vector<const SectorAnnularCell*>& cells) {
  for (const auto* c : cells) {
    out.push_back(c->theta_lo);
    out.push_back(c->theta_hi);
  }
}

std::vector<double> sorted_unique(std::vector<double> v) {
  v.push_back(0.0);
  v.push_back(kTwoPi);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<TailSector> tail_sectors(const TailRule& t) {
  if (t.kind == TailKind::none) return {TailSector{}};
  auto out = t.sectors;
  if (t.kind == TailKind::constant) {
    for (auto& s : out) s.even = s.odd;
  }
  return out;
}

const TailSector& find_sector(const std::vector<TailSector>& v, double theta) {
  for (const auto& s : v) {
    if (s.theta_lo <= theta && theta < s.theta_hi) return s;
  }
  return v.back();
}

}  // namespace

bool compatible(const TwistTerm& a, const TwistTerm& b) {
  return a.amplitude == 0.0 || b.amplitude == 0.0 || a.winding == b.winding;
}

double arc_combo_max(Complex A, Winding na, Complex B, Winding nb, double lo, double hi) {
  const double a = std::abs(A);
  const double b = std::abs(B);
  if (a == 0.0 || b == 0.0 || na == nb) return combo_modulus(A, B);
  const long double d = nb.value() - na.value();
  const long double span = std::fabs(d) * static_cast<long double>(hi - lo);
  constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;
  if (span >= kTwoPiL || std::fabs(d) > 0x1p40L) return full_circle_combo(a, b);
  // Relative phase psi(theta) = arg B - arg A - d theta sweeps an arc of length
  // span; the pseudo-distance grows with -cos psi.
  const long double width = static_cast<long double>(hi - lo);
  const long double p0 = static_cast<long double>(std::arg(B) - std::arg(A)) -
                         std::fmod(d * static_cast<long double>(lo), kTwoPiL);
  const long double p1 = p0 - d * width;
  const long double lower_end = std::min(p0, p1);
  long double to_pi = std::fmod(static_cast<long double>(kPi) - lower_end, kTwoPiL);
  if (to_pi < 0) to_pi += kTwoPiL;
  if (to_pi <= span) return full_circle_combo(a, b);
  auto at = [&](long double p) {
    return combo_modulus(Complex(a, 0.0), b * std::polar(1.0, static_cast<double>(p)));
  };
  return std::max(at(p0), at(p1));
}

Overlay build_overlay(const BeltramiSpec& a_in, const BeltramiSpec& b_in) {
  BeltramiSpec a = a_in;
  BeltramiSpec b = b_in;
  Radius R = std::max(region_start(a), region_start(b), [](Radius x, Radius y) { return x < y; });
  for (int guard = 0; guard < 4 * ReichSchedule::kHorizon; ++guard) {
    a = advance(a, R);
    b = advance(b, R);
    if (a.tail.start == b.tail.start) break;
    R = std::max(a.tail.start, b.tail.start, [](Radius x, Radius y) { return x < y; });
  }
  Overlay ov;
  ov.tail_start = R;
  ov.a_kind = a.tail.kind;
  ov.b_kind = b.tail.kind;

  // Prefix: radial bands, then angular refinement only where needed.
  std::vector<Radius> radii{Radius::zero(), R};
  for (const auto* s : {&a, &b}) {
    for (const auto& c : s->cells) {
      radii.push_back(c.r_in);
      radii.push_back(c.r_out);
    }
  }
  std::sort(radii.begin(), radii.end(), [](Radius x, Radius y) { return x < y; });
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    const Radius x = radii[i];
    const Radius y = radii[i + 1];
    if (!(y <= R)) break;
    std::vector<const SectorAnnularCell*> ca, cb;
    for (const auto& c : a.cells) {
      if (c.r_in <= x && y <= c.r_out) ca.push_back(&c);
    }
    for (const auto& c : b.cells) {
      if (c.r_in <= x && y <= c.r_out) cb.push_back(&c);
    }
    if (ca.empty() && cb.empty()) continue;
    std::vector<double> breaks;
    if (!(trivially_full(ca) && trivially_full(cb))) {
      angular_breaks(breaks, ca);
      angular_breaks(breaks, cb);
    }
    breaks = sorted_unique(std::move(breaks));
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
      const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
      const auto* pa = find_cell(ca, mid);
      const auto* pb = find_cell(cb, mid);
      if (!pa && !pb) continue;
      OverlayPiece piece{x, y, breaks[k], breaks[k + 1], {}, {}, 0};
      if (pa) piece.a = pa->term;
      if (pb) piece.b = pb->term;
      piece.schedule_index = pa && pa->schedule_index ? pa->schedule_index
                                                       : (pb ? pb->schedule_index : 0);
      ov.prefix.push_back(piece);
    }
  }

  // Tail.
  if (a.tail.kind == TailKind::none && b.tail.kind == TailKind::none) return ov;
  const auto& ta = a.tail;
  const auto& tb = b.tail;
  if (ta.kind == TailKind::schedule && tb.kind == TailKind::schedule) {
    ov.tail_mixed = !same_sequence(ta.schedule, tb.schedule);
  } else if (ta.kind != TailKind::none && tb.kind != TailKind::none) {
    ov.tail_mixed = ta.kind != tb.kind;
  }
  if (ta.kind == TailKind::schedule) {
    ov.schedule = ta.schedule;
    ov.first_index = ta.first_index;
  } else if (tb.kind == TailKind::schedule) {
    ov.schedule = tb.schedule;
    ov.first_index = tb.first_index;
  }
  const auto sa = tail_sectors(ta);
  const auto sb = tail_sectors(tb);
  std::vector<double> breaks;
  for (const auto& s : sa) breaks.push_back(s.theta_lo);
  for (const auto& s : sb) breaks.push_back(s.theta_lo);
  breaks = sorted_unique(std::move(breaks));
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double mid = 0.5 * (breaks[k] + breaks[k + 1]);
    const auto& x = find_sector(sa, mid);
    const auto& y = find_sector(sb, mid);
    ov.tail.push_back({breaks[k], breaks[k + 1], x.odd, x.even, y.odd, y.even});
  }
  return ov;
}

}  // namespace detail

namespace {

using detail::Overlay;

void require_combinable(const BeltramiSpec& a, const BeltramiSpec& b) {
  if (!(sup_modulus(a) * sup_modulus(b) < 1.0)) {
    throw PreconditionError("Moebius combination requires sup|a| * sup|b| < 1");
  }
}

Complex mobius_combo(Complex A, Complex B) { return (A - B) / (1.0 - std::conj(B) * A); }

TailKind combined_kind(const Overlay& ov) {
  if (ov.a_kind == TailKind::schedule || ov.b_kind == TailKind::schedule) return TailKind::schedule;
  if (ov.a_kind == TailKind::constant || ov.b_kind == TailKind::constant) return TailKind::constant;
  return TailKind::none;
}

template <class Op>
BeltramiSpec assemble(const Overlay& ov, Op op, bool* exact) {
  BeltramiSpec out;
  for (const auto& p : ov.prefix) {
    if (!detail::compatible(p.a, p.b)) {
      if (!exact) throw IncompatibleSpecs("region with two different twist windings");
      *exact = false;
      continue;
    }
    const Complex amp = op(p.a.amplitude, p.b.amplitude);
    if (amp == 0.0) continue;
    const Winding w = p.a.amplitude != 0.0 ? p.a.winding : p.b.winding;
    out.cells.push_back({p.r_in, p.r_out, p.theta_lo, p.theta_hi, TwistTerm{amp, w},
                         p.schedule_index});
  }
  const TailKind kind = combined_kind(ov);
  if (kind == TailKind::none) return out;
  if (ov.tail_mixed) {
    if (!exact) throw IncompatibleSpecs("tails with different twist sequences");
    *exact = false;
    return out;
  }
  out.tail.kind = kind;
  out.tail.start = ov.tail_start;
  out.tail.schedule = ov.schedule;
  out.tail.first_index = ov.first_index;
  for (const auto& t : ov.tail) {
    out.tail.sectors.push_back(
        {t.theta_lo, t.theta_hi, op(t.a_odd, t.b_odd), op(t.a_even, t.b_even)});
  }
  return out;
}

}  // namespace

double mobius_combine_modulus(const BeltramiSpec& a, const BeltramiSpec& b, Complex z) {
  require_combinable(a, b);
  return std::abs(mobius_combo(eval(a, z), eval(b, z)));
}

double cellwise_combo_bound(const BeltramiSpec& a, const BeltramiSpec& b) {
  require_combinable(a, b);
  const Overlay ov = detail::build_overlay(a, b);
  double m = 0.0;
  for (const auto& p : ov.prefix) {
    m = std::max(m, detail::arc_combo_max(p.a.amplitude, p.a.winding, p.b.amplitude, p.b.winding,
                                          p.theta_lo, p.theta_hi));
  }
  for (const auto& t : ov.tail) {
    if (ov.tail_mixed) {
      for (Complex x : {t.a_odd, t.a_even}) {
        for (Complex y : {t.b_odd, t.b_even}) {
          m = std::max(m, (std::abs(x) + std::abs(y)) / (1.0 + std::abs(x) * std::abs(y)));
        }
      }
    } else {
      m = std::max({m, std::abs(mobius_combo(t.a_odd, t.b_odd)),
                    std::abs(mobius_combo(t.a_even, t.b_even))});
    }
  }
  return m;
}

double grid_combo_sup(const BeltramiSpec& a, const BeltramiSpec& b, int grid_n) {
  require_combinable(a, b);
  const Overlay ov = detail::build_overlay(a, b);
  double m = 0.0;
  auto scan = [&](Real r_lo, Real r_hi, double t_lo, double t_hi) {
    for (int i = 0; i < grid_n; ++i) {
      const double r = static_cast<double>(r_lo + (r_hi - r_lo) * (i + 0.5L) / grid_n);
      if (!(r < 1.0)) continue;
      for (int k = 0; k < grid_n; ++k) {
        const double th = t_lo + (t_hi - t_lo) * (k + 0.5) / grid_n;
        m = std::max(m, mobius_combine_modulus(a, b, std::polar(r, th)));
      }
    }
  };
  for (const auto& p : ov.prefix) scan(p.r_in.value(), p.r_out.value(), p.theta_lo, p.theta_hi);
  if (ov.tail.empty()) return m;
  std::vector<std::pair<Real, Real>> rings;
  if (ov.schedule) {
    for (int j = ov.first_index; j <= ov.schedule->horizon(); ++j) {
      const Real lo = ov.schedule->radius(j - 1).value();
      const Real hi = ov.schedule->radius(j).value();
      if (hi - lo < 1e-12L) break;
      rings.emplace_back(lo, hi);
    }
  } else {
    rings.emplace_back(ov.tail_start.value(), 1.0L - 1e-12L);
  }
  for (const auto& [lo, hi] : rings) {
    for (const auto& t : ov.tail) scan(lo, hi, t.theta_lo, t.theta_hi);
  }
  return m;
}

ComboSpec combine_spec(const BeltramiSpec& a, const BeltramiSpec& b) {
  require_combinable(a, b);
  ComboSpec out;
  out.spec = assemble(detail::build_overlay(a, b), mobius_combo, &out.exact);
  return out;
}

BeltramiSpec linear_combination(Complex ca, const BeltramiSpec& a, Complex cb,
                                const BeltramiSpec& b) {
  BeltramiSpec out = assemble(
      detail::build_overlay(a, b), [&](Complex x, Complex y) { return ca * x + cb * y; }, nullptr);
  const bool ball = a.norm_class == NormClass::unit_ball && b.norm_class == NormClass::unit_ball;
  out.norm_class = ball && sup_modulus(out) < 1.0 ? NormClass::unit_ball : NormClass::unrestricted;
  return out;
}

}  // namespace atgeo
