#include "atgeo/beltrami.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "atgeo/errors.hpp"

namespace atgeo {
namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

double canonical_angle(double theta) {
  double a = std::fmod(theta, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

bool closure_contains(double lo, double hi, double p) {
  if (lo <= p && p <= hi) return true;
  return p == 0.0 && hi == kTwoPi;
}

Complex clamp_amplitude(Complex a, double h) {
  const double m = std::abs(a);
  return m > h ? a * (h / m) : a;
}

}  // namespace

Complex TwistTerm::value(double theta) const {
  if (winding.is_zero()) return amplitude;
  const long double phase = std::fmod(winding.value() * static_cast<long double>(theta), kTwoPiL);
  return amplitude * std::polar(1.0, -static_cast<double>(phase));
}

Complex TailRule::amplitude(const TailSector& sector, int j) const {
  switch (kind) {
    case TailKind::none: return {0.0, 0.0};
    case TailKind::constant: return sector.odd;
    case TailKind::schedule: return (j % 2 == 1) ? sector.odd : sector.even;
  }
  return {0.0, 0.0};
}

double TailRule::sector_modulus(const TailSector& sector) const {
  switch (kind) {
    case TailKind::none: return 0.0;
    case TailKind::constant: return std::abs(sector.odd);
    case TailKind::schedule: return std::max(std::abs(sector.odd), std::abs(sector.even));
  }
  return 0.0;
}

BoundaryPoint::BoundaryPoint(double angle) : angle_(canonical_angle(angle)) {}

BeltramiSpec zero_spec() { return BeltramiSpec{}; }

void BeltramiSpec::validate() const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const std::string where = "cell " + std::to_string(i) + ": ";
    if (!(c.r_in < c.r_out)) throw PreconditionError(where + "requires r_in < r_out");
    if (!(c.theta_lo >= 0.0 && c.theta_lo < c.theta_hi && c.theta_hi <= kTwoPi)) {
      throw PreconditionError(where + "requires 0 <= theta_lo < theta_hi <= 2 pi");
    }
    if (tail.kind != TailKind::none && c.r_out > tail.start) {
      throw PreconditionError(where + "extends beyond the tail start");
    }
  }
  if (tail.kind != TailKind::none) {
    if (tail.sectors.empty()) throw PreconditionError("tail: no sectors");
    double at = 0.0;
    for (const auto& s : tail.sectors) {
      if (s.theta_lo != at || !(s.theta_hi > s.theta_lo)) {
        throw PreconditionError("tail: sectors must partition [0, 2 pi] in order");
      }
      at = s.theta_hi;
    }
    if (at != kTwoPi) throw PreconditionError("tail: sectors must end at 2 pi");
  }
  if (tail.kind == TailKind::schedule) {
    if (!tail.schedule) throw PreconditionError("tail: schedule kind without a schedule");
    if (tail.first_index < 1 || tail.first_index > tail.schedule->horizon()) {
      throw PreconditionError("tail: first_index outside the schedule horizon");
    }
    if (!(tail.start == tail.schedule->radius(tail.first_index - 1))) {
      throw PreconditionError("tail: start must equal r_{first_index - 1}");
    }
  }
  if (norm_class == NormClass::unit_ball && !(sup_modulus(*this) < 1.0)) {
    throw PreconditionError("unit-ball spec with sup modulus >= 1");
  }
}

Complex eval(const BeltramiSpec& spec, Complex z) {
  const double modulus = std::abs(z);
  if (!(modulus < 1.0)) throw DomainError("eval: |z| must be < 1");
  const double theta = canonical_angle(std::arg(z));
  const Radius r = Radius::from_value(modulus);
  for (const auto& c : spec.cells) {
    if (c.r_in <= r && r < c.r_out && c.theta_lo <= theta && theta < c.theta_hi) {
      return c.term.value(theta);
    }
  }
  const auto& tail = spec.tail;
  if (tail.kind == TailKind::none || r < tail.start) return {0.0, 0.0};
  const TailSector* sector = nullptr;
  for (const auto& s : tail.sectors) {
    if (s.theta_lo <= theta && theta < s.theta_hi) sector = &s;
  }
  if (!sector) return {0.0, 0.0};
  if (tail.kind == TailKind::constant) return sector->odd;
  for (int j = tail.first_index; j <= tail.schedule->horizon(); ++j) {
    if (r < tail.schedule->radius(j)) {
      return TwistTerm{tail.amplitude(*sector, j), tail.schedule->winding(j)}.value(theta);
    }
  }
  throw DomainError("eval: |z| beyond the schedule horizon");
}

double sup_modulus(const BeltramiSpec& spec) {
  double m = 0.0;
  for (const auto& c : spec.cells) m = std::max(m, std::abs(c.term.amplitude));
  for (const auto& s : spec.tail.sectors) m = std::max(m, spec.tail.sector_modulus(s));
  return m;
}

double boundary_dilatation(const BeltramiSpec& spec, BoundaryPoint p) {
  double m = 0.0;
  for (const auto& c : spec.cells) {
    if (c.r_out.is_one() && closure_contains(c.theta_lo, c.theta_hi, p.angle())) {
      m = std::max(m, std::abs(c.term.amplitude));
    }
  }
  if (!spec.tail.start.is_one()) {
    for (const auto& s : spec.tail.sectors) {
      if (closure_contains(s.theta_lo, s.theta_hi, p.angle())) {
        m = std::max(m, spec.tail.sector_modulus(s));
      }
    }
  }
  return m;
}

double h_star(const BeltramiSpec& spec) {
  double m = 0.0;
  for (const auto& c : spec.cells) {
    if (c.r_out.is_one()) m = std::max(m, std::abs(c.term.amplitude));
  }
  if (!spec.tail.start.is_one()) {
    for (const auto& s : spec.tail.sectors) m = std::max(m, spec.tail.sector_modulus(s));
  }
  return m;
}

BeltramiSpec scale(const BeltramiSpec& spec, Complex c) {
  BeltramiSpec out = spec;
  for (auto& cell : out.cells) cell.term.amplitude *= c;
  for (auto& s : out.tail.sectors) {
    s.odd *= c;
    s.even *= c;
  }
  if (!(sup_modulus(out) < 1.0)) out.norm_class = NormClass::unrestricted;
  return out;
}

BeltramiSpec clamp_to_nonstrebel(const BeltramiSpec& spec) {
  const double h = h_star(spec);
  if (h == 0.0) return zero_spec();
  BeltramiSpec out = spec;
  for (auto& cell : out.cells) cell.term.amplitude = clamp_amplitude(cell.term.amplitude, h);
  for (auto& s : out.tail.sectors) {
    s.odd = clamp_amplitude(s.odd, h);
    s.even = clamp_amplitude(s.even, h);
  }
  return out;
}

Materialized materialize(const BeltramiSpec& spec, int depth) {
  Materialized out;
  out.cells = spec.cells;
  const auto& tail = spec.tail;
  switch (tail.kind) {
    case TailKind::none:
      return out;
    case TailKind::constant:
      for (const auto& s : tail.sectors) {
        out.cells.push_back({tail.start, Radius::one(), s.theta_lo, s.theta_hi,
                             TwistTerm{s.odd, Winding(0.0L)}, 0});
      }
      return out;
    case TailKind::schedule:
      break;
  }
  const int last = std::min(depth, tail.schedule->horizon());
  for (int j = tail.first_index; j <= last; ++j) {
    for (const auto& s : tail.sectors) {
      out.cells.push_back({tail.schedule->radius(j - 1), tail.schedule->radius(j), s.theta_lo,
                           s.theta_hi, TwistTerm{tail.amplitude(s, j), tail.schedule->winding(j)},
                           j});
    }
  }
  out.remainder_start = tail.schedule->radius(std::max(last, tail.first_index - 1));
  for (const auto& s : tail.sectors) {
    out.remainder_sup = std::max(out.remainder_sup, tail.sector_modulus(s));
  }
  return out;
}

}  // namespace atgeo
