#include "atgeo/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "atgeo/errors.hpp"
#include "atgeo/quadrature.hpp"

namespace atgeo {
namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;
constexpr long double kExactAngular = 0x1p20L;
// Cells pushed through quadrature must have a resolvable twist and stay away
// from |z| = 1 in double precision.
constexpr long double kMaxQuadratureWinding = 512.0L;
constexpr long double kMinQuadratureComplement = 1e-12L;

using CL = std::complex<long double>;

// int_lo^hi e^{i d theta} d theta, or a bound on its modulus when d is too large
// to evaluate reliably.
struct Angular {
  CL value{0.0L, 0.0L};
  long double bound = 0.0L;  // > 0: value unknown, |value| <= bound
};

Angular angular_factor(long double d, double lo, double hi, bool full) {
  const long double width = static_cast<long double>(hi) - lo;
  if (d == 0.0L) return {CL(width, 0.0L), 0.0L};
  if (full) return {};
  if (std::fabs(d) >= kExactAngular) return {{}, std::min(width, 2.0L / std::fabs(d))};
  const long double half = 0.5L * d * width;
  const long double mid = 0.5L * d * (static_cast<long double>(lo) + hi);
  const long double mag = 2.0L * std::sin(half) / d;
  return {CL(mag * std::cos(mid), mag * std::sin(mid)), 0.0L};
}

// b^p - a^p for radii a <= b.
Real radial_mass(Radius a, Radius b, Real p) {
  if (b.pow(p) < 0.5L) return b.pow(p) - a.pow(p);
  return a.one_minus_pow(p) - b.one_minus_pow(p);
}

Complex to_complex(CL z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

// Normalizer N' = sum_l C(M,l)^2 (n+2)/(n-M+2l+2) and the binomial rows.
struct FocusedCoefficients {
  std::vector<long double> binom_m;   // C(M, l), l = 0..M
  std::vector<long double> binom_2m;  // C(2M, l), l = 0..2M
  long double norm = 0.0L;
};

std::vector<long double> binomial_row(int n) {
  std::vector<long double> row(static_cast<std::size_t>(n) + 1, 1.0L);
  for (int l = 1; l <= n; ++l) row[l] = row[l - 1] * (n - l + 1) / l;
  return row;
}

FocusedCoefficients focused_coefficients(const FocusedQD& psi) {
  FocusedCoefficients c;
  c.binom_m = binomial_row(psi.spread);
  c.binom_2m = binomial_row(2 * psi.spread);
  const long double n = psi.degree.value();
  for (int l = 0; l <= psi.spread; ++l) {
    c.norm += c.binom_m[l] * c.binom_m[l] * (n + 2.0L) / (n - psi.spread + 2.0L * l + 2.0L);
  }
  return c;
}

// Mass of a focused differential on |z| > rho.
long double focused_outer_mass(const FocusedQD& psi, const FocusedCoefficients& c, Radius rho) {
  const long double n = psi.degree.value();
  long double m = 0.0L;
  for (int l = 0; l <= psi.spread; ++l) {
    const long double q = n - psi.spread + 2.0L * l + 2.0L;
    m += c.binom_m[l] * c.binom_m[l] * (n + 2.0L) / q * rho.one_minus_pow(q);
  }
  return m / c.norm;
}

PairingResult focused_cell(const SectorAnnularCell& cell, const FocusedQD& psi,
                           const FocusedCoefficients& c) {
  const int M = psi.spread;
  const long double n = psi.degree.value();
  const long double n_minus_w = n - cell.term.winding.value();
  const long double a = psi.target;
  CL sum{0.0L, 0.0L};
  long double bound = 0.0L;
  for (int l = 0; l <= 2 * M; ++l) {
    const long double shift = static_cast<long double>(l - M);
    const long double p = n + 2.0L + shift;
    const long double radial = (n + 2.0L) / p * radial_mass(cell.r_in, cell.r_out, p);
    const Angular ang =
        angular_factor(n_minus_w + shift, cell.theta_lo, cell.theta_hi, cell.full_angle());
    const long double w = c.binom_2m[l] * radial;
    if (ang.bound > 0.0L) {
      bound += w * ang.bound;
    } else {
      sum += w * std::polar(1.0L, -l * a) * ang.value;
    }
  }
  const CL amp(cell.term.amplitude.real(), cell.term.amplitude.imag());
  const long double scale = 1.0L / (kTwoPiL * c.norm);
  const CL value = amp * std::polar(1.0L, M * a) * sum * scale;
  return {to_complex(value), static_cast<double>(std::abs(amp) * bound * scale)};
}

bool resolvable(const SectorAnnularCell& cell) {
  return cell.term.winding.value() <= kMaxQuadratureWinding &&
         cell.r_out.complement() >= kMinQuadratureComplement;
}

Complex pushed_value(const PushedQD& psi, Complex z) {
  const Complex q = std::polar(1.0, psi.target);
  const double s = psi.concentration;
  const Complex den = 1.0 - s * std::conj(q) * z;
  const Complex g = (z - s * q) / den;
  const Complex dg = (1.0 - s * s) / (den * den);
  const double m = static_cast<double>(psi.degree.value());
  return (m + 2.0) * std::pow(g, m) / kTwoPi * dg * dg;
}

Complex focused_value(const FocusedQD& psi, Complex z) {
  const auto c = focused_coefficients(psi);
  const double n = static_cast<double>(psi.degree.value());
  const int M = psi.spread;
  const double N = static_cast<double>(kTwoPiL * c.norm) / (n + 2.0);
  return std::polar(1.0, M * psi.target) * std::pow(z, n - M) *
         std::pow(1.0 + z * std::polar(1.0, -psi.target), 2.0 * M) / N;
}

}  // namespace

std::string to_string(Parity p) {
  switch (p) {
    case Parity::all: return "all";
    case Parity::odd: return "odd";
    case Parity::even: return "even";
  }
  return "all";
}

DegeneratingFamily DegeneratingFamily::monomials(std::shared_ptr<const ReichSchedule> s,
                                                 Parity p) {
  if (!s) throw PreconditionError("monomial family requires a schedule");
  DegeneratingFamily f;
  f.kind = Kind::monomial_schedule;
  f.parity = p;
  f.schedule = std::move(s);
  return f;
}

DegeneratingFamily DegeneratingFamily::pushed(double target, Winding degree) {
  DegeneratingFamily f;
  f.kind = Kind::pushed;
  f.target = BoundaryPoint(target).angle();
  f.pushed_degree = degree;
  return f;
}

DegeneratingFamily DegeneratingFamily::focused(std::shared_ptr<const ReichSchedule> s, Parity p,
                                               double target) {
  if (!s) throw PreconditionError("focused family requires a schedule");
  DegeneratingFamily f;
  f.kind = Kind::focused;
  f.parity = p;
  f.schedule = std::move(s);
  f.target = BoundaryPoint(target).angle();
  return f;
}

std::string DegeneratingFamily::name() const {
  char buf[64];
  switch (kind) {
    case Kind::monomial_schedule: return "monomial[" + to_string(parity) + "]";
    case Kind::pushed:
      std::snprintf(buf, sizeof buf, "pushed[q=%.6g]", target);
      return buf;
    case Kind::focused:
      std::snprintf(buf, sizeof buf, "focused[%s,q=%.6g]", to_string(parity).c_str(), target);
      return buf;
  }
  return "unknown";
}

int DegeneratingFamily::schedule_index(int member) const {
  switch (parity) {
    case Parity::all: return member;
    case Parity::odd: return 2 * member - 1;
    case Parity::even: return 2 * member;
  }
  return member;
}

int DegeneratingFamily::max_members() const {
  if (kind == Kind::pushed) return 48;
  const int h = schedule->horizon();
  switch (parity) {
    case Parity::all: return h;
    case Parity::odd: return (h + 1) / 2;
    case Parity::even: return h / 2;
  }
  return h;
}

QuadDiff DegeneratingFamily::member(int i) const {
  if (i < 1 || i > max_members()) throw PreconditionError("family member index out of range");
  if (kind == Kind::pushed) {
    return PushedQD{pushed_degree, target, 1.0 - std::ldexp(1.0, -i)};
  }
  const int j = schedule_index(i);
  const Winding n = schedule->winding(j);
  if (kind == Kind::monomial_schedule) return MonomialQD{n};
  const int spread = static_cast<int>(std::min<long double>(n.value(), 6.0L * j));
  return FocusedQD{n, spread, target};
}

Real l1_mass_annulus(const MonomialQD& phi, Radius rho1, Radius rho2) {
  if (rho2 < rho1) throw PreconditionError("l1_mass_annulus: requires rho1 <= rho2");
  return radial_mass(rho1, rho2, phi.degree.value() + 2.0L);
}

double l1_mass_annulus(const MonomialQD& phi, double rho1, double rho2) {
  if (!(0.0 <= rho1 && rho1 <= rho2 && rho2 <= 1.0)) {
    throw PreconditionError("l1_mass_annulus: requires 0 <= rho1 <= rho2 <= 1");
  }
  return static_cast<double>(
      l1_mass_annulus(phi, Radius::from_value(rho1), Radius::from_value(rho2)));
}

PairingResult pair_twist_monomial(const SectorAnnularCell& cell, const MonomialQD& phi) {
  const long double p = phi.degree.value() + 2.0L;
  const long double radial = radial_mass(cell.r_in, cell.r_out, p);
  const long double d = phi.degree.value() - cell.term.winding.value();
  const CL amp(cell.term.amplitude.real(), cell.term.amplitude.imag());
  if (d == 0.0L && cell.full_angle()) return {to_complex(amp * radial), 0.0};
  const Angular ang = angular_factor(d, cell.theta_lo, cell.theta_hi, cell.full_angle());
  const long double scale = radial / kTwoPiL;
  return {to_complex(amp * ang.value * scale),
          static_cast<double>(std::abs(amp) * ang.bound * scale)};
}

PairingResult pair_twist_focused(const SectorAnnularCell& cell, const FocusedQD& psi) {
  return focused_cell(cell, psi, focused_coefficients(psi));
}

PairingResult pair_twist_pushed(const SectorAnnularCell& cell, const PushedQD& psi,
                                double abs_tol) {
  const auto term = cell.term;
  auto f = [&](double r, double th) { return term.value(th) * pushed_value(psi, std::polar(r, th)); };
  const auto q = integrate_polar(f, static_cast<double>(cell.r_in.value()),
                                 static_cast<double>(cell.r_out.value()), cell.theta_lo,
                                 cell.theta_hi, abs_tol);
  PairingResult out{q.value, q.error};
  if (!q.converged) throw QuadratureFailure("pushed pairing: tolerance not reached", out);
  return out;
}

Complex eval_qd(const QuadDiff& q, Complex z) {
  if (const auto* m = std::get_if<MonomialQD>(&q)) {
    const double n = static_cast<double>(m->degree.value());
    return (n + 2.0) * std::pow(z, n) / kTwoPi;
  }
  if (const auto* p = std::get_if<PushedQD>(&q)) return pushed_value(*p, z);
  return focused_value(std::get<FocusedQD>(q), z);
}

PairingResult pair(const BeltramiSpec& spec, const QuadDiff& q, int depth, double abs_tol) {
  const Materialized mat = materialize(spec, depth > 0 ? depth : ReichSchedule::kHorizon);
  PairingResult out;
  if (const auto* m = std::get_if<MonomialQD>(&q)) {
    for (const auto& c : mat.cells) {
      const auto r = pair_twist_monomial(c, *m);
      out.value += r.value;
      out.error += r.error;
    }
    out.error += mat.remainder_sup *
                 static_cast<double>(mat.remainder_start.one_minus_pow(m->degree.value() + 2.0L));
    return out;
  }
  if (const auto* f = std::get_if<FocusedQD>(&q)) {
    if (f->spread < 0 || f->spread > f->degree.value()) {
      throw PreconditionError("focused differential requires 0 <= M <= n");
    }
    const auto coeff = focused_coefficients(*f);
    for (const auto& c : mat.cells) {
      const auto r = focused_cell(c, *f, coeff);
      out.value += r.value;
      out.error += r.error;
    }
    out.error += mat.remainder_sup *
                 static_cast<double>(focused_outer_mass(*f, coeff, mat.remainder_start));
    return out;
  }
  const auto& p = std::get<PushedQD>(q);
  std::vector<const SectorAnnularCell*> resolved;
  double unresolved_sup = mat.remainder_sup;
  for (const auto& c : mat.cells) {
    if (c.term.amplitude == 0.0) continue;
    if (resolvable(c)) {
      resolved.push_back(&c);
    } else {
      unresolved_sup = std::max(unresolved_sup, std::abs(c.term.amplitude));
    }
  }
  const double cell_tol = abs_tol / static_cast<double>(std::max<std::size_t>(1, 2 * resolved.size()));
  double mass = 0.0;
  double mass_err = 0.0;
  for (const auto* c : resolved) {
    const auto r = pair_twist_pushed(*c, p, cell_tol);
    out.value += r.value;
    out.error += r.error;
    auto g = [&](double rr, double th) { return Complex(std::abs(pushed_value(p, std::polar(rr, th))), 0.0); };
    const auto m = integrate_polar(g, static_cast<double>(c->r_in.value()),
                                   static_cast<double>(c->r_out.value()), c->theta_lo, c->theta_hi,
                                   cell_tol);
    mass += m.value.real();
    mass_err += m.error;
  }
  if (unresolved_sup > 0.0) {
    out.error += unresolved_sup * std::max(0.0, 1.0 - mass + mass_err);
  }
  return out;
}

std::vector<double> compact_sup_decay(const DegeneratingFamily& family, double rho, int count) {
  if (!(rho >= 0.0 && rho < 1.0)) throw PreconditionError("compact_sup_decay: requires 0 <= rho < 1");
  std::vector<double> out;
  for (int i = 1; i <= std::min(count, family.max_members()); ++i) {
    const QuadDiff q = family.member(i);
    if (const auto* m = std::get_if<MonomialQD>(&q)) {
      const long double n = m->degree.value();
      const long double pw = n == 0.0L ? 1.0L : (rho == 0.0 ? 0.0L : std::exp(n * std::log(static_cast<long double>(rho))));
      out.push_back(static_cast<double>((n + 2.0L) * pw / kTwoPiL));
    } else if (const auto* f = std::get_if<FocusedQD>(&q)) {
      const auto c = focused_coefficients(*f);
      const long double n = f->degree.value();
      const long double lr = std::log1p(static_cast<long double>(rho));
      const long double lrho = rho == 0.0 ? -INFINITY : std::log(static_cast<long double>(rho));
      const long double e = (n - f->spread == 0.0L ? 0.0L : (n - f->spread) * lrho) + 2.0L * f->spread * lr;
      out.push_back(static_cast<double>(std::exp(e) * (n + 2.0L) / (kTwoPiL * c.norm)));
    } else {
      // Holomorphic, so the maximum over the closed disk sits on |z| = rho.
      double m = 0.0;
      constexpr int kSamples = 4096;
      for (int k = 0; k < kSamples; ++k) {
        m = std::max(m, std::abs(eval_qd(q, std::polar(rho, kTwoPi * k / kSamples))));
      }
      out.push_back(m);
    }
  }
  return out;
}

CertifiedInterval pairing_limsup(const BeltramiSpec& spec, const DegeneratingFamily& family,
                                 int depth, LimsupOptions opts) {
  if (depth < 3) throw PreconditionError("pairing_limsup: depth must be >= 3");
  const double upper = h_star(spec);
  const int cap = std::min(opts.max_depth, family.max_members());
  std::map<int, double> lower_at;
  auto member_lower = [&](int i) {
    auto it = lower_at.find(i);
    if (it != lower_at.end()) return it->second;
    const auto r = pair(spec, family.member(i));
    return lower_at[i] = std::abs(r.value) - r.error;
  };
  int D = std::min(depth, cap);
  double lower = 0.0;
  for (;;) {
    lower = 0.0;
    for (int i = D - (D + 1) / 2 + 1; i <= D; ++i) lower = std::max(lower, member_lower(i));
    if (upper - lower <= opts.tol || D >= cap) break;
    D = std::min(D + 2, cap);
  }
  return CertifiedInterval::make(lower, upper, family.name() + " depth " + std::to_string(D),
                                 "h*", opts.tol);
}

std::optional<double> schedule_pairing_limit(const BeltramiSpec& spec, Parity parity) {
  const auto& tail = spec.tail;
  if (tail.kind == TailKind::none) return 0.0;
  if (tail.kind != TailKind::schedule) return std::nullopt;
  Complex odd{0.0, 0.0}, even{0.0, 0.0};
  for (const auto& s : tail.sectors) {
    const double w = (s.theta_hi - s.theta_lo) / kTwoPi;
    odd += s.odd * w;
    even += s.even * w;
  }
  switch (parity) {
    case Parity::odd: return std::abs(odd);
    case Parity::even: return std::abs(even);
    case Parity::all: return std::max(std::abs(odd), std::abs(even));
  }
  return std::nullopt;
}

std::vector<PairingRow> pairing_table(const std::string& spec_id, const BeltramiSpec& spec,
                                      const DegeneratingFamily& family, int count) {
  std::vector<PairingRow> rows;
  for (int i = 1; i <= std::min(count, family.max_members()); ++i) {
    const auto r = pair(spec, family.member(i));
    rows.push_back({spec_id, family.name(), i, r.value.real(), r.value.imag(), r.error});
  }
  return rows;
}

}  // namespace atgeo
