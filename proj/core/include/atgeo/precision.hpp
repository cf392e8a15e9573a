#pragma once

#include <cmath>
#include <compare>
#include <limits>

namespace atgeo {

// Extended precision for radii, windings and radial powers. Schedule radii
// approach 1 super-exponentially, so radii are stored through their
// complement 1 - r, which keeps full relative precision down to ~1e-4900.
using Real = long double;

/// A radius in [0, 1] stored as its complement 1 - r.
class Radius {
 public:
  constexpr Radius() = default;

  static Radius zero() { return from_complement(1.0L); }
  static Radius one() { return from_complement(0.0L); }
  static Radius from_value(Real r) { return from_complement(1.0L - r); }
  static Radius from_complement(Real comp) {
    Radius out;
    out.comp_ = comp;
    return out;
  }

  Real value() const { return 1.0L - comp_; }
  Real complement() const { return comp_; }
  bool is_zero() const { return comp_ == 1.0L; }
  bool is_one() const { return comp_ == 0.0L; }

  /// log r, -inf at r = 0.
  Real log() const {
    if (is_zero()) return -std::numeric_limits<Real>::infinity();
    return std::log1p(-comp_);
  }

  /// r^p for p >= 0.
  Real pow(Real p) const {
    if (p == 0.0L) return 1.0L;
    if (is_zero()) return 0.0L;
    return std::exp(p * log());
  }

  /// 1 - r^p, accurate when r^p is close to 1.
  Real one_minus_pow(Real p) const {
    if (p == 0.0L) return 0.0L;
    if (is_zero()) return 1.0L;
    return -std::expm1(p * log());
  }

  friend bool operator==(const Radius& a, const Radius& b) { return a.comp_ == b.comp_; }
  friend std::partial_ordering operator<=>(const Radius& a, const Radius& b) {
    return b.comp_ <=> a.comp_;
  }

 private:
  Real comp_ = 1.0L;
};

/// A nonnegative integral winding number (or monomial degree). Values beyond
/// 2^64 are integral long doubles; they are compared, subtracted and used as
/// exponents but never reduced modulo 2*pi exactly.
class Winding {
 public:
  constexpr Winding() = default;
  constexpr explicit Winding(Real n) : n_(n) {}

  Real value() const { return n_; }
  bool is_zero() const { return n_ == 0.0L; }
  /// True when the value is an exactly represented integer below 2^63.
  bool is_exact() const { return n_ < 9.2233720368547758e18L; }

  friend bool operator==(Winding a, Winding b) { return a.n_ == b.n_; }
  friend std::partial_ordering operator<=>(Winding a, Winding b) { return a.n_ <=> b.n_; }

 private:
  Real n_ = 0.0L;
};

}  // namespace atgeo
