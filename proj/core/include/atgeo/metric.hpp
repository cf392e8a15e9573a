#pragma once

#include <complex>

namespace atgeo {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A dilatation or norm in [0, 1): k, h, t, s, alpha in the constructions.
class DilatationValue {
 public:
  /// Throws DomainError unless 0 <= value < 1.
  explicit DilatationValue(double value);
  double value() const { return value_; }

 private:
  double value_;
};

/// A real point of the hyperbolic disk, |value| < 1.
class HyperbolicParam {
 public:
  /// Throws DomainError unless |value| < 1.
  explicit HyperbolicParam(double value);
  double value() const { return value_; }

 private:
  double value_;
};

/// Pseudo-hyperbolic distance |(z1 - z2) / (1 - conj(z1) z2)|.
double pseudo_distance(std::complex<double> z1, std::complex<double> z2);

/// Hyperbolic distance with curvature -4 normalization:
/// 1/2 log((1 + x) / (1 - x)), x the pseudo-hyperbolic distance.
double hyperbolic_distance(HyperbolicParam t1, HyperbolicParam t2);
double hyperbolic_distance(std::complex<double> z1, std::complex<double> z2);

/// (s - t) / (1 - s t). Throws DomainError when |s t| >= 1.
double mobius_difference(double s, double t);

/// 1/2 log H with H = (1 + h) / (1 - h).
double dilatation_to_distance(DilatationValue h);
/// Inverse of dilatation_to_distance; throws DomainError for d < 0.
double distance_to_dilatation(double d);

/// F(k) = |(t1 - t2) k / (1 - conj(t2) t1 k^2)|^2, nondecreasing in k on
/// (0, 1/sqrt|t1 t2|). Throws DomainError when k <= 0 or k^2 |t1 t2| >= 1.
double lemma_dist_F(std::complex<double> t1, std::complex<double> t2, double k);

}  // namespace atgeo
