#include "atgeo/metric.hpp"

#include <cmath>
#include <string>

#include "atgeo/errors.hpp"

namespace atgeo {

DilatationValue::DilatationValue(double value) : value_(value) {
  if (!(value >= 0.0 && value < 1.0)) {
    throw DomainError("dilatation must lie in [0, 1), got " + std::to_string(value));
  }
}

HyperbolicParam::HyperbolicParam(double value) : value_(value) {
  if (!(std::abs(value) < 1.0)) {
    throw DomainError("hyperbolic parameter must satisfy |t| < 1, got " + std::to_string(value));
  }
}

double pseudo_distance(std::complex<double> z1, std::complex<double> z2) {
  if (!(std::abs(z1) < 1.0 && std::abs(z2) < 1.0)) {
    throw DomainError("pseudo_distance: points must lie in the open unit disk");
  }
  return std::abs((z1 - z2) / (1.0 - std::conj(z1) * z2));
}

double hyperbolic_distance(HyperbolicParam t1, HyperbolicParam t2) {
  return hyperbolic_distance(std::complex<double>(t1.value()), std::complex<double>(t2.value()));
}

double hyperbolic_distance(std::complex<double> z1, std::complex<double> z2) {
  return std::atanh(pseudo_distance(z1, z2));
}

double mobius_difference(double s, double t) {
  if (!(std::abs(s * t) < 1.0)) {
    throw DomainError("mobius_difference: requires |s t| < 1");
  }
  return (s - t) / (1.0 - s * t);
}

double dilatation_to_distance(DilatationValue h) { return std::atanh(h.value()); }

double distance_to_dilatation(double d) {
  if (!(d >= 0.0)) throw DomainError("distance_to_dilatation: distance must be nonnegative");
  return std::tanh(d);
}

double lemma_dist_F(std::complex<double> t1, std::complex<double> t2, double k) {
  if (!(k > 0.0)) throw DomainError("lemma_dist_F: k must be positive");
  const double k2 = k * k;
  if (!(k2 * std::abs(t1 * t2) < 1.0)) {
    throw DomainError("lemma_dist_F: requires k^2 |t1 t2| < 1");
  }
  const double m = std::abs((t1 - t2) * k / (1.0 - std::conj(t2) * t1 * k2));
  return m * m;
}

}  // namespace atgeo
