#pragma once

#include <string>

namespace atgeo {

enum class CertStatus { certified, partial, unresolved };

std::string to_string(CertStatus s);

/// A two-sided bound [lower, upper] on a class quantity.
struct CertifiedInterval {
  double lower = 0.0;
  double upper = 0.0;
  std::string lower_method;
  std::string upper_method;
  CertStatus status = CertStatus::unresolved;
  double gap_tolerance = 0.0;

  double gap() const { return upper - lower; }
  double midpoint() const { return 0.5 * (lower + upper); }

  /// CERTIFIED iff upper - lower <= tol; PARTIAL with a positive lower bound;
  /// UNRESOLVED otherwise.
  static CertifiedInterval make(double lower, double upper, std::string lower_method,
                                std::string upper_method, double tol);
};

}  // namespace atgeo
