#include "atgeo/certified.hpp"

#include <algorithm>
#include <cmath>

namespace atgeo {

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::certified: return "CERTIFIED";
    case CertStatus::partial: return "PARTIAL";
    case CertStatus::unresolved: return "UNRESOLVED";
  }
  return "UNRESOLVED";
}

CertifiedInterval CertifiedInterval::make(double lower, double upper, std::string lower_method,
                                          std::string upper_method, double tol) {
  // Both ends are valid bounds; an inversion within rounding is collapsed.
  if (lower > upper && lower - upper <= 1e-12 * std::max(1.0, std::abs(upper))) lower = upper;
  CertifiedInterval out;
  out.lower = lower;
  out.upper = upper;
  out.lower_method = std::move(lower_method);
  out.upper_method = std::move(upper_method);
  out.gap_tolerance = tol;
  if (upper - lower <= tol) {
    out.status = CertStatus::certified;
  } else if (lower > 0.0) {
    out.status = CertStatus::partial;
  } else {
    out.status = CertStatus::unresolved;
  }
  return out;
}

}  // namespace atgeo
