#pragma once

#include <string>
#include <vector>

#include "atgeo/beltrami.hpp"
#include "atgeo/certified.hpp"
#include "atgeo/geodesic.hpp"
#include "atgeo/pairing.hpp"

namespace atgeo {

/// Lower estimates of I, J, delta through one family, and the h* envelope.
/// I is taken as |pairing| (phase aligned by a unimodular constant).
struct AsymptoticQuantities {
  double I_lower = 0.0;
  double J_lower = 0.0;
  double delta_lower = 0.0;
  double upper_envelope = 0.0;
  std::string method;
};

/// Closed-form limits along the family's parity for monomial families on
/// schedule tails ("schedule-limit"); finite-depth pairings otherwise.
AsymptoticQuantities estimate_IJdelta(const BeltramiSpec& spec, const DegeneratingFamily& family,
                                      int depth = 12);

struct FundamentalReport {
  bool certified = false;  // the h sandwich closed
  double h = 0.0;
  AsymptoticQuantities q;
  double margin_upper = 0.0;  // h/(1+h) + delta - I
  double margin_lower = 0.0;  // I - (h/(1-h) - delta)
  bool ok = false;            // margins >= -tol; always true when not certified
};

FundamentalReport check_fundamental_inequalities(const BeltramiSpec& spec,
                                                 const DegeneratingFamily& family, int depth = 12,
                                                 double tol = 1e-9);

struct VariationRow {
  double t = 0.0;
  CertifiedInterval distance;
  double ratio = 0.0;     // d(t) / t
  double residual = 0.0;  // |ratio - J|
};

struct VariationReport {
  std::vector<VariationRow> rows;
  double J_hat = 0.0;
  double extrapolated = 0.0;  // Richardson (4 g(t/2) - g(t)) / 3 on the last two rows
  double extrapolated_residual = 0.0;
  bool decreasing = false;
  bool all_certified = false;
  bool ok = false;
};

/// d_AT([t mu], [t nu]) / t against the pairing limit of mu - nu.
VariationReport binary_variation_check(const BeltramiSpec& mu, const BeltramiSpec& nu,
                                       const std::vector<double>& t_schedule,
                                       const std::vector<DegeneratingFamily>& families,
                                       double final_tol = 5e-3, double extrapolation_tol = 1e-3);

/// [best family lower bound, b*] for the tangent-space norm.
CertifiedInterval az_norm_sandwich(const BeltramiSpec& spec,
                                   const std::vector<DegeneratingFamily>& families, int depth = 12,
                                   double tol = 1e-9);

struct AzRow {
  double s = 0.0;
  double t = 0.0;
  CertifiedInterval norm;
  double target = 0.0;
  bool contains = false;
};

struct AzReport {
  std::vector<AzRow> rows;
  bool hard_failure = false;
  double max_deviation = 0.0;
  bool ok = false;
};

/// Every grid pair: the sandwich of eval(s) - eval(t) must bracket |s - t|.
AzReport certify_az_geodesic(const GeodesicFamilySpec& family, const std::vector<double>& grid,
                             const std::vector<DegeneratingFamily>& families, double tol = 1e-4);

}  // namespace atgeo
