#pragma once

#include <array>
#include <string>
#include <vector>

#include "atgeo/beltrami.hpp"
#include "atgeo/certified.hpp"
#include "atgeo/pairing.hpp"
#include "atgeo/reich.hpp"
#include "atgeo/sigma.hpp"

namespace atgeo {

enum class FamilyKind {
  nonsubstantial,       // t base/h + sigma(t) delta, sigma in Sigma
  substantial_example,  // sigma(t) mu/k on odd E_j, t mu/k on even E_j
  straight_line,        // t base/h, with sgn(t) base off the cap for |t| > h
  closed_loop_edge,     // one edge of the four-edge loop through eta_1..eta_4
  infinitesimal,        // t base/b + sigma(t) delta, sigma in Sigma''
};
std::string to_string(FamilyKind k);

/// A map t -> BeltramiSpec for one of the constructions.
struct GeodesicFamilySpec {
  FamilyKind kind = FamilyKind::substantial_example;
  SchedulePtr schedule;
  BeltramiSpec base;
  BeltramiSpec delta;
  SigmaProfile sigma;
  double scale = 0.0;  // h, k or b
  double rho = 0.0;
  double beta = 0.0;
  double alpha = 0.0;
  PatchGeometry patch;  // q-patch, or the cap of a straight line
  int edge = 0;         // closed loop: 1..4
  double t_min = 0.0;
  double t_max = 0.0;

  BeltramiSpec eval(double t) const;
  BeltramiSpec scale_spec(double t) const;  // t base / scale
  std::string name() const;
};

GeodesicFamilySpec family_nonsubstantial(const BeltramiSpec& base, const BeltramiSpec& delta,
                                         const SigmaProfile& sigma, double h, double rho,
                                         double beta, const PatchGeometry& patch);
GeodesicFamilySpec family_substantial_example(const SchedulePtr& schedule,
                                              const SigmaProfile& sigma, double alpha);
GeodesicFamilySpec family_straight_line(const BeltramiSpec& base, const PatchGeometry& cap,
                                        double h);
/// eta_1..eta_4: (kappa, 0), (0, kappa), (-kappa, 0), (0, -kappa) on (odd, even) E_j.
std::array<BeltramiSpec, 4> loop_vertices(const SchedulePtr& schedule);
/// Edge e joins eta_e to eta_{e+1} with sigma(t) = (k - t)/(1 - t k).
std::array<GeodesicFamilySpec, 4> family_closed_loop(const SchedulePtr& schedule);
GeodesicFamilySpec family_infinitesimal(const BeltramiSpec& base, const BeltramiSpec& delta,
                                        const SigmaProfile& sigma, double b, double rho,
                                        double beta, const PatchGeometry& patch);

/// The three monomial parities of a schedule.
std::vector<DegeneratingFamily> monomial_dictionary(const SchedulePtr& schedule);

/// Sandwich for d_AT([a], [b]): upper from the exact combination sup, lower
/// from the best family pairing of the combined spec.
CertifiedInterval certify_distance(const BeltramiSpec& a, const BeltramiSpec& b,
                                   const std::vector<DegeneratingFamily>& families,
                                   double tol = 1e-9);
CertifiedInterval certify_distance(const BeltramiSpec& a, const BeltramiSpec& b,
                                   const DegeneratingFamily& family, double tol = 1e-9);

struct GeodesicRow {
  double s = 0.0;
  double t = 0.0;
  CertifiedInterval interval;
  double target = 0.0;
  bool contains = false;
};

struct GeodesicReport {
  std::vector<GeodesicRow> rows;
  bool hard_failure = false;  // an upper bound below the target
  bool ok = false;
  int certified = 0;
  int partial = 0;
  double max_deviation = 0.0;  // max |midpoint - target| over certified rows
};

/// 17 equispaced points on [t_min, t_max] plus the sigma knots inside it.
std::vector<double> default_grid(const GeodesicFamilySpec& family, int points = 17);

/// All pairs s < t of the grid: the interval must contain d_H(s, t). Required
/// status is CERTIFIED except for the nonsubstantial kind (PARTIAL allowed).
GeodesicReport certify_geodesic(const GeodesicFamilySpec& family, const std::vector<double>& grid,
                                const std::vector<DegeneratingFamily>& families,
                                double tol = 1e-6);

/// Certified lower bound on the limsup pairing of the direction difference
/// (eval_1(t) - eval_2(t)) / t against the family.
double distinctness_gap(const GeodesicFamilySpec& f1, const GeodesicFamilySpec& f2,
                        double t_probe, const DegeneratingFamily& family);
/// Closed-form limit of the same quantity along a monomial parity.
double distinctness_limit(const GeodesicFamilySpec& f1, const GeodesicFamilySpec& f2,
                          double t_probe, Parity parity);

struct PropagationRow {
  double t = 0.0;
  double p = 0.0;
  double value = 0.0;
  double expected = 0.0;
};
struct PropagationReport {
  std::vector<PropagationRow> rows;
  bool exact = false;             // every value == expected
  double additivity_error = 0.0;  // max |d(h) - d(t) - d(alpha)| with h = (t+alpha)/(1+t alpha)
  bool ok = false;
};

/// h*_p(eval(t)) against t for every grid t and boundary angle; the pairing-level
/// identity is checked for the same t and the given alpha.
PropagationReport substantial_propagation_check(const GeodesicFamilySpec& family,
                                                const std::vector<double>& grid,
                                                const std::vector<double>& p_samples,
                                                double alpha = 0.4);

}  // namespace atgeo
