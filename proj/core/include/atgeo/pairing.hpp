#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "atgeo/beltrami.hpp"
#include "atgeo/certified.hpp"

namespace atgeo {

/// phi_n(z) = (n + 2) z^n / (2 pi), unit L1 norm on the disk.
struct MonomialQD {
  Winding degree;
};

/// psi = (phi_m o g) (g')^2 with g(z) = (z - s q) / (1 - s conj(q) z); g sends
/// s q to 0, so the unit mass of phi_m gathers at q as s -> 1.
struct PushedQD {
  Winding degree;
  double target = 0.0;  // angle of q
  double concentration = 0.5;
};

/// psi = e^{i M a} z^{n-M} (1 + z e^{-i a})^{2M} / N with a the angle of q and
/// N fixing unit L1 norm. It follows the twist z^n radially and concentrates
/// angularly at q like cos^{2M}((theta - a)/2).
struct FocusedQD {
  Winding degree;
  int spread = 0;  // M <= degree
  double target = 0.0;
};

using QuadDiff = std::variant<MonomialQD, PushedQD, FocusedQD>;

struct PairingResult {
  Complex value{0.0, 0.0};
  double error = 0.0;
};

/// Thrown when adaptive quadrature cannot reach the requested tolerance.
class QuadratureFailure : public std::runtime_error {
 public:
  QuadratureFailure(const std::string& what, PairingResult best)
      : std::runtime_error(what), best_(best) {}
  const PairingResult& best() const { return best_; }

 private:
  PairingResult best_;
};

enum class Parity { all, odd, even };
std::string to_string(Parity p);

/// A named sequence of unit-norm quadratic differentials tending to 0 on
/// compact sets.
struct DegeneratingFamily {
  enum class Kind { monomial_schedule, pushed, focused };

  Kind kind = Kind::monomial_schedule;
  Parity parity = Parity::all;
  std::shared_ptr<const ReichSchedule> schedule;  // monomial_schedule, focused
  double target = 0.0;                            // pushed, focused
  Winding pushed_degree{0.0L};

  static DegeneratingFamily monomials(std::shared_ptr<const ReichSchedule> s, Parity p);
  /// Members use s_i = 1 - 2^-i.
  static DegeneratingFamily pushed(double target, Winding degree = Winding(0.0L));
  /// Member i is FocusedQD(n_j, min(n_j, 6 j), target), j the i-th schedule
  /// index of the parity.
  static DegeneratingFamily focused(std::shared_ptr<const ReichSchedule> s, Parity p,
                                    double target);

  std::string name() const;
  /// Schedule index j of member i (1-based): i, 2i - 1 or 2i.
  int schedule_index(int member) const;
  /// Largest member index available.
  int max_members() const;
  QuadDiff member(int i) const;
};

/// rho2^{n+2} - rho1^{n+2}.
Real l1_mass_annulus(const MonomialQD& phi, Radius rho1, Radius rho2);
double l1_mass_annulus(const MonomialQD& phi, double rho1, double rho2);

/// Closed-form pairing of a twist cell with phi_m. Angular factors with
/// |m - n| >= 2^20 on partial sectors are folded into the error bound.
PairingResult pair_twist_monomial(const SectorAnnularCell& cell, const MonomialQD& phi);

/// Closed-form pairing of a twist cell with a focused differential.
PairingResult pair_twist_focused(const SectorAnnularCell& cell, const FocusedQD& psi);

/// Quadrature pairing of a cell with a pushed differential.
PairingResult pair_twist_pushed(const SectorAnnularCell& cell, const PushedQD& psi,
                                double abs_tol = 1e-9);

/// Pointwise values (used by quadrature checks).
Complex eval_qd(const QuadDiff& q, Complex z);

/// Pairing of spec with q over the spec materialized to schedule depth
/// `depth` (0: horizon); the uncovered remainder enters the error bound.
PairingResult pair(const BeltramiSpec& spec, const QuadDiff& q, int depth = 0,
                   double abs_tol = 1e-9);

/// sup_{|z| <= rho} |psi_i| for members 1..count.
std::vector<double> compact_sup_decay(const DegeneratingFamily& family, double rho, int count);

struct LimsupOptions {
  double tol = 1e-9;
  int max_depth = 32;
};

/// Sandwich [max over the last ceil(D/2) members of |pair| - err, h*(spec)].
/// Depth grows from `depth` until the gap closes or max_depth is reached.
CertifiedInterval pairing_limsup(const BeltramiSpec& spec, const DegeneratingFamily& family,
                                 int depth = 12, LimsupOptions opts = {});

/// Exact limit of |pair(spec, phi_{n_j})| along the parity subsequence for
/// schedule tails: |sum over tail sectors of amplitude * width / 2 pi|, the
/// larger parity for Parity::all. Empty for constant tails.
std::optional<double> schedule_pairing_limit(const BeltramiSpec& spec, Parity parity);

/// One row of a pairing table.
struct PairingRow {
  std::string spec_id;
  std::string family;
  int index = 0;
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;
};
std::vector<PairingRow> pairing_table(const std::string& spec_id, const BeltramiSpec& spec,
                                      const DegeneratingFamily& family, int count);

}  // namespace atgeo
