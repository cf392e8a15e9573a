#include <cmath>
#include <memory>
#include <random>

#include "atgeo/beltrami.hpp"
#include "atgeo/errors.hpp"
#include "atgeo/reich.hpp"
#include "doctest.h"

using namespace atgeo;

namespace {

SectorAnnularCell cell(double r0, double r1, double t0, double t1, Complex amp, double n) {
  SectorAnnularCell c;
  c.r_in = Radius::from_value(r0);
  c.r_out = Radius::from_value(r1);
  c.theta_lo = t0;
  c.theta_hi = t1;
  c.term = {amp, Winding(n)};
  return c;
}

BeltramiSpec cells_only(std::vector<SectorAnnularCell> cs) {
  BeltramiSpec s;
  s.cells = std::move(cs);
  return s;
}

SchedulePtr sched() { return std::make_shared<const ReichSchedule>(build_schedule(0.5, 8)); }

}  // namespace

TEST_SUITE("beltrami") {
  TEST_CASE("kappa has constant modulus and every boundary point is substantial") {
    const auto kappa = build_kappa(sched());
    CHECK(sup_modulus(kappa) == 0.5);
    CHECK(h_star(kappa) == 0.5);
    for (int i = 0; i < 64; ++i) {
      CHECK(boundary_dilatation(kappa, BoundaryPoint(kTwoPi * i / 64)) == 0.5);
    }
    CHECK(std::abs(eval(kappa, std::polar(0.95, 1.0))) == doctest::Approx(0.5));
    CHECK_THROWS_AS(eval(kappa, 1.0), DomainError);
  }

  TEST_CASE("twist value") {
    const TwistTerm t{Complex(0.3, 0.0), Winding(3)};
    CHECK(std::abs(t.value(0.7) - 0.3 * std::exp(Complex(0, -2.1))) < 1e-15);
    const auto s = cells_only({cell(0.0, 0.5, 0.0, kTwoPi, 0.3, 3)});
    const Complex z = std::polar(0.25, 0.7);
    CHECK(std::abs(eval(s, z) - 0.3 * std::pow(std::conj(z), 3) / std::pow(std::abs(z), 3)) < 1e-15);
    CHECK(eval(s, std::polar(0.75, 0.7)) == Complex(0.0, 0.0));
  }

  TEST_CASE("validation") {
    CHECK_NOTHROW(cells_only({cell(0.0, 0.5, 0.0, 1.0, 0.3, 0)}).validate());
    CHECK_THROWS_AS(cells_only({cell(0.5, 0.2, 0.0, 1.0, 0.3, 0)}).validate(), PreconditionError);
    CHECK_THROWS_AS(cells_only({cell(0.0, 0.5, 2.0, 1.0, 0.3, 0)}).validate(), PreconditionError);
    CHECK_THROWS_AS(cells_only({cell(0.0, 0.5, 0.0, 1.0, 1.3, 0)}).validate(), PreconditionError);
    auto bad = build_kappa(sched());
    bad.tail.sectors = {TailSector{0.0, 3.0, 0.5, 0.5}};
    CHECK_THROWS_AS(bad.validate(), PreconditionError);
  }

  TEST_CASE("boundary dilatation sees only cells reaching the circle") {
    auto s = cells_only({cell(0.0, 0.9, 0.0, kTwoPi, 0.8, 0), cell(0.9, 1.0, 0.0, 1.0, 0.4, 2),
                         cell(0.9, 1.0, 1.0, kTwoPi, 0.2, 2)});
    CHECK(sup_modulus(s) == 0.8);
    CHECK(h_star(s) == 0.4);
    CHECK(boundary_dilatation(s, BoundaryPoint(0.5)) == 0.4);
    CHECK(boundary_dilatation(s, BoundaryPoint(3.0)) == 0.2);
    CHECK(boundary_dilatation(s, BoundaryPoint(1.0)) == 0.4);  // closure
    CHECK(boundary_dilatation(s, BoundaryPoint(kTwoPi)) == 0.4);
  }

  TEST_CASE("combination bound equals the grid sup on shared twists") {
    const auto a = cells_only({cell(0.0, 0.6, 0.0, kTwoPi, 0.5, 2), cell(0.6, 1.0, 0.0, kTwoPi, 0.3, 0)});
    const auto b = cells_only({cell(0.0, 0.6, 0.0, kTwoPi, -0.4, 2), cell(0.6, 1.0, 0.0, kTwoPi, 0.1, 0)});
    const double exact = std::max(0.9 / 1.2, 0.2 / 0.97);
    CHECK(cellwise_combo_bound(a, b) == doctest::Approx(exact).epsilon(1e-15));
    CHECK(grid_combo_sup(a, b, 32) == doctest::Approx(exact).epsilon(1e-15));
    const auto c = combine_spec(a, b);
    CHECK(c.exact);
    CHECK(sup_modulus(c.spec) == doctest::Approx(exact));
  }

  TEST_CASE("mixed windings: full circle formula and grid oracle") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
      const double A = 0.9 * u(rng), B = 0.9 * u(rng);
      const double lo = 3.0 * u(rng), hi = lo + 0.05 + 3.0 * u(rng);
      const int na = static_cast<int>(8 * u(rng)), nb = na + 1 + static_cast<int>(5 * u(rng));
      const auto a = cells_only({cell(0.2, 0.7, lo, hi, std::polar(A, 6 * u(rng)), na)});
      const auto b = cells_only({cell(0.2, 0.7, lo, hi, std::polar(B, 6 * u(rng)), nb)});
      const double exact = cellwise_combo_bound(a, b);
      const double grid = grid_combo_sup(a, b, 512);
      CHECK(grid <= exact + 1e-12);
      CHECK(exact - grid < 2e-3);
      CHECK(exact <= (A + B) / (1 + A * B) + 1e-15);
    }
    const auto a = cells_only({cell(0.0, 0.5, 0.0, kTwoPi, 0.5, 1)});
    const auto b = cells_only({cell(0.0, 0.5, 0.0, kTwoPi, 0.3, 4)});
    CHECK(cellwise_combo_bound(a, b) == doctest::Approx(0.8 / 1.15).epsilon(1e-15));
    CHECK_FALSE(combine_spec(a, b).exact);
    CHECK_THROWS_AS(linear_combination(1.0, a, 1.0, b), IncompatibleSpecs);
  }

  TEST_CASE("combination requires sup a * sup b < 1") {
    const auto a = scale(build_kappa(sched()), 2.0);
    CHECK(a.norm_class == NormClass::unrestricted);
    CHECK_THROWS_AS(cellwise_combo_bound(a, a), PreconditionError);
  }

  TEST_CASE("linear combination of schedule specs") {
    const auto s = sched();
    const auto d = linear_combination(1.0, build_kappa(s), -1.0, build_modulated(s, 0.4, 1.0));
    CHECK(sup_modulus(d) == doctest::Approx(0.3));
    CHECK(h_star(d) == doctest::Approx(0.3));
    const auto z = std::polar(0.999999, 2.0);
    const auto direct = eval(build_kappa(s), z) - eval(build_modulated(s, 0.4, 1.0), z);
    CHECK(std::abs(eval(d, z) - direct) < 1e-15);
  }

  TEST_CASE("clamp and materialize") {
    auto s = cells_only({cell(0.0, 0.5, 0.0, kTwoPi, Complex(0.0, 0.9), 1),
                         cell(0.5, 1.0, 0.0, kTwoPi, 0.3, 2)});
    const auto c = clamp_to_nonstrebel(s);
    CHECK(sup_modulus(c) == doctest::Approx(0.3));
    CHECK(std::arg(c.cells[0].term.amplitude) == doctest::Approx(kPi / 2));
    CHECK(sup_modulus(clamp_to_nonstrebel(cells_only({cell(0.0, 0.5, 0.0, kTwoPi, 0.3, 0)}))) == 0.0);
    const auto kappa = build_kappa(sched());
    const auto m = materialize(kappa, 12);
    CHECK(m.cells.size() == 12);
    CHECK(m.remainder_sup == 0.5);
    CHECK(m.remainder_start == kappa.tail.schedule->radius(12));
  }
}
