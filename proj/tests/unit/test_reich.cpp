#include <cmath>
#include <memory>

#include "atgeo/errors.hpp"
#include "atgeo/reich.hpp"
#include "doctest.h"

using namespace atgeo;

namespace {
SchedulePtr sched() { return std::make_shared<const ReichSchedule>(build_schedule(0.5, 8)); }
}  // namespace

TEST_SUITE("reich") {
  TEST_CASE("kappa cells follow the schedule") {
    const auto s = sched();
    const auto kappa = build_kappa(s);
    REQUIRE(kappa.cells.size() == 8);
    for (int j = 1; j <= 8; ++j) {
      const auto& c = kappa.cells[j - 1];
      CHECK(c.r_in == s->radius(j - 1));
      CHECK(c.r_out == s->radius(j));
      CHECK(c.term.winding == s->winding(j));
      CHECK(std::abs(c.term.amplitude) == 0.5);
    }
    CHECK(kappa.tail.kind == TailKind::schedule);
    CHECK(kappa.tail.first_index == 9);
  }

  TEST_CASE("modulated coefficient") {
    const auto s = sched();
    CHECK(sup_modulus(build_modulated(s, 1.0, 1.0)) == 0.5);
    CHECK(sup_modulus(build_modulated(s, 0.3, 1.0)) == doctest::Approx(0.5));
    CHECK(sup_modulus(build_modulated(s, 1.0, 0.3)) == doctest::Approx(0.5));
    CHECK(sup_modulus(build_modulated(s, 1.5, 0.2)) == doctest::Approx(0.75));
    CHECK_THROWS_AS(build_modulated(s, 2.0, 1.0), PreconditionError);
    CHECK_NOTHROW(build_modulated(s, 2.0, 1.0, NormClass::unrestricted));
  }

  TEST_CASE("patch geometry") {
    const auto s = sched();
    const auto g = patch_geometry(*s, 1.0, 2.0);
    CHECK(g.half_width == doctest::Approx(kPi / 3));
    CHECK(g.contains_angle(1.0 + 1.0));
    CHECK_FALSE(g.contains_angle(1.0 + 1.1));
    CHECK(1.0L - s->radius(g.start_index - 1).value() < 1.0L);
    const auto small = patch_geometry(*s, 0.0, 0.1);
    CHECK(small.half_width == doctest::Approx(2 * std::asin(0.025)));
    CHECK(static_cast<double>(s->radius(small.start_index - 1).complement()) < 0.05);
    CHECK_THROWS_AS(patch_geometry(*s, 0.0, 5.0), PreconditionError);
  }

  TEST_CASE("cap sectors partition the circle") {
    const auto g = patch_geometry(*sched(), 0.0, 2.0);
    const auto secs = cap_sectors(g, 0.1, 0.2, 0.3, 0.4);
    CHECK(secs.front().theta_lo == 0.0);
    CHECK(secs.back().theta_hi == kTwoPi);
    for (std::size_t i = 1; i < secs.size(); ++i) CHECK(secs[i].theta_lo == secs[i - 1].theta_hi);
  }

  TEST_CASE("damped base and patch perturbation") {
    const auto s = sched();
    const auto g = patch_geometry(*s, 0.0, 2.0);
    const auto base = build_damped(s, g, 0.2, DampParity::both);
    CHECK(sup_modulus(base) == 0.5);
    CHECK(h_star(base) == 0.5);
    CHECK(boundary_dilatation(base, BoundaryPoint(0.0)) == doctest::Approx(0.2));
    CHECK(boundary_dilatation(base, BoundaryPoint(kPi)) == 0.5);
    const auto odd = build_damped(s, g, 0.2, DampParity::odd_only);
    CHECK(boundary_dilatation(odd, BoundaryPoint(0.0)) == 0.5);
    const auto delta = build_patch_delta(s, g, 0.1, DampParity::both);
    CHECK(sup_modulus(delta) == doctest::Approx(0.1));
    CHECK(boundary_dilatation(delta, BoundaryPoint(kPi)) == 0.0);
    CHECK(std::abs(eval(delta, std::polar(0.5, 0.0))) == 0.0);
    CHECK_THROWS_AS(build_damped(s, g, 0.7, DampParity::both), PreconditionError);
  }
}
