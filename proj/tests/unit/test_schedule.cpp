#include <cmath>

#include "atgeo/errors.hpp"
#include "atgeo/schedule.hpp"
#include "doctest.h"

using namespace atgeo;

TEST_SUITE("schedule") {
  TEST_CASE("canonical schedule passes every inequality to the horizon") {
    const auto s = build_schedule(0.5, 8);
    CHECK(s.J() == 8);
    CHECK(s.horizon() == ReichSchedule::kHorizon);
    CHECK(s.winding(1).value() == 1.0L);
    CHECK(s.winding(2).value() == 11.0L);
    CHECK(verify_fs_inequalities(s).ok());
    CHECK(verify_fs_inequalities(s, ReichSchedule::kHorizon).ok());
  }

  TEST_CASE("windings grow past double range without losing order") {
    const auto s = build_schedule(0.5, 12);
    for (int j = 2; j <= s.horizon(); ++j) {
      CHECK(s.winding(j) > s.winding(j - 1));
      CHECK(s.radius(j) > s.radius(j - 1));
    }
    CHECK(s.winding(8).value() > 1e14L);
    CHECK(s.winding(12).value() > 1e30L);
  }

  TEST_CASE("deterministic") {
    CHECK(build_schedule(0.5, 8) == build_schedule(0.5, 8));
    CHECK(build_schedule(0.3, 5).with_prefix(8) == build_schedule(0.3, 8));
  }

  TEST_CASE("worked prefix r1 = 0.8") {
    // brute force: smallest n > 1 with 0.8^(n+2) < 1/4
    int n = 2;
    while (std::pow(0.8, n + 2) >= 0.25) ++n;
    CHECK(n == 5);
    const auto w = smallest_admissible_winding(Radius::from_value(0.8L), 2, Winding(1));
    CHECK(w.value() == 5.0L);
    // window for r2: r2 > 0.9 and r2^7 > 3/4
    const auto win = admissible_radius_window(Winding(5), 2, Radius::from_value(0.8L));
    const double lower = static_cast<double>(win.lower.value());
    CHECK(lower == doctest::Approx(std::max(0.9, std::pow(0.75, 1.0 / 7))).epsilon(1e-12));
    CHECK(0.96 > lower);
    const auto s = ReichSchedule::from_prefix(0.5, {Winding(1), Winding(5)},
                                              {Radius::from_value(0.8L), Radius::from_value(0.96L)});
    const auto rep = verify_fs_inequalities(s, 2);
    CHECK(rep.ok());
    CHECK(rep.rows[0].inner_mass == 0.0L);  // r0 = 0
    CHECK(static_cast<double>(rep.rows[1].outer_mass) == doctest::Approx(1 - std::pow(0.96, 7)));
  }

  TEST_CASE("corrupted r2 = 0.90 fails the outer inequality") {
    const auto s = ReichSchedule::from_prefix(0.5, {Winding(1), Winding(5)},
                                              {Radius::from_value(0.8L), Radius::from_value(0.90L)});
    const auto rep = verify_fs_inequalities(s, 2);
    CHECK_FALSE(rep.ok());
    bool outer = false;
    for (const auto& v : rep.violations) outer |= v.j == 2 && v.inequality == "outer";
    CHECK(outer);
  }

  TEST_CASE("power arithmetic in extended precision") {
    const auto s = build_schedule(0.5, 8);
    const auto rep = verify_fs_inequalities(s);
    for (const auto& row : rep.rows) {
      const Real sum = row.inner_mass + row.middle_mass + row.outer_mass;
      CHECK(static_cast<double>(std::abs(sum - 1.0L)) < 1e-15);
    }
  }

  TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(build_schedule(0.0, 8), PreconditionError);
    CHECK_THROWS_AS(build_schedule(1.0, 8), PreconditionError);
    CHECK_THROWS_AS(build_schedule(0.5, 1), PreconditionError);
    const auto s = build_schedule(0.5, 3);
    CHECK_THROWS_AS(s.entry(0), PreconditionError);
    CHECK(s.radius(0).is_zero());
  }
}
