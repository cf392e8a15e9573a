#include <cmath>

#include "atgeo/errors.hpp"
#include "atgeo/sigma.hpp"
#include "doctest.h"

using namespace atgeo;

TEST_SUITE("sigma") {
  TEST_CASE("profiles") {
    const auto tent = SigmaProfile::linear_ramp(0.5, 0.2, 0.9);
    CHECK(tent(0.0) == 0.0);
    CHECK(tent(0.1) == doctest::Approx(0.05));
    CHECK(tent(0.05) == doctest::Approx(0.025));
    CHECK(tent(0.5) == 0.0);
    const auto ramp = SigmaProfile::ramp_to_end(0.4, 0.2, 0.5);
    CHECK(ramp(0.1) == doctest::Approx(0.04));
    CHECK(ramp(0.5) == doctest::Approx(0.5));
    const auto loop = SigmaProfile::hyperbolic_loop(0.5);
    CHECK(loop(0.0) == doctest::Approx(0.5));
    CHECK(loop(0.5) == doctest::Approx(0.0));
  }

  TEST_CASE("zero profile is admissible in Sigma") {
    const auto rep = check_sigma_admissible(SigmaProfile::zero(0.9), SigmaClass::sigma, {0.45, 0.2, 1.0, 0.9});
    CHECK(rep.ok);
    CHECK(rep.pairs_checked > 0);
  }

  TEST_CASE("tent thresholds at rho/h = 0.5, beta = 0.2") {
    const SigmaParams p{0.45, 0.2, 1.0, 0.9};
    CHECK(check_sigma_admissible(SigmaProfile::linear_ramp(0.5, 0.1, 0.9), SigmaClass::sigma, p).ok);
    CHECK_FALSE(check_sigma_admissible(SigmaProfile::linear_ramp(3.0, 0.8, 0.9), SigmaClass::sigma, p).ok);
    // the sufficient condition gamma/(1 - t0 gamma^2) <= 1/(1 + t0), gamma = rho/h + alpha beta
    const double gamma = 0.5 + 0.5 * 0.2, t0 = 0.1;
    CHECK(gamma / (1 - t0 * gamma * gamma) <= 1 / (1 + t0));
  }

  TEST_CASE("condition B value at a pair") {
    const auto tent = SigmaProfile::linear_ramp(0.5, 0.1, 0.9);
    const SigmaParams p{0.45, 0.2, 1.0, 0.9};
    const auto [lhs, rhs] = condition_b(tent, SigmaClass::sigma, p, 0.02, 0.04);
    const double a = 0.02 * 0.5 + 0.01 * 0.2, b = 0.04 * 0.5 + 0.02 * 0.2;
    CHECK(lhs == doctest::Approx((0.02 * 0.5 + 0.01 * 0.2) / (1 - a * b)));
    CHECK(rhs == doctest::Approx(0.02 / (1 - 0.0008)));
  }

  TEST_CASE("hyperbolic loop is the equality case of Sigma'") {
    const auto loop = SigmaProfile::hyperbolic_loop(0.5);
    const SigmaParams p{0.0, 0.0, 1.0, 0.5};
    for (double s : {0.0, 0.1, 0.3}) {
      for (double t : {0.2, 0.45, 0.5}) {
        const auto [lhs, rhs] = condition_b(loop, SigmaClass::sigma_prime, p, s, t);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("condition A is checked first") {
    const auto bad = SigmaProfile::piecewise({{0.0, 0.0}, {0.9, 0.1}});
    CHECK_THROWS_AS(check_sigma_admissible(bad, SigmaClass::sigma, {0.45, 0.2, 1.0, 0.9}), PreconditionError);
    CHECK_THROWS_AS(check_sigma_admissible(SigmaProfile::zero(0.5), SigmaClass::sigma_prime, {0.0, 0.0, 0.5, 0.5}),
                    PreconditionError);
  }

  TEST_CASE("Sigma'' ramp admissible iff rho/b + alpha beta < 1") {
    const double b = 0.5;
    for (double rb : {0.2, 0.6}) {
      for (double alpha : {0.5, 1.5, 3.0}) {
        const double beta = 0.3;
        const bool expect = rb + alpha * beta < 1.0;
        const auto rep = check_sigma_admissible(SigmaProfile::linear_ramp(alpha, 0.2, b),
                                                SigmaClass::sigma_double_prime, {rb * b, beta, 1.0, b});
        CHECK(rep.ok == expect);
      }
    }
  }
}
