#include <cmath>
#include <random>

#include "atgeo/errors.hpp"
#include "atgeo/metric.hpp"
#include "doctest.h"

using namespace atgeo;

TEST_SUITE("metric") {
  TEST_CASE("hyperbolic distance of real points") {
    // 1/2 log((1+x)/(1-x)) with x = |s - t| / (1 - s t)
    const double s = 0.3, t = 0.7;
    const double x = 0.4 / (1.0 - 0.21);
    CHECK(hyperbolic_distance(HyperbolicParam(s), HyperbolicParam(t)) ==
          doctest::Approx(0.5 * std::log((1 + x) / (1 - x))).epsilon(1e-15));
    CHECK(hyperbolic_distance(HyperbolicParam(0.0), HyperbolicParam(0.5)) ==
          doctest::Approx(std::atanh(0.5)));
    CHECK(hyperbolic_distance(HyperbolicParam(-0.2), HyperbolicParam(-0.2)) == 0.0);
  }

  TEST_CASE("pseudo distance is symmetric and Moebius invariant") {
    const std::complex<double> a(0.1, 0.4), b(-0.3, 0.2), c(0.25, -0.5);
    CHECK(pseudo_distance(a, b) == doctest::Approx(pseudo_distance(b, a)));
    auto m = [&](std::complex<double> z) { return (z - c) / (1.0 - std::conj(c) * z); };
    CHECK(pseudo_distance(m(a), m(b)) == doctest::Approx(pseudo_distance(a, b)).epsilon(1e-13));
  }

  TEST_CASE("dilatation and distance are inverse") {
    for (double h : {0.0, 0.1, 0.5, 0.9, 0.999}) {
      const double d = dilatation_to_distance(DilatationValue(h));
      CHECK(distance_to_dilatation(d) == doctest::Approx(h).epsilon(1e-14));
    }
    CHECK_THROWS_AS(DilatationValue(1.0), DomainError);
    CHECK_THROWS_AS(DilatationValue(-0.1), DomainError);
    CHECK_THROWS_AS(distance_to_dilatation(-1.0), DomainError);
  }

  TEST_CASE("double angle identity") {
    const double k = 0.5;
    const double x = 2 * k / (1 + k * k);
    CHECK(dilatation_to_distance(DilatationValue(x)) ==
          doctest::Approx(std::log((1 + k) / (1 - k))).epsilon(1e-15));
  }

  TEST_CASE("mobius difference") {
    CHECK(mobius_difference(0.5, 0.2) == doctest::Approx(0.3 / 0.9));
    CHECK_THROWS_AS(mobius_difference(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(HyperbolicParam(1.0), DomainError);
  }

  TEST_CASE("F is nondecreasing in k") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
      const auto t1 = std::polar(0.99 * std::sqrt(u(rng)), 6.283 * u(rng));
      const auto t2 = std::polar(0.99 * std::sqrt(u(rng)), 6.283 * u(rng));
      const double cap = std::min(1.0 / std::sqrt(std::abs(t1 * t2) + 1e-300), 1e6);
      double k1 = cap * u(rng) * 0.999999, k2 = cap * u(rng) * 0.999999;
      if (k1 > k2) std::swap(k1, k2);
      if (k1 <= 0) continue;
      if (lemma_dist_F(t1, t2, k1) > lemma_dist_F(t1, t2, k2) * (1 + 1e-12) + 1e-300) ++violations;
    }
    CHECK(violations == 0);
  }

  TEST_CASE("F matches its definition") {
    const std::complex<double> t1(0.3, 0.1), t2(-0.2, 0.4);
    const double k = 0.8;
    const double direct = std::norm((t1 - t2) * k / (1.0 - std::conj(t2) * t1 * k * k));
    CHECK(lemma_dist_F(t1, t2, k) == doctest::Approx(direct).epsilon(1e-15));
    CHECK_THROWS_AS(lemma_dist_F(t1, t2, 0.0), DomainError);
    CHECK_THROWS_AS(lemma_dist_F(0.9, 0.9, 1.2), DomainError);
  }
}
