#include <cmath>
#include <memory>

#include "atgeo/errors.hpp"
#include "atgeo/geodesic.hpp"
#include "doctest.h"

using namespace atgeo;

namespace {

SchedulePtr sched(double k = 0.5) { return std::make_shared<const ReichSchedule>(build_schedule(k, 8)); }

double dH(double s, double t) { return hyperbolic_distance(HyperbolicParam(s), HyperbolicParam(t)); }

}  // namespace

TEST_SUITE("geodesic") {
  TEST_CASE("identical specs are at distance zero") {
    const auto s = sched();
    const auto kappa = build_kappa(s);
    const auto ci = certify_distance(kappa, kappa, monomial_dictionary(s));
    CHECK(ci.lower == 0.0);
    CHECK(ci.upper == 0.0);
    CHECK(ci.status == CertStatus::certified);
  }

  TEST_CASE("closed loop vertices") {
    const auto s = sched();
    const auto eta = loop_vertices(s);
    for (const auto& e : eta) CHECK(sup_modulus(e) == 0.5);
    const double R = 0.5 * std::log(3.0);
    const auto d13 = certify_distance(eta[0], eta[2], monomial_dictionary(s), 1e-9);
    CHECK(d13.status == CertStatus::certified);
    CHECK(d13.upper == doctest::Approx(2 * R).epsilon(1e-14));
    const auto d12 = certify_distance(eta[0], eta[1], monomial_dictionary(s), 1e-9);
    CHECK(d12.midpoint() == doctest::Approx(R).epsilon(1e-9));
  }

  TEST_CASE("loop edges join consecutive vertices") {
    const auto s = sched();
    const auto edges = family_closed_loop(s);
    const auto eta = loop_vertices(s);
    for (int e = 0; e < 4; ++e) {
      CHECK(certify_distance(edges[e].eval(0.0), eta[e], monomial_dictionary(s)).upper < 1e-12);
      CHECK(certify_distance(edges[e].eval(0.5), eta[(e + 1) % 4], monomial_dictionary(s)).upper < 1e-12);
      // cellwise moduli (sigma(t), t)
      const auto spec = edges[e].eval(0.2);
      CHECK(sup_modulus(spec) == doctest::Approx(std::max(0.2, 0.3 / 0.9)));
    }
  }

  TEST_CASE("substantial example family") {
    const auto s = sched();
    const auto f = family_substantial_example(s, SigmaProfile::ramp_to_end(0.4, 0.2, 0.5), 0.5);
    CHECK(sup_modulus(f.eval(0.0)) == 0.0);
    const auto end = f.eval(0.5);
    const auto mu = build_modulated(s, 0.5, 1.0);
    CHECK(cellwise_combo_bound(end, mu) < 1e-15);
    const auto mid = f.eval(0.1);
    CHECK(*schedule_pairing_limit(mid, Parity::odd) == doctest::Approx(0.5 * 0.04));
    CHECK(*schedule_pairing_limit(mid, Parity::even) == doctest::Approx(0.1));
    CHECK_THROWS_AS(family_substantial_example(s, SigmaProfile::ramp_to_end(0.4, 0.2, 0.5), 1.0),
                    PreconditionError);
  }

  TEST_CASE("geodesic additivity on the certified family") {
    const auto s = sched();
    const auto f = family_substantial_example(s, SigmaProfile::ramp_to_end(0.4, 0.2, 0.5), 0.5);
    const auto dict = monomial_dictionary(s);
    auto d = [&](double a, double b) { return certify_distance(f.eval(a), f.eval(b), dict, 1e-9).midpoint(); };
    for (auto [t, u, v] : {std::array{0.0, 0.1, 0.3}, std::array{0.05, 0.2, 0.45}}) {
      CHECK(d(t, u) + d(u, v) == doctest::Approx(d(t, v)).epsilon(1e-6));
      CHECK(d(t, v) == doctest::Approx(dH(t, v)).epsilon(1e-6));
    }
  }

  TEST_CASE("upper bound soundness on admissible profiles") {
    const auto s = sched();
    const auto f = family_substantial_example(s, SigmaProfile::ramp_to_end(0.2, 0.2, 0.5), 0.5);
    for (double a : {0.0, 0.1, 0.2, 0.35}) {
      for (double b : {0.15, 0.3, 0.5}) {
        if (a == b) continue;
        CHECK(cellwise_combo_bound(f.eval(a), f.eval(b)) <= std::abs(mobius_difference(a, b)) + 1e-12);
      }
    }
  }

  TEST_CASE("straight line moduli") {
    const auto s = sched();
    const auto cap = patch_geometry(*s, 0.0, 2.0);
    const auto base = schedule_spec(s, std::max(8, cap.start_index - 1), 0.5, 0.5,
                                    cap_sectors(cap, 0.5, 0.5, 0.5, 0.5));
    const auto f = family_straight_line(base, cap, 0.5);
    CHECK(sup_modulus(f.eval(0.3)) == doctest::Approx(0.3));
    const auto far = f.eval(0.8);
    CHECK(boundary_dilatation(far, BoundaryPoint(0.0)) == doctest::Approx(0.8));
    CHECK(boundary_dilatation(far, BoundaryPoint(kPi)) == doctest::Approx(0.5));
    CHECK(sup_modulus(f.eval(-0.8)) == sup_modulus(f.eval(0.8)));
    CHECK_THROWS_AS(f.eval(1.0), DomainError);
    CHECK_THROWS_AS(default_grid(f), PreconditionError);
  }

  TEST_CASE("nonsubstantial family preconditions") {
    const auto s = sched();
    const auto g = patch_geometry(*s, 0.0, 2.0);
    const auto base = build_damped(s, g, 0.2, DampParity::both);
    const auto delta = build_patch_delta(s, g, 0.1, DampParity::both);
    const auto sigma = SigmaProfile::linear_ramp(0.5, 0.1, 0.5);
    const auto f = family_nonsubstantial(base, delta, sigma, 0.5, 0.2, 0.1, g);
    CHECK(cellwise_combo_bound(f.eval(0.5), base) < 1e-15);
    const auto ray = family_nonsubstantial(base, delta, SigmaProfile::zero(0.5), 0.5, 0.2, 0.1, g);
    CHECK(cellwise_combo_bound(ray.eval(0.25), scale(base, 0.5)) < 1e-15);
    for (double t : {0.05, 0.2, 0.4}) CHECK(sup_modulus(f.eval(t)) == doctest::Approx(t));
    CHECK_THROWS_AS(family_nonsubstantial(base, delta, sigma, 0.5, 0.1, 0.1, g), PreconditionError);
    CHECK_THROWS_AS(family_nonsubstantial(base, build_patch_delta(s, g, 0.35, DampParity::both), sigma,
                                          0.5, 0.2, 0.35, g),
                    PreconditionError);
    CHECK_THROWS_AS(family_nonsubstantial(base, delta, SigmaProfile::linear_ramp(20.0, 0.4, 0.5), 0.5,
                                          0.2, 0.1, g),
                    PreconditionError);
  }

  TEST_CASE("distinctness") {
    const auto s = sched();
    const auto f1 = family_substantial_example(s, SigmaProfile::ramp_to_end(0.4, 0.2, 0.5), 0.5);
    const auto f2 = family_substantial_example(s, SigmaProfile::ramp_to_end(0.2, 0.2, 0.5), 0.5);
    const auto odd = DegeneratingFamily::monomials(s, Parity::odd);
    CHECK(distinctness_gap(f1, f1, 0.1, odd) == 0.0);
    CHECK(distinctness_limit(f1, f2, 0.1, Parity::odd) == doctest::Approx(0.5 * 0.2).epsilon(1e-14));
    CHECK(distinctness_gap(f1, f2, 0.1, odd) == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(distinctness_limit(f1, f2, 0.1, Parity::even) == doctest::Approx(0.0));
  }

  TEST_CASE("propagation and the additivity identity") {
    const auto s = sched();
    const auto f = family_substantial_example(s, SigmaProfile::ramp_to_end(0.4, 0.2, 0.5), 0.5);
    std::vector<double> ps;
    for (int i = 0; i < 64; ++i) ps.push_back(kTwoPi * i / 64);
    const auto rep = substantial_propagation_check(f, {0.0, 0.1, 0.3}, ps, 0.4);
    CHECK(rep.exact);
    CHECK(rep.additivity_error < 1e-12);
    auto half_log_H = [](double h) { return 0.5 * std::log((1 + h) / (1 - h)); };
    CHECK(half_log_H(0.625) == doctest::Approx(half_log_H(0.3) + half_log_H(0.4)).epsilon(1e-15));
  }
}
