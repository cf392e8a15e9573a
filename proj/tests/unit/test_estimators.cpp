#include <cmath>
#include <memory>

#include "atgeo/errors.hpp"
#include "atgeo/estimators.hpp"
#include "doctest.h"

using namespace atgeo;

namespace {
SchedulePtr sched() { return std::make_shared<const ReichSchedule>(build_schedule(0.5, 8)); }
}  // namespace

TEST_SUITE("estimators") {
  TEST_CASE("I, J, delta of t kappa") {
    const auto s = sched();
    const auto all = DegeneratingFamily::monomials(s, Parity::all);
    const double t = 0.6, h = 0.3;
    const auto q = estimate_IJdelta(scale(build_kappa(s), t), all);
    CHECK(q.J_lower == doctest::Approx(h).epsilon(1e-15));
    CHECK(q.I_lower == doctest::Approx(h / (1 - h * h)).epsilon(1e-15));
    CHECK(q.delta_lower == doctest::Approx(h * h / (1 - h * h)).epsilon(1e-15));
    CHECK(q.upper_envelope == doctest::Approx(h));
    CHECK(q.J_lower <= q.upper_envelope);
    CHECK(q.delta_lower <= q.upper_envelope * q.upper_envelope / (1 - q.upper_envelope * q.upper_envelope) + 1e-15);
  }

  TEST_CASE("finite-depth estimates approach the limits") {
    const auto s = sched();
    const auto all = DegeneratingFamily::monomials(s, Parity::all);
    const auto spec = scale(build_kappa(s), 0.6);
    const auto lim = estimate_IJdelta(spec, all);
    const auto fin = estimate_IJdelta(spec, DegeneratingFamily::focused(s, Parity::all, 0.0), 20);
    CHECK(fin.J_lower <= lim.J_lower + 1e-12);
    CHECK(fin.J_lower == doctest::Approx(lim.J_lower).epsilon(1e-4));
    CHECK(fin.I_lower == doctest::Approx(lim.I_lower).epsilon(1e-4));
  }

  TEST_CASE("zero spec") {
    const auto s = sched();
    const auto q = estimate_IJdelta(zero_spec(), DegeneratingFamily::monomials(s, Parity::all));
    CHECK(q.I_lower == 0.0);
    CHECK(q.J_lower == 0.0);
    CHECK(q.delta_lower == 0.0);
    const auto rep = check_fundamental_inequalities(zero_spec(), DegeneratingFamily::monomials(s, Parity::all));
    CHECK(rep.certified);
    CHECK(rep.ok);
  }

  TEST_CASE("fundamental inequalities: t kappa is the equality case") {
    const auto s = sched();
    for (double t : {0.2, 0.6, 0.9}) {
      const auto rep = check_fundamental_inequalities(scale(build_kappa(s), t),
                                                      DegeneratingFamily::monomials(s, Parity::all));
      CHECK(rep.certified);
      CHECK(std::abs(rep.margin_upper) < 1e-12);
      CHECK(std::abs(rep.margin_lower) < 1e-12);
    }
    // worked values at t = 0.6
    const double h = 0.3;
    CHECK(h / (1 - h) - h * h / (1 - h * h) == doctest::Approx(h / (1 - h * h)));
  }

  TEST_CASE("J from the dominant parity") {
    const auto s = sched();
    const auto mu = build_modulated(s, 0.3, 1.0);
    CHECK(estimate_IJdelta(mu, DegeneratingFamily::monomials(s, Parity::even)).J_lower == doctest::Approx(0.5));
    const auto odd = check_fundamental_inequalities(mu, DegeneratingFamily::monomials(s, Parity::odd));
    CHECK_FALSE(odd.certified);
    CHECK(odd.ok);
  }

  TEST_CASE("norm sandwich: linearity and homogeneity") {
    const auto s = sched();
    const auto dict = monomial_dictionary(s);
    const auto kappa = build_kappa(s);
    const auto k1 = az_norm_sandwich(kappa, dict);
    CHECK(k1.status == CertStatus::certified);
    CHECK(k1.upper == 0.5);
    const auto k2 = az_norm_sandwich(scale(kappa, 2.0), dict);
    CHECK(k2.upper == 1.0);
    CHECK(k2.lower == doctest::Approx(2 * k1.lower).epsilon(1e-12));
    const auto z = az_norm_sandwich(zero_spec(), dict);
    CHECK(z.lower == 0.0);
    CHECK(z.upper == 0.0);
    const auto a = build_modulated(s, 0.3, 1.0), b = build_modulated(s, 1.0, 0.2);
    const auto sum = az_norm_sandwich(linear_combination(1.0, a, 1.0, b), dict);
    CHECK(sum.upper <= az_norm_sandwich(a, dict).upper + az_norm_sandwich(b, dict).upper + 1e-15);
  }

  TEST_CASE("binary variation: kappa against the odd-damped kappa") {
    const auto s = sched();
    const auto rep = binary_variation_check(build_kappa(s), build_modulated(s, 0.5, 1.0),
                                            {0.2, 0.1, 0.05, 0.025}, monomial_dictionary(s));
    CHECK(rep.J_hat == doctest::Approx(0.25));
    CHECK(rep.decreasing);
    CHECK(rep.all_certified);
    CHECK(rep.ok);
    // oracle: d(t) = atanh(x), x = t k (1 - lambda) / (1 - lambda t^2 k^2)
    const double t = 0.2, x = t * 0.25 / (1 - 0.5 * t * t * 0.25);
    CHECK(rep.rows[0].distance.midpoint() == doctest::Approx(std::atanh(x)).epsilon(1e-9));
  }

  TEST_CASE("binary variation of a spec with itself") {
    const auto s = sched();
    const auto kappa = build_kappa(s);
    const auto rep = binary_variation_check(kappa, kappa, {0.2, 0.1}, monomial_dictionary(s));
    CHECK(rep.J_hat == 0.0);
    for (const auto& r : rep.rows) CHECK(r.ratio == 0.0);
  }

  TEST_CASE("infinitesimal geodesic bracket") {
    const auto s = sched();
    const auto g = patch_geometry(*s, 0.0, 2.0);
    const auto base = build_damped(s, g, 0.25, DampParity::both);
    const auto delta = build_patch_delta(s, g, 0.2, DampParity::both);
    const auto f = family_infinitesimal(base, delta, SigmaProfile::linear_ramp(0.5, 0.2, 0.5), 0.5, 0.25, 0.2, g);
    auto fams = monomial_dictionary(s);
    fams.push_back(DegeneratingFamily::focused(s, Parity::all, kPi));
    const auto rep = certify_az_geodesic(f, {0.0, 0.1, 0.2, 0.5}, fams, 1e-4);
    CHECK_FALSE(rep.hard_failure);
    CHECK(rep.ok);
    CHECK(rep.max_deviation <= 1e-4);
    // the monomial dictionary alone cannot see past the patch
    const auto mono = certify_az_geodesic(f, {0.0, 0.5}, monomial_dictionary(s), 1e-4);
    CHECK_FALSE(mono.hard_failure);
    CHECK(mono.rows[0].norm.lower < 0.5 - 1e-3);
    CHECK_THROWS_AS(certify_az_geodesic(family_closed_loop(s)[0], {0.0, 0.1}, fams), PreconditionError);
  }
}
