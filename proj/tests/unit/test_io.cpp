#include <memory>
#include <string>

#include "atgeo/io.hpp"
#include "atgeo/reich.hpp"
#include "atgeo/reproduce.hpp"
#include "doctest.h"

using namespace atgeo;

namespace {

SchedulePtr sched() { return std::make_shared<const ReichSchedule>(build_schedule(0.5, 8)); }

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("schedule round trip is exact") {
    const auto s = sched();
    const auto text = to_json(*s);
    CHECK(text.find("\"schema\": \"atgeo/1\"") != std::string::npos);
    const auto back = schedule_from_json(text);
    CHECK(back == *s);
    CHECK(back.winding(40) == s->winding(40));
    CHECK(to_json(back) == text);
  }

  TEST_CASE("spec round trip") {
    const auto s = sched();
    const auto g = patch_geometry(*s, 1.0, 2.0);
    const auto spec = build_damped(s, g, 0.2, DampParity::both);
    const auto back = spec_from_json(to_json(spec));
    CHECK(to_json(back) == to_json(spec));
    for (double th : {0.0, 1.0, 2.5}) {
      for (double r : {0.3, 0.95, 0.9999999}) {
        CHECK(eval(back, std::polar(r, th)) == eval(spec, std::polar(r, th)));
      }
    }
    CHECK(h_star(back) == h_star(spec));
  }

  TEST_CASE("family round trip") {
    const auto s = sched();
    const auto f = family_substantial_example(s, SigmaProfile::ramp_to_end(0.4, 0.2, 0.5), 0.5);
    const auto back = family_from_json(to_json(f));
    CHECK(back.kind == f.kind);
    CHECK(to_json(back) == to_json(f));
    CHECK(cellwise_combo_bound(back.eval(0.3), f.eval(0.3)) == 0.0);
    const auto loop = family_closed_loop(s);
    CHECK(family_from_json(to_json(loop[2])).edge == 3);
  }

  TEST_CASE("unknown fields and wrong schemas are rejected") {
    const auto text = to_json(*sched());
    CHECK_THROWS_AS(schedule_from_json(replace(text, "\"k\":", "\"kk\": 1, \"k\":")), IoError);
    CHECK_THROWS_AS(schedule_from_json(replace(text, "atgeo/1", "atgeo/2")), IoError);
    CHECK_THROWS_AS(spec_from_json(text), IoError);
    CHECK_THROWS_AS(schedule_from_json("{not json"), IoError);
    const auto spec = to_json(build_kappa(sched()));
    CHECK_THROWS_AS(spec_from_json(replace(spec, "\"theta_lo\"", "\"theta_low\": 0, \"theta_lo\"")), IoError);
    CHECK_THROWS_AS(spec_from_json(replace(spec, "\"unit_ball\"", "\"ball\"")), IoError);
    CHECK(document_type(spec) == "beltrami");
  }

  TEST_CASE("invalid specs are rejected on load") {
    auto spec = build_kappa(sched());
    spec.tail.sectors[0].odd = 1.5;
    CHECK_THROWS_AS(spec_from_json(to_json(spec)), IoError);
  }

  TEST_CASE("csv formatting") {
    CHECK(csv_number(0.1) == "0.10000000000000001");
    CHECK(csv_number(1.0) == "1");
    CsvTable t({"tag", "x"});
    t.add_row({"a,b", "1"});
    t.add_row({"q\"x", csv_number(2.5)});
    CHECK(t.str() == "tag,x\n\"a,b\",1\n\"q\"\"x\",2.5\n");
    CHECK_THROWS_AS(t.add_row({"only"}), IoError);
    CHECK(dat_table({"t", "d"}, {{0.5, 1.0}}) == "# t d\n0.5 1\n");
  }

  TEST_CASE("geodesic csv carries the tag on every row") {
    const auto s = sched();
    const auto rep = certify_geodesic(family_closed_loop(s)[0], {0.0, 0.25, 0.5}, monomial_dictionary(s), 1e-9);
    const auto csv = geodesic_csv(rep, "closed-loop").str();
    CHECK(csv.rfind("tag,s,t,lower,upper,target,status\n", 0) == 0);
    int rows = 0;
    for (std::size_t p = csv.find("\nclosed-loop,"); p != std::string::npos; p = csv.find("\nclosed-loop,", p + 1)) ++rows;
    CHECK(rows == 3);
  }

  TEST_CASE("reproduce summaries are byte identical across runs") {
    ReproduceConfig c;
    c.criteria = {1, 2, 7, 8};
    c.property_samples = 500;
    const auto a = reproduce_paper(c).summary_json();
    const auto b = reproduce_paper(c).summary_json();
    CHECK(a == b);
    CHECK(a.find("\"all_pass\": true") != std::string::npos);
    c.seed += 1;
    CHECK(reproduce_paper(c).checks.size() == 4);
  }
}
