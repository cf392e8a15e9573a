// atgeo: construct specs, certify families and distances, reproduce the
// example suite. Exit codes: 0 ok (PARTIAL allowed), 1 usage or I/O, 2 a
// mathematical failure.
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atgeo/errors.hpp"
#include "atgeo/estimators.hpp"
#include "atgeo/geodesic.hpp"
#include "atgeo/io.hpp"
#include "atgeo/reich.hpp"
#include "atgeo/reproduce.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace atgeo;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMathFailure = 2;

struct MathFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstructOptions {
  std::string kind = "kappa";
  double k = 0.5;
  int J = 8;
  double alpha = 0.5;
  double beta = 1.0;
  double lambda = 0.4;
  double t0 = 0.2;
  double rho = 0.2;
  double h = 0.5;
  double patch_radius = 2.0;
  double q = 0.0;
  std::uint64_t seed = 0;
  std::string out = "atgeo_out";
};

struct CertifyOptions {
  std::string schedule;
  std::string family;
  std::string a, b;
  int grid = 17;
  double tol = 1e-6;
  std::optional<double> t_min, t_max;
  std::string out = "atgeo_out";
  bool dat = false;
};

struct ReproduceOptions {
  ReproduceConfig config;
  std::string out = "atgeo_reproduce";
  bool dat = false;
};

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir + "': " + ec.message());
}

std::string path_in(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

// ---- construct

int cmd_construct(const ConstructOptions& o) {
  const auto s = std::make_shared<const ReichSchedule>(build_schedule(o.k, o.J));
  std::vector<std::pair<std::string, std::string>> files{{"schedule.json", to_json(*s)}};
  const auto patch = patch_geometry(*s, o.q, o.patch_radius);
  if (o.kind == "kappa") {
    files.emplace_back("kappa.json", to_json(build_kappa(s)));
  } else if (o.kind == "modulated") {
    files.emplace_back("modulated.json", to_json(build_modulated(s, o.alpha, o.beta)));
  } else if (o.kind == "closed-loop") {
    const auto eta = loop_vertices(s);
    const auto edges = family_closed_loop(s);
    for (int i = 0; i < 4; ++i) {
      files.emplace_back("eta" + std::to_string(i + 1) + ".json", to_json(eta[i]));
      files.emplace_back("edge" + std::to_string(i + 1) + ".json", to_json(edges[i]));
    }
  } else if (o.kind == "step3") {
    const auto f = family_substantial_example(s, SigmaProfile::ramp_to_end(o.lambda, o.t0, o.k), o.alpha);
    files.emplace_back("step3.json", to_json(f));
  } else if (o.kind == "straight-line") {
    const auto base = schedule_spec(s, std::max(o.J, patch.start_index - 1), o.h, o.h,
                                    cap_sectors(patch, o.h, o.h, o.h, o.h));
    files.emplace_back("straight_line.json", to_json(family_straight_line(base, patch, o.h)));
  } else if (o.kind == "nonsubstantial" || o.kind == "infinitesimal") {
    const auto base = build_damped(s, patch, o.rho, DampParity::both);
    const auto delta = build_patch_delta(s, patch, o.beta, DampParity::both);
    const auto sigma = SigmaProfile::linear_ramp(o.alpha, o.t0, o.k);
    const auto f = o.kind == "nonsubstantial"
                       ? family_nonsubstantial(base, delta, sigma, o.k, o.rho, o.beta, patch)
                       : family_infinitesimal(base, delta, sigma, o.k, o.rho, o.beta, patch);
    files.emplace_back(o.kind + ".json", to_json(f));
  } else {
    throw PreconditionError("unknown kind '" + o.kind + "'");
  }
  ensure_dir(o.out);
  for (const auto& [name, text] : files) write_file(path_in(o.out, name), text);
  std::printf("wrote %zu files to %s\n", files.size(), o.out.c_str());
  return kOk;
}

// ---- certify

void require_schedule_ok(const ReichSchedule& s, const std::string& what) {
  const auto rep = verify_fs_inequalities(s);
  if (rep.ok()) return;
  std::string msg = what + ": schedule violates its inequalities:";
  for (const auto& v : rep.violations) msg += " j=" + std::to_string(v.j) + " " + v.inequality;
  throw MathFailure(msg);
}

void require_spec_schedule(const BeltramiSpec& spec, const std::string& what) {
  if (spec.tail.schedule) require_schedule_ok(*spec.tail.schedule, what);
}

std::vector<DegeneratingFamily> families_for(const GeodesicFamilySpec& f) {
  std::vector<DegeneratingFamily> out;
  if (!f.schedule) return out;
  out = monomial_dictionary(f.schedule);
  if (f.kind == FamilyKind::straight_line) {
    out.push_back(DegeneratingFamily::focused(f.schedule, Parity::all, f.patch.center));
  } else if (f.kind == FamilyKind::nonsubstantial || f.kind == FamilyKind::infinitesimal) {
    out.push_back(DegeneratingFamily::focused(f.schedule, Parity::all, f.patch.center + kPi));
  }
  return out;
}

std::vector<DegeneratingFamily> families_for(const BeltramiSpec& a, const BeltramiSpec& b) {
  const auto& s = a.tail.schedule ? a.tail.schedule : b.tail.schedule;
  if (!s) return {};
  return monomial_dictionary(s);
}

std::vector<double> make_grid(const GeodesicFamilySpec& f, const CertifyOptions& o) {
  if (o.grid < 2) throw CLI::ValidationError("--grid", "grid needs at least two points");
  double lo = f.t_min, hi = f.t_max;
  if (f.kind == FamilyKind::straight_line) {
    lo = f.scale;
    hi = std::min(0.8, 0.5 * (1.0 + f.scale));
  }
  if (o.t_min) lo = *o.t_min;
  if (o.t_max) hi = *o.t_max;
  if (!(lo < hi)) throw CLI::ValidationError("--t-min/--t-max", "empty parameter range");
  if (f.kind == FamilyKind::straight_line || o.t_min || o.t_max) {
    std::vector<double> g;
    for (int i = 0; i < o.grid; ++i) g.push_back(lo + (hi - lo) * i / (o.grid - 1));
    return g;
  }
  return default_grid(f, o.grid);
}

nlohmann::ordered_json summary_header(const std::string& what) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["type"] = "certify-summary";
  j["subject"] = what;
  return j;
}

int finish(nlohmann::ordered_json summary, const CertifyOptions& o, const CsvTable& table,
           const std::string& dat) {
  ensure_dir(o.out);
  write_file(path_in(o.out, "certify.csv"), table.str());
  if (o.dat && !dat.empty()) write_file(path_in(o.out, "distance.dat"), dat);
  write_file(path_in(o.out, "summary.json"), summary.dump(2) + "\n");
  const bool hard = summary.value("hard_failure", false);
  const bool ok = summary.value("ok", false);
  const int partial = summary.value("partial", 0);
  if (partial > 0) std::fprintf(stderr, "warning: %d PARTIAL intervals\n", partial);
  std::printf("%s: %s\n", summary["subject"].get<std::string>().c_str(),
              hard ? "HARD FAILURE" : ok ? "ok" : "FAILED");
  return hard || !ok ? kMathFailure : kOk;
}

int certify_schedule(const CertifyOptions& o) {
  const auto s = schedule_from_json(read_file(o.schedule));
  const auto rep = verify_fs_inequalities(s);
  CsvTable t({"tag", "j", "inner_ok", "outer_ok", "spacing_ok", "monotone_ok"});
  for (const auto& r : rep.rows) {
    t.add_row({"fs-inequalities", std::to_string(r.j), r.inner_ok ? "1" : "0",
               r.outer_ok ? "1" : "0", r.spacing_ok ? "1" : "0", r.monotone_ok ? "1" : "0"});
  }
  auto j = summary_header("schedule " + o.schedule);
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : rep.violations) {
    j["violations"].push_back({{"j", v.j}, {"inequality", v.inequality}});
    std::fprintf(stderr, "violation: j=%d %s\n", v.j, v.inequality.c_str());
  }
  j["hard_failure"] = !rep.ok();
  j["ok"] = rep.ok();
  return finish(j, o, t, "");
}

int certify_family(const CertifyOptions& o) {
  const auto f = family_from_json(read_file(o.family));
  if (f.schedule) require_schedule_ok(*f.schedule, o.family);
  const auto grid = make_grid(f, o);
  const auto fams = families_for(f);
  auto j = summary_header(f.name() + " " + o.family);
  std::vector<std::vector<double>> dat;
  if (f.kind == FamilyKind::infinitesimal) {
    const auto rep = certify_az_geodesic(f, grid, fams, o.tol);
    CsvTable t({"tag", "s", "t", "lower", "upper", "target", "status"});
    int partial = 0;
    for (const auto& r : rep.rows) {
      t.add_row({"az-geodesic", csv_number(r.s), csv_number(r.t), csv_number(r.norm.lower),
                 csv_number(r.norm.upper), csv_number(r.target), to_string(r.norm.status)});
      if (r.norm.status != CertStatus::certified) ++partial;
      if (r.s == grid.front()) dat.push_back({r.t, r.norm.lower, r.norm.upper, r.target});
    }
    j["pairs"] = rep.rows.size();
    j["partial"] = partial;
    j["max_deviation"] = rep.max_deviation;
    j["hard_failure"] = rep.hard_failure;
    j["ok"] = rep.ok;
    return finish(j, o, t, dat_table({"t", "lower", "upper", "target"}, dat));
  }
  const auto rep = certify_geodesic(f, grid, fams, o.tol);
  for (const auto& r : rep.rows) {
    if (r.s == grid.front()) dat.push_back({r.t, r.interval.lower, r.interval.upper, r.target});
  }
  j["pairs"] = rep.rows.size();
  j["certified"] = rep.certified;
  j["partial"] = rep.partial;
  j["max_deviation"] = rep.max_deviation;
  j["hard_failure"] = rep.hard_failure;
  j["ok"] = rep.ok;
  return finish(j, o, geodesic_csv(rep, "geodesic"),
                dat_table({"t", "lower", "upper", "target"}, dat));
}

int certify_pair(const CertifyOptions& o) {
  const auto a = spec_from_json(read_file(o.a));
  const auto b = spec_from_json(read_file(o.b));
  require_spec_schedule(a, o.a);
  require_spec_schedule(b, o.b);
  const auto ci = certify_distance(a, b, families_for(a, b), o.tol);
  CsvTable t({"tag", "a", "b", "lower", "upper", "status", "lower_method"});
  t.add_row({"distance", o.a, o.b, csv_number(ci.lower), csv_number(ci.upper),
             to_string(ci.status), ci.lower_method});
  auto j = summary_header("distance");
  j["lower"] = ci.lower;
  j["upper"] = ci.upper;
  j["status"] = to_string(ci.status);
  j["partial"] = ci.status == CertStatus::certified ? 0 : 1;
  j["hard_failure"] = false;
  j["ok"] = true;
  return finish(j, o, t, "");
}

int cmd_certify(const CertifyOptions& o) {
  const int given = !o.schedule.empty() + !o.family.empty() + (!o.a.empty() || !o.b.empty());
  if (given != 1) {
    throw CLI::ValidationError("certify", "give exactly one of --schedule, --family, or --a/--b");
  }
  if (o.grid < 2) throw CLI::ValidationError("--grid", "grid needs at least two points");
  if (!(o.tol > 0.0)) throw CLI::ValidationError("--tol", "tolerance must be positive");
  if (!o.schedule.empty()) return certify_schedule(o);
  if (!o.family.empty()) return certify_family(o);
  if (o.a.empty() || o.b.empty()) throw CLI::ValidationError("--a/--b", "both specs are required");
  return certify_pair(o);
}

// ---- reproduce

int cmd_reproduce(const ReproduceOptions& o) {
  const auto bundle = reproduce_paper(o.config);
  write_bundle(bundle, o.out, o.dat);
  for (const auto& c : bundle.checks) {
    std::printf("%s %2d %s: %s\n", c.pass ? "PASS" : "FAIL", c.criterion, c.tag.c_str(),
                c.detail.c_str());
  }
  if (bundle.hard_failure()) {
    std::fprintf(stderr, "hard failure; aborted after the failing table\n");
    return kMathFailure;
  }
  return bundle.all_pass() ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atgeo: asymptotic Teichmueller geodesic constructions and certificates"};
  app.require_subcommand(1);

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "write schedule, spec and family JSON files");
  construct->add_option("--kind", co.kind, "kappa|modulated|closed-loop|step3|straight-line|nonsubstantial|infinitesimal")
      ->check(CLI::IsMember({"kappa", "modulated", "closed-loop", "step3", "straight-line",
                             "nonsubstantial", "infinitesimal"}));
  construct->add_option("--k", co.k, "dilatation k")->check(CLI::Range(0.0, 1.0));
  construct->add_option("--J", co.J, "prefix length")->check(CLI::Range(2, ReichSchedule::kHorizon));
  construct->add_option("--alpha", co.alpha, "odd modulation, or ramp slope");
  construct->add_option("--beta", co.beta, "even modulation, or patch bound");
  construct->add_option("--lambda", co.lambda, "ramp slope on [0, t0]");
  construct->add_option("--t0", co.t0, "ramp knot");
  construct->add_option("--rho", co.rho, "damping on the patch");
  construct->add_option("--level", co.h, "straight-line level h");
  construct->add_option("--patch-radius", co.patch_radius, "radius of the disk B(q)");
  construct->add_option("--q", co.q, "patch center angle");
  construct->add_option("--seed", co.seed, "recorded seed (constructions are deterministic)");
  construct->add_option("--out", co.out, "output directory");

  CertifyOptions ce;
  auto* certify = app.add_subcommand("certify", "certify a schedule, a family, or a distance");
  certify->add_option("--schedule", ce.schedule, "schedule JSON");
  certify->add_option("--family", ce.family, "family JSON");
  certify->add_option("--a", ce.a, "first spec JSON");
  certify->add_option("--b", ce.b, "second spec JSON");
  certify->add_option("--grid", ce.grid, "grid points");
  certify->add_option("--tol", ce.tol, "gap tolerance");
  certify->add_option("--t-min", ce.t_min, "grid start");
  certify->add_option("--t-max", ce.t_max, "grid end");
  certify->add_option("--out", ce.out, "output directory");
  certify->add_flag("--dat", ce.dat, "also write distance.dat");

  ReproduceOptions ro;
  auto* reproduce = app.add_subcommand("reproduce", "run the full example suite");
  reproduce->add_option("--k", ro.config.k, "dilatation k")->check(CLI::Range(0.0, 1.0));
  reproduce->add_option("--J", ro.config.J, "prefix length")->check(CLI::Range(2, ReichSchedule::kHorizon));
  reproduce->add_option("--grid", ro.config.grid_points, "geodesic grid points")->check(CLI::Range(2, 1000));
  reproduce->add_option("--sigma-grid", ro.config.sigma_grid, "condition (B) grid")->check(CLI::Range(2, 10000));
  reproduce->add_option("--seed", ro.config.seed, "property-test seed");
  reproduce->add_option("--samples", ro.config.property_samples, "property-test samples")->check(CLI::PositiveNumber);
  reproduce->add_option("--criteria", ro.config.criteria, "subset of checks 1..12")
      ->check(CLI::Range(1, kCriterionCount));
  reproduce->add_option("--out", ro.out, "output directory");
  reproduce->add_flag("--dat", ro.dat, "also write .dat tables");

  try {
    app.parse(argc, argv);
    if (*construct) return cmd_construct(co);
    if (*certify) return cmd_certify(ce);
    if (*reproduce) return cmd_reproduce(ro);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const MathFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kMathFailure;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
