#include "atgeo/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "atgeo/errors.hpp"
#include "json.hpp"

namespace atgeo {
namespace {

using nlohmann::ordered_json;
using json = ordered_json;

std::string long_str(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", x);
  return buf;
}

Real parse_long(const json& j, const char* what) {
  if (j.is_number()) return static_cast<Real>(j.get<double>());
  if (!j.is_string()) throw IoError(std::string(what) + ": expected a number or decimal string");
  const std::string s = j.get<std::string>();
  char* end = nullptr;
  const Real v = std::strtold(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw IoError(std::string(what) + ": bad number '" + s + "'");
  return v;
}

void require_fields(const json& j, const char* where, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw IoError(std::string(where) + ": expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw IoError(std::string(where) + ": missing field '" + k + "'");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw IoError(std::string(where) + ": unknown field '" + item.key() + "'");
    }
  }
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
}

void check_header(const json& j, const char* type) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchemaVersion) {
    throw IoError(std::string("expected schema ") + kSchemaVersion);
  }
  if (!j.contains("type") || j["type"] != type) {
    throw IoError(std::string("expected document type '") + type + "'");
  }
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw IoError(std::string("field '") + key + "': " + e.what());
  }
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw IoError(std::string(what) + ": expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

// ---- schedule

json schedule_body(const ReichSchedule& s) {
  json n = json::array(), r = json::array(), c = json::array();
  for (int j = 1; j <= s.J(); ++j) {
    n.push_back(long_str(s.winding(j).value()));
    r.push_back(static_cast<double>(s.radius(j).value()));
    c.push_back(long_str(s.radius(j).complement()));
  }
  json out;
  out["k"] = s.k();
  out["J"] = s.J();
  out["n"] = n;
  out["r"] = r;
  out["one_minus_r"] = c;
  return out;
}

ReichSchedule schedule_from(const json& j) {
  require_fields(j, "schedule", {"k", "J", "n"}, {"r", "one_minus_r", "schema", "type"});
  const double k = get<double>(j, "k");
  const int J = get<int>(j, "J");
  const json& n = j["n"];
  const bool have_c = j.contains("one_minus_r");
  if (!have_c && !j.contains("r")) throw IoError("schedule: missing field 'r'");
  const json& r = have_c ? j["one_minus_r"] : j["r"];
  if (!n.is_array() || !r.is_array() || n.size() != r.size() ||
      static_cast<int>(n.size()) != J) {
    throw IoError("schedule: n[] and r[] must both have J entries");
  }
  std::vector<Winding> ns;
  std::vector<Radius> rs;
  for (std::size_t i = 0; i < n.size(); ++i) {
    ns.emplace_back(parse_long(n[i], "n"));
    const Real v = parse_long(r[i], "r");
    rs.push_back(have_c ? Radius::from_complement(v) : Radius::from_value(v));
  }
  return ReichSchedule::from_prefix(k, std::move(ns), std::move(rs));
}

// ---- spec

const char* tail_kind_name(TailKind k) {
  switch (k) {
    case TailKind::none: return "none";
    case TailKind::constant: return "constant";
    case TailKind::schedule: return "schedule";
  }
  return "none";
}

TailKind tail_kind_from(const std::string& s) {
  if (s == "none") return TailKind::none;
  if (s == "constant") return TailKind::constant;
  if (s == "schedule") return TailKind::schedule;
  throw IoError("tail.kind: unknown value '" + s + "'");
}

json spec_body(const BeltramiSpec& spec) {
  json cells = json::array();
  for (const auto& c : spec.cells) {
    json cj;
    cj["r_in_complement"] = long_str(c.r_in.complement());
    cj["r_out_complement"] = long_str(c.r_out.complement());
    cj["theta_lo"] = c.theta_lo;
    cj["theta_hi"] = c.theta_hi;
    cj["amplitude"] = complex_json(c.term.amplitude);
    cj["winding"] = long_str(c.term.winding.value());
    cj["schedule_index"] = c.schedule_index;
    cells.push_back(cj);
  }
  json tail;
  tail["kind"] = tail_kind_name(spec.tail.kind);
  tail["start_complement"] = long_str(spec.tail.start.complement());
  tail["first_index"] = spec.tail.first_index;
  tail["schedule"] = spec.tail.schedule ? schedule_body(*spec.tail.schedule) : json(nullptr);
  json sectors = json::array();
  for (const auto& s : spec.tail.sectors) {
    json sj;
    sj["theta_lo"] = s.theta_lo;
    sj["theta_hi"] = s.theta_hi;
    sj["odd"] = complex_json(s.odd);
    sj["even"] = complex_json(s.even);
    sectors.push_back(sj);
  }
  tail["sectors"] = sectors;
  json out;
  out["norm_class"] = spec.norm_class == NormClass::unit_ball ? "unit_ball" : "unrestricted";
  out["cells"] = cells;
  out["tail"] = tail;
  return out;
}

BeltramiSpec spec_from(const json& j) {
  require_fields(j, "beltrami", {"norm_class", "cells", "tail"}, {"schema", "type"});
  BeltramiSpec spec;
  const auto nc = get<std::string>(j, "norm_class");
  if (nc == "unit_ball") {
    spec.norm_class = NormClass::unit_ball;
  } else if (nc == "unrestricted") {
    spec.norm_class = NormClass::unrestricted;
  } else {
    throw IoError("norm_class: unknown value '" + nc + "'");
  }
  if (!j["cells"].is_array()) throw IoError("cells: expected an array");
  for (const auto& cj : j["cells"]) {
    require_fields(cj, "cell",
                   {"r_in_complement", "r_out_complement", "theta_lo", "theta_hi", "amplitude",
                    "winding"},
                   {"schedule_index"});
    SectorAnnularCell c;
    c.r_in = Radius::from_complement(parse_long(cj["r_in_complement"], "r_in_complement"));
    c.r_out = Radius::from_complement(parse_long(cj["r_out_complement"], "r_out_complement"));
    c.theta_lo = get<double>(cj, "theta_lo");
    c.theta_hi = get<double>(cj, "theta_hi");
    c.term.amplitude = complex_from(cj["amplitude"], "amplitude");
    c.term.winding = Winding(parse_long(cj["winding"], "winding"));
    if (cj.contains("schedule_index")) c.schedule_index = get<int>(cj, "schedule_index");
    spec.cells.push_back(c);
  }
  const json& tj = j["tail"];
  require_fields(tj, "tail", {"kind"}, {"start_complement", "first_index", "schedule", "sectors"});
  auto& tail = spec.tail;
  tail.kind = tail_kind_from(get<std::string>(tj, "kind"));
  if (tj.contains("start_complement")) {
    tail.start = Radius::from_complement(parse_long(tj["start_complement"], "start_complement"));
  }
  if (tj.contains("first_index")) tail.first_index = get<int>(tj, "first_index");
  if (tj.contains("schedule") && !tj["schedule"].is_null()) {
    tail.schedule = std::make_shared<const ReichSchedule>(schedule_from(tj["schedule"]));
  }
  if (tj.contains("sectors")) {
    if (!tj["sectors"].is_array()) throw IoError("tail.sectors: expected an array");
    for (const auto& sj : tj["sectors"]) {
      require_fields(sj, "sector", {"theta_lo", "theta_hi", "odd"}, {"even"});
      TailSector s;
      s.theta_lo = get<double>(sj, "theta_lo");
      s.theta_hi = get<double>(sj, "theta_hi");
      s.odd = complex_from(sj["odd"], "odd");
      if (sj.contains("even")) s.even = complex_from(sj["even"], "even");
      tail.sectors.push_back(s);
    }
  }
  try {
    spec.validate();
  } catch (const PreconditionError& e) {
    throw IoError(std::string("invalid spec: ") + e.what());
  }
  return spec;
}

// ---- family

const char* sigma_kind_name(SigmaProfile::Kind k) {
  switch (k) {
    case SigmaProfile::Kind::piecewise_linear: return "piecewise_linear";
    case SigmaProfile::Kind::hyperbolic_loop: return "hyperbolic_loop";
    case SigmaProfile::Kind::linear_ramp: return "linear_ramp";
  }
  return "piecewise_linear";
}

json sigma_body(const SigmaProfile& s) {
  json knots = json::array();
  for (const auto& [t, v] : s.knots) knots.push_back(json::array({t, v}));
  json out;
  out["kind"] = sigma_kind_name(s.kind);
  out["knots"] = knots;
  out["k"] = s.k;
  out["domain_end"] = s.domain_end;
  return out;
}

SigmaProfile sigma_from(const json& j) {
  require_fields(j, "sigma", {"kind"}, {"knots", "k", "domain_end"});
  SigmaProfile s;
  const auto kind = get<std::string>(j, "kind");
  if (kind == "piecewise_linear") {
    s.kind = SigmaProfile::Kind::piecewise_linear;
  } else if (kind == "hyperbolic_loop") {
    s.kind = SigmaProfile::Kind::hyperbolic_loop;
  } else if (kind == "linear_ramp") {
    s.kind = SigmaProfile::Kind::linear_ramp;
  } else {
    throw IoError("sigma.kind: unknown value '" + kind + "'");
  }
  if (j.contains("knots")) {
    for (const auto& kj : j["knots"]) {
      const Complex c = complex_from(kj, "knot");
      s.knots.emplace_back(c.real(), c.imag());
    }
  }
  if (j.contains("k")) s.k = get<double>(j, "k");
  if (j.contains("domain_end")) s.domain_end = get<double>(j, "domain_end");
  return s;
}

FamilyKind family_kind_from(const std::string& s) {
  for (auto k : {FamilyKind::nonsubstantial, FamilyKind::substantial_example,
                 FamilyKind::straight_line, FamilyKind::closed_loop_edge,
                 FamilyKind::infinitesimal}) {
    if (to_string(k) == s) return k;
  }
  throw IoError("family.kind: unknown value '" + s + "'");
}

json dump_doc(json body, const char* type) {
  json out;
  out["schema"] = kSchemaVersion;
  out["type"] = type;
  for (auto& item : body.items()) out[item.key()] = item.value();
  return out;
}

}  // namespace

std::string to_json(const ReichSchedule& s) {
  return dump_doc(schedule_body(s), "schedule").dump(2) + "\n";
}

std::string to_json(const BeltramiSpec& spec) {
  return dump_doc(spec_body(spec), "beltrami").dump(2) + "\n";
}

std::string to_json(const GeodesicFamilySpec& f) {
  json body;
  body["kind"] = to_string(f.kind);
  body["schedule"] = f.schedule ? schedule_body(*f.schedule) : json(nullptr);
  body["base"] = spec_body(f.base);
  body["delta"] = spec_body(f.delta);
  body["sigma"] = sigma_body(f.sigma);
  body["scale"] = f.scale;
  body["rho"] = f.rho;
  body["beta"] = f.beta;
  body["alpha"] = f.alpha;
  json patch;
  patch["center"] = f.patch.center;
  patch["half_width"] = f.patch.half_width;
  patch["start_index"] = f.patch.start_index;
  patch["radius"] = f.patch.radius;
  body["patch"] = patch;
  body["edge"] = f.edge;
  body["t_min"] = f.t_min;
  body["t_max"] = f.t_max;
  return dump_doc(body, "family").dump(2) + "\n";
}

ReichSchedule schedule_from_json(const std::string& text) {
  const json j = parse(text);
  check_header(j, "schedule");
  return schedule_from(j);
}

BeltramiSpec spec_from_json(const std::string& text) {
  const json j = parse(text);
  check_header(j, "beltrami");
  return spec_from(j);
}

GeodesicFamilySpec family_from_json(const std::string& text) {
  const json j = parse(text);
  check_header(j, "family");
  require_fields(j, "family",
                 {"kind", "base", "delta", "sigma", "scale", "t_min", "t_max"},
                 {"schema", "type", "schedule", "rho", "beta", "alpha", "patch", "edge"});
  GeodesicFamilySpec f;
  f.kind = family_kind_from(get<std::string>(j, "kind"));
  if (j.contains("schedule") && !j["schedule"].is_null()) {
    f.schedule = std::make_shared<const ReichSchedule>(schedule_from(j["schedule"]));
  }
  f.base = spec_from(j["base"]);
  f.delta = spec_from(j["delta"]);
  f.sigma = sigma_from(j["sigma"]);
  f.scale = get<double>(j, "scale");
  if (j.contains("rho")) f.rho = get<double>(j, "rho");
  if (j.contains("beta")) f.beta = get<double>(j, "beta");
  if (j.contains("alpha")) f.alpha = get<double>(j, "alpha");
  if (j.contains("patch")) {
    const json& p = j["patch"];
    require_fields(p, "patch", {"center", "half_width", "start_index", "radius"});
    f.patch.center = get<double>(p, "center");
    f.patch.half_width = get<double>(p, "half_width");
    f.patch.start_index = get<int>(p, "start_index");
    f.patch.radius = get<double>(p, "radius");
  }
  if (j.contains("edge")) f.edge = get<int>(j, "edge");
  f.t_min = get<double>(j, "t_min");
  f.t_max = get<double>(j, "t_max");
  if (!(f.t_min < f.t_max)) throw IoError("family: t_min must be below t_max");
  return f;
}

std::string document_type(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchemaVersion) {
    throw IoError(std::string("expected schema ") + kSchemaVersion);
  }
  if (!j.contains("type") || !j["type"].is_string()) throw IoError("missing document type");
  return j["type"].get<std::string>();
}

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw IoError("csv: row width does not match the header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cell(cells[i]);
    out << "\n";
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out.str();
}

CsvTable pairing_csv(const std::vector<PairingRow>& rows, const std::string& tag) {
  CsvTable t({"tag", "spec_id", "family", "index", "re", "im", "err"});
  for (const auto& r : rows) {
    t.add_row({tag, r.spec_id, r.family, std::to_string(r.index), csv_number(r.re),
               csv_number(r.im), csv_number(r.err)});
  }
  return t;
}

CsvTable geodesic_csv(const GeodesicReport& report, const std::string& tag) {
  CsvTable t({"tag", "s", "t", "lower", "upper", "target", "status"});
  for (const auto& r : report.rows) {
    t.add_row({tag, csv_number(r.s), csv_number(r.t), csv_number(r.interval.lower),
               csv_number(r.interval.upper), csv_number(r.target), to_string(r.interval.status)});
  }
  return t;
}

std::string dat_table(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  out << "#";
  for (const auto& c : columns) out << " " << c;
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << csv_number(r[i]);
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace atgeo
