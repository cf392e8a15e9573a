#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "atgeo/io.hpp"

namespace atgeo {

struct ReproduceConfig {
  double k = 0.5;
  int J = 8;
  int grid_points = 17;
  int sigma_grid = 101;
  int depth = 12;
  std::uint64_t seed = 20240601;
  int property_samples = 10000;
  double step3_alpha = 0.5;
  double step3_t0 = 0.2;
  double lambda1 = 0.4;
  double lambda2 = 0.2;
  double line_h = 0.5;
  double line_rho = 0.8;
  std::vector<int> criteria;  // empty: all of 1..12
};

struct CheckResult {
  int criterion = 0;  // 0 for supplementary tables
  std::string tag;
  std::string title;
  bool pass = false;
  bool hard_failure = false;  // a bound contradicting a proven statement
  std::string detail;
};

struct ReportBundle {
  ReproduceConfig config;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, CsvTable>> tables;  // file stem, table
  std::vector<std::pair<std::string, std::string>> dat;  // file stem, gnuplot table

  bool all_pass() const;
  bool hard_failure() const;
  std::string summary_json() const;
};

constexpr int kCriterionCount = 12;

/// Runs one numbered check; tables go into `bundle` when given.
CheckResult run_criterion(int id, const ReproduceConfig& config, ReportBundle* bundle = nullptr);

/// Every selected check plus the supplementary tables. Stops at the first
/// hard failure, keeping the tables produced so far.
ReportBundle reproduce_paper(const ReproduceConfig& config);

/// summary.json, one CSV per table and optionally the .dat tables.
void write_bundle(const ReportBundle& bundle, const std::string& dir, bool with_dat);

}  // namespace atgeo
