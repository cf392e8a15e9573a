#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "atgeo/beltrami.hpp"
#include "atgeo/certified.hpp"
#include "atgeo/geodesic.hpp"
#include "atgeo/pairing.hpp"
#include "atgeo/schedule.hpp"

namespace atgeo {

inline constexpr const char* kSchemaVersion = "atgeo/1";

/// Malformed documents, unknown fields, schema mismatches and file errors.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON documents. Radii travel as complements 1 - r and windings as decimal
// strings, both with 21 significant digits, so extended values round-trip.
std::string to_json(const ReichSchedule& s);
std::string to_json(const BeltramiSpec& spec);
std::string to_json(const GeodesicFamilySpec& family);

/// Not validated against the construction inequalities.
ReichSchedule schedule_from_json(const std::string& text);
/// Runs BeltramiSpec::validate.
BeltramiSpec spec_from_json(const std::string& text);
GeodesicFamilySpec family_from_json(const std::string& text);

/// The "type" field of a document.
std::string document_type(const std::string& text);

/// %.17g.
std::string csv_number(double x);

/// Comma-separated table with a header row. Cells containing commas or quotes
/// are quoted.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> cells);
  std::size_t size() const { return rows_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

CsvTable pairing_csv(const std::vector<PairingRow>& rows, const std::string& tag);
CsvTable geodesic_csv(const GeodesicReport& report, const std::string& tag);

/// Whitespace-separated columns with a '#' header, for gnuplot.
std::string dat_table(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace atgeo
