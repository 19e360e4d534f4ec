#pragma once

#include <string>
#include <utility>
#include <vector>

// Column-oriented numeric result tables and their CSV serialization.
// Format: '#'-prefixed metadata lines (tool/version, workflow, config echo),
// a header line with column names, then comma-separated rows with 17
// significant digits. Output is byte-identical across runs.

namespace gravspin {

struct CurveTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  // Appends a row; throws std::invalid_argument on width mismatch or
  // non-finite values.
  void add_row(const std::vector<double>& row);
};

// Render a double with 17 significant digits (shortest form via %.17g).
std::string format_value(double v);

std::string to_csv(const CurveTable& table);

// Write CSV atomically: temp file in the destination directory, then rename.
void write_table(const CurveTable& table, const std::string& path);

} // namespace gravspin
