#include "gravspin/table.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace gravspin {

void CurveTable::add_row(const std::vector<double>& row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("CurveTable: row width does not match columns");
  }
  for (const double v : row) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("CurveTable: rows must contain finite values");
    }
  }
  rows.push_back(row);
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const CurveTable& table) {
  std::string out;
  for (const auto& [key, value] : table.metadata) {
    out += "# " + key + " = " + value + "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += format_value(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_table(const CurveTable& table, const std::string& path) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path temp = target.string() + ".tmp";
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) {
      throw std::runtime_error("write_table: cannot open " + temp.string());
    }
    stream << to_csv(table);
    stream.flush();
    if (!stream) {
      throw std::runtime_error("write_table: failed writing " + temp.string());
    }
  }
  fs::rename(temp, target);
}

} // namespace gravspin
