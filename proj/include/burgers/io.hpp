#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgers/discrepancy.hpp"
#include "burgers/grid.hpp"
#include "burgers/pde_solver.hpp"
#include "burgers/verification.hpp"

namespace burgers {

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

/// Writes through a temporary file in the same directory and renames it
/// over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);

struct CsvTable {
  std::vector<std::string> comments;  ///< emitted as "# ..." lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  ///< one vector per column
};

std::string to_csv(const CsvTable& table);

/// Reads numeric rows, skipping '#' comment lines.
std::vector<std::vector<double>> read_csv_rows(const std::filesystem::path& path);

/// "coordinate, omega" CSV for a field.
std::string field_csv(const Field1D& field, const std::string& coordinate_name,
                      const std::vector<std::string>& comments = {});

/// Reads a field CSV written by field_csv. The coordinates must be exactly
/// those of Grid1D(last coordinate, row count); throws std::runtime_error
/// otherwise.
Field1D read_field_csv(const std::filesystem::path& path);

std::string norms_csv(const std::vector<NormSample>& norms, const std::vector<std::string>& comments = {});

nlohmann::json to_json(const SpectrumReport& report);
nlohmann::json to_json(const CrossCheckResult& result);
nlohmann::json to_json(const DiscrepancyReport& report);

}  // namespace burgers
