#include "burgers/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace burgers {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (const auto& c : table.comments) out += "# " + c + "\n";
  out += "# columns:";
  for (std::size_t j = 0; j < table.columns.size(); ++j) out += (j == 0 ? " " : ",") + table.columns[j];
  out += "\n";
  const std::size_t rows = table.data.empty() ? 0 : table.data.front().size();
  for (const auto& col : table.data) {
    if (col.size() != rows) throw std::invalid_argument("to_csv: ragged columns");
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < table.data.size(); ++j) {
      if (j > 0) out += ',';
      out += format_double(table.data[j][i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<double>> read_csv_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      double v = 0.0;
      const auto res = std::from_chars(p, end, v);
      if (res.ec != std::errc{}) {
        std::ostringstream msg;
        msg << path.string() << ":" << line_no << ": malformed number";
        throw std::runtime_error(msg.str());
      }
      row.push_back(v);
      p = res.ptr;
      if (p < end && *p == ',') ++p;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string field_csv(const Field1D& field, const std::string& coordinate_name,
                      const std::vector<std::string>& comments) {
  return to_csv({comments, {coordinate_name, "omega"}, {field.grid().coordinates(), field.values()}});
}

Field1D read_field_csv(const std::filesystem::path& path) {
  const auto rows = read_csv_rows(path);
  if (rows.size() < 3) throw std::runtime_error(path.string() + ": a field needs at least 3 rows");
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() < 2) throw std::runtime_error(path.string() + ": each row needs coordinate and omega");
    values.push_back(r[1]);
  }
  const Grid1D grid(rows.back()[0], rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i][0] != grid.coordinate(i)) {
      throw std::runtime_error(path.string() + ": coordinates do not form a uniform symmetric grid");
    }
  }
  return Field1D(grid, std::move(values));
}

std::string norms_csv(const std::vector<NormSample>& norms, const std::vector<std::string>& comments) {
  CsvTable t{comments, {"time", "l2", "linf"}, {{}, {}, {}}};
  for (const auto& s : norms) {
    t.data[0].push_back(s.time);
    t.data[1].push_back(s.l2);
    t.data[2].push_back(s.linf);
  }
  return to_csv(t);
}

nlohmann::json to_json(const SpectrumReport& report) {
  nlohmann::json computed = nlohmann::json::array();
  nlohmann::json closed = nlohmann::json::array();
  nlohmann::json errors = nlohmann::json::array();
  nlohmann::json growing = nlohmann::json::array();
  for (const auto& e : report.entries) {
    computed.push_back({e.index, e.computed});
    closed.push_back(e.closed_form);
    errors.push_back(e.abs_error);
    if (e.closed_form < 0.0) growing.push_back(e.index);
  }
  return {{"alpha", report.alpha},
          {"grid", {{"half_width", report.grid.half_width()}, {"num_points", report.grid.size()}}},
          {"computed", computed},
          {"closed_form", closed},
          {"abs_errors", errors},
          {"imag_residue", report.imag_residue},
          {"growing_modes", growing}};
}

nlohmann::json to_json(const CrossCheckResult& result) {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : result.candidates) {
    cands.push_back({{"label", c.label},
                     {"alpha", c.alpha},
                     {"max_error", std::isfinite(c.max_error) ? nlohmann::json(c.max_error) : nlohmann::json()},
                     {"passes", c.passes}});
  }
  nlohmann::json j = {{"c1", result.c1},
                      {"c2", result.c2},
                      {"nu", result.nu},
                      {"mode_n", result.mode_n},
                      {"t_end", result.t_end},
                      {"tau_end", result.tau_end},
                      {"grid", {{"half_width", result.grid.half_width()}, {"num_points", result.grid.size()}}},
                      {"candidates", cands},
                      {"degenerate", result.degenerate}};
  j["winning_alpha"] = result.winning_alpha ? nlohmann::json(*result.winning_alpha) : nlohmann::json();
  if (result.degenerate) j["note"] = "degenerate at c1 = 0: both mappings give alpha = 1";
  return j;
}

nlohmann::json to_json(const DiscrepancyReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"item", to_string(e.item)},
                       {"printed_form", e.printed_form},
                       {"implemented_form", e.implemented_form},
                       {"oracle_evidence",
                        {{"measure", e.measure},
                         {"printed_residual", e.printed_residual},
                         {"implemented_residual", e.implemented_residual},
                         {"separation", e.separation()}}}});
  }
  return {{"entries", entries}};
}

}  // namespace burgers
