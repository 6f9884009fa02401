#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stepmp/pursuit.hpp"

namespace stepmp {

/// Comma-separated table; the header row is present when any cell of the
/// first row fails to parse as a number.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column by header name, or by zero-based index when `column` is all digits.
  /// Throws std::invalid_argument when the column does not exist.
  std::size_t column_index(const std::string& column) const;
  /// Throws std::invalid_argument on a missing or non-numeric cell.
  std::vector<double> numeric_column(const std::string& column) const;
  bool has_column(const std::string& name) const;
};

/// Throws std::runtime_error when the file cannot be opened.
CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(const std::string& text);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

struct RunReport {
  std::string input_path;
  std::string column;
  PursuitConfig config;
  double shift = 0.0;
  std::vector<ExpansionTerm> terms;
  std::vector<double> residual_norms;
  std::vector<double> reconstruction;
  std::vector<long> breakpoints;
  double seconds = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_run_report(const GreedyExpansion& expansion, const PursuitConfig& config,
                          std::string input_path, std::string column, double seconds);

nlohmann::json to_json(const RunReport& report);
RunReport run_report_from_json(const nlohmann::json& doc);

/// Plot data: t,value,reconstruction[,true_mean]
std::string reconstruction_csv(const std::vector<double>& values,
                               const std::vector<double>& reconstruction,
                               const std::optional<std::vector<double>>& true_means);

/// Shortest decimal text that reads back to the same double.
std::string format_real(double value);

}  // namespace stepmp
