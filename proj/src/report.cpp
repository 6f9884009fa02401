#include "stepmp/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stepmp {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

std::optional<double> parse_real(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  const char* begin = cell.data();
  const char* end = cell.data() + cell.size();
  if (*begin == '+') ++begin;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string_view rest(line);
  while (true) {
    const auto comma = rest.find(',');
    cells.push_back(trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return cells;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

bool CsvTable::has_column(const std::string& name) const {
  return std::find(header.begin(), header.end(), name) != header.end();
}

std::size_t CsvTable::column_index(const std::string& column) const {
  const auto named = std::find(header.begin(), header.end(), column);
  if (named != header.end()) return static_cast<std::size_t>(named - header.begin());
  if (all_digits(column)) {
    const std::size_t index = std::stoul(column);
    const std::size_t width = header.empty() ? (rows.empty() ? 0 : rows.front().size()) : header.size();
    if (index < width) return index;
  }
  throw std::invalid_argument("no such column: " + column);
}

std::vector<double> CsvTable::numeric_column(const std::string& column) const {
  const std::size_t index = column_index(column);
  std::vector<double> out;
  out.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const auto value = index < row.size() ? parse_real(row[index]) : std::nullopt;
    if (!value) {
      throw std::invalid_argument("non-numeric cell in column " + column + " at data row " +
                                  std::to_string(r + 1));
    }
    out.push_back(*value);
  }
  if (out.empty()) throw std::invalid_argument("empty column: " + column);
  return out;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split_line(line);
    if (first) {
      first = false;
      // Strip a UTF-8 byte order mark.
      if (cells[0].rfind("\xEF\xBB\xBF", 0) == 0) cells[0].erase(0, 3);
      const bool header = std::any_of(cells.begin(), cells.end(),
                                      [](const std::string& c) { return !parse_real(c); });
      if (header) {
        table.header = std::move(cells);
        continue;
      }
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str());
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

RunReport make_run_report(const GreedyExpansion& expansion, const PursuitConfig& config,
                          std::string input_path, std::string column, double seconds) {
  RunReport report;
  report.input_path = std::move(input_path);
  report.column = std::move(column);
  report.config = config;
  report.shift = expansion.shift.shift;
  report.terms = expansion.terms;
  report.residual_norms = expansion.norm_history;
  report.reconstruction = reconstruct(expansion).vector();
  report.breakpoints = breakpoints(expansion);
  report.seconds = seconds;
  return report;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& term : report.terms) {
    terms.push_back({{"iteration", term.iteration},
                     {"start", term.atom.start},
                     {"length", term.atom.length},
                     {"coefficient", term.coefficient},
                     {"level", term.level}});
  }
  nlohmann::json config = {{"max_iterations", report.config.max_iterations},
                           {"residual_epsilon", report.config.residual_epsilon},
                           {"coefficient_epsilon", report.config.coefficient_epsilon},
                           {"pre_shift", nullptr}};
  if (report.config.pre_shift) config["pre_shift"] = *report.config.pre_shift;
  return {{"kind", "approx"},
          {"input", {{"path", report.input_path}, {"column", report.column},
                     {"length", report.reconstruction.size()}}},
          {"config", config},
          {"shift", report.shift},
          {"terms", terms},
          {"residual_norms", report.residual_norms},
          {"reconstruction", report.reconstruction},
          {"breakpoints", report.breakpoints},
          {"seconds", report.seconds}};
}

RunReport run_report_from_json(const nlohmann::json& doc) {
  RunReport report;
  report.input_path = doc.at("input").at("path").get<std::string>();
  report.column = doc.at("input").at("column").get<std::string>();
  const auto& config = doc.at("config");
  report.config.max_iterations = config.at("max_iterations").get<long>();
  report.config.residual_epsilon = config.at("residual_epsilon").get<double>();
  report.config.coefficient_epsilon = config.at("coefficient_epsilon").get<double>();
  if (!config.at("pre_shift").is_null()) report.config.pre_shift = config.at("pre_shift").get<double>();
  report.shift = doc.at("shift").get<double>();
  for (const auto& term : doc.at("terms")) {
    report.terms.push_back({{term.at("start").get<long>(), term.at("length").get<long>()},
                            term.at("coefficient").get<double>(),
                            term.at("iteration").get<long>(),
                            term.at("level").get<double>()});
  }
  report.residual_norms = doc.at("residual_norms").get<std::vector<double>>();
  report.reconstruction = doc.at("reconstruction").get<std::vector<double>>();
  report.breakpoints = doc.at("breakpoints").get<std::vector<long>>();
  report.seconds = doc.at("seconds").get<double>();
  return report;
}

std::string reconstruction_csv(const std::vector<double>& values,
                               const std::vector<double>& reconstruction,
                               const std::optional<std::vector<double>>& true_means) {
  std::ostringstream out;
  out << "t,value,reconstruction" << (true_means ? ",true_mean" : "") << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i + 1) << ',' << format_real(values[i]) << ',' << format_real(reconstruction[i]);
    if (true_means) out << ',' << format_real((*true_means)[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace stepmp
