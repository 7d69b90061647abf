#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgeom {

/// Result of one CLI command: parameters echoed back, ordered results, and
/// optional wall time. Values may span several lines (matrices).
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> results;
  std::optional<double> elapsed_ms;

  void param(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }
  void result(std::string key, std::string value) { results.emplace_back(std::move(key), std::move(value)); }
  void result(std::string key, long long value) { result(std::move(key), std::to_string(value)); }
  /// Value of the first result with this key.
  std::optional<std::string> get(const std::string& key) const;
};

enum class ReportFormat { Text, KeyValue };

/// Text: indented sections, multi-line values as indented blocks.
/// KeyValue: one `section.key=value` line per entry, multi-line values
/// joined with ','.
std::string render(const Report& r, ReportFormat format);

}  // namespace pgeom
