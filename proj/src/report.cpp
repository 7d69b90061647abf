#include "pgeom/report.hpp"

#include <iomanip>
#include <sstream>

namespace pgeom {

std::optional<std::string> Report::get(const std::string& key) const {
  for (const auto& [k, v] : results) {
    if (k == key) return v;
  }
  return std::nullopt;
}

namespace {

void text_entry(std::ostringstream& out, const std::string& key, const std::string& value) {
  if (value.find('\n') == std::string::npos) {
    out << "  " << key << ": " << value << '\n';
    return;
  }
  out << "  " << key << ":\n";
  std::istringstream lines(value);
  for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
}

std::string one_line(const std::string& value) {
  std::string out;
  std::istringstream lines(value);
  for (std::string line; std::getline(lines, line);) {
    if (!out.empty()) out += ',';
    out += line;
  }
  return out;
}

}  // namespace

std::string render(const Report& r, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Text) {
    out << "command: " << r.command << '\n';
    if (!r.parameters.empty()) {
      out << "parameters:\n";
      for (const auto& [k, v] : r.parameters) text_entry(out, k, v);
    }
    out << "results:\n";
    for (const auto& [k, v] : r.results) text_entry(out, k, v);
    if (r.elapsed_ms) out << "elapsed_ms: " << std::fixed << std::setprecision(1) << *r.elapsed_ms << '\n';
  } else {
    out << "command=" << r.command << '\n';
    for (const auto& [k, v] : r.parameters) out << "param." << k << '=' << one_line(v) << '\n';
    for (const auto& [k, v] : r.results) out << "result." << k << '=' << one_line(v) << '\n';
    if (r.elapsed_ms) out << "elapsed_ms=" << std::fixed << std::setprecision(1) << *r.elapsed_ms << '\n';
  }
  return out.str();
}

}  // namespace pgeom
