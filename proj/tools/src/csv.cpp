#include "damposc/cli/csv.hpp"

#include <fmt/format.h>

namespace damposc::cli {

std::string CsvWriter::quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvWriter::format(double value) { return fmt::format("{:.17g}", value); }

void CsvWriter::header(std::initializer_list<std::string_view> names) {
  bool first = true;
  for (auto name : names) {
    if (!first) out_ << ',';
    out_ << quote(name);
    first = false;
  }
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out_ << ',';
    out_ << format(v);
    first = false;
  }
  out_ << '\n';
}

}  // namespace damposc::cli
