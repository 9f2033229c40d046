#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace damposc::cli {

// RFC 4180 writer. Numbers use '.' and 17 significant digits so they round-trip exactly.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(std::initializer_list<std::string_view> names);
  void row(std::initializer_list<double> values);

  static std::string quote(std::string_view field);
  static std::string format(double value);

 private:
  std::ostream& out_;
};

}  // namespace damposc::cli
