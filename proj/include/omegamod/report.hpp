#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace omegamod {

using Json = nlohmann::ordered_json;

/// Reals are printed with 15 significant digits everywhere.
std::string format_real(double v);

/// v rounded to 15 significant digits, so JSON output matches CSV text.
Json json_real(double v);

/// Writes RFC 4180 rows with LF line endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& fields);
  void blank() { out_ << '\n'; }

  static std::string quote(std::string_view field);

 private:
  std::ostream& out_;
};

}  // namespace omegamod
