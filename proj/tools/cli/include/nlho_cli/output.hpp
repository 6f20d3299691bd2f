#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace nlho::cli {

/// "%.17g" formatting, locale independent; NaN renders as an empty field.
std::string fmt(double value);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Comma-separated, header first, LF endings.
  void write_csv(std::ostream& os) const;
  /// Array of objects; numeric-looking cells become JSON numbers, empty cells null.
  nlohmann::json to_json() const;
};

/// Serializes with two-space indentation and a trailing LF.
void write_json(std::ostream& os, const nlohmann::json& doc);

/// JSON number, or null when not finite.
nlohmann::json number(double value);

}  // namespace nlho::cli
