#include "nlho_cli/output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace nlho::cli {

std::string fmt(double value) {
  if (std::isnan(value)) return {};
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void Table::write_csv(std::ostream& os) const {
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

nlohmann::json Table::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < header.size() && i < r.size(); ++i) {
      const std::string& cell = r[i];
      if (cell.empty()) {
        obj[header[i]] = nullptr;
        continue;
      }
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec == std::errc() && ptr == cell.data() + cell.size()) {
        obj[header[i]] = v;
      } else {
        obj[header[i]] = cell;
      }
    }
    out.push_back(std::move(obj));
  }
  return out;
}

void write_json(std::ostream& os, const nlohmann::json& doc) { os << doc.dump(2) << '\n'; }

nlohmann::json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

}  // namespace nlho::cli
