#include "nlho_cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nlho::cli {

namespace {

std::string where(const std::string& origin, int line, int column) {
  if (line <= 0) return origin;
  return origin + ":" + std::to_string(line) + ":" + std::to_string(column);
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool is_known_key(const std::string& key) {
  static const char* const keys[] = {"mass", "omega",  "lambda", "hbar", "grid_n",    "grid_l",
                                     "format", "out",  "levels", "n",    "type",      "label",
                                     "amplitude", "periods"};
  if (key.rfind("tol.", 0) == 0) return default_tolerances().contains(key.substr(4));
  return std::find(std::begin(keys), std::end(keys), key) != std::end(keys);
}

RunConfig parse_flat(const std::string& text, const std::string& origin, RunConfig config) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = raw.substr(0, raw.find('#'));
    if (trim(body).empty()) continue;
    const auto eq = body.find('=');
    const int key_col = static_cast<int>(body.find_first_not_of(" \t")) + 1;
    if (eq == std::string::npos) throw ConfigError(origin, line, key_col, "expected key = value");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    const auto vpos = body.find_first_not_of(" \t", eq + 1);
    const int value_col = vpos == std::string::npos ? static_cast<int>(eq) + 2 : static_cast<int>(vpos) + 1;
    if (key.empty()) throw ConfigError(origin, line, key_col, "missing key");
    if (value.empty()) throw ConfigError(origin, line, value_col, "missing value for '" + key + "'");
    // Unknown keys are reported at the key, bad values at the value.
    apply_setting(config, key, value, origin, line, is_known_key(key) ? value_col : key_col);
  }
  return config;
}

std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number() || v.is_boolean()) return v.dump();
  return {};
}

RunConfig parse_json(const std::string& text, const std::string& origin, RunConfig config) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    const auto cut = msg.find("syntax error");
    throw ConfigError(origin, line, col, cut == std::string::npos ? msg : msg.substr(cut));
  }
  if (!doc.is_object()) throw ConfigError(origin, 1, 1, "top-level JSON value must be an object");
  const auto locate = [&](const std::string& key) {
    const auto pos = text.find("\"" + key + "\"");
    return line_column(text, pos == std::string::npos ? 0 : pos);
  };
  for (const auto& [key, value] : doc.items()) {
    const auto [line, col] = locate(key);
    if (key == "tol" && value.is_object()) {
      for (const auto& [name, tv] : value.items()) {
        const auto [tl, tc] = locate(name);
        apply_setting(config, "tol." + name, json_scalar(tv), origin, tl, tc);
      }
      continue;
    }
    const std::string scalar = json_scalar(value);
    if (scalar.empty()) throw ConfigError(origin, line, col, "value of '" + key + "' must be a scalar");
    apply_setting(config, key, scalar, origin, line, col);
  }
  return config;
}

}  // namespace

ConfigError::ConfigError(const std::string& origin, int line, int column, const std::string& what)
    : std::runtime_error(where(origin, line, column) + ": " + what), line_(line), column_(column) {}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> defaults = {
      {"spectrum", 1e-6},         {"spectrum_top", 1e-5},  {"wavefunction", 1e-4},
      {"period", 1e-5},           {"period_law", 1e-6},    {"drift", 1e-9},
      {"sho", 1e-6},              {"orthonormality", 1e-8}, {"jacobi", 1e-10},
      {"hermite", 1e-4},          {"z_series", 1e-12},     {"bracket", 1e-7},
      {"bracket_A", 1e-8},        {"zdot", 1e-6},          {"a_residual", 1e-6},
      {"qz_series", 1e-8},        {"commutator", 1e-4},    {"commutator_limit", 1e-4},
      {"b_residual", 1e-6},       {"bracket_symbol", 1e-6}, {"norm_conservation", 1e-8},
      {"poisson", 1e-12},         {"fock", 1e-12},         {"runtime", 60.0},
  };
  return defaults;
}

double RunConfig::tolerance(const std::string& name) const {
  if (const auto it = tol.find(name); it != tol.end()) return it->second;
  return default_tolerances().at(name);
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value,
                   const std::string& origin, int line, int column) {
  const auto fail = [&](const std::string& what) { throw ConfigError(origin, line, column, what); };
  const auto number = [&]() {
    double v = 0.0;
    if (!parse_double(value, v)) fail("'" + key + "' expects a number, got '" + value + "'");
    return v;
  };
  const auto integer = [&]() {
    int v = 0;
    if (!parse_int(value, v)) fail("'" + key + "' expects an integer, got '" + value + "'");
    return v;
  };

  if (key.rfind("tol.", 0) == 0) {
    const std::string name = key.substr(4);
    if (!default_tolerances().contains(name)) fail("unknown key '" + key + "' (no such tolerance)");
    const double v = number();
    if (!(v > 0.0)) fail("tolerance '" + name + "' must be positive");
    config.tol[name] = v;
  } else if (key == "mass") {
    config.params.m = number();
  } else if (key == "omega") {
    config.params.omega = number();
  } else if (key == "lambda") {
    config.params.lambda = number();
  } else if (key == "hbar") {
    config.params.hbar = number();
  } else if (key == "grid_n") {
    config.grid_n = integer();
    if (*config.grid_n < 16) fail("grid_n must be at least 16");
  } else if (key == "grid_l") {
    config.grid_l = number();
    if (!(*config.grid_l > 0.0)) fail("grid_l must be positive");
  } else if (key == "format") {
    if (value == "csv") {
      config.format = Format::csv;
    } else if (value == "json") {
      config.format = Format::json;
    } else {
      fail("format must be csv or json");
    }
  } else if (key == "out") {
    config.out = value;
  } else if (key == "levels") {
    config.levels = integer();
    if (config.levels < 1) fail("levels must be positive");
  } else if (key == "n") {
    config.n = integer();
    if (config.n < 0) fail("n must be non-negative");
  } else if (key == "type") {
    config.type = integer();
    if (config.type < 1 || config.type > 3) fail("type must be 1, 2 or 3");
  } else if (key == "label") {
    double re = 0.0;
    double im = 0.0;
    if (!parse_complex(value, re, im)) fail("label must be a complex number such as 0.7+0.2i");
    config.label = value;
  } else if (key == "amplitude") {
    config.amplitude = number();
    if (!(config.amplitude > 0.0)) fail("amplitude must be positive");
  } else if (key == "periods") {
    config.periods = number();
    if (!(config.periods > 0.0)) fail("periods must be positive");
  } else {
    fail("unknown key '" + key + "'");
  }
}

RunConfig parse_config(const std::string& text, const std::string& origin, RunConfig base) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text, origin, std::move(base));
  return parse_flat(text, origin, std::move(base));
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, 0, "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path, std::move(base));
}

bool parse_complex(const std::string& text, double& re, double& im) {
  std::string s = text;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return false;
    return parse_double(s.substr(1, comma - 1), re) && parse_double(s.substr(comma + 1, s.size() - comma - 2), im);
  }
  if (s.empty()) return false;
  if (s.back() != 'i' && s.back() != 'j') {
    im = 0.0;
    return parse_double(s, re);
  }
  s.pop_back();
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && std::tolower(static_cast<unsigned char>(s[k - 1])) != 'e') {
      split = k;
      break;
    }
  }
  const auto imag_part = [&](const std::string& t, double& out) {
    if (t.empty() || t == "+") {
      out = 1.0;
      return true;
    }
    if (t == "-") {
      out = -1.0;
      return true;
    }
    return parse_double(t, out);
  };
  if (split == std::string::npos) {
    re = 0.0;
    return imag_part(s, im);
  }
  return parse_double(s.substr(0, split), re) && imag_part(s.substr(split), im);
}

}  // namespace nlho::cli
