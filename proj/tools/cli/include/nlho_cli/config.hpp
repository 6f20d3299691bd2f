#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "nlho/params.hpp"

namespace nlho::cli {

enum class Format { csv, json };

struct RunConfig {
  OscillatorParams params;
  std::optional<int> grid_n;
  std::optional<double> grid_l;
  Format format = Format::csv;
  std::string out;  ///< empty: stdout
  std::map<std::string, double> tol;

  // Subcommand arguments.
  int levels = 32;
  int n = 0;
  int type = 1;
  std::string label = "0";
  double amplitude = 1.0;
  double periods = 10.0;

  int grid_n_or_default() const { return grid_n.value_or(4000); }
  /// Tolerance by name, falling back to the documented default.
  double tolerance(const std::string& name) const;
};

/// Defaults for every recognised tolerance name.
const std::map<std::string, double>& default_tolerances();

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& origin, int line, int column, const std::string& what);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Flat `key = value` lines ('#' starts a comment) or a JSON object, chosen by
/// the first non-blank character. Unknown keys are rejected.
RunConfig parse_config(const std::string& text, const std::string& origin = "<config>",
                       RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Applies one setting; `key` may be `tol.NAME`. Throws ConfigError at (line, column).
void apply_setting(RunConfig& config, const std::string& key, const std::string& value,
                   const std::string& origin = "<flag>", int line = 0, int column = 0);

/// "a", "a+bi", "a-bi", "bi", "(a,b)"; no spaces.
bool parse_complex(const std::string& text, double& re, double& im);

}  // namespace nlho::cli
