#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nlho_cli/config.hpp"

namespace nlho::cli {

struct Measurement {
  std::string name;
  double value;
  double limit;   ///< pass iff value < limit (ignored when not asserted)
  bool asserted;  ///< false: measured and reported only
  bool pass;
};

struct CriterionResult {
  int id;
  std::string title;
  bool pass = true;
  bool numeric_failure = false;  ///< an exception aborted the check
  std::string note;
  double seconds = 0.0;
  std::vector<Measurement> measurements;

  void check(const std::string& name, double value, double limit);
  void report(const std::string& name, double value);
};

/// Runs criteria 1-10 at their stated parameters. Only the oracle grid
/// (criteria 1 and 5) follows config.grid_n / grid_l (default 4000 / 80);
/// limits come from config tolerances.
std::vector<CriterionResult> run_acceptance(const RunConfig& config);

/// One human-readable line per criterion: "PASS  1 title: m1=... (< ...), ...".
std::string summary_line(const CriterionResult& r);

nlohmann::json to_json(const std::vector<CriterionResult>& results);

}  // namespace nlho::cli
