#include <iostream>

#include "nlho_cli/validate.hpp"

int main() {
  const auto results = nlho::cli::run_acceptance({});
  int failed = 0;
  for (const auto& r : results) {
    std::cout << nlho::cli::summary_line(r) << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (failed ? "FAILED " : "PASSED ") << results.size() - failed << "/" << results.size() << "\n";
  return failed ? 1 : 0;
}
