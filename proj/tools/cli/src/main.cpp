#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlho_cli/commands.hpp"
#include "nlho_cli/config.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> settings;
  std::vector<std::string> tolerances;
};

// Registers a flag whose raw text is replayed through apply_setting, so the
// validation rules match the config file exactly.
void setting(CLI::App& app, Flags& flags, const std::string& flag, const std::string& key, const std::string& help) {
  app.add_option_function<std::string>(
      flag, [&flags, key](const std::string& value) { flags.settings.emplace_back(key, value); }, help);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nlho::cli;
  CLI::App app{"Nonlinear harmonic oscillator: spectra, eigenfunctions, classical orbits and coherent states"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;

  app.add_option("--config", flags.config_path, "key=value or JSON config file");
  setting(app, flags, "--lambda", "lambda", "nonlinearity lambda >= 0");
  setting(app, flags, "--mass", "mass", "mass m");
  setting(app, flags, "--omega", "omega", "frequency omega");
  setting(app, flags, "--hbar", "hbar", "Planck constant hbar");
  setting(app, flags, "--grid-n", "grid_n", "grid points N");
  setting(app, flags, "--grid-l", "grid_l", "box half-width L in X");
  setting(app, flags, "--format", "format", "csv or json");
  setting(app, flags, "--out", "out", "output path (default stdout)");
  app.add_option("--tol", flags.tolerances, "tolerance override NAME=F (repeatable)");

  const char* const commands[][2] = {
      {"spectrum", "closed-form energies against the finite-difference oracle"},
      {"wavefunction", "sample phi_n on the grid with the oracle eigenvector"},
      {"classical", "integrate one orbit and compare its period"},
      {"coherent", "build a type 1, 2 or 3 coherent state"},
      {"complexifier-check", "classical and quantum complexifier identities"},
      {"validate", "run the acceptance suite"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c[0], c[1]);
    const std::string name = c[0];
    if (name == "spectrum") setting(*sub, flags, "--levels", "levels", "maximum number of levels");
    if (name == "wavefunction") setting(*sub, flags, "--n", "n", "level index");
    if (name == "classical") {
      setting(*sub, flags, "--amplitude", "amplitude", "orbit amplitude A in x");
      setting(*sub, flags, "--periods", "periods", "number of periods");
    }
    if (name == "coherent") {
      setting(*sub, flags, "--type", "type", "1, 2 or 3");
      setting(*sub, flags, "--label", "label", "complex label such as 0.7+0.2i");
      setting(*sub, flags, "--levels", "levels", "Fock dimension for type 2");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  RunConfig config;
  try {
    if (!flags.config_path.empty()) config = load_config(flags.config_path);
    for (const auto& [key, value] : flags.settings) apply_setting(config, key, value, "--" + key);
    for (const auto& t : flags.tolerances) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw ConfigError("--tol", 0, 0, "expected NAME=F, got '" + t + "'");
      apply_setting(config, "tol." + t.substr(0, eq), t.substr(eq + 1), "--tol");
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kConfigError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  if (config.out.empty()) return run_command(name, config, std::cout, std::cerr);
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    std::cerr << config.out << ": cannot open for writing\n";
    return kConfigError;
  }
  return run_command(name, config, file, std::cerr);
}
