#include "nlho_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "nlho/classical.hpp"
#include "nlho/coherent.hpp"
#include "nlho/complexifier.hpp"
#include "nlho/eigenfunctions.hpp"
#include "nlho/errors.hpp"
#include "nlho/fock.hpp"
#include "nlho/grid.hpp"
#include "nlho/spectrum.hpp"
#include "nlho_cli/output.hpp"
#include "nlho_cli/validate.hpp"

namespace nlho::cli {

namespace {

using cplx = std::complex<double>;
using nlohmann::json;

json params_json(const OscillatorParams& p) {
  return {{"mass", p.m}, {"omega", p.omega}, {"lambda", p.lambda}, {"hbar", p.hbar}};
}

json complex_json(cplx z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

cplx label_value(const RunConfig& config) {
  double re = 0.0;
  double im = 0.0;
  if (!parse_complex(config.label, re, im)) throw ConfigError("<label>", 0, 0, "cannot parse '" + config.label + "'");
  return {re, im};
}

// CSV goes to `out` with the report on `err`; JSON wraps both in one document.
void emit(const RunConfig& config, const std::string& command, const Table& table, const json& report,
          std::ostream& out, std::ostream& err) {
  if (config.format == Format::csv) {
    table.write_csv(out);
    if (!report.is_null()) write_json(err, report);
    return;
  }
  json doc = {{"command", command}, {"params", params_json(config.params)}, {"rows", table.to_json()}};
  if (!report.is_null()) doc["report"] = report;
  write_json(out, doc);
}

// The closed-form level must have decayed inside the box for the oracle to see it.
bool fits_in_box(const Eigenfunction& phi, double L) {
  double peak = 0.0;
  for (int j = 0; j <= 2000; ++j) peak = std::max(peak, std::abs(phi.evaluate(L * j / 2000.0)));
  const double edge = phi.evaluate(L);
  return edge * edge < 1e-10 * peak * peak;
}

Grid box_for(const RunConfig& config, int top) {
  return Grid::make(config.grid_l.value_or(default_box(config.params, top)), config.grid_n_or_default());
}

}  // namespace

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const OscillatorParams& p = config.params;
  p.validate();
  const int count = spectrum::bound_state_count(p);
  const int levels = std::min(count, config.levels);
  const int cutoff = spectrum::f_cutoff(p);

  std::vector<double> oracle(static_cast<std::size_t>(levels), std::nan(""));
  if (!p.undeformed()) {
    const Grid grid = box_for(config, levels - 1);
    const OracleSpectrum spec = oracle_spectrum(p, grid, levels, false);
    for (const auto& level : spec.levels) {
      if (fits_in_box(eigenfunction(level.n, p), grid.L)) oracle[static_cast<std::size_t>(level.n)] = level.energy;
    }
  }

  Table table{{"n", "energy", "oracle_energy", "rel_gap", "f"}, {}};
  bool ok = true;
  double worst = 0.0;
  for (int n = 0; n < levels; ++n) {
    const double e = spectrum::energy_level(n, p);
    const double o = oracle[static_cast<std::size_t>(n)];
    const double gap = std::isnan(o) ? std::nan("") : std::abs(o - e) / std::abs(e);
    if (!std::isnan(gap)) {
      worst = std::max(worst, gap);
      const double limit = config.tolerance(n + 1 == count ? "spectrum_top" : "spectrum");
      ok = ok && gap < limit;
    }
    const double f = n <= cutoff ? spectrum::f_deformation(n, p) : std::nan("");
    table.rows.push_back({std::to_string(n), fmt(e), fmt(o), fmt(gap), fmt(f)});
  }
  if (config.format == Format::json) {
    emit(config, "spectrum", table, {{"bound_levels", count == spectrum::kUnbounded ? json(nullptr) : json(count)},
                                     {"max_rel_gap", worst}, {"pass", ok}},
         out, err);
  } else {
    table.write_csv(out);
  }
  if (!ok) err << "spectrum: oracle gap above tolerance (max " << fmt(worst) << ")\n";
  return ok ? kOk : kToleranceBreach;
}

int cmd_wavefunction(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const OscillatorParams& p = config.params;
  p.validate();
  const int n = config.n;
  const int count = spectrum::bound_state_count(p);
  if (n >= count) throw OutOfSpectrumError(n, count - 1);
  const Eigenfunction phi = eigenfunction(n, p);
  const Grid grid = box_for(config, n);

  Eigen::VectorXd oracle;
  if (!p.undeformed()) {
    oracle = oracle_spectrum(p, grid, n + 1, true).levels.back().vector;
    double dot = 0.0;
    for (int j = 0; j < grid.N; ++j) dot += oracle[j] * phi.evaluate(grid.points[static_cast<std::size_t>(j)]);
    if (dot < 0.0) oracle = -oracle;
  }

  Table table{{"X", "x", "phi", "oracle_phi"}, {}};
  double acc = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    const double X = grid.points[static_cast<std::size_t>(j)];
    const double v = phi.evaluate(X);
    const double o = oracle.size() ? oracle[j] : std::nan("");
    if (oracle.size()) acc += (v - o) * (v - o) * grid.h;
    table.rows.push_back({fmt(X), fmt(X_to_x(X, p)), fmt(v), fmt(o)});
  }
  const double dist = oracle.size() ? std::sqrt(acc) : std::nan("");
  const bool ok = !(dist >= config.tolerance("wavefunction"));
  json report = {{"n", n}, {"l2_distance_to_oracle", number(dist)}, {"pass", ok}};
  emit(config, "wavefunction", table, config.format == Format::json ? report : json(), out, err);
  if (!ok) err << "wavefunction: L2 distance to oracle " << fmt(dist) << " above tolerance\n";
  return ok ? kOk : kToleranceBreach;
}

int cmd_classical(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const OscillatorParams& p = config.params;
  p.validate();
  const double A = config.amplitude;
  const double T = classical::orbit_period(A, p);
  const std::size_t per_period = 1000;
  const auto steps = static_cast<std::size_t>(std::ceil(config.periods * per_period));
  const classical::PhaseState start =
      classical::to_chart({A, 0.0, classical::Chart::xp, 0.0}, classical::Chart::XP, p);
  classical::IntegratorOptions opt;
  opt.scheme = classical::Scheme::LEAPFROG_XP;
  const classical::Trajectory traj = classical::integrate_orbit(start, p, T / per_period, steps, opt);
  const double measured = classical::measure_period(traj);

  Table table{{"t", "x", "p", "X", "P", "energy"}, {}};
  const std::size_t stride = std::max<std::size_t>(1, traj.samples.size() / 2000);
  for (std::size_t i = 0; i < traj.samples.size(); i += stride) {
    const auto& s = traj.samples[i];
    const auto xp = classical::to_chart(s, classical::Chart::xp, p);
    table.rows.push_back({fmt(s.t), fmt(xp.q), fmt(xp.pq), fmt(s.q), fmt(s.pq), fmt(classical::hamiltonian(s, p))});
  }
  const double rel = std::abs(measured / T - 1.0);
  const bool ok = rel < config.tolerance("period");
  const json summary = {{"measured_period", number(measured)},
                        {"predicted_period", T},
                        {"energy_drift", traj.energy_drift},
                        {"pass", ok}};
  emit(config, "classical", table, summary, out, err);
  if (!ok) err << "classical: period mismatch " << fmt(rel) << "\n";
  return ok ? kOk : kToleranceBreach;
}

int cmd_coherent(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const OscillatorParams& p = config.params;
  p.validate();
  const cplx z = label_value(config);
  const double b = std::sqrt(derive(p).b2);
  bool ok = true;

  if (config.type == 2) {
    const DeformedCoherent c = coherent_type2(z, p, config.levels);
    Table table{{"n", "re", "im", "prob"}, {}};
    for (Eigen::Index n = 0; n < c.coeffs.size(); ++n) {
      table.rows.push_back({std::to_string(n), fmt(c.coeffs[n].real()), fmt(c.coeffs[n].imag()), fmt(std::norm(c.coeffs[n]))});
    }
    ok = c.residual <= 2.0 * c.bound;
    emit(config, "coherent", table,
         {{"type", 2}, {"beta", complex_json(z)}, {"cutoff", c.cutoff}, {"eigen_residual", c.residual},
          {"tail_bound", c.bound}, {"tail_mass", c.tail_mass}, {"pass", ok}},
         out, err);
    if (!ok) err << "coherent: residual exceeds the tail estimate\n";
    return ok ? kOk : kToleranceBreach;
  }

  Table table{{"X", "x", "re", "im", "prob"}, {}};
  const auto add_rows = [&](const GridState& s) {
    for (int j = 0; j < s.grid.N; ++j) {
      const double X = s.grid.points[static_cast<std::size_t>(j)];
      const cplx v = s.values[j];
      table.rows.push_back({fmt(X), fmt(X_to_x(X, p)), fmt(v.real()), fmt(v.imag()), fmt(std::norm(v))});
    }
  };

  json report;
  if (config.type == 1) {
    const double centre = std::sqrt(2.0) * b * std::abs(z.real());
    const Grid grid = Grid::make(config.grid_l.value_or(std::max(10.0 * b, 2.0 * (centre + 4.0 * b))),
                                 config.grid_n.value_or(2048));
    const GridState psi = coherent_type1(z, p, grid);
    const Type1Report r = type1_report(z, p, grid, 4);
    ok = r.a_residual < config.tolerance("a_residual");
    add_rows(psi);
    report = {{"type", 1},
              {"gamma", complex_json(z)},
              {"a_residual", r.a_residual},
              {"zprime_residual_measured", r.z_residual},
              {"zprime_eigenvalue", complex_json(r.z_eigenvalue)},
              {"husimi_average", complex_json(husimi_average(z, p))},
              {"pass", ok}};
  } else {
    const Grid grid = Grid::make(config.grid_l.value_or(default_box(p, 0)), config.grid_n.value_or(2048));
    const Type3Result r = coherent_type3(z, p, grid);
    ok = r.norm_change < config.tolerance("norm_conservation");
    add_rows(r.state);
    report = {{"type", 3},
              {"zeta", complex_json(z)},
              {"norm_change", r.norm_change},
              {"b_residual_measured", r.b_residual},
              {"propagation_error", r.achieved_error},
              {"steps", r.steps},
              {"pass", ok}};
  }
  emit(config, "coherent", table, report, out, err);
  if (!ok) err << "coherent: residual above tolerance\n";
  return ok ? kOk : kToleranceBreach;
}

int cmd_complexifier_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const OscillatorParams& p = config.params;
  p.validate();
  CriterionResult r;
  r.id = 0;
  r.title = "complexifier";

  double zz = 0.0;
  double aa = 0.0;
  double zdot = 0.0;
  const classical::PhaseFunction Z = [&](double X, double P) { return classical::complexifier_Z(X, P, p); };
  const classical::PhaseFunction Zs = [&](double X, double P) { return std::conj(classical::complexifier_Z(X, P, p)); };
  const classical::PhaseFunction A = [&](double X, double P) { return classical::complexifier_A(X, P, p); };
  const classical::PhaseFunction As = [&](double X, double P) { return std::conj(classical::complexifier_A(X, P, p)); };
  for (int i = -4; i <= 4; ++i) {
    for (int k = -4; k <= 4; ++k) {
      const double X = 0.5 * i;
      const double P = 0.5 * k;
      const classical::PhaseState at{X, P, classical::Chart::XP, 0.0};
      zz = std::max(zz, std::abs(classical::poisson_bracket(Z, Zs, at) - classical::bracket_ZZstar(X, P, p)));
      aa = std::max(aa, std::abs(classical::poisson_bracket(A, As, at) - cplx(0.0, -1.0)));
      zdot = std::max(zdot, classical::zdot_check(X, P, p));
    }
  }
  r.check("classical_ZZstar", zz, config.tolerance("bracket"));
  r.check("classical_AAstar", aa, config.tolerance("bracket_A"));
  r.check("classical_zdot", zdot, config.tolerance("zdot"));

  const Grid g = Grid::make(config.grid_l.value_or(8.0), config.grid_n.value_or(256));
  const CommutatorCheck c = commutator_check_Z(p, g, 4);
  r.check("quantum_ZZdag_probe", c.probe_residual, config.tolerance("commutator"));
  r.report("quantum_ZZdag_matrix_block", c.matrix_residual);
  r.report("quantum_symmetric_product_probe", symmetric_product_check(p, g, 4).probe_residual);

  Table table{{"measurement", "value", "limit", "asserted", "pass"}, {}};
  for (const auto& m : r.measurements) {
    table.rows.push_back({m.name, fmt(m.value), m.asserted ? fmt(m.limit) : "", m.asserted ? "true" : "false",
                          m.pass ? "true" : "false"});
  }
  emit(config, "complexifier-check", table, config.format == Format::json ? json{{"pass", r.pass}} : json(), out,
       err);
  if (!r.pass) err << summary_line(r) << "\n";
  return r.pass ? kOk : kToleranceBreach;
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto results = run_acceptance(config);
  bool all = true;
  for (const auto& r : results) {
    err << summary_line(r) << "\n";
    all = all && r.pass;
  }
  if (config.format == Format::json) {
    write_json(out, to_json(results));
  } else {
    Table table{{"criterion", "measurement", "value", "limit", "asserted", "pass"}, {}};
    for (const auto& r : results) {
      for (const auto& m : r.measurements) {
        table.rows.push_back({std::to_string(r.id), m.name, fmt(m.value), m.asserted ? fmt(m.limit) : "",
                              m.asserted ? "true" : "false", m.pass ? "true" : "false"});
      }
      if (!r.note.empty()) table.rows.push_back({std::to_string(r.id), "error", "", "", "true", "false"});
    }
    table.write_csv(out);
  }
  return all ? kOk : kToleranceBreach;
}

int run_command(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (name == "spectrum") return cmd_spectrum(config, out, err);
    if (name == "wavefunction") return cmd_wavefunction(config, out, err);
    if (name == "classical") return cmd_classical(config, out, err);
    if (name == "coherent") return cmd_coherent(config, out, err);
    if (name == "complexifier-check") return cmd_complexifier_check(config, out, err);
    if (name == "validate") return cmd_validate(config, out, err);
    err << "unknown command '" << name << "'\n";
    return kConfigError;
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kConfigError;
  } catch (const OutOfSpectrumError& e) {
    err << "out of spectrum: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  }
}

}  // namespace nlho::cli
