#include "nlho_cli/validate.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "nlho/classical.hpp"
#include "nlho/coherent.hpp"
#include "nlho/complexifier.hpp"
#include "nlho/eigenfunctions.hpp"
#include "nlho/errors.hpp"
#include "nlho/fock.hpp"
#include "nlho/grid.hpp"
#include "nlho/jacobi.hpp"
#include "nlho/spectrum.hpp"
#include "nlho_cli/output.hpp"

namespace nlho::cli {

void CriterionResult::check(const std::string& name, double value, double limit) {
  const bool ok = limit == 0.0 ? value == 0.0 : value < limit;
  measurements.push_back({name, value, limit, true, ok});
  pass = pass && ok;
}

void CriterionResult::report(const std::string& name, double value) {
  measurements.push_back({name, value, 0.0, false, true});
}

namespace {

using classical::cplx;

std::string shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

OscillatorParams natural(double lambda) {
  OscillatorParams p;
  p.lambda = lambda;
  return p;
}

void spectrum_oracle(CriterionResult& r, const RunConfig& cfg) {
  const OscillatorParams p = natural(0.1);
  const Grid grid = Grid::make(cfg.grid_l.value_or(80.0), cfg.grid_n_or_default());
  const auto t0 = std::chrono::steady_clock::now();
  const int count = spectrum::bound_state_count(p);
  const OracleSpectrum oracle = oracle_spectrum(p, grid, count, false);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double lower = 0.0;
  double top = 0.0;
  for (const auto& level : oracle.levels) {
    const double closed = spectrum::energy_level(level.n, p);
    const double rel = std::abs(level.energy - closed) / std::abs(closed);
    if (level.n + 1 < count) {
      lower = std::max(lower, rel);
    } else {
      top = rel;
    }
  }
  r.check("bound_levels_minus_10", std::abs(count - 10.0), 0.0);
  r.check("rel_err_n0_8", lower, cfg.tolerance("spectrum"));
  r.check("rel_err_n9", top, cfg.tolerance("spectrum_top"));
  r.check("oracle_seconds", seconds, cfg.tolerance("runtime"));
}

void sho_limit(CriterionResult& r, const RunConfig& cfg) {
  const OscillatorParams p = natural(1e-8);
  double worst = 0.0;
  for (int n = 0; n <= 5; ++n) worst = std::max(worst, std::abs(spectrum::energy_level(n, p) - (n + 0.5)));
  r.check("max_abs_dev", worst, cfg.tolerance("sho"));
}

void infinite_lambda(CriterionResult& r, const RunConfig&) {
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n) worst = std::max(worst, std::abs(spectrum::epsilon_formula(n, 0.0) + n * n));
  r.check("formula_dev_n0_8", worst, 0.0);
  r.check("checked_eps0", std::abs(spectrum::epsilon_level(0, 0.0)), 0.0);
  r.check("count_minus_1", std::abs(spectrum::bound_state_count(0.0) - 1.0), 0.0);
}

void frequency_law(CriterionResult& r, const RunConfig& cfg) {
  const double cases[][2] = {{0.1, 1.0}, {1.0, 1.0}, {0.1, 3.0}};
  double period_err = 0.0;
  double drift = 0.0;
  for (const auto& c : cases) {
    const OscillatorParams p = natural(c[0]);
    const double A = c[1];
    const double T = classical::orbit_period(A, p);
    const classical::PhaseState start = classical::to_chart({A, 0.0, classical::Chart::xp, 0.0},
                                                            classical::Chart::XP, p);
    classical::IntegratorOptions opt;
    opt.scheme = classical::Scheme::LEAPFROG_XP;
    const auto traj = classical::integrate_orbit(start, p, T / 1000.0, 100000, opt);
    period_err = std::max(period_err, std::abs(classical::measure_period(traj) / T - 1.0));
    drift = std::max(drift, traj.energy_drift);
  }
  r.check("max_period_rel_err", period_err, cfg.tolerance("period_law"));
  r.check("max_leapfrog_drift", drift, cfg.tolerance("drift"));
}

void eigenfunction_suite(CriterionResult& r, const RunConfig& cfg) {
  const OscillatorParams p = natural(0.1);
  std::vector<Eigenfunction> phis;
  for (int n = 0; n <= 5; ++n) phis.push_back(eigenfunction(n, p));

  double parity = 0.0;
  double node_defect = 0.0;
  for (const auto& phi : phis) {
    const double sign = phi.n % 2 == 0 ? 1.0 : -1.0;
    for (double X : {0.0, 0.37, 1.0, 2.5, 7.0, 19.0, 40.0}) {
      parity = std::max(parity, std::abs(phi.evaluate(-X) - sign * phi.evaluate(X)));
    }
    const double R = support_radius(phi);
    const int samples = 20001;
    double peak = 0.0;
    std::vector<double> vals(samples);
    for (int j = 0; j < samples; ++j) {
      vals[static_cast<std::size_t>(j)] = phi.evaluate(-R + 2.0 * R * j / (samples - 1));
      peak = std::max(peak, std::abs(vals[static_cast<std::size_t>(j)]));
    }
    int changes = 0;
    double last = 0.0;
    for (double v : vals) {
      if (std::abs(v) < 1e-12 * peak) continue;
      if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++changes;
      last = v;
    }
    node_defect = std::max(node_defect, std::abs(changes - static_cast<double>(phi.n)));
  }
  r.check("parity_defect", parity, 0.0);
  r.check("node_count_defect", node_defect, 0.0);

  double off = 0.0;
  double diag = 0.0;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double o = overlap(phis[i], phis[j]);
      if (i == j) {
        diag = std::max(diag, std::abs(o - 1.0));
      } else {
        off = std::max(off, std::abs(o));
      }
    }
  }
  r.check("max_offdiag_overlap", off, cfg.tolerance("orthonormality"));
  r.check("max_norm_defect", diag, cfg.tolerance("orthonormality"));

  const Grid grid = Grid::make(cfg.grid_l.value_or(80.0), cfg.grid_n_or_default());
  const OracleSpectrum oracle = oracle_spectrum(p, grid, 6, true);
  double dist = 0.0;
  for (const auto& phi : phis) {
    const auto& v = oracle.levels[static_cast<std::size_t>(phi.n)].vector;
    double acc = 0.0;
    for (int j = 0; j < grid.N; ++j) {
      const double d = phi.evaluate(grid.points[static_cast<std::size_t>(j)]) - v[j];
      acc += d * d * grid.h;
    }
    dist = std::max(dist, std::sqrt(acc));
  }
  r.check("max_L2_to_oracle", dist, cfg.tolerance("wavefunction"));
}

double hermite_explicit(int n, double y) {
  switch (n) {
    case 0: return 1.0;
    case 1: return 2.0 * y;
    case 2: return 4.0 * y * y - 2.0;
    case 3: return 8.0 * y * y * y - 12.0 * y;
    default: return 16.0 * y * y * y * y - 48.0 * y * y + 12.0;
  }
}

void jacobi_paths(CriterionResult& r, const RunConfig& cfg) {
  const OscillatorParams p = natural(0.1);
  const double a = 1.0 - 2.0 * derive(p).sigma;
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n) {
    for (double x : {-2.0, -0.3, 0.3, 0.7, 1.0, 2.5, 6.0}) {
      const double j = jacobi_real(n, a, std::sqrt(p.lambda) * x);
      const double rr = rodrigues_eval(n, a, x, p.lambda);
      worst = std::max(worst, std::abs(j - rr) / std::max(std::abs(j), 1e-300));
    }
  }
  r.check("max_rel_dual_path", worst, cfg.tolerance("jacobi"));
  double herm = 0.0;
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= 60; ++k) {
      const double y = -3.0 + 0.1 * k;
      const double h = hermite_explicit(n, y);
      herm = std::max(herm, std::abs(hermite_limit(n, 1e8, y) - h) / std::max(1.0, std::abs(h)));
    }
  }
  r.check("max_hermite_dev", herm, cfg.tolerance("hermite"));
}

void complexifier_identities(CriterionResult& r, const RunConfig& cfg) {
  const OscillatorParams p = natural(0.1);
  r.check("z_series_N40", std::abs(classical::complexifier_z_series(1.0, 0.5, p, 40) -
                                   classical::complexifier_z(1.0, 0.5, p)),
          cfg.tolerance("z_series"));

  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  double zz = 0.0;
  double aa = 0.0;
  double zdot = 0.0;
  const classical::PhaseFunction Z = [&](double X, double P) { return classical::complexifier_Z(X, P, p); };
  const classical::PhaseFunction Zs = [&](double X, double P) { return std::conj(classical::complexifier_Z(X, P, p)); };
  const classical::PhaseFunction A = [&](double X, double P) { return classical::complexifier_A(X, P, p); };
  const classical::PhaseFunction As = [&](double X, double P) { return std::conj(classical::complexifier_A(X, P, p)); };
  for (int k = 0; k < 100; ++k) {
    const double X = coord(rng);
    const double P = coord(rng);
    const classical::PhaseState at{X, P, classical::Chart::XP, 0.0};
    zz = std::max(zz, std::abs(classical::poisson_bracket(Z, Zs, at) - classical::bracket_ZZstar(X, P, p)));
    aa = std::max(aa, std::abs(classical::poisson_bracket(A, As, at) - cplx(0.0, -1.0)));
    zdot = std::max(zdot, classical::zdot_check(X, P, p));
  }
  r.check("max_ZZstar_dev", zz, cfg.tolerance("bracket"));
  r.check("max_AAstar_dev", aa, cfg.tolerance("bracket_A"));
  r.check("max_zdot_residual", zdot, cfg.tolerance("zdot"));
}

void quantum_complexifier(CriterionResult& r, const RunConfig& cfg) {
  const OscillatorParams p = natural(0.1);
  {
    const Grid g = Grid::make(10.0, 2048);
    const double b = std::sqrt(derive(p).b2);
    Eigen::VectorXcd psi(g.N);
    for (int j = 0; j < g.N; ++j) {
      const double X = g.points[static_cast<std::size_t>(j)];
      psi[j] = std::pow(M_PI * b * b, -0.25) * std::exp(-X * X / (2.0 * b * b));
    }
    const GridOperator A = quantum_A(p, g, 4);
    r.check("A_psi0_residual", (A.apply(psi)).norm() / psi.norm(), cfg.tolerance("a_residual"));
  }
  const OscillatorParams q = natural(0.05);
  {
    const Grid g = Grid::make(25.0, 128);
    const GridOperator Z = quantum_Z(q, g, 2, ZNormalization::SeriesConsistent);
    const GridOperator S = quantum_Z_series(q, g, 20);
    r.check("Z_vs_series_interior", interior_distance(Z, S), cfg.tolerance("qz_series"));
    const GridOperator Zp = quantum_Z(q, g, 2, ZNormalization::Printed);
    r.report("printed_over_series_prefactor", Zp.dense()(64, 64).real() / Z.dense()(64, 64).real());
  }
  {
    const Grid g = Grid::make(8.0, 256);
    const CommutatorCheck c = commutator_check_Z(q, g, 4);
    r.check("ZZdag_closed_form_probe", c.probe_residual, cfg.tolerance("commutator"));
    r.report("ZZdag_closed_form_matrix_block", c.matrix_residual);
    const CommutatorCheck lim = commutator_limit_check(natural(1e-6), g, 4);
    r.check("ZZdag_hbar_limit_probe", lim.probe_residual, cfg.tolerance("commutator_limit"));
    r.report("ZZdag_hbar_limit_matrix_block", lim.matrix_residual);
    r.report("symmetric_product_probe", symmetric_product_check(q, g, 4).probe_residual);
  }
}

void coherent_states(CriterionResult& r, const RunConfig& cfg) {
  const OscillatorParams p = natural(0.1);
  const Type1Report t1 = type1_report(cplx(0.7, 0.2), p, Grid::make(10.0, 2048), 4);
  r.check("type1_A_residual", t1.a_residual, cfg.tolerance("a_residual"));
  r.report("type1_Zprime_residual", t1.z_residual);
  const cplx z(0.7, 0.2);
  r.report("husimi_minus_f", std::abs(husimi_average(z, p) - zprime_eigenvalue(z, p)));

  const DeformedCoherent c2 = coherent_type2(cplx(0.8, 0.0), p, 21);
  r.check("type2_residual_over_bound", c2.residual / c2.bound, 2.0);
  r.report("type2_tail_mass", c2.tail_mass);
  const DeformedCoherent sho = coherent_type2(cplx(1.0, 0.0), natural(0.0), 40);
  double poisson = 0.0;
  double fact = 1.0;
  for (int n = 0; n < 40; ++n) {
    if (n > 0) fact *= n;
    poisson = std::max(poisson, std::abs(sho.coeffs[n] - std::exp(-0.5) / std::sqrt(fact)));
  }
  r.check("type2_sho_poisson_dev", poisson, cfg.tolerance("poisson"));

  const Grid g = Grid::make(15.0, 2048);
  r.check("B_phi0_residual", annihilation_residual(p, b_vacuum(p, g)), cfg.tolerance("b_residual"));
  const Eigen::VectorXd sym = bracket_symbol(p, g, 4);
  double symdev = 0.0;
  for (Eigen::Index i = 0; i < sym.size(); ++i) {
    const double X = g.points[static_cast<std::size_t>(g.interior_begin() + i)];
    const double c = std::cosh(std::sqrt(p.lambda) * X);
    symdev = std::max(symdev, std::abs(sym[i] - 1.0 / (c * c)));
  }
  r.check("BBdag_sech2_dev", symdev, cfg.tolerance("bracket_symbol"));
  const Type3Result t3 = coherent_type3(cplx(0.5, 0.3), p, g);
  r.check("type3_norm_change", t3.norm_change, cfg.tolerance("norm_conservation"));
  r.report("type3_B_eigen_residual", t3.b_residual);
}

void fock_identities(CriterionResult& r, const RunConfig& cfg) {
  const OscillatorParams p = natural(0.1);
  const int D = 12;
  const FockOperator H = hamiltonian_fock(p, D);
  const FockOperator C = commutator_bb(p, D);
  double energy = 0.0;
  for (int n = 0; n <= 9; ++n) {
    const double e = spectrum::energy_level(n, p);
    energy = std::max(energy, std::abs(H.entries(n, n) - e) / e);
  }
  double comm = 0.0;
  for (int n = 0; n + 1 < D; ++n) {
    const double c = spectrum::commutator_closed(n, p);
    comm = std::max(comm, std::abs(C.entries(n, n) - c) / std::abs(c));
  }
  r.check("H_diag_vs_energy", energy, cfg.tolerance("fock"));
  r.check("commutator_dual_path", comm, cfg.tolerance("fock"));
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(CriterionResult&, const RunConfig&)> run;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const RunConfig& config) {
  const std::vector<Criterion> criteria = {
      {1, "spectrum oracle equivalence", spectrum_oracle},
      {2, "SHO limit", sho_limit},
      {3, "v = 0 spectrum", infinite_lambda},
      {4, "classical frequency law", frequency_law},
      {5, "eigenfunction suite", eigenfunction_suite},
      {6, "Jacobi/Rodrigues and Hermite limit", jacobi_paths},
      {7, "classical complexifier identities", complexifier_identities},
      {8, "quantum complexifier", quantum_complexifier},
      {9, "coherent states", coherent_states},
      {10, "Fock identities", fock_identities},
  };
  std::vector<CriterionResult> out;
  for (const auto& c : criteria) {
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(r, config);
    } catch (const std::exception& e) {
      r.pass = false;
      r.numeric_failure = true;
      r.note = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " " << r.title << ":";
  bool first = true;
  for (const auto& m : r.measurements) {
    os << (first ? " " : ", ") << m.name << "=" << shortest(m.value);
    if (m.asserted) {
      os << (m.limit == 0.0 ? " (== 0)" : " (< " + shortest(m.limit) + ")");
      if (!m.pass) os << " !";
    } else {
      os << " (measured)";
    }
    first = false;
  }
  if (!r.note.empty()) os << (first ? " " : "; ") << "error: " << r.note;
  return os.str();
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& m : r.measurements) {
      nlohmann::json jm = {{"name", m.name}, {"value", number(m.value)}, {"asserted", m.asserted}};
      if (m.asserted) {
        jm["limit"] = m.limit;
        jm["pass"] = m.pass;
      }
      ms.push_back(std::move(jm));
    }
    nlohmann::json jr = {{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"measurements", ms}};
    if (!r.note.empty()) jr["error"] = r.note;
    arr.push_back(std::move(jr));
    all = all && r.pass;
  }
  return {{"pass", all}, {"criteria", arr}};
}

}  // namespace nlho::cli
