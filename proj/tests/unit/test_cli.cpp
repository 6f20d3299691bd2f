#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "nlho_cli/commands.hpp"
#include "nlho_cli/config.hpp"
#include "nlho_cli/output.hpp"

using namespace nlho::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::string& command, const RunConfig& config) {
  std::ostringstream out, err;
  const int code = run_command(command, config, out, err);
  return {code, out.str(), err.str()};
}

std::pair<int, int> error_position(const std::string& text) {
  try {
    parse_config(text, "cfg");
  } catch (const ConfigError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("flat config") {
  const RunConfig c = parse_config("# comment\nlambda = 0.2\n  grid_n=500  # trailing\ntol.spectrum = 1e-7\nformat = json\n", "cfg");
  CHECK(c.params.lambda == 0.2);
  CHECK(c.grid_n == 500);
  CHECK(c.tolerance("spectrum") == 1e-7);
  CHECK(c.tolerance("wavefunction") == 1e-4);
  CHECK(c.format == Format::json);
}

TEST_CASE("JSON config") {
  const RunConfig c = parse_config("{\"mass\": 2, \"grid_l\": 30.5, \"tol\": {\"period\": 1e-3}, \"label\": \"1-2i\"}", "cfg");
  CHECK(c.params.m == 2.0);
  CHECK(c.grid_l == 30.5);
  CHECK(c.tolerance("period") == 1e-3);
  CHECK(c.label == "1-2i");
}

TEST_CASE("config errors carry line and column") {
  CHECK(error_position("lambda = 0.1\nomega = fast\n") == std::pair{2, 9});
  CHECK(error_position("lambda = 0.1\n\n  colour = red\n") == std::pair{3, 3});
  CHECK(error_position("grid_n 12\n") == std::pair{1, 1});
  CHECK(error_position("tol.nothing = 1\n") == std::pair{1, 1});
  CHECK(error_position("{\n  \"lambda\": 0.1,\n  \"speed\": 3\n}") == std::pair{3, 3});
  CHECK(error_position("{\n  \"lambda\": 0.1,\n  \"mass\": \n}").first == 4);
  try {
    parse_config("omega = -\n", "run.cfg");
    FAIL("expected an error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).rfind("run.cfg:1:9:", 0) == 0);
  }
}

TEST_CASE("complex labels") {
  double re = 0, im = 0;
  CHECK(parse_complex("0.7+0.2i", re, im));
  CHECK((re == 0.7 && im == 0.2));
  CHECK(parse_complex("-1e-3-2i", re, im));
  CHECK((re == -1e-3 && im == -2.0));
  CHECK(parse_complex("-i", re, im));
  CHECK((re == 0.0 && im == -1.0));
  CHECK(parse_complex("(3,4)", re, im));
  CHECK((re == 3.0 && im == 4.0));
  CHECK(parse_complex("2.5", re, im));
  CHECK((re == 2.5 && im == 0.0));
  CHECK_FALSE(parse_complex("1+2k", re, im));
  CHECK_FALSE(parse_complex("", re, im));
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) {
    CHECK(std::stod(fmt(v)) == v);
  }
  CHECK(fmt(std::nan("")).empty());
  Table t{{"a", "b"}, {{"1", ""}, {"x", "2.5"}}};
  std::ostringstream os;
  t.write_csv(os);
  CHECK(os.str() == "a,b\n1,\nx,2.5\n");
  const auto j = t.to_json();
  CHECK(j[0]["b"].is_null());
  CHECK(j[1]["a"] == "x");
  CHECK(j[1]["b"] == 2.5);
}

TEST_CASE("spectrum command") {
  const Run r = run("spectrum", {});
  CHECK(r.code == kOk);
  std::istringstream lines(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 10);
  CHECK(r.out.rfind("n,energy,oracle_energy,rel_gap,f\n", 0) == 0);
  CHECK(run("spectrum", {}).out == r.out);

  RunConfig small;
  small.params.lambda = 1e-9;
  small.levels = 3;
  const Run s = run("spectrum", small);
  CHECK(s.code == kOk);
  CHECK(s.out.find("\n0,0.49999999") != std::string::npos);

  RunConfig strict;
  strict.grid_n = 200;
  CHECK(run("spectrum", strict).code == kToleranceBreach);
}

TEST_CASE("wavefunction command") {
  RunConfig c;
  c.n = 3;
  c.format = Format::json;
  const Run r = run("wavefunction", c);
  CHECK(r.code == kOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["report"]["l2_distance_to_oracle"].get<double>() < 1e-4);
  int changes = 0;
  double last = 0.0;
  for (const auto& row : doc["rows"]) {
    const double v = row["phi"].get<double>();
    if (std::abs(v) < 1e-8) continue;
    if (last != 0.0 && (v > 0) != (last > 0)) ++changes;
    last = v;
  }
  CHECK(changes == 3);
  CHECK(run("wavefunction", c).out == r.out);
  c.n = 10;
  CHECK(run("wavefunction", c).code == kConfigError);
}

TEST_CASE("classical command") {
  RunConfig c;
  c.periods = 3;
  const Run r = run("classical", c);
  CHECK(r.code == kOk);
  const auto summary = nlohmann::json::parse(r.err);
  CHECK(summary["predicted_period"].get<double>() == doctest::Approx(2.0 * 3.14159265358979 * std::sqrt(1.1)));
  CHECK(summary["energy_drift"].get<double>() < 1e-9);
  c.params.lambda = 0.0;
  CHECK(nlohmann::json::parse(run("classical", c).err)["measured_period"].get<double>() ==
        doctest::Approx(2.0 * 3.14159265358979).epsilon(1e-9));
}

TEST_CASE("coherent command") {
  RunConfig c;
  c.type = 2;
  c.label = "0";
  c.levels = 8;
  const Run vac = run("coherent", c);
  CHECK(vac.code == kOk);
  CHECK(vac.out.rfind("n,re,im,prob\n0,1,0,1\n1,0,0,0\n", 0) == 0);
  c.type = 1;
  c.label = "0.7+0.2i";
  const Run t1 = run("coherent", c);
  CHECK(t1.code == kOk);
  CHECK(nlohmann::json::parse(t1.err)["a_residual"].get<double>() < 1e-6);
  c.params.lambda = 0.0;
  c.type = 3;
  CHECK(run("coherent", c).code == kConfigError);
}
