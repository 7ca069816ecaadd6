#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "photonqm/runner.hpp"
#include "photonqm/scenario.hpp"
#include "photonqm/verify.hpp"

using namespace photonqm;
namespace fs = std::filesystem;

namespace {

std::string config_path(const std::string& name) { return std::string(PHOTONQM_CONFIG_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("photonqm_unit_" + name);
  fs::remove_all(dir);
  return dir;
}

const char* kMinimal = R"({
  "schema": "photonqm.scenario/1",
  "scenario": "gaussian-packet",
  "solver": "wave",
  "grid": {"dims": 1, "points": 128, "length": 1.0},
  "source": {"mode": 6, "width": 0.08},
  "time": {"duration": 0.2, "steps": 10, "output_stride": 5}
})";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

std::string config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal config parses with defaults") {
  const auto c = parse_config(kMinimal);
  CHECK(c.scenario == ScenarioKind::GaussianPacket);
  CHECK(c.solver == SolverKind::Wave);
  CHECK(c.grid.build() == Grid::line(128, 1.0));
  CHECK(c.medium.build() == Medium::vacuum());
  CHECK(c.time.step() == doctest::Approx(0.02));
  CHECK(c.carrier_wavenumber() == doctest::Approx(12.0 * std::numbers::pi));
  CHECK(c.photon_energy() == doctest::Approx(12.0 * std::numbers::pi));
  CHECK(c.output.observables == "observables.csv");
}

TEST_CASE("every shipped config loads") {
  for (const char* name : {"gaussian_packet_wave.json", "plane_wave_advection.json", "circular_pulse_rs.json",
                           "dispersive_packet.json", "cavity_leapfrog.json", "spinor_packet_coupled.json"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load_config(config_path(name)));
  }
}

TEST_CASE("config errors name the offending field") {
  CHECK(config_error(replace(kMinimal, "\"width\"", "\"widht\"")).find("/source/widht") != std::string::npos);
  CHECK(config_error(replace(kMinimal, "photonqm.scenario/1", "photonqm.scenario/9")).find("/schema") !=
        std::string::npos);
  CHECK(config_error(replace(kMinimal, "\"wave\"", "\"warp\"")).find("/solver") != std::string::npos);
  CHECK(config_error(replace(kMinimal, "\"steps\": 10", "\"steps\": -1")).find("/time/steps") != std::string::npos);
  CHECK(config_error(replace(kMinimal, "\"mode\": 6", "\"mode\": 64")).find("/source/mode") != std::string::npos);
  CHECK(config_error(replace(kMinimal, "}\n}", "}\n")).find("line") != std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("unsupported combinations are rejected") {
  CHECK(unsupported_reason(ScenarioKind::GaussianPacket, SolverKind::RsMaxwell, 1, false).has_value());
  CHECK(unsupported_reason(ScenarioKind::CircularPolarizedPulse, SolverKind::Wave, 3, false).has_value());
  CHECK(unsupported_reason(ScenarioKind::DispersivePacket, SolverKind::Wave, 1, false).has_value());
  CHECK(unsupported_reason(ScenarioKind::CavityStandingWave, SolverKind::Advection, 1, false).has_value());
  CHECK_FALSE(unsupported_reason(ScenarioKind::GaussianPacket, SolverKind::DiracChiral, 1, false).has_value());
  CHECK_FALSE(unsupported_reason(ScenarioKind::CircularPolarizedPulse, SolverKind::RsMaxwell, 3, false).has_value());
  CHECK_THROWS_AS(parse_config(replace(kMinimal, "\"wave\"", "\"rs-maxwell\"")), ConfigError);
}

TEST_CASE("schema text is valid and lists every solver") {
  const auto s = config_schema();
  for (const char* solver : {"wave", "advection", "dirac-chiral", "dirac-coupled", "rs-maxwell", "rs-dispersive",
                             "leapfrog"}) {
    CHECK(s.find(solver) != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ConfigError("x")) == ExitCode::ConfigError);
  CHECK(exit_code_for(UnsupportedError("x")) == ExitCode::ConfigError);
  CHECK(exit_code_for(ValidationError("x")) == ExitCode::InvariantViolation);
  CHECK(exit_code_for(DomainError("x")) == ExitCode::InvariantViolation);
  CHECK(exit_code_for(StabilityError("x")) == ExitCode::StabilityError);
}

TEST_CASE("observables CSV format") {
  ObservableRow r;
  r.t = 0.1;
  r.norm = 1.0;
  r.energy_electric = 0.25;
  r.centroid = {0.0, 0.0, 0.5};
  const auto csv = observables_csv({r});
  CHECK(csv.substr(0, csv.find('\n')) == kObservablesHeader);
  CHECK(csv.find("0.10000000000000001,1,0.25,,0,0,0.5,,,0\n") != std::string::npos);
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("run writes observables and conserves the norm") {
  const auto dir = scratch("run");
  const auto result = run(parse_config(kMinimal), {dir.string(), std::nullopt, nullptr});
  CHECK(result.rows.size() == 3);
  CHECK(fs::exists(result.observables_path));
  CHECK(result.rows.back().t == doctest::Approx(0.2));
  for (const auto& row : result.rows) CHECK(row.invariant_drift < 1e-12);
  CHECK(result.rows.back().centroid[2] == doctest::Approx(0.7).epsilon(1e-6));
  fs::remove_all(dir);
}

TEST_CASE("runs are deterministic under a fixed seed") {
  const auto config = load_config(config_path("spinor_packet_coupled.json"));
  const auto a = scratch("det_a"), b = scratch("det_b"), c = scratch("det_c");
  run(config, {a.string(), 5, nullptr});
  run(config, {b.string(), 5, nullptr});
  run(config, {c.string(), 6, nullptr});
  const auto ta = slurp((a / "observables.csv").string());
  CHECK(ta == slurp((b / "observables.csv").string()));
  CHECK(ta != slurp((c / "observables.csv").string()));
  for (const auto& d : {a, b, c}) fs::remove_all(d);
}

TEST_CASE("RS snapshots round trip and crosscheck against Dirac evolution") {
  const auto config = load_config(config_path("circular_pulse_rs.json"));
  const auto dir = scratch("snap");
  const auto result = run(config, {dir.string(), std::nullopt, nullptr});
  REQUIRE(result.snapshot_paths.size() == 2);
  const auto snap = read_snapshot(result.snapshot_paths.back(), config.grid.build());
  CHECK(snap.names.size() == 3);  // complex RS components
  const auto report = crosscheck_snapshot(config, result.snapshot_paths.back());
  CHECK(report.discrepancy < kCrosscheckTolerance);
  CHECK_THROWS(read_snapshot(result.snapshot_paths.back(), Grid::box(4, 1.0)));
  fs::remove_all(dir);
}

TEST_CASE("band-limit violations abort a run") {
  const auto text = replace(replace(kMinimal, "\"points\": 128", "\"points\": 64"), "\"mode\": 6", "\"mode\": 30");
  const auto dir = scratch("band");
  try {
    run(parse_config(text), {dir.string(), std::nullopt, nullptr});
    FAIL("expected a band-limit violation");
  } catch (const std::exception& e) {
    CHECK(exit_code_for(e) == ExitCode::InvariantViolation);
  }
  fs::remove_all(dir);
}

TEST_CASE("verify suites") {
  CHECK(suite_names().size() == 8);
  CHECK_THROWS_AS(run_suite("nonsense"), ConfigError);
  const auto r = run_suite("algebra", 3);
  CHECK_FALSE(r.empty());
  CHECK(all_passed(r));
  CHECK(format_report(r).find("PASS") != std::string::npos);
}
