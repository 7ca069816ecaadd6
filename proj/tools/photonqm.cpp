#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "photonqm/errors.hpp"
#include "photonqm/runner.hpp"
#include "photonqm/scenario.hpp"
#include "photonqm/verify.hpp"

namespace {

using photonqm::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon wave mechanics on periodic grids: scalar, spinor and Maxwell solvers"};
  app.require_subcommand(1);

  std::string output_dir = ".";
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  app.add_option("--output-dir", output_dir, "Directory for observables and snapshots");
  app.add_option("--seed", seed, "Override the random seed");
  app.add_flag("--quiet", quiet, "Suppress progress and warnings");

  std::string config_path;
  auto* run = app.add_subcommand("run", "Evolve a scenario and write observables");
  run->add_option("config", config_path, "Scenario JSON file")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run an invariant check suite");
  verify->add_option("suite", suite, "algebra | operators | scalar | spinor | maxwell | equivalence | dispersion | all")
      ->required();

  auto* schema = app.add_subcommand("schema", "Print the scenario config schema");

  std::string snapshot_path;
  std::optional<double> time;
  auto* crosscheck = app.add_subcommand("crosscheck", "Compare Maxwell and Dirac evolution of an rs-maxwell snapshot");
  crosscheck->add_option("config", config_path, "Scenario JSON file the snapshot came from")->required();
  crosscheck->add_option("snapshot", snapshot_path, "Snapshot CSV")->required();
  crosscheck->add_option("--time", time, "Evolution time (default: the scenario duration)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitCode::ConfigError);
  }

  try {
    if (*schema) {
      std::cout << photonqm::config_schema();
      return 0;
    }

    if (*run) {
      const auto config = photonqm::load_config(config_path);
      photonqm::RunOptions options;
      options.output_dir = output_dir;
      options.seed = seed;
      options.log = quiet ? nullptr : &std::cerr;
      const auto result = photonqm::run(config, options);
      if (!quiet) {
        std::cout << "wrote " << result.rows.size() << " rows to " << result.observables_path << "\n";
        if (!result.snapshot_paths.empty()) {
          std::cout << "wrote " << result.snapshot_paths.size() << " snapshots\n";
        }
      }
      return 0;
    }

    if (*verify) {
      const auto results = photonqm::run_suite(suite, seed.value_or(0));
      const bool ok = photonqm::all_passed(results);
      if (!quiet || !ok) std::cout << photonqm::format_report(results);
      return ok ? 0 : code(ExitCode::InvariantViolation);
    }

    if (*crosscheck) {
      const auto config = photonqm::load_config(config_path);
      const auto report = photonqm::crosscheck_snapshot(config, snapshot_path, time);
      const bool ok = report.discrepancy <= photonqm::kCrosscheckTolerance;
      std::printf("t = %.17g  hbar_omega = %.17g  discrepancy = %.6e  (%s, tolerance %.0e)\n", report.time,
                  report.hbar_omega, report.discrepancy, ok ? "PASS" : "FAIL", photonqm::kCrosscheckTolerance);
      return ok ? 0 : code(ExitCode::InvariantViolation);
    }
  } catch (const std::exception& e) {
    const ExitCode c = photonqm::exit_code_for(e);
    const char* kind = c == ExitCode::ConfigError      ? "config error"
                       : c == ExitCode::StabilityError ? "stability error"
                                                       : "invariant violated";
    std::cerr << "photonqm: " << kind << ": " << e.what() << "\n";
    return code(c);
  }
  return 0;
}
