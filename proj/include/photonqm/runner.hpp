#pragma once

#include <array>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "photonqm/field.hpp"
#include "photonqm/scenario.hpp"

namespace photonqm {

enum class ExitCode : int {
  Success = 0,
  ConfigError = 2,
  InvariantViolation = 3,
  StabilityError = 4,
};

/// Exit status for an exception escaping a command: configuration and
/// unsupported-combination errors map to 2, stability errors to 4 and every
/// other library error to 3.
ExitCode exit_code_for(const std::exception& e);

/// One line of the observables CSV. Quantities a solver does not define are
/// left empty.
struct ObservableRow {
  double t = 0.0;
  double norm = 0.0;
  std::optional<double> energy_electric;
  std::optional<double> energy_magnetic;
  std::array<double, 3> centroid{};
  std::optional<double> helicity_plus;
  std::optional<double> helicity_minus;
  /// |Q(t) - Q(0)| / |Q(0)| for the solver's conserved quantity: norm for the
  /// unitary propagators, the wave energy for `wave`, the integrator's discrete
  /// energy for `leapfrog`.
  double invariant_drift = 0.0;
};

inline constexpr const char* kObservablesHeader =
    "t,norm,energy_electric,energy_magnetic,centroid_x,centroid_y,centroid_z,helicity_plus,helicity_minus,"
    "invariant_drift";

/// 17 significant digits, shortest printf form.
std::string format_double(double x);
std::string observables_csv(const std::vector<ObservableRow>& rows);

struct RunOptions {
  std::string output_dir = ".";
  std::optional<std::uint64_t> seed;  // overrides the config's seed
  /// Progress and warnings go here unless null.
  std::ostream* log = nullptr;
};

struct RunResult {
  std::vector<ObservableRow> rows;
  std::string observables_path;
  std::vector<std::string> snapshot_paths;
  std::vector<std::string> warnings;
};

/// Builds the initial state, evolves it and writes the observables CSV and
/// any snapshots into options.output_dir (created if missing).
RunResult run(const ScenarioConfig& config, const RunOptions& options);

/// Named complex component fields on one grid, as stored in snapshot CSVs:
/// columns ix,iy,iz,x,y,z then <name>_re,<name>_im per component.
struct Snapshot {
  std::vector<std::string> names;
  std::vector<ComplexScalarField> components;
};

std::string snapshot_csv(const Snapshot& snapshot);
/// Reads a snapshot written for `grid`; checks indices and coordinates.
Snapshot read_snapshot(const std::string& path, const Grid& grid);

struct CrosscheckReport {
  double time;
  double hbar_omega;
  double discrepancy;
};

inline constexpr double kCrosscheckTolerance = 1e-10;

/// Loads an rs-maxwell snapshot, unpacks E and H and compares
/// Riemann-Silberstein evolution against coupled Dirac evolution over `t`
/// (default: the config's duration).
CrosscheckReport crosscheck_snapshot(const ScenarioConfig& config, const std::string& snapshot_path,
                                     std::optional<double> t = std::nullopt);

}  // namespace photonqm
