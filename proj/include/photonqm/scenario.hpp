#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "photonqm/dispersive.hpp"
#include "photonqm/grid.hpp"
#include "photonqm/medium.hpp"

namespace photonqm {

/// Version tag every scenario document must carry in its "schema" field.
inline constexpr std::string_view kScenarioSchema = "photonqm.scenario/1";

enum class ScenarioKind { PlaneWave, GaussianPacket, CavityStandingWave, CircularPolarizedPulse, DispersivePacket };
enum class SolverKind { Wave, Advection, DiracChiral, DiracCoupled, RsMaxwell, RsDispersive, Leapfrog };

std::string_view to_string(ScenarioKind kind);
std::string_view to_string(SolverKind kind);

struct GridSpec {
  int dims = 1;
  std::array<std::size_t, 3> points{1, 1, 256};
  std::array<double, 3> lengths{1.0, 1.0, 1.0};

  Grid build() const;
};

struct IndexModelSpec {
  std::string kind = "constant";  // constant | linear | tabulated
  double n0 = 1.0;
  double slope = 0.0;
  std::optional<double> reference;  // defaults to the carrier
  double carrier = 1.0;
  std::vector<double> omegas;
  std::vector<double> indices;

  IndexModel build() const;
};

struct MediumSpec {
  double epsilon = 1.0;
  double mu = 1.0;
  std::optional<IndexModelSpec> index_model;

  /// The medium seen by the solvers: (epsilon, mu), or the carrier medium of
  /// the index model when one is given.
  Medium build() const;
};

/// Initial-state parameters. Lengths are absolute; `mode` is the carrier
/// mode number along z, so the carrier k0 = 2 pi mode / L_z always lies on
/// the lattice.
struct SourceSpec {
  long mode = 8;
  double width = 0.05;
  std::optional<double> center;  // defaults to L_z / 2
  double amplitude = 1.0;
  int direction = 1;
  int helicity = 1;
  double noise = 0.0;
};

struct TimeSpec {
  double duration = 1.0;
  std::size_t steps = 100;
  std::size_t output_stride = 1;

  double step() const { return duration / static_cast<double>(steps); }
};

struct OutputSpec {
  std::string observables = "observables.csv";
  std::string snapshot_prefix = "snapshot";
  std::size_t snapshot_stride = 0;  // 0 disables snapshots
};

struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::PlaneWave;
  SolverKind solver = SolverKind::Wave;
  GridSpec grid;
  MediumSpec medium;
  SourceSpec source;
  TimeSpec time;
  std::optional<double> hbar_omega;
  std::uint64_t seed = 0;
  OutputSpec output;

  /// Carrier wavenumber 2 pi mode / L_z.
  double carrier_wavenumber() const;
  /// Photon energy used for field normalization: the configured value, the
  /// index model's carrier, or c k0 / n.
  double photon_energy() const;
};

/// Whether `solver` can evolve `scenario`; nullopt when supported, otherwise
/// the reason.
std::optional<std::string> unsupported_reason(ScenarioKind scenario, SolverKind solver, int dims, bool has_index_model);

/// Parses and validates a scenario document. Syntax errors report the line
/// and column; semantic errors name the offending field as a JSON pointer.
/// Throws ConfigError.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);

/// Description of every accepted field, as pretty-printed JSON.
std::string config_schema();

}  // namespace photonqm
