#include "photonqm/runner.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "photonqm/dispersive.hpp"
#include "photonqm/equivalence.hpp"
#include "photonqm/random_fields.hpp"
#include "photonqm/scalar_qm.hpp"
#include "photonqm/spectral.hpp"
#include "photonqm/spinor_dirac.hpp"
#include "photonqm/vector_maxwell.hpp"

namespace photonqm {

namespace {

namespace fs = std::filesystem;

constexpr Complex kI{0.0, 1.0};

double sq(double x) { return x * x; }

// ---- initial profiles along z -------------------------------------------

struct Profile {
  double k0;
  double center;
  double width;
  double length;

  // Gaussian envelope summed over enough periodic images to be smooth
  // across the boundary.
  double envelope(double z) const {
    const int images = static_cast<int>(std::ceil(10.0 * width / length)) + 1;
    double g = 0.0;
    for (int m = -images; m <= images; ++m) {
      const double d = z - center - m * length;
      g += std::exp(-d * d / (2.0 * width * width));
    }
    return g;
  }
};

Profile profile_for(const ScenarioConfig& c) {
  return {c.carrier_wavenumber(), c.source.center.value_or(c.grid.lengths[2] / 2.0), c.source.width,
          c.grid.lengths[2]};
}

bool has_envelope(ScenarioKind k) {
  return k == ScenarioKind::GaussianPacket || k == ScenarioKind::CircularPolarizedPulse ||
         k == ScenarioKind::DispersivePacket;
}

// Complex scalar profile travelling along direction d.
ComplexScalarField scalar_profile(const ScenarioConfig& c, const Grid& g) {
  const Profile p = profile_for(c);
  const double a = c.source.amplitude;
  const int d = c.source.direction;
  switch (c.scenario) {
    case ScenarioKind::PlaneWave:
      return ComplexScalarField::sample(g, [&](double, double, double z) { return a * std::polar(1.0, d * p.k0 * z); });
    case ScenarioKind::CavityStandingWave:
      return ComplexScalarField::sample(g, [&](double, double, double z) { return Complex(a * std::cos(p.k0 * z)); });
    default:
      return ComplexScalarField::sample(g, [&](double, double, double z) {
        return a * p.envelope(z) * std::polar(1.0, d * p.k0 * (z - p.center));
      });
  }
}

// Adds a seeded band-limited perturbation with L2 norm noise * ||f||, or
// noise * ||reference|| when f itself vanishes.
ComplexScalarField with_noise(ComplexScalarField f, double noise, double reference, std::mt19937_64& rng) {
  if (noise > 0.0) {
    const ComplexScalarField r = random_band_limited(f.grid(), rng);
    f += Complex(noise * reference / l2_norm(r)) * r;
  }
  return f;
}

// ---- simulations --------------------------------------------------------

class Simulation {
 public:
  virtual ~Simulation() = default;
  virtual void advance(double dt) = 0;
  /// Row without t and invariant_drift.
  virtual ObservableRow observe() const = 0;
  virtual double invariant() const = 0;
  virtual Snapshot snapshot() const = 0;
};

class ScalarSimulation final : public Simulation {
 public:
  ScalarSimulation(ScalarPhotonState state, bool one_way, int direction, double speed)
      : state_(std::move(state)), one_way_(one_way), direction_(direction), speed_(speed) {}

  void advance(double dt) override {
    if (one_way_) {
      // evolve_advection takes the medium; encode the configured speed in it.
      auto psi = evolve_advection(state_.psi(), dt, direction_, Medium::dielectric(kSpeedOfLight / speed_));
      state_ = ScalarPhotonState(std::move(psi), ComplexScalarField::zeros(state_.grid()), state_.medium());
    } else {
      state_ = evolve_wave_with_speed(state_, dt, speed_);
    }
  }

  ObservableRow observe() const override {
    ObservableRow row;
    row.norm = l2_norm(state_.psi());
    row.centroid = centroid(state_.psi());
    return row;
  }

  double invariant() const override {
    return one_way_ ? l2_norm(state_.psi()) : wave_energy(state_, speed_);
  }

  Snapshot snapshot() const override { return {{"psi"}, {state_.psi()}}; }

 private:
  ScalarPhotonState state_;
  bool one_way_;
  int direction_;
  double speed_;
};

RealScalarField spinor_density(const Spinor4Field& s) {
  std::vector<double> d(s.grid().size());
  for (int c = 1; c <= 4; ++c) {
    const auto& f = s.component(c);
    for (std::size_t n = 0; n < d.size(); ++n) d[n] += std::norm(f[n]);
  }
  return RealScalarField(s.grid(), std::move(d));
}

class SpinorSimulation final : public Simulation {
 public:
  SpinorSimulation(Spinor4Field state, bool coupled) : state_(std::move(state)), coupled_(coupled) {}

  void advance(double dt) override { state_ = coupled_ ? evolve_coupled(state_, dt) : evolve_chiral(state_, dt); }

  ObservableRow observe() const override {
    ObservableRow row;
    row.norm = l2_norm(state_);
    row.centroid = density_centroid(spinor_density(state_));
    const double total = sq(row.norm);
    if (total > 0.0) {
      auto weight = [&](int sign) {
        return sq(l2_norm(helicity_project(state_.phi(), sign).projected)) +
               sq(l2_norm(helicity_project(state_.chi(), sign).projected));
      };
      row.helicity_plus = weight(+1) / total;
      row.helicity_minus = weight(-1) / total;
    }
    return row;
  }

  double invariant() const override { return l2_norm(state_); }

  Snapshot snapshot() const override {
    return {{"phi1", "phi2", "chi1", "chi2"},
            {state_.component(1), state_.component(2), state_.component(3), state_.component(4)}};
  }

 private:
  Spinor4Field state_;
  bool coupled_;
};

RealScalarField rs_density(const VectorField3& v) {
  std::vector<double> d(v.grid().size());
  for (int a = 0; a < 3; ++a) {
    for (std::size_t n = 0; n < d.size(); ++n) d[n] += std::norm(v[a][n]);
  }
  return RealScalarField(v.grid(), std::move(d));
}

void fill_vector_observables(ObservableRow& row, const VectorField3& psi, const EMField& em) {
  row.norm = l2_norm(psi);
  const EnergySplit e = em_energy(em);
  row.energy_electric = e.electric;
  row.energy_magnetic = e.magnetic;
  row.centroid = density_centroid(rs_density(psi));
  if (row.norm > 0.0) {
    const HelicityFractions h = helicity_fractions(psi);
    row.helicity_plus = h.positive;
    row.helicity_minus = h.negative;
  }
}

class RSSimulation final : public Simulation {
 public:
  RSSimulation(RSField state, std::optional<IndexModel> model) : state_(std::move(state)), model_(std::move(model)) {}

  void advance(double dt) override {
    state_ = model_ ? evolve_rs_dispersive(state_, dt, *model_) : evolve_rs(state_, dt);
  }

  ObservableRow observe() const override {
    ObservableRow row;
    fill_vector_observables(row, state_.psi(), model_ ? rs_unpack_dispersive(state_, *model_) : rs_unpack(state_));
    return row;
  }

  double invariant() const override { return l2_norm(state_.psi()); }

  Snapshot snapshot() const override {
    const auto& p = state_.psi();
    return {{"psi_x", "psi_y", "psi_z"}, {p[0], p[1], p[2]}};
  }

 private:
  RSField state_;
  std::optional<IndexModel> model_;
};

class LeapfrogSimulation final : public Simulation {
 public:
  LeapfrogSimulation(EMField state, double dt) : state_(std::move(state)), dt_(dt) {
    const RSField rs = rs_pack(state_);
    require_solenoidal(rs.psi(), "initial electromagnetic field");
    require_band_limited(rs.psi(), "initial electromagnetic field");
  }

  void advance(double dt) override { state_ = maxwell_leapfrog_step(state_, dt); }

  ObservableRow observe() const override {
    ObservableRow row;
    fill_vector_observables(row, rs_pack(state_).psi(), state_);
    return row;
  }

  double invariant() const override { return leapfrog_energy(state_, dt_); }

  Snapshot snapshot() const override {
    const auto& e = state_.electric();
    const auto& h = state_.magnetic();
    return {{"E_x", "E_y", "E_z", "H_x", "H_y", "H_z"},
            {to_complex(e[0]), to_complex(e[1]), to_complex(e[2]), to_complex(h[0]), to_complex(h[1]),
             to_complex(h[2])}};
  }

 private:
  EMField state_;
  double dt_;
};

// ---- initial states -----------------------------------------------------

ScalarPhotonState scalar_state(const ScenarioConfig& c, const Grid& g, double speed, std::mt19937_64& rng) {
  const Medium medium = c.medium.build();
  ComplexScalarField profile = scalar_profile(c, g);
  const double reference = l2_norm(profile);
  ComplexScalarField psi = with_noise(std::move(profile), c.source.noise, reference, rng);
  ComplexScalarField psi_dot = c.scenario == ScenarioKind::CavityStandingWave
                                   ? ComplexScalarField::zeros(g)
                                   : one_way_time_derivative(psi, speed, c.source.direction);
  return ScalarPhotonState(std::move(psi), std::move(psi_dot), medium).normalized();
}

// Real transverse fields (E, H) with H = d * impedance_factor * z x E, or
// H = 0 for the standing wave.
EMField em_state(const ScenarioConfig& c, const Grid& g, const Medium& medium, double magnetic_factor,
                 std::mt19937_64& rng) {
  const Profile p = profile_for(c);
  const double a = c.source.amplitude;
  const int h = c.source.helicity;
  std::vector<double> ex(g.size()), ey(g.size()), zero(g.size(), 0.0);
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double z = g.position(n)[2];
    switch (c.scenario) {
      case ScenarioKind::PlaneWave:
      case ScenarioKind::CavityStandingWave:
        ex[n] = a * std::cos(p.k0 * z);
        break;
      case ScenarioKind::CircularPolarizedPulse: {
        const double phase = p.k0 * (z - p.center);
        const double env = a * p.envelope(z);
        ex[n] = env * std::cos(phase);
        ey[n] = -h * env * std::sin(phase);
        break;
      }
      default:
        ex[n] = a * p.envelope(z) * std::cos(p.k0 * (z - p.center));
    }
  }
  RealScalarField fx(g, ex), fy(g, ey), fz(g, zero);
  RealVectorField3 e(fx, fy, fz);
  RealVectorField3 hfield = RealVectorField3(RealScalarField(g, zero), RealScalarField(g, zero), RealScalarField(g, zero));
  if (c.scenario != ScenarioKind::CavityStandingWave) {
    const double s = c.source.direction * magnetic_factor;
    hfield = RealVectorField3((-s) * fy, s * fx, RealScalarField(g, zero));
  }
  if (c.source.noise > 0.0) {
    const double reference = l2_norm(e);
    auto noise = [&] {
      const VectorField3 v = random_solenoidal(g, rng);
      RealVectorField3 r(real_part(v[0]), real_part(v[1]), real_part(v[2]));
      return (c.source.noise * reference / l2_norm(r)) * std::move(r);
    };
    e += noise();
    hfield += noise();
  }
  // One common factor keeps E and H consistent: (eps / 8pi) int |E|^2 = hw.
  const double electric = medium.epsilon / (8.0 * std::numbers::pi) * sq(l2_norm(e));
  if (!(electric > 0.0)) throw ValidationError("initial electric field carries no energy; cannot normalize");
  const double scale = std::sqrt(c.photon_energy() / electric);
  return EMField(scale * std::move(e), scale * std::move(hfield), medium);
}

// A helicity-h mode along k^ has sigma.k^ eigenvalue h. Under the chiral
// Hamiltonian it moves along k^ when it sits in phi (h = +1) or chi (h = -1);
// under the coupled one when chi = h phi.
Spinor4Field spinor_state(const ScenarioConfig& c, const Grid& g, const Medium& medium, bool coupled,
                          std::mt19937_64& rng) {
  if (c.scenario == ScenarioKind::CircularPolarizedPulse) {
    const EMField em = em_state(c, g, medium, std::sqrt(medium.epsilon / medium.mu), rng);
    return fields_to_spinors(em, c.photon_energy()).to_spinor4();
  }
  const auto zero = ComplexScalarField::zeros(g);
  const int h = c.source.helicity;
  // sigma_z = h * sign(k_z) selects the component.
  std::array<ComplexScalarField, 2> u{zero, zero};
  if (c.scenario == ScenarioKind::CavityStandingWave) {
    const double k0 = c.carrier_wavenumber();
    u[h > 0 ? 0 : 1] += ComplexScalarField::sample(g, [&](double, double, double z) { return std::polar(1.0, k0 * z); });
    u[h > 0 ? 1 : 0] += ComplexScalarField::sample(g, [&](double, double, double z) { return std::polar(1.0, -k0 * z); });
  } else {
    u[h * c.source.direction > 0 ? 0 : 1] = scalar_profile(c, g);
  }
  std::array<ComplexScalarField, 4> comp{zero, zero, zero, zero};
  if (coupled) {
    comp = {u[0], u[1], Complex(h) * u[0], Complex(h) * u[1]};
  } else {
    comp[h > 0 ? 0 : 2] = u[0];
    comp[h > 0 ? 1 : 3] = u[1];
  }
  double reference = 0.0;
  for (const auto& f : comp) reference = std::hypot(reference, l2_norm(f));
  for (auto& f : comp) f = with_noise(std::move(f), c.source.noise, reference / 2.0, rng);
  const Spinor4Field raw(TwoSpinorField(comp[0], comp[1]), TwoSpinorField(comp[2], comp[3]), medium);
  const double norm = l2_norm(raw);
  if (!(norm > 0.0)) throw ValidationError("initial spinor vanishes; cannot normalize");
  const Complex s(1.0 / norm);
  return Spinor4Field(s * raw.phi(), s * raw.chi(), medium);
}

std::unique_ptr<Simulation> build(const ScenarioConfig& c, std::uint64_t seed, std::vector<std::string>& warnings) {
  const Grid g = c.grid.build();
  std::mt19937_64 rng(seed);
  const Medium medium = c.medium.build();
  const std::optional<IndexModel> model =
      c.medium.index_model ? std::optional<IndexModel>(c.medium.index_model->build()) : std::nullopt;

  switch (c.solver) {
    case SolverKind::Wave:
    case SolverKind::Advection: {
      const double speed = model ? kSpeedOfLight / group_index(*model, model->carrier()) : medium.phase_speed();
      ScalarPhotonState state = scalar_state(c, g, speed, rng);
      if (has_envelope(c.scenario)) {
        if (auto w = localization_warning(state.psi())) warnings.push_back(*w);
      }
      if (model) {
        if (auto w = bandwidth_warning(state.psi())) warnings.push_back(*w);
      }
      return std::make_unique<ScalarSimulation>(std::move(state), c.solver == SolverKind::Advection,
                                                c.source.direction, speed);
    }
    case SolverKind::DiracChiral:
    case SolverKind::DiracCoupled: {
      Spinor4Field state = spinor_state(c, g, medium, c.solver == SolverKind::DiracCoupled, rng);
      return std::make_unique<SpinorSimulation>(std::move(state), c.solver == SolverKind::DiracCoupled);
    }
    case SolverKind::RsMaxwell: {
      const EMField em = em_state(c, g, medium, std::sqrt(medium.epsilon / medium.mu), rng);
      return std::make_unique<RSSimulation>(rs_pack(em), std::nullopt);
    }
    case SolverKind::RsDispersive: {
      const double ng = group_index(*model, model->carrier());
      const EMField em = em_state(c, g, medium, ng, rng);
      RSField rs = rs_pack_dispersive(em, *model);
      if (has_envelope(c.scenario)) {
        if (auto w = bandwidth_warning(rs.psi()[0])) warnings.push_back(*w);
      }
      return std::make_unique<RSSimulation>(std::move(rs), model);
    }
    case SolverKind::Leapfrog: {
      const EMField em = em_state(c, g, medium, std::sqrt(medium.epsilon / medium.mu), rng);
      return std::make_unique<LeapfrogSimulation>(em, c.time.step());
    }
  }
  throw ConfigError("unknown solver");
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write output file " + path.string());
  out << content;
  if (!out) throw ConfigError("failed writing output file " + path.string());
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

ExitCode exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const UnsupportedError*>(&e)) return ExitCode::ConfigError;
  if (dynamic_cast<const StabilityError*>(&e)) return ExitCode::StabilityError;
  return ExitCode::InvariantViolation;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string observables_csv(const std::vector<ObservableRow>& rows) {
  std::string out = kObservablesHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += format_double(r.t) + ',' + format_double(r.norm) + ',' + optional_cell(r.energy_electric) + ',' +
           optional_cell(r.energy_magnetic) + ',' + format_double(r.centroid[0]) + ',' + format_double(r.centroid[1]) +
           ',' + format_double(r.centroid[2]) + ',' + optional_cell(r.helicity_plus) + ',' +
           optional_cell(r.helicity_minus) + ',' + format_double(r.invariant_drift) + '\n';
  }
  return out;
}

std::string snapshot_csv(const Snapshot& snap) {
  if (snap.components.empty() || snap.names.size() != snap.components.size()) {
    throw ContractViolation("snapshot needs one name per component");
  }
  const Grid& g = snap.components.front().grid();
  std::string out = "ix,iy,iz,x,y,z";
  for (const auto& name : snap.names) out += ',' + name + "_re," + name + "_im";
  out += '\n';
  for (std::size_t n = 0; n < g.size(); ++n) {
    const auto idx = g.unravel(n);
    const auto r = g.position(n);
    out += std::to_string(idx[0]) + ',' + std::to_string(idx[1]) + ',' + std::to_string(idx[2]);
    for (double x : r) out += ',' + format_double(x);
    for (const auto& f : snap.components) out += ',' + format_double(f[n].real()) + ',' + format_double(f[n].imag());
    out += '\n';
  }
  return out;
}

Snapshot read_snapshot(const std::string& path, const Grid& grid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read snapshot " + path);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("snapshot " + path + " is empty");
  const auto header = split(line, ',');
  if (header.size() < 8 || (header.size() - 6) % 2 != 0 || header[0] != "ix" || header[5] != "z") {
    throw ValidationError("snapshot " + path + " has a malformed header");
  }
  Snapshot snap;
  for (std::size_t c = 6; c < header.size(); c += 2) {
    const std::string& re = header[c];
    if (re.size() < 4 || re.substr(re.size() - 3) != "_re") throw ValidationError("snapshot column " + re + " is not *_re");
    snap.names.push_back(re.substr(0, re.size() - 3));
  }
  const std::size_t ncomp = snap.names.size();
  std::vector<std::vector<Complex>> values(ncomp, std::vector<Complex>(grid.size()));
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    const std::string where = path + " line " + std::to_string(row + 2);
    if (cells.size() != header.size()) throw ValidationError(where + ": expected " + std::to_string(header.size()) + " cells");
    if (row >= grid.size()) throw ValidationError(path + ": more rows than grid points");
    const auto idx = grid.unravel(row);
    for (int a = 0; a < 3; ++a) {
      if (std::stoul(cells[a]) != idx[a]) throw ValidationError(where + ": lattice index does not match the grid");
    }
    for (std::size_t k = 0; k < ncomp; ++k) {
      values[k][row] = Complex(std::stod(cells[6 + 2 * k]), std::stod(cells[7 + 2 * k]));
    }
    ++row;
  }
  if (row != grid.size()) throw ValidationError(path + ": snapshot has " + std::to_string(row) + " rows, grid has " + std::to_string(grid.size()));
  for (auto& v : values) snap.components.emplace_back(grid, std::move(v));
  return snap;
}

RunResult run(const ScenarioConfig& config, const RunOptions& options) {
  RunResult result;
  const std::uint64_t seed = options.seed.value_or(config.seed);
  auto sim = build(config, seed, result.warnings);
  if (options.log) {
    for (const auto& w : result.warnings) *options.log << "warning: " << w << '\n';
  }

  const fs::path dir(options.output_dir);
  fs::create_directories(dir);

  const double dt = config.time.step();
  const double q0 = sim->invariant();
  auto record = [&](std::size_t step) {
    ObservableRow row = sim->observe();
    row.t = dt * static_cast<double>(step);
    const double q = sim->invariant();
    row.invariant_drift = q0 != 0.0 ? std::abs(q - q0) / std::abs(q0) : std::abs(q);
    result.rows.push_back(row);
  };
  auto dump = [&](std::size_t step) {
    char name[32];
    std::snprintf(name, sizeof name, "_%06zu.csv", step);
    const fs::path p = dir / (config.output.snapshot_prefix + name);
    write_file(p, snapshot_csv(sim->snapshot()));
    result.snapshot_paths.push_back(p.string());
  };

  const std::size_t steps = config.time.steps;
  const std::size_t stride = config.time.output_stride;
  const std::size_t snap = config.output.snapshot_stride;
  record(0);
  if (snap > 0) dump(0);
  for (std::size_t step = 1; step <= steps; ++step) {
    sim->advance(dt);
    if (step % stride == 0) record(step);
    if (snap > 0 && step % snap == 0) dump(step);
    if (options.log && step % std::max<std::size_t>(1, steps / 10) == 0) {
      *options.log << "step " << step << "/" << steps << '\n';
    }
  }

  const fs::path obs = dir / config.output.observables;
  write_file(obs, observables_csv(result.rows));
  result.observables_path = obs.string();
  return result;
}

CrosscheckReport crosscheck_snapshot(const ScenarioConfig& config, const std::string& snapshot_path,
                                     std::optional<double> t) {
  if (config.solver != SolverKind::RsMaxwell) {
    throw ConfigError("crosscheck needs an rs-maxwell scenario, got solver " + std::string(to_string(config.solver)));
  }
  const Grid g = config.grid.build();
  const Snapshot snap = read_snapshot(snapshot_path, g);
  if (snap.names != std::vector<std::string>{"psi_x", "psi_y", "psi_z"}) {
    throw ValidationError("snapshot " + snapshot_path + " does not hold a Riemann-Silberstein vector");
  }
  const RSField rs(VectorField3(snap.components[0], snap.components[1], snap.components[2]), config.medium.build());
  const double time = t.value_or(config.time.duration);
  const double hw = config.photon_energy();
  return {time, hw, dirac_maxwell_crosscheck(rs_unpack(rs), time, hw)};
}

}  // namespace photonqm
