#include "photonqm/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace photonqm {

using nlohmann::json;

namespace {

struct Name {
  std::string_view text;
  int value;
};

constexpr Name kScenarioNames[] = {
    {"plane-wave", int(ScenarioKind::PlaneWave)},
    {"gaussian-packet", int(ScenarioKind::GaussianPacket)},
    {"cavity-standing-wave", int(ScenarioKind::CavityStandingWave)},
    {"circular-polarized-pulse", int(ScenarioKind::CircularPolarizedPulse)},
    {"dispersive-packet", int(ScenarioKind::DispersivePacket)},
};

constexpr Name kSolverNames[] = {
    {"wave", int(SolverKind::Wave)},
    {"advection", int(SolverKind::Advection)},
    {"dirac-chiral", int(SolverKind::DiracChiral)},
    {"dirac-coupled", int(SolverKind::DiracCoupled)},
    {"rs-maxwell", int(SolverKind::RsMaxwell)},
    {"rs-dispersive", int(SolverKind::RsDispersive)},
    {"leapfrog", int(SolverKind::Leapfrog)},
};

template <std::size_t N>
std::string joined(const Name (&names)[N]) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n.text;
  }
  return out;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError("config field " + (path.empty() ? std::string("/") : path) + ": " + message);
}

// Walks one JSON object, tracking which keys were read so leftovers can be
// rejected.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }
  std::string path(const std::string& key) const { return path_ + "/" + key; }

  const json* get(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& require(const std::string& key) {
    const json* v = get(key);
    if (!v) fail(path(key), "required field is missing");
    return *v;
  }

  double number(const std::string& key, double fallback) {
    const json* v = get(key);
    return v ? as_number(*v, path(key)) : fallback;
  }

  std::optional<double> optional_number(const std::string& key) {
    const json* v = get(key);
    if (!v) return std::nullopt;
    return as_number(*v, path(key));
  }

  long integer(const std::string& key, long fallback) {
    const json* v = get(key);
    return v ? as_integer(*v, path(key)) : fallback;
  }

  std::string string(const std::string& key, const std::string& fallback) {
    const json* v = get(key);
    if (!v) return fallback;
    if (!v->is_string()) fail(path(key), "expected a string");
    return v->get<std::string>();
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(path(it.key()), "unknown key");
    }
  }

  static double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(path, "expected a finite number");
    return x;
  }

  static long as_integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<long>();
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

template <std::size_t N>
int parse_name(const json& v, const std::string& path, const Name (&names)[N]) {
  if (!v.is_string()) fail(path, "expected a string");
  const auto s = v.get<std::string>();
  for (const auto& n : names) {
    if (n.text == s) return n.value;
  }
  fail(path, "unknown value \"" + s + "\"; expected one of " + joined(names));
}

std::size_t positive_count(long v, const std::string& path) {
  if (v <= 0) fail(path, "must be a positive integer");
  return static_cast<std::size_t>(v);
}

// Scalar or per-axis array for the active axes.
template <typename T, typename Convert>
std::vector<T> axis_values(const json& v, const std::string& path, int dims, Convert convert) {
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != dims) {
      fail(path, "expected " + std::to_string(dims) + " entries, one per active axis");
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(convert(v[i], path + "/" + std::to_string(i)));
    return out;
  }
  return std::vector<T>(static_cast<std::size_t>(dims), convert(v, path));
}

GridSpec parse_grid(const json& j) {
  ObjectReader r(j, "/grid");
  GridSpec g;
  g.dims = static_cast<int>(r.integer("dims", 1));
  if (g.dims != 1 && g.dims != 3) fail(r.path("dims"), "must be 1 or 3");
  const auto points = axis_values<std::size_t>(r.require("points"), r.path("points"), g.dims,
                                               [](const json& v, const std::string& p) {
                                                 return positive_count(ObjectReader::as_integer(v, p), p);
                                               });
  std::vector<double> lengths(static_cast<std::size_t>(g.dims), 1.0);
  if (const json* v = r.get("length")) {
    lengths = axis_values<double>(*v, r.path("length"), g.dims, ObjectReader::as_number);
  }
  r.finish();
  if (g.dims == 1) {
    g.points = {1, 1, points[0]};
    g.lengths = {1.0, 1.0, lengths[0]};
  } else {
    for (int a = 0; a < 3; ++a) {
      g.points[a] = points[a];
      g.lengths[a] = lengths[a];
    }
  }
  for (int a = 3 - g.dims; a < 3; ++a) {
    if (g.points[a] < Grid::kMinPoints) fail(r.path("points"), "every active axis needs at least 4 points");
    if (!(g.lengths[a] > 0.0)) fail(r.path("length"), "lengths must be positive");
  }
  return g;
}

IndexModelSpec parse_index_model(const json& j) {
  ObjectReader r(j, "/medium/index_model");
  IndexModelSpec m;
  m.kind = r.string("kind", "constant");
  m.carrier = r.number("carrier", 0.0);
  if (!r.has("carrier")) fail(r.path("carrier"), "required field is missing");
  if (m.kind == "constant") {
    m.n0 = ObjectReader::as_number(r.require("n0"), r.path("n0"));
  } else if (m.kind == "linear") {
    m.n0 = ObjectReader::as_number(r.require("n0"), r.path("n0"));
    m.slope = ObjectReader::as_number(r.require("slope"), r.path("slope"));
    m.reference = r.optional_number("reference");
  } else if (m.kind == "tabulated") {
    const json& w = r.require("omegas");
    const json& n = r.require("indices");
    if (!w.is_array()) fail(r.path("omegas"), "expected an array of numbers");
    if (!n.is_array()) fail(r.path("indices"), "expected an array of numbers");
    for (std::size_t i = 0; i < w.size(); ++i) m.omegas.push_back(ObjectReader::as_number(w[i], r.path("omegas") + "/" + std::to_string(i)));
    for (std::size_t i = 0; i < n.size(); ++i) m.indices.push_back(ObjectReader::as_number(n[i], r.path("indices") + "/" + std::to_string(i)));
  } else {
    fail(r.path("kind"), "unknown value \"" + m.kind + "\"; expected one of constant, linear, tabulated");
  }
  r.finish();
  try {
    (void)m.build();
  } catch (const Error& e) {
    fail("/medium/index_model", e.what());
  }
  return m;
}

MediumSpec parse_medium(const json& j) {
  ObjectReader r(j, "/medium");
  MediumSpec m;
  if (r.has("index_model")) {
    if (r.has("epsilon") || r.has("mu")) {
      fail("/medium", "give either epsilon/mu or index_model, not both");
    }
    m.index_model = parse_index_model(*r.get("index_model"));
  } else {
    m.epsilon = r.number("epsilon", 1.0);
    m.mu = r.number("mu", 1.0);
    if (!(m.epsilon > 0.0)) fail(r.path("epsilon"), "must be positive");
    if (!(m.mu > 0.0)) fail(r.path("mu"), "must be positive");
  }
  r.finish();
  return m;
}

SourceSpec parse_source(const json& j) {
  ObjectReader r(j, "/source");
  SourceSpec s;
  s.mode = r.integer("mode", s.mode);
  s.width = r.number("width", s.width);
  s.center = r.optional_number("center");
  s.amplitude = r.number("amplitude", s.amplitude);
  s.direction = static_cast<int>(r.integer("direction", s.direction));
  s.helicity = static_cast<int>(r.integer("helicity", s.helicity));
  s.noise = r.number("noise", s.noise);
  r.finish();
  if (s.mode <= 0) fail(r.path("mode"), "must be a positive integer");
  if (!(s.width > 0.0)) fail(r.path("width"), "must be positive");
  if (!(s.amplitude > 0.0)) fail(r.path("amplitude"), "must be positive");
  if (s.direction != 1 && s.direction != -1) fail(r.path("direction"), "must be +1 or -1");
  if (s.helicity != 1 && s.helicity != -1) fail(r.path("helicity"), "must be +1 or -1");
  if (s.noise < 0.0) fail(r.path("noise"), "must be nonnegative");
  return s;
}

TimeSpec parse_time(const json& j) {
  ObjectReader r(j, "/time");
  TimeSpec t;
  t.duration = ObjectReader::as_number(r.require("duration"), r.path("duration"));
  t.steps = positive_count(ObjectReader::as_integer(r.require("steps"), r.path("steps")), r.path("steps"));
  t.output_stride = positive_count(r.integer("output_stride", 1), r.path("output_stride"));
  r.finish();
  if (!(t.duration > 0.0)) fail(r.path("duration"), "must be positive");
  return t;
}

OutputSpec parse_output(const json& j) {
  ObjectReader r(j, "/output");
  OutputSpec o;
  o.observables = r.string("observables", o.observables);
  o.snapshot_prefix = r.string("snapshot_prefix", o.snapshot_prefix);
  const long stride = r.integer("snapshot_stride", 0);
  if (stride < 0) fail(r.path("snapshot_stride"), "must be nonnegative");
  o.snapshot_stride = static_cast<std::size_t>(stride);
  r.finish();
  for (const auto* name : {&o.observables, &o.snapshot_prefix}) {
    if (name->empty() || name->find('/') != std::string::npos || *name == "." || *name == "..") {
      fail("/output", "file names must be plain names inside the output directory");
    }
  }
  return o;
}

std::string line_diagnostic(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  for (const auto& n : kScenarioNames) {
    if (n.value == int(kind)) return n.text;
  }
  return "?";
}

std::string_view to_string(SolverKind kind) {
  for (const auto& n : kSolverNames) {
    if (n.value == int(kind)) return n.text;
  }
  return "?";
}

Grid GridSpec::build() const {
  if (dims == 1) return Grid::line(points[2], lengths[2]);
  return Grid::box(points, lengths);
}

IndexModel IndexModelSpec::build() const {
  if (kind == "constant") return IndexModel::constant(n0, carrier);
  if (kind == "linear") return IndexModel::linear(n0, slope, reference.value_or(carrier), carrier);
  if (kind == "tabulated") return IndexModel::tabulated(omegas, indices, carrier);
  throw ConfigError("unknown index model kind \"" + kind + "\"");
}

Medium MediumSpec::build() const {
  if (index_model) return carrier_medium(index_model->build());
  Medium m{epsilon, mu};
  m.validate();
  return m;
}

double ScenarioConfig::carrier_wavenumber() const {
  return 2.0 * std::numbers::pi * static_cast<double>(source.mode) / grid.lengths[2];
}

double ScenarioConfig::photon_energy() const {
  if (hbar_omega) return *hbar_omega;
  if (medium.index_model) return kHbar * medium.index_model->carrier;
  return kHbar * kSpeedOfLight * carrier_wavenumber() / medium.build().index();
}

std::optional<std::string> unsupported_reason(ScenarioKind scenario, SolverKind solver, int dims, bool has_index_model) {
  const std::string combo = std::string(to_string(scenario)) + " + " + std::string(to_string(solver));
  const bool vector_solver =
      solver == SolverKind::RsMaxwell || solver == SolverKind::RsDispersive || solver == SolverKind::Leapfrog;
  if (vector_solver && dims != 3) return combo + ": vector solvers require a 3-D grid";
  if (scenario == ScenarioKind::CircularPolarizedPulse) {
    if (solver == SolverKind::Wave || solver == SolverKind::Advection) {
      return combo + ": a circular pulse is a vector field; use dirac-*, rs-* or leapfrog";
    }
    if (dims != 3) return combo + ": circular-polarized-pulse requires a 3-D grid";
  }
  if (scenario == ScenarioKind::DispersivePacket) {
    if (!has_index_model) return combo + ": dispersive-packet requires medium.index_model";
    if (solver != SolverKind::Wave && solver != SolverKind::RsDispersive) {
      return combo + ": dispersive-packet runs with the wave or rs-dispersive solver";
    }
  }
  if (solver == SolverKind::RsDispersive && !has_index_model) {
    return combo + ": rs-dispersive requires medium.index_model";
  }
  if (has_index_model && scenario != ScenarioKind::DispersivePacket && solver != SolverKind::RsDispersive) {
    return combo + ": medium.index_model is only used by dispersive-packet or rs-dispersive";
  }
  if (solver == SolverKind::Advection && scenario == ScenarioKind::CavityStandingWave) {
    return combo + ": a standing wave is not a one-way solution";
  }
  return std::nullopt;
}

ScenarioConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("config syntax error at " + line_diagnostic(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                      e.what());
  }
  ObjectReader r(doc, "");
  const json& schema = r.require("schema");
  if (!schema.is_string() || schema.get<std::string>() != kScenarioSchema) {
    fail("/schema", "expected \"" + std::string(kScenarioSchema) + "\"");
  }
  ScenarioConfig c;
  c.scenario = static_cast<ScenarioKind>(parse_name(r.require("scenario"), "/scenario", kScenarioNames));
  c.solver = static_cast<SolverKind>(parse_name(r.require("solver"), "/solver", kSolverNames));
  c.grid = parse_grid(r.require("grid"));
  if (const json* m = r.get("medium")) c.medium = parse_medium(*m);
  if (const json* s = r.get("source")) c.source = parse_source(*s);
  c.time = parse_time(r.require("time"));
  c.hbar_omega = r.optional_number("hbar_omega");
  if (c.hbar_omega && !(*c.hbar_omega > 0.0)) fail("/hbar_omega", "must be positive");
  if (const json* s = r.get("seed")) {
    if (!s->is_number_unsigned()) fail("/seed", "expected a nonnegative integer");
    c.seed = s->get<std::uint64_t>();
  }
  if (const json* o = r.get("output")) c.output = parse_output(*o);
  r.finish();

  if (auto reason = unsupported_reason(c.scenario, c.solver, c.grid.dims, c.medium.index_model.has_value())) {
    throw ConfigError("unsupported scenario/solver combination " + *reason);
  }
  const long half = static_cast<long>(c.grid.points[2] / 2);
  if (c.source.mode >= half) {
    fail("/source/mode", "carrier mode " + std::to_string(c.source.mode) + " is not below the Nyquist mode " +
                             std::to_string(half));
  }
  if (c.source.center && (*c.source.center < 0.0 || *c.source.center >= c.grid.lengths[2])) {
    fail("/source/center", "must lie in [0, L_z)");
  }
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string config_schema() {
  auto field = [](const char* type, const char* description) {
    return json{{"type", type}, {"description", description}};
  };
  json scenarios = json::array();
  for (const auto& n : kScenarioNames) scenarios.push_back(n.text);
  json solvers = json::array();
  for (const auto& n : kSolverNames) solvers.push_back(n.text);

  json s;
  s["schema"] = {{"type", "string"}, {"const", kScenarioSchema}, {"required", true}};
  s["scenario"] = {{"type", "string"}, {"enum", scenarios}, {"required", true}};
  s["solver"] = {{"type", "string"}, {"enum", solvers}, {"required", true}};
  s["grid"] = {{"required", true},
               {"fields",
                {{"dims", field("integer", "1 (line along z) or 3; default 1")},
                 {"points", field("integer | integer[dims]", "lattice points per active axis, >= 4")},
                 {"length", field("number | number[dims]", "periodic box length per active axis; default 1")}}}};
  s["medium"] = {
      {"required", false},
      {"fields",
       {{"epsilon", field("number", "permittivity, default 1")},
        {"mu", field("number", "permeability, default 1")},
        {"index_model",
         {{"type", "object"},
          {"description", "dispersive index n(omega); excludes epsilon/mu"},
          {"fields",
           {{"kind", field("string", "constant | linear | tabulated")},
            {"carrier", field("number", "carrier frequency omega_0, required")},
            {"n0", field("number", "constant and linear models")},
            {"slope", field("number", "dn/domega of the linear model")},
            {"reference", field("number", "linear model reference frequency; default carrier")},
            {"omegas", field("number[]", "tabulated frequencies, strictly increasing, >= 4")},
            {"indices", field("number[]", "tabulated indices")}}}}}}}};
  s["source"] = {{"required", false},
                 {"fields",
                  {{"mode", field("integer", "carrier mode number along z; k0 = 2 pi mode / L_z; default 8")},
                   {"width", field("number", "Gaussian envelope standard deviation; default 0.05")},
                   {"center", field("number", "envelope center in [0, L_z); default L_z / 2")},
                   {"amplitude", field("number", "field amplitude before normalization; default 1")},
                   {"direction", field("integer", "+1 or -1 propagation along z; default +1")},
                   {"helicity", field("integer", "+1 or -1; default +1")},
                   {"noise", field("number", "L2 size of a seeded band-limited perturbation relative to the profile; default 0")}}}};
  s["time"] = {{"required", true},
               {"fields",
                {{"duration", field("number", "total evolution time")},
                 {"steps", field("integer", "number of time steps")},
                 {"output_stride", field("integer", "steps between observable rows; default 1")}}}};
  s["hbar_omega"] = field("number", "photon energy for field normalization; default c k0 / n or the carrier");
  s["seed"] = field("integer", "seed for the noise perturbation; default 0");
  s["output"] = {{"required", false},
                 {"fields",
                  {{"observables", field("string", "observables CSV file name; default observables.csv")},
                   {"snapshot_prefix", field("string", "snapshot file prefix; default snapshot")},
                   {"snapshot_stride", field("integer", "steps between snapshots; 0 disables; default 0")}}}};
  return s.dump(2) + "\n";
}

}  // namespace photonqm
