#include "photonqm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "photonqm/dispersive.hpp"
#include "photonqm/equivalence.hpp"
#include "photonqm/errors.hpp"
#include "photonqm/pauli.hpp"
#include "photonqm/random_fields.hpp"
#include "photonqm/scalar_qm.hpp"
#include "photonqm/spectral.hpp"
#include "photonqm/spinor_dirac.hpp"
#include "photonqm/vector_maxwell.hpp"

namespace photonqm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

using Rng = std::mt19937_64;

class Suite {
 public:
  Suite(std::string name, std::vector<CheckResult>& out) : name_(std::move(name)), out_(out) {}

  void at_most(std::string check, double measured, double bound) { add(std::move(check), measured, 0.0, bound); }
  void within(std::string check, double measured, double target, double tolerance) {
    add(std::move(check), measured, target - tolerance, target + tolerance);
  }

 private:
  void add(std::string check, double measured, double lo, double hi) {
    out_.push_back({name_, std::move(check), measured, lo, hi, std::isfinite(measured) && measured >= lo && measured <= hi});
  }

  std::string name_;
  std::vector<CheckResult>& out_;
};

Vector3r random_real(Rng& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng), n(rng)};
}

Vector3c random_complex(Rng& rng) {
  std::normal_distribution<double> n;
  return {Complex(n(rng), n(rng)), Complex(n(rng), n(rng)), Complex(n(rng), n(rng))};
}

double relative_change(double a, double b) { return std::abs(a - b) / std::abs(b); }

// ---- algebra -------------------------------------------------------------

void algebra(std::vector<CheckResult>& out, Rng& rng) {
  Suite s("algebra", out);
  double sq = 0.0, vec = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Vector3r p = random_real(rng);
    sq = std::max(sq, sigma_dot_squared_deviation(p) / p.squaredNorm());
    const Vector3c a = random_complex(rng), b = random_complex(rng);
    vec = std::max(vec, pauli_vector_identity_deviation(a, b) / (a.norm() * b.norm()));
  }
  s.at_most("(sigma.p)^2 = |p|^2 I, 1000 vectors", sq, 1e-13);
  s.at_most("i sigma.(a x b) = (sigma.a)(sigma.b) - (a.b) I, 1000 pairs", vec, 1e-13);

  const Matrix2c sx = pauli::sigma_x(), sy = pauli::sigma_y(), sz = pauli::sigma_z();
  const double comm = std::max({max_entry_difference(sx * sy, kI * sz), max_entry_difference(sy * sz, kI * sx),
                                max_entry_difference(sz * sx, kI * sy)});
  s.at_most("sigma_a sigma_b = i sigma_c (cyclic)", comm, 1e-13);

  double coincide = 0.0, chiral = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Vector3r k = random_real(rng);
    coincide = std::max(coincide, hamiltonian_coincidence_deviation(k));
    const double n = 1.0 + std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Matrix4c h = photon_chiral_hamiltonian(k, n);
    const double w = kHbar * kSpeedOfLight * k.norm() / n;
    chiral = std::max(chiral, max_entry_difference(h * h, w * w * Matrix4c::Identity()) / (w * w));
  }
  s.at_most("coupled photon H(n=1) = electron Dirac H(m=0,V=0), 100 k", coincide, 0.0);
  s.at_most("chiral H^2 = (hbar c |k| / n)^2 I, 100 k", chiral, 1e-13);
}

// ---- operators -----------------------------------------------------------

void operators(std::vector<CheckResult>& out, Rng& rng) {
  Suite s("operators", out);
  const Grid g = Grid::box({12, 10, 16}, {1.0, 0.8, 1.3});
  const ComplexScalarField f = random_band_limited(g, rng);
  const double fn = l2_norm(f);
  s.at_most("inverse(forward(f)) = f", l2_norm(inverse_transform(forward_transform(f)) - f) / fn, 1e-13);
  s.at_most("Parseval: ||f|| = spectral norm", relative_change(spectral_l2_norm(forward_transform(f)), fn), 1e-13);

  const VectorField3 v = random_band_limited_vector(g, rng);
  s.at_most("div curl v = 0", relative_divergence(curl(v)), 1e-12);
  const VectorField3 grad = gradient(f);
  s.at_most("curl grad f = 0", l2_norm(curl(grad)) / (g.max_wavenumber_norm() * l2_norm(grad)), 1e-12);
  s.at_most("div grad f = laplacian f", l2_norm(divergence(grad) - laplacian(f)) / l2_norm(laplacian(f)), 1e-12);

  double rotrot = 0.0;
  const Grid h = Grid::box(12, 1.0);
  for (int i = 0; i < 100; ++i) rotrot = std::max(rotrot, curl_momentum_check(random_solenoidal(h, rng)));
  s.at_most("curl curl v + laplacian v = 0, 100 solenoidal fields", rotrot, 1e-10);
}

// ---- scalar --------------------------------------------------------------

// Least-squares slope of an unwrapped periodic coordinate against time.
double drift_speed(const std::vector<double>& times, std::vector<double> positions, double length) {
  for (std::size_t i = 1; i < positions.size(); ++i) {
    double d = positions[i] - positions[i - 1];
    d -= length * std::round(d / length);
    positions[i] = positions[i - 1] + d;
  }
  const double m = static_cast<double>(times.size());
  double st = 0, sp = 0, stt = 0, stp = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    st += times[i];
    sp += positions[i];
    stt += times[i] * times[i];
    stp += times[i] * positions[i];
  }
  return (m * stp - st * sp) / (m * stt - st * st);
}

// Centroid speed of a 5%-bandwidth right-moving Gaussian packet.
double packet_speed(const std::function<ScalarPhotonState(const ScalarPhotonState&, double)>& evolve, double speed) {
  const Grid g = Grid::line(4096, 1.0);
  const double k0 = 2.0 * kPi * 64.0;
  const double w = 1.0 / (std::sqrt(2.0) * 0.05 * k0);
  const auto psi = ComplexScalarField::sample(g, [&](double, double, double z) {
    const double d = z - 0.3;
    return std::exp(-d * d / (2.0 * w * w)) * std::polar(1.0, k0 * d);
  });
  const ScalarPhotonState s0(psi, one_way_time_derivative(psi, speed, +1), Medium::vacuum());
  std::vector<double> times, positions;
  for (int i = 0; i <= 10; ++i) {
    const double t = 0.04 * i;
    times.push_back(t);
    positions.push_back(centroid(evolve(s0, t).psi())[2]);
  }
  return drift_speed(times, positions, g.length(2));
}

void scalar(std::vector<CheckResult>& out, Rng& rng) {
  Suite s("scalar", out);
  const Medium glass = Medium::dielectric(1.5);

  {
    const Grid g = Grid::line(96, 1.3);
    const double t = 0.37;
    double worst = 0.0;
    for (std::size_t i = 0; i < g.points(2); ++i) {
      const long j = g.signed_mode(2, i);
      if (j == 0 || 3 * std::abs(j) > static_cast<long>(g.points(2))) continue;
      const double k = g.wavenumber(2, i);
      const double omega = glass.phase_speed() * std::abs(k);
      const auto psi = ComplexScalarField::sample(g, [&](double, double, double z) { return std::polar(1.0, k * z); });
      const ScalarPhotonState st(psi, Complex(0.0, -omega) * psi, glass);
      const auto exact = ComplexScalarField::sample(g, [&](double, double, double z) { return std::polar(1.0, k * z - omega * t); });
      const double err = l2_norm(evolve_wave(st, t).psi() - exact) / l2_norm(exact);
      worst = std::max(worst, err / (omega * t));
    }
    s.at_most("every admissible mode moves at c/n (relative phase-velocity error)", worst, 1e-9);
  }

  {
    const Grid g = Grid::line(256, 1.0);
    auto psi = random_band_limited(g, rng);
    const double n0 = l2_norm(psi);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      psi = evolve_advection(psi, 1e-3, +1, glass);
      worst = std::max(worst, relative_change(l2_norm(psi), n0));
    }
    s.at_most("advection norm over 1000 steps", worst, 1e-12);

    ScalarPhotonState st(random_band_limited(g, rng), random_band_limited(g, rng), glass);
    const double e0 = wave_energy(st);
    worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      st = evolve_wave(st, 1e-3);
      worst = std::max(worst, relative_change(wave_energy(st), e0));
    }
    s.at_most("wave energy over 1000 steps", worst, 1e-10);
  }

  {
    const Grid g = Grid::line(128, 1.0);
    const double v = glass.phase_speed();
    const double period = g.length(2) / v;
    auto gauss = [&](double x) {
      double sum = 0.0;
      for (int m = -3; m <= 3; ++m) {
        const double d = x - 0.5 - m;
        sum += std::exp(-d * d / (2.0 * 0.05 * 0.05));
      }
      return sum;
    };
    const std::pair<const char*, std::function<Complex(double, double)>> cases[] = {
        {"right-moving", [&](double z, double t) { return Complex(gauss(z - v * t)); }},
        {"left-moving", [&](double z, double t) { return Complex(gauss(z + v * t)); }},
        {"standing", [&](double z, double t) { return Complex(gauss(z - v * t) + gauss(z + v * t)); }},
    };
    for (const auto& [name, fn] : cases) {
      const auto r = factorization_check(SpaceTimeField::sample(g, 128, period, fn), glass);
      s.at_most(std::string("d'Alembert factorization, ") + name + " Gaussian", r.factored / r.scale, 1e-8);
    }
  }

  const double c_over_n = glass.phase_speed();
  const double speed = packet_speed(
      [&](const ScalarPhotonState& st, double t) { return evolve_wave_with_speed(st, t, c_over_n); }, c_over_n);
  s.at_most("packet centroid speed vs c/1.5 (relative)", relative_change(speed, c_over_n), 1e-3);
}

// ---- spinor --------------------------------------------------------------

TwoSpinorField random_spinor(const Grid& g, Rng& rng) {
  return {random_band_limited(g, rng), random_band_limited(g, rng)};
}

void spinor(std::vector<CheckResult>& out, Rng& rng) {
  Suite s("spinor", out);
  const Medium glass = Medium::dielectric(1.5);
  const Grid g = Grid::box(10, 1.0);
  for (const bool coupled : {false, true}) {
    Spinor4Field st(random_spinor(g, rng), random_spinor(g, rng), glass);
    const double n0 = l2_norm(st);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      st = coupled ? evolve_coupled(st, 1e-2) : evolve_chiral(st, 1e-2);
      worst = std::max(worst, relative_change(l2_norm(st), n0));
    }
    s.at_most(std::string(coupled ? "coupled" : "chiral") + " Dirac norm over 1000 steps", worst, 1e-12);
  }

  {
    const TwoSpinorField plus = helicity_project(random_spinor(g, rng), +1).projected;
    const Spinor4Field st(plus, TwoSpinorField::zeros(g), glass);
    const Spinor4Field later = evolve_chiral(st, 0.31);
    s.at_most("chiral evolution keeps helicity", l2_norm(helicity_project(later.phi(), -1).projected) / l2_norm(plus),
              1e-12);
  }

  {
    // Every component obeys the second-order wave equation with speed c/n.
    const Grid line = Grid::line(64, 1.0);
    const std::size_t nt = 64;
    const double period = line.length(2) / glass.phase_speed();
    const Spinor4Field st(random_spinor(line, rng), random_spinor(line, rng), glass);
    std::vector<std::vector<Complex>> history(4);
    for (std::size_t it = 0; it < nt; ++it) {
      const Spinor4Field at = evolve_coupled(st, period * static_cast<double>(it) / static_cast<double>(nt));
      for (int c = 0; c < 4; ++c) {
        const auto& v = at.component(c + 1).values();
        history[c].insert(history[c].end(), v.begin(), v.end());
      }
    }
    double worst = 0.0;
    for (int c = 0; c < 4; ++c) {
      const auto r = factorization_check(SpaceTimeField(line, nt, period, history[c]), glass);
      worst = std::max(worst, r.direct / r.scale);
    }
    s.at_most("spinor components satisfy the wave equation", worst, 1e-8);
  }
}

// ---- maxwell -------------------------------------------------------------

std::vector<EMField> rs_series(const RSField& rs, double dt, int samples,
                               const std::function<RSField(const RSField&, double)>& evolve,
                               const std::function<EMField(const RSField&)>& unpack) {
  std::vector<EMField> out;
  for (int j = 0; j < samples; ++j) out.push_back(unpack(evolve(rs, dt * j)));
  return out;
}

double residual_ratio(const RSField& rs, double dt, const std::function<RSField(const RSField&, double)>& evolve,
                      const std::function<EMField(const RSField&)>& unpack,
                      const std::function<double(std::span<const EMField>, double)>& residual) {
  const auto coarse = rs_series(rs, dt, 5, evolve, unpack);
  const auto fine = rs_series(rs, dt / 2.0, 5, evolve, unpack);
  return residual(coarse, dt) / residual(fine, dt / 2.0);
}

double em_distance(const EMField& a, const EMField& b) {
  return std::hypot(l2_norm(a.electric() - b.electric()), l2_norm(a.magnetic() - b.magnetic()));
}

void maxwell(std::vector<CheckResult>& out, Rng& rng) {
  Suite s("maxwell", out);
  const Medium medium{2.0, 1.3};
  const Grid g = Grid::box(8, 1.0);
  const RSField rs(random_solenoidal(g, rng), medium);

  {
    RSField st = rs;
    const double n0 = l2_norm(rs.psi());
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      st = evolve_rs(st, 1e-2);
      worst = std::max(worst, relative_change(l2_norm(st.psi()), n0));
    }
    s.at_most("RS norm over 1000 steps", worst, 1e-12);
    s.at_most("RS divergence after 1000 steps", relative_divergence(st.psi()), 1e-10);
  }

  const auto evolve = [](const RSField& r, double t) { return evolve_rs(r, t); };
  const auto unpack = [](const RSField& r) { return rs_unpack(r); };
  const double dt = 4e-3;
  s.within("Maxwell electric residual ratio under dt halving",
           residual_ratio(rs, dt, evolve, unpack,
                          [](std::span<const EMField> x, double h) { return maxwell_residual(x, h).relative_electric(); }),
           4.0, 0.3);
  s.within("Maxwell magnetic residual ratio under dt halving",
           residual_ratio(rs, dt, evolve, unpack,
                          [](std::span<const EMField> x, double h) { return maxwell_residual(x, h).relative_magnetic(); }),
           4.0, 0.3);

  {
    const EMField em0 = rs_unpack(rs);
    const double t_end = 0.2;
    const EMField exact = rs_unpack(evolve_rs(rs, t_end));
    auto error = [&](int steps) {
      EMField em = em0;
      for (int i = 0; i < steps; ++i) em = maxwell_leapfrog_step(em, t_end / steps);
      return em_distance(em, exact);
    };
    s.within("leapfrog convergence order", std::log2(error(20) / error(40)), 2.0, 0.1);

    // Half the textbook explicit bound spacing * n / (c sqrt 3).
    EMField em = em0;
    const double step = 0.5 * g.spacing(2) * medium.index() / (kSpeedOfLight * std::sqrt(3.0));
    const double e0 = leapfrog_energy(em, step);
    double drift = 0.0;
    for (int i = 0; i < 1000; ++i) {
      em = maxwell_leapfrog_step(em, step);
      drift = std::max(drift, relative_change(leapfrog_energy(em, step), e0));
    }
    s.at_most("leapfrog discrete energy drift over 1000 steps", drift, 1e-6);

    bool rejected = false;
    try {
      (void)maxwell_leapfrog_step(em0, 1.01 * leapfrog_stability_limit(g, medium));
    } catch (const StabilityError&) {
      rejected = true;
    }
    s.at_most("leapfrog rejects dt above the stability limit (0 = rejected)", rejected ? 0.0 : 1.0, 0.0);
  }
}

// ---- equivalence ---------------------------------------------------------

EMField circular_wave(const Grid& g, const Medium& m, const std::vector<std::pair<long, double>>& modes, int helicity) {
  const double z0 = std::sqrt(m.epsilon / m.mu);
  std::vector<double> ex(g.size()), ey(g.size()), zero(g.size(), 0.0);
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double z = g.position(n)[2];
    for (const auto& [mode, amp] : modes) {
      const double phase = 2.0 * kPi * static_cast<double>(mode) * z / g.length(2);
      ex[n] += amp * std::cos(phase);
      ey[n] -= helicity * amp * std::sin(phase);
    }
  }
  RealScalarField fx(g, ex), fy(g, ey), fz(g, zero);
  return EMField(RealVectorField3(fx, fy, fz), RealVectorField3((-z0) * fy, z0 * fx, fz), m);
}

void equivalence(std::vector<CheckResult>& out, Rng&) {
  Suite s("equivalence", out);
  const Medium medium{2.25, 1.2};
  const Grid g = Grid::box({4, 4, 32}, {1.0, 1.0, 1.0});
  const double k = 2.0 * kPi * 3.0;
  const double hw = kHbar * medium.phase_speed() * k;
  const double quarter = 0.25 * 2.0 * kPi / (medium.phase_speed() * k);

  double plane = 0.0;
  for (int h : {+1, -1}) plane = std::max(plane, dirac_maxwell_crosscheck(circular_wave(g, medium, {{3, 1.0}}, h), quarter, hw));
  s.at_most("Dirac vs Maxwell, circular plane waves, quarter period", plane, 1e-10);

  const EMField pair = circular_wave(g, medium, {{3, 1.0}, {5, 0.6}}, +1);
  const double two = dirac_maxwell_crosscheck(pair, 0.137, hw);
  s.at_most("Dirac vs Maxwell, two co-propagating modes", two, 1e-10);

  const EMField scaled(7.5 * pair.electric(), 7.5 * pair.magnetic(), medium);
  s.at_most("crosscheck invariant under field rescaling", std::abs(dirac_maxwell_crosscheck(scaled, 0.137, hw) - two),
            1e-12);

  {
    const Grid box = Grid::box(8, 1.0);
    Rng local(17);
    const RSField rs(random_solenoidal(box, local), medium);
    const auto evolve = [](const RSField& r, double t) { return evolve_rs(r, t); };
    const auto unpack = [](const RSField& r) { return rs_unpack(r); };
    s.within("Pauli-projected Maxwell residual ratio under dt halving",
             residual_ratio(rs, 4e-3, evolve, unpack,
                            [](std::span<const EMField> x, double h) {
                              return sigma_maxwell_residual(x, h).relative_electric();
                            }),
             4.0, 0.3);
  }

  const NormalizedFields nf = energy_normalize_fields(pair.electric(), pair.magnetic(), medium, hw);
  const double electric = medium.epsilon / (8.0 * kPi) * std::pow(l2_norm(nf.electric), 2);
  s.at_most("(eps/8pi) int |E|^2 = hbar omega after normalization", relative_change(electric, hw), 1e-10);

  const SpinorFieldPair sp = fields_to_spinors(pair, hw);
  const double phi = std::pow(l2_norm(sp.phi()), 2);
  const double field_side = medium.epsilon / (8.0 * kPi * hw) * std::pow(l2_norm(pair.electric()), 2);
  s.at_most("spinor norm = (eps/8pi hw) int |E|^2", relative_change(phi, field_side), 1e-12);
}

// ---- dispersion ----------------------------------------------------------

void dispersion(std::vector<CheckResult>& out, Rng& rng) {
  Suite s("dispersion", out);
  const double n0 = 1.5;
  const double k0 = 2.0 * kPi * 64.0;
  const double omega = kSpeedOfLight * k0 / n0;
  for (double ng : {1.6, 1.8}) {
    const IndexModel model = IndexModel::linear(n0, (ng - n0) / omega, omega, omega);
    const double expected = kSpeedOfLight / group_index(model, omega);
    const double v = packet_speed([&](const ScalarPhotonState& st, double t) { return evolve_wave_dispersive(st, t, model); },
                                  expected);
    char name[64];
    std::snprintf(name, sizeof name, "packet centroid speed vs c/n_g, n_g = %.1f", ng);
    s.at_most(name, relative_change(v, expected), 1e-2);
  }

  const auto sweep = first_order_sweep(n0, omega, 1e-4, 1e-1, 31);
  s.within("energy-density disagreement log-log slope in delta", loglog_slope(sweep), 2.0, 0.1);
  s.at_most("energy-density disagreement at delta = 0",
            first_order_agreement_check(IndexModel::constant(n0, omega), omega, 1.0), 0.0);

  {
    const IndexModel model = IndexModel::linear(n0, 0.3 / omega, omega, omega);
    const Grid g = Grid::box(8, 1.0);
    const RSField rs(random_solenoidal(g, rng), carrier_medium(model));
    s.within("dispersive Maxwell residual ratio under dt halving",
             residual_ratio(
                 rs, 4e-3, [&](const RSField& r, double t) { return evolve_rs_dispersive(r, t, model); },
                 [&](const RSField& r) { return rs_unpack_dispersive(r, model); },
                 [&](std::span<const EMField> x, double h) {
                   return dispersive_maxwell_residual(x, h, model).relative_electric();
                 }),
             4.0, 0.3);
  }

  {
    const IndexModel linear = IndexModel::linear(n0, 0.2 / omega, omega, omega);
    std::vector<double> w, n;
    for (int i = 0; i < 9; ++i) {
      w.push_back(omega * (0.6 + 0.1 * i));
      n.push_back(linear.index(w.back()));
    }
    const IndexModel table = IndexModel::tabulated(w, n, omega);
    s.at_most("tabulated linear data reproduces the analytic group index",
              relative_change(group_index(table, omega), group_index(linear, omega)), 1e-8);
  }
}

using SuiteFn = void (*)(std::vector<CheckResult>&, Rng&);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"algebra", algebra},         {"operators", operators},     {"scalar", scalar},       {"spinor", spinor},
    {"maxwell", maxwell},         {"equivalence", equivalence}, {"dispersion", dispersion},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed) {
  std::vector<CheckResult> out;
  bool found = false;
  for (std::size_t i = 0; i < std::size(kSuites); ++i) {
    if (suite == "all" || suite == kSuites[i].name) {
      // Each suite draws from its own stream so results do not depend on
      // which other suites ran.
      Rng rng(seed + 0x9E3779B97F4A7C15ULL * (i + 1));
      kSuites[i].fn(out, rng);
      found = true;
    }
  }
  if (!found) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown verify suite \"" + std::string(suite) + "\"; expected one of " + known);
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %-68s %-12s %-25s %s\n", "suite", "check", "measured", "accepted", "result");
  out += line;
  std::size_t failed = 0;
  for (const auto& r : results) {
    char range[64];
    if (r.lower == 0.0) {
      std::snprintf(range, sizeof range, "<= %.3g", r.upper);
    } else {
      std::snprintf(range, sizeof range, "[%.4g, %.4g]", r.lower, r.upper);
    }
    std::snprintf(line, sizeof line, "%-12s %-68s %-12.4e %-25s %s\n", r.suite.c_str(), r.name.c_str(), r.measured,
                  range, r.passed ? "PASS" : "FAIL");
    out += line;
    if (!r.passed) ++failed;
  }
  std::snprintf(line, sizeof line, "%zu checks, %zu failed\n", results.size(), failed);
  out += line;
  return out;
}

}  // namespace photonqm
