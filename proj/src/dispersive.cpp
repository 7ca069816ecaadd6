#include "photonqm/dispersive.hpp"

#include <cmath>

// boost 1.74 pchip calls isnan unqualified
namespace boost::math::interpolators {
using std::isnan;
}
#include <boost/math/interpolators/pchip.hpp>
#include <numbers>

namespace photonqm {

namespace {

constexpr double kFiniteDifferenceStep = 1e-6;
constexpr double kConsistencyTolerance = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

IndexModel::IndexModel(Form form, double carrier) : form_(std::move(form)), carrier_(carrier) {
  if (!(carrier_ > 0.0)) throw DomainError("carrier frequency must be positive");
  if (!(index(carrier_) > 0.0)) throw DomainError("refractive index must be positive at the carrier");
  if (!(group_index(*this, carrier_) > 0.0)) throw DomainError("group index must be positive at the carrier");
}

IndexModel IndexModel::constant(double n0, double carrier) { return IndexModel(Constant{n0}, carrier); }

IndexModel IndexModel::linear(double n0, double slope, double reference, double carrier) {
  return IndexModel(Linear{n0, slope, reference}, carrier);
}

IndexModel IndexModel::tabulated(std::vector<double> omegas, std::vector<double> indices, double carrier) {
  if (omegas.size() != indices.size()) throw ContractViolation("index table needs one index per frequency");
  if (omegas.size() < 4) throw ContractViolation("index table needs at least 4 samples");
  for (std::size_t i = 1; i < omegas.size(); ++i) {
    if (!(omegas[i] > omegas[i - 1])) throw ContractViolation("index table frequencies must increase strictly");
  }
  for (double n : indices) {
    if (!(n > 0.0)) throw DomainError("tabulated refractive index must be positive");
  }
  const double lo = omegas.front();
  const double hi = omegas.back();
  auto spline = std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(std::move(omegas),
                                                                                          std::move(indices));
  return IndexModel(Table{lo, hi, [spline](double w) { return (*spline)(w); }}, carrier);
}

void IndexModel::require_in_range(double omega) const {
  if (const auto* t = std::get_if<Table>(&form_)) {
    if (omega < t->lo || omega > t->hi) {
      throw DomainError("frequency " + std::to_string(omega) + " is outside the tabulated range [" +
                        std::to_string(t->lo) + ", " + std::to_string(t->hi) + "]");
    }
  }
}

double IndexModel::index(double omega) const {
  require_in_range(omega);
  return std::visit(Overloaded{[](const Constant& c) { return c.n0; },
                               [omega](const Linear& l) { return l.n0 + l.slope * (omega - l.reference); },
                               [omega](const Table& t) { return t.interpolant(omega); }},
                    form_);
}

double IndexModel::derivative(double omega) const {
  require_in_range(omega);
  return std::visit(Overloaded{[](const Constant&) { return 0.0; }, [](const Linear& l) { return l.slope; },
                               [omega](const Table& t) {
                                 const double h = kFiniteDifferenceStep * omega;
                                 // one-sided at the table edges
                                 const double up = std::min(omega + h, t.hi);
                                 const double down = std::max(omega - h, t.lo);
                                 return (t.interpolant(up) - t.interpolant(down)) / (up - down);
                               }},
                    form_);
}

double group_index(const IndexModel& model, double omega) { return model.index(omega) + omega * model.derivative(omega); }

double dispersion_parameter(const IndexModel& model, double omega) {
  return omega * model.derivative(omega) / model.index(omega);
}

Medium carrier_medium(const IndexModel& model) { return Medium::dielectric(model.index(model.carrier())); }

ScalarPhotonState evolve_wave_dispersive(const ScalarPhotonState& state, double t, const IndexModel& model) {
  return evolve_wave_with_speed(state, t, kSpeedOfLight / group_index(model, model.carrier()));
}

std::optional<std::string> bandwidth_warning(const ComplexScalarField& psi, double limit) {
  const auto m = spectral_moments(psi);
  if (m.relative_bandwidth > limit) {
    return "relative spectral width " + std::to_string(m.relative_bandwidth) + " exceeds " + std::to_string(limit) +
           "; a group index frozen at the carrier ignores the dispersion this packet will see";
  }
  return std::nullopt;
}

namespace {

void require_non_magnetic(const Medium& m) {
  if (m.mu != 1.0) {
    throw UnsupportedError("dispersive vector evolution assumes mu = 1, got mu = " + std::to_string(m.mu));
  }
}

}  // namespace

RSField rs_pack_dispersive(const EMField& em, const IndexModel& model) {
  require_non_magnetic(em.medium());
  const double ng = group_index(model, model.carrier());
  const Grid& g = em.grid();
  std::array<std::vector<Complex>, 3> c;
  for (int a = 0; a < 3; ++a) {
    c[a].resize(g.size());
    for (std::size_t n = 0; n < g.size(); ++n) c[a][n] = Complex(ng * em.electric()[a][n], em.magnetic()[a][n]);
  }
  return RSField(VectorField3(ComplexScalarField(g, std::move(c[0])), ComplexScalarField(g, std::move(c[1])),
                              ComplexScalarField(g, std::move(c[2]))),
                 em.medium());
}

EMField rs_unpack_dispersive(const RSField& rs, const IndexModel& model) {
  require_non_magnetic(rs.medium());
  const double ng = group_index(model, model.carrier());
  const auto& p = rs.psi();
  RealVectorField3 e(real_part(p[0]), real_part(p[1]), real_part(p[2]));
  RealVectorField3 h(imag_part(p[0]), imag_part(p[1]), imag_part(p[2]));
  return EMField((1.0 / ng) * std::move(e), std::move(h), rs.medium());
}

RSField evolve_rs_dispersive(const RSField& rs, double t, const IndexModel& model) {
  require_non_magnetic(rs.medium());
  return evolve_rs_with_speed(rs, t, kSpeedOfLight / group_index(model, model.carrier()));
}

MaxwellResidual dispersive_maxwell_residual(std::span<const EMField> series, double dt, const IndexModel& model) {
  const double ng = group_index(model, model.carrier());
  return maxwell_residual(series, dt, ng * ng, 1.0);
}

GroupIndexEnergyDensity energy_density_group_index(double e0, double h0, const IndexModel& model, double omega) {
  if (e0 < 0.0 || h0 < 0.0) throw DomainError("field amplitudes must be nonnegative");
  const double ng = group_index(model, omega);
  const double k = 1.0 / (8.0 * std::numbers::pi);
  const double u = k * ng * ng * e0 * e0;
  const double scale = std::max(h0, ng * e0);
  const bool consistent = scale == 0.0 || std::abs(h0 - ng * e0) <= kConsistencyTolerance * scale;
  return {u, k * h0 * h0, u * kSpeedOfLight / ng, consistent};
}

TextbookEnergyDensity energy_density_landau(double e0, double h0, const IndexModel& model, double omega) {
  if (e0 < 0.0 || h0 < 0.0) throw DomainError("field amplitudes must be nonnegative");
  const double n = model.index(omega);
  const double dn = model.derivative(omega);
  const double ng = group_index(model, omega);
  const double epsilon = n * n;
  const double mu = 1.0;
  const double d_omega_eps = epsilon + 2.0 * n * omega * dn;
  const double pi = std::numbers::pi;
  return {(d_omega_eps * e0 * e0 + mu * h0 * h0) / (16.0 * pi), n * ng * e0 * e0 / (8.0 * pi),
          ng * h0 * h0 / (8.0 * pi * n), kSpeedOfLight * n * e0 * e0 / (8.0 * pi)};
}

ElectricEnergyExpansion electric_energy_expansion(const IndexModel& model, double omega, double e0) {
  const double n = model.index(omega);
  const double wdn = omega * model.derivative(omega);
  const double ng = n + wdn;
  const double k = e0 * e0 / (16.0 * std::numbers::pi);
  return {k * (n * n + 2.0 * n * wdn), k * ng * ng, k * wdn * wdn};
}

double first_order_agreement_check(const IndexModel& model, double omega, double e0) {
  const auto u = electric_energy_expansion(model, omega, e0);
  if (u.textbook == 0.0) return 0.0;
  return std::abs(u.group_index - u.textbook) / u.textbook;
}

std::vector<AgreementSample> first_order_sweep(double n0, double omega, double lo, double hi, std::size_t samples) {
  if (!(lo > 0.0) || !(hi > lo) || samples < 2) throw ContractViolation("invalid dispersion sweep range");
  std::vector<AgreementSample> out;
  out.reserve(samples);
  const double step = std::log(hi / lo) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const double delta = lo * std::exp(step * static_cast<double>(i));
    const auto model = IndexModel::linear(n0, delta * n0 / omega, omega, omega);
    out.push_back({dispersion_parameter(model, omega), first_order_agreement_check(model, omega, 1.0)});
  }
  return out;
}

double loglog_slope(std::span<const AgreementSample> sweep) {
  if (sweep.size() < 2) throw ContractViolation("slope fit needs at least two samples");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& s : sweep) {
    if (!(s.delta > 0.0) || !(s.ratio > 0.0)) throw DomainError("log-log fit needs positive samples");
    const double x = std::log(s.delta);
    const double y = std::log(s.ratio);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(sweep.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace photonqm
