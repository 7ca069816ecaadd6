#include "photonqm/vector_maxwell.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mode_map.hpp"
#include "photonqm/spectral.hpp"

namespace photonqm {

namespace {

constexpr Complex kI{0.0, 1.0};

RealVectorField3 real_part(const VectorField3& v) {
  return {photonqm::real_part(v[0]), photonqm::real_part(v[1]), photonqm::real_part(v[2])};
}

RealVectorField3 real_curl(const RealVectorField3& v) { return real_part(curl(to_complex(v))); }

RealVectorField3 scaled(double s, RealVectorField3 v) { return s * std::move(v); }

}  // namespace

EMField::EMField(RealVectorField3 electric, RealVectorField3 magnetic, Medium medium)
    : electric_(std::move(electric)), magnetic_(std::move(magnetic)), medium_(medium) {
  if (!(electric_.grid() == magnetic_.grid())) throw ContractViolation("E and H live on different grids");
  medium_.validate();
}

RSField::RSField(VectorField3 psi, Medium medium) : psi_(std::move(psi)), medium_(medium) { medium_.validate(); }

RSField rs_pack(const EMField& em) {
  const double se = std::sqrt(em.medium().epsilon);
  const double sm = std::sqrt(em.medium().mu);
  const Grid& g = em.grid();
  std::array<std::vector<Complex>, 3> c;
  for (int a = 0; a < 3; ++a) {
    c[a].resize(g.size());
    for (std::size_t n = 0; n < g.size(); ++n) c[a][n] = Complex(se * em.electric()[a][n], sm * em.magnetic()[a][n]);
  }
  return RSField(VectorField3(ComplexScalarField(g, std::move(c[0])), ComplexScalarField(g, std::move(c[1])),
                              ComplexScalarField(g, std::move(c[2]))),
                 em.medium());
}

EMField rs_unpack(const RSField& rs) {
  const double se = std::sqrt(rs.medium().epsilon);
  const double sm = std::sqrt(rs.medium().mu);
  const auto& p = rs.psi();
  RealVectorField3 e(photonqm::real_part(p[0]), photonqm::real_part(p[1]), photonqm::real_part(p[2]));
  RealVectorField3 h(imag_part(p[0]), imag_part(p[1]), imag_part(p[2]));
  return EMField(scaled(1.0 / se, std::move(e)), scaled(1.0 / sm, std::move(h)), rs.medium());
}

void require_solenoidal(const VectorField3& v, std::string_view what) {
  const double d = relative_divergence(v);
  if (d > kDivergenceTolerance) {
    throw ValidationError("divergence-free condition violated for " + std::string(what) + ": relative divergence " +
                          std::to_string(d));
  }
}

double curl_momentum_check(const VectorField3& v) {
  require_solenoidal(v, "curl-momentum input");
  const double norm = l2_norm(v);
  if (norm == 0.0) return 0.0;
  return l2_norm(curl(curl(v)) + laplacian(v)) / norm;
}

RSField evolve_rs(const RSField& rs, double t) { return evolve_rs_with_speed(rs, t, rs.medium().phase_speed()); }

RSField evolve_rs_with_speed(const RSField& rs, double t, double speed) {
  require_solenoidal(rs.psi(), "Riemann-Silberstein field");
  require_band_limited(rs.psi(), "Riemann-Silberstein field");
  auto out = detail::map_modes<3>({&rs.psi()[0], &rs.psi()[1], &rs.psi()[2]},
                                  [&](const std::array<double, 3>& k, std::array<Complex, 3>& m) {
                                    const Vector3r kv(k[0], k[1], k[2]);
                                    const double kn = kv.norm();
                                    if (kn == 0.0) return;
                                    const Vector3c axis = (kv / kn).cast<Complex>();
                                    const Vector3c v(m[0], m[1], m[2]);
                                    const double theta = speed * kn * t;
                                    const Vector3c r = v * std::cos(theta) + cross(axis, v) * std::sin(theta) +
                                                       axis * (axis.dot(v)) * (1.0 - std::cos(theta));
                                    m = {r(0), r(1), r(2)};
                                  });
  return RSField(VectorField3(std::move(out[0]), std::move(out[1]), std::move(out[2])), rs.medium());
}

MaxwellResidual maxwell_residual(std::span<const EMField> series, double dt) {
  if (series.empty()) throw ContractViolation("Maxwell residual needs at least 3 time samples");
  return maxwell_residual(series, dt, series.front().medium().epsilon, series.front().medium().mu);
}

MaxwellResidual maxwell_residual(std::span<const EMField> series, double dt, double electric_coefficient,
                                 double magnetic_coefficient) {
  if (series.size() < 3) throw ContractViolation("Maxwell residual needs at least 3 time samples");
  if (!(dt > 0.0)) throw ContractViolation("Maxwell residual needs a positive sampling step");
  for (const auto& s : series) {
    if (!(s.grid() == series.front().grid())) throw ContractViolation("time samples live on different grids");
  }
  double re = 0.0, rh = 0.0, se = 0.0, sh = 0.0;
  const double ae = electric_coefficient / kSpeedOfLight;
  const double ah = magnetic_coefficient / kSpeedOfLight;
  for (std::size_t j = 1; j + 1 < series.size(); ++j) {
    const RealVectorField3 curl_h = real_curl(series[j].magnetic());
    const RealVectorField3 curl_e = real_curl(series[j].electric());
    const RealVectorField3 de = (1.0 / (2.0 * dt)) * (series[j + 1].electric() - series[j - 1].electric());
    const RealVectorField3 dh = (1.0 / (2.0 * dt)) * (series[j + 1].magnetic() - series[j - 1].magnetic());
    const double e = l2_norm(ae * de - curl_h);
    const double h = l2_norm(ah * dh + curl_e);
    re += e * e;
    rh += h * h;
    se += std::pow(l2_norm(curl_h), 2);
    sh += std::pow(l2_norm(curl_e), 2);
  }
  const double count = static_cast<double>(series.size() - 2);
  return {std::sqrt(re / count), std::sqrt(rh / count), std::sqrt(se / count), std::sqrt(sh / count)};
}

double leapfrog_stability_limit(const Grid& grid, const Medium& medium) {
  medium.validate();
  return 2.0 / (medium.phase_speed() * grid.max_wavenumber_norm());
}

EMField maxwell_leapfrog_step(const EMField& em, double dt) {
  const double limit = leapfrog_stability_limit(em.grid(), em.medium());
  if (std::abs(dt) > limit) {
    throw StabilityError("leapfrog step dt = " + std::to_string(dt) + " exceeds the stability limit " +
                         std::to_string(limit));
  }
  if (dt == 0.0) return em;
  const double ce = kSpeedOfLight * dt / em.medium().epsilon;
  const double ch = kSpeedOfLight * dt / em.medium().mu;
  RealVectorField3 h_half = em.magnetic() - (0.5 * ch) * real_curl(em.electric());
  RealVectorField3 e_next = em.electric() + ce * real_curl(h_half);
  RealVectorField3 h_next = h_half - (0.5 * ch) * real_curl(e_next);
  return EMField(std::move(e_next), std::move(h_next), em.medium());
}

EnergySplit em_energy(const EMField& em) {
  const double e = l2_norm(em.electric());
  const double h = l2_norm(em.magnetic());
  const double k = 1.0 / (8.0 * std::numbers::pi);
  return {k * em.medium().epsilon * e * e, k * em.medium().mu * h * h};
}

double leapfrog_energy(const EMField& em, double dt) {
  const double v = em.medium().phase_speed();
  const double correction = 0.25 * dt * dt * v * v * std::pow(l2_norm(real_curl(em.electric())), 2);
  const double k = 1.0 / (8.0 * std::numbers::pi);
  return k * em.medium().epsilon * (std::pow(l2_norm(em.electric()), 2) - correction) +
         k * em.medium().mu * std::pow(l2_norm(em.magnetic()), 2);
}

Vector3r poynting_diagnostic(const EMField& em) {
  const auto& e = em.electric();
  const auto& h = em.magnetic();
  Vector3r s = Vector3r::Zero();
  for (std::size_t n = 0; n < em.grid().size(); ++n) {
    const Vector3r ev(e[0][n], e[1][n], e[2][n]);
    const Vector3r hv(h[0][n], h[1][n], h[2][n]);
    s += ev.cross(hv);
  }
  return s * (kSpeedOfLight / (4.0 * std::numbers::pi) * em.grid().cell_volume());
}

VectorField3 rs_helicity_project(const VectorField3& v, int sign) {
  if (sign != 1 && sign != -1) throw ContractViolation("helicity sign must be +1 or -1");
  auto out = detail::map_modes<3>({&v[0], &v[1], &v[2]}, [&](const std::array<double, 3>& k, std::array<Complex, 3>& m) {
    const Vector3r kv(k[0], k[1], k[2]);
    const double kn = kv.norm();
    if (kn == 0.0) {
      m = {Complex{}, Complex{}, Complex{}};
      return;
    }
    const Vector3c axis = (kv / kn).cast<Complex>();
    const Vector3c x(m[0], m[1], m[2]);
    const Vector3c transverse = x - axis * axis.dot(x);
    const Vector3c p = 0.5 * (transverse + double(sign) * kI * cross(axis, x));
    m = {p(0), p(1), p(2)};
  });
  return {std::move(out[0]), std::move(out[1]), std::move(out[2])};
}

HelicityFractions helicity_fractions(const VectorField3& v) {
  const double total = l2_norm(v);
  if (total == 0.0) return {0.0, 0.0};
  const double p = l2_norm(rs_helicity_project(v, +1)) / total;
  const double m = l2_norm(rs_helicity_project(v, -1)) / total;
  return {p * p, m * m};
}

}  // namespace photonqm
