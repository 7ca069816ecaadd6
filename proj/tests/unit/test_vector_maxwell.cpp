#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "photonqm/random_fields.hpp"
#include "photonqm/spectral.hpp"
#include "photonqm/vector_maxwell.hpp"

using namespace photonqm;
using namespace testing;

namespace {

EMField random_em(const Grid& g, const Medium& m, std::mt19937_64& rng) {
  const auto e = random_solenoidal(g, rng);
  const auto h = random_solenoidal(g, rng);
  return EMField(RealVectorField3(real_part(e[0]), real_part(e[1]), real_part(e[2])),
                 RealVectorField3(real_part(h[0]), real_part(h[1]), real_part(h[2])), m);
}

// Circular plane wave translated by s along z.
EMField shifted_wave(const Grid& g, const Medium& m, long mode, int helicity, double s) {
  const double k = mode_k(g, mode);
  const double z0 = std::sqrt(m.epsilon / m.mu);
  const auto ex = RealScalarField::sample(g, [&](double, double, double z) { return std::cos(k * (z - s)); });
  const auto ey =
      RealScalarField::sample(g, [&](double, double, double z) { return -helicity * std::sin(k * (z - s)); });
  const auto zero = RealScalarField::zeros(g);
  return EMField(RealVectorField3(ex, ey, zero), RealVectorField3((-z0) * ey, z0 * ex, zero), m);
}

}  // namespace

TEST_CASE("RS pack and unpack round trip") {
  std::mt19937_64 rng(30);
  const Grid g = Grid::box(8, 1.0);
  const Medium m{2.0, 1.3};
  const auto em = random_em(g, m, rng);
  const auto rs = rs_pack(em);
  CHECK(std::abs(rs.psi()[0][5] - Complex(std::sqrt(2.0) * em.electric()[0][5], std::sqrt(1.3) * em.magnetic()[0][5])) <
        1e-15);
  CHECK(em_distance(rs_unpack(rs), em) < 1e-14);
}

TEST_CASE("curl curl equals minus Laplacian on solenoidal fields") {
  std::mt19937_64 rng(31);
  const auto v = random_solenoidal(Grid::box(12, 1.0), rng);
  CHECK(curl_momentum_check(v) < 1e-12);
  const auto grad = random_band_limited_vector(Grid::box(12, 1.0), rng);
  CHECK_THROWS_AS(curl_momentum_check(grad), ValidationError);
}

TEST_CASE("RS evolution translates a circular plane wave") {
  const Grid g = Grid::box({4, 4, 64}, {1.0, 1.0, 1.0});
  const Medium m = Medium::dielectric(1.5);
  for (int h : {+1, -1}) {
    const auto em = circular_plane_wave(g, m, 5, h);
    const double t = 0.13;
    const auto out = rs_unpack(evolve_rs(rs_pack(em), t));
    CHECK(em_distance(out, shifted_wave(g, m, 5, h, m.phase_speed() * t)) < 1e-12);
  }
}

TEST_CASE("RS evolution preserves norm, divergence and is reversible") {
  std::mt19937_64 rng(32);
  const Grid g = Grid::box(8, 1.0);
  const auto rs = rs_pack(random_em(g, Medium::dielectric(1.2), rng));
  const auto out = evolve_rs(rs, 0.6);
  CHECK(std::abs(l2_norm(out.psi()) - l2_norm(rs.psi())) / l2_norm(rs.psi()) < 1e-13);
  CHECK(relative_divergence(out.psi()) < 1e-12);
  CHECK(l2_norm(evolve_rs(out, -0.6).psi() - rs.psi()) / l2_norm(rs.psi()) < 1e-13);
}

TEST_CASE("RS evolution refuses a divergent field") {
  std::mt19937_64 rng(33);
  const Grid g = Grid::box(8, 1.0);
  const RSField bad(random_band_limited_vector(g, rng), Medium::vacuum());
  CHECK_THROWS_AS(evolve_rs(bad, 0.1), ValidationError);
}

TEST_CASE("Maxwell residuals of an exact series") {
  const Grid g = Grid::box({4, 4, 64}, {1.0, 1.0, 1.0});
  const Medium m = Medium::dielectric(1.5);
  const auto rs = rs_pack(circular_plane_wave(g, m, 3, +1));
  const double dt = 1e-3;
  std::vector<EMField> series;
  for (int j = 0; j < 5; ++j) series.push_back(rs_unpack(evolve_rs(rs, j * dt)));
  const auto r = maxwell_residual(series, dt);
  CHECK(r.relative_electric() < 1e-4);  // (omega dt)^2 / 6 truncation
  CHECK(r.relative_magnetic() < 1e-4);
  // wrong coefficient in front of dE/dt
  const auto w = maxwell_residual(series, dt, 1.0, m.mu);
  CHECK(w.relative_electric() > 0.1);
  CHECK_THROWS_AS(maxwell_residual(std::span<const EMField>(series.data(), 2), dt), ContractViolation);
}

TEST_CASE("leapfrog is second order and conserves its discrete energy") {
  const Grid g = Grid::box({4, 4, 32}, {1.0, 1.0, 1.0});
  const Medium m = Medium::dielectric(1.5);
  const auto em = circular_plane_wave(g, m, 2, +1);
  const double t = 0.2;
  const auto exact = shifted_wave(g, m, 2, +1, m.phase_speed() * t);
  auto error_with = [&](int steps) {
    EMField s = em;
    for (int j = 0; j < steps; ++j) s = maxwell_leapfrog_step(s, t / steps);
    return em_distance(s, exact);
  };
  const double order = std::log2(error_with(20) / error_with(40));
  CHECK(order == doctest::Approx(2.0).epsilon(0.05));

  const double dt = 0.5 * leapfrog_stability_limit(g, m);
  EMField s = em;
  const double q0 = leapfrog_energy(s, dt);
  for (int j = 0; j < 200; ++j) s = maxwell_leapfrog_step(s, dt);
  CHECK(std::abs(leapfrog_energy(s, dt) - q0) / q0 < 1e-12);

  CHECK_THROWS_AS(maxwell_leapfrog_step(em, 1.01 * leapfrog_stability_limit(g, m)), StabilityError);
}

TEST_CASE("energy split and Poynting vector of a plane wave") {
  const Grid g = Grid::box({4, 4, 32}, {1.0, 1.0, 1.0});
  const Medium m{2.25, 1.0};
  const auto em = circular_plane_wave(g, m, 2, -1, 0.5);
  const auto e = em_energy(em);
  // |E|^2 = E0^2 everywhere, V = 1
  CHECK(e.electric == doctest::Approx(2.25 * 0.25 / (8.0 * kPi)).epsilon(1e-13));
  CHECK(e.magnetic == doctest::Approx(e.electric).epsilon(1e-13));
  const auto s = poynting_diagnostic(em);
  // (c/4pi) E0^2 sqrt(eps/mu) along +z
  CHECK(s(2) == doctest::Approx(0.25 * 1.5 / (4.0 * kPi)).epsilon(1e-13));
  CHECK(std::abs(s(0)) < 1e-15);
}

TEST_CASE("RS helicity sectors") {
  const Grid g = Grid::box({4, 4, 32}, {1.0, 1.0, 1.0});
  const Medium m = Medium::vacuum();
  const auto plus = helicity_fractions(rs_pack(circular_plane_wave(g, m, 2, +1)).psi());
  CHECK(plus.positive == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(plus.negative < 1e-28);
  const auto minus = helicity_fractions(rs_pack(circular_plane_wave(g, m, 2, -1)).psi());
  CHECK(minus.negative == doctest::Approx(1.0).epsilon(1e-14));

  std::mt19937_64 rng(34);
  // the k = 0 mode belongs to neither sector, so drop it
  const auto raw = random_solenoidal(Grid::box(8, 1.0), rng);
  const auto no_mean = [](const ComplexScalarField& f) {
    return apply_symbol(f, [](const std::array<double, 3>& k) {
      return Complex(k[0] == 0.0 && k[1] == 0.0 && k[2] == 0.0 ? 0.0 : 1.0);
    });
  };
  const VectorField3 v(no_mean(raw[0]), no_mean(raw[1]), no_mean(raw[2]));
  const auto p = rs_helicity_project(v, +1), q = rs_helicity_project(v, -1);
  CHECK(l2_norm(p + q - v) / l2_norm(v) < 1e-13);
  CHECK(l2_norm(rs_helicity_project(p, -1)) / l2_norm(v) < 1e-13);
  const auto f = helicity_fractions(v);
  CHECK(f.positive + f.negative == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("EM fields validate their grids") {
  const auto a = RealVectorField3::zeros(Grid::box(8, 1.0));
  const auto b = RealVectorField3::zeros(Grid::box(4, 1.0));
  CHECK_THROWS_AS(EMField(a, b, Medium::vacuum()), ContractViolation);
}
