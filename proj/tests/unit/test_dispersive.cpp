#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "photonqm/dispersive.hpp"
#include "photonqm/random_fields.hpp"
#include "photonqm/spectral.hpp"

using namespace photonqm;
using namespace testing;

TEST_CASE("index models") {
  const auto c = IndexModel::constant(1.5, 10.0);
  CHECK(c.index(3.0) == 1.5);
  CHECK(c.derivative(3.0) == 0.0);
  CHECK(group_index(c, 10.0) == 1.5);
  CHECK(dispersion_parameter(c, 10.0) == 0.0);

  const auto l = IndexModel::linear(1.5, 0.01, 10.0, 10.0);
  CHECK(l.index(12.0) == doctest::Approx(1.52));
  CHECK(l.derivative(12.0) == doctest::Approx(0.01));
  CHECK(group_index(l, 10.0) == doctest::Approx(1.6));
  CHECK(dispersion_parameter(l, 10.0) == doctest::Approx(0.1 / 1.5));
  CHECK(carrier_medium(l).epsilon == doctest::Approx(2.25));
  CHECK(carrier_medium(l).mu == 1.0);

  CHECK_THROWS_AS(IndexModel::constant(1.5, 0.0), DomainError);
  CHECK_THROWS_AS(IndexModel::constant(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(IndexModel::linear(1.0, -1.0, 1.0, 2.0), DomainError);  // n(2) = 0
}

TEST_CASE("tabulated index interpolates smoothly and refuses extrapolation") {
  std::vector<double> w, n;
  for (int i = 0; i <= 20; ++i) {
    w.push_back(1.0 + 0.5 * i);
    n.push_back(1.4 + 0.002 * w.back());
  }
  const auto t = IndexModel::tabulated(w, n, 5.0);
  CHECK(t.is_tabulated());
  CHECK(t.index(5.25) == doctest::Approx(1.4 + 0.002 * 5.25).epsilon(1e-12));
  CHECK(t.derivative(5.25) == doctest::Approx(0.002).epsilon(1e-6));
  CHECK_THROWS_AS(t.index(0.5), DomainError);
  CHECK_THROWS_AS(t.index(11.5), DomainError);
  CHECK_THROWS_AS(IndexModel::tabulated({1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}, 2.0), ContractViolation);
  CHECK_THROWS_AS(IndexModel::tabulated({1.0, 3.0, 2.0, 4.0}, {1.0, 1.0, 1.0, 1.0}, 2.0), ContractViolation);
}

TEST_CASE("energy densities in the group-index form") {
  const auto model = IndexModel::constant(2.0, 1.0);  // n_g = 2
  const auto u = energy_density_group_index(1.0, 2.0, model, 1.0);
  CHECK(u.electric_form == doctest::Approx(4.0 / (8.0 * kPi)));
  CHECK(u.magnetic_form == doctest::Approx(4.0 / (8.0 * kPi)));
  CHECK(u.intensity == doctest::Approx(2.0 / (8.0 * kPi)));
  CHECK(u.consistent);
  CHECK_FALSE(energy_density_group_index(1.0, 1.0, model, 1.0).consistent);
  CHECK_THROWS_AS(energy_density_group_index(-1.0, 1.0, model, 1.0), DomainError);
}

TEST_CASE("textbook energy density") {
  // n = 1.5, n_g = 1.6
  const auto model = IndexModel::linear(1.5, 0.01, 10.0, 10.0);
  const double e0 = 1.0, h0 = 1.5;
  const auto u = energy_density_landau(e0, h0, model, 10.0);
  const double expected = 1.5 * 1.6 / (8.0 * kPi);
  CHECK(u.electric_form == doctest::Approx(expected));
  CHECK(u.bracket_form == doctest::Approx(expected));
  CHECK(u.magnetic_form == doctest::Approx(expected));
  CHECK(u.intensity == doctest::Approx(1.5 / (8.0 * kPi)));

  // without dispersion both descriptions coincide
  const auto flat = IndexModel::constant(1.5, 10.0);
  const auto g = energy_density_group_index(1.0, 1.5, flat, 10.0);
  const auto t = energy_density_landau(1.0, 1.5, flat, 10.0);
  CHECK(g.electric_form == doctest::Approx(t.electric_form).epsilon(1e-15));
  CHECK(g.intensity == doctest::Approx(t.intensity).epsilon(1e-15));
}

TEST_CASE("first-order agreement of the two electric energies") {
  const auto model = IndexModel::linear(1.5, 0.002, 10.0, 10.0);
  const auto x = electric_energy_expansion(model, 10.0, 1.0);
  CHECK(x.difference == doctest::Approx(0.02 * 0.02 / (16.0 * kPi)).epsilon(1e-10));
  CHECK(x.group_index - x.textbook == doctest::Approx(x.difference).epsilon(1e-8));

  const double d = dispersion_parameter(model, 10.0);
  CHECK(first_order_agreement_check(model, 10.0, 1.0) == doctest::Approx(d * d / (1.0 + 2.0 * d)).epsilon(1e-10));

  // halving a small delta quarters the discrepancy
  const auto small = first_order_sweep(1.5, 10.0, 5e-3, 1e-2, 2);
  CHECK(small[1].ratio / small[0].ratio == doctest::Approx(4.0).epsilon(0.05));

  const auto sweep = first_order_sweep(1.5, 10.0, 1e-4, 1e-2, 12);
  CHECK(sweep.size() == 12);
  CHECK(sweep.front().delta == doctest::Approx(1e-4));
  CHECK(loglog_slope(sweep) == doctest::Approx(2.0).epsilon(0.02));
  CHECK_THROWS_AS(first_order_sweep(1.5, 10.0, 0.0, 1e-2, 12), ContractViolation);
}

TEST_CASE("dispersive wave moves at the group velocity") {
  const Grid g = Grid::line(1024, 1.0);
  const auto model = IndexModel::linear(1.5, 0.05, 20.0, 20.0);  // n_g = 2.5
  const double vg = kSpeedOfLight / group_index(model, 20.0);
  const auto f = [](double z) { return periodic_gaussian(z, 0.3, 0.04, 1.0); };
  const auto psi = ComplexScalarField::sample(g, [&](double, double, double z) { return f(z); });
  const ScalarPhotonState s(psi, one_way_time_derivative(psi, vg, +1), carrier_medium(model));
  const double t = 0.5;
  const auto out = evolve_wave_dispersive(s, t, model);
  const auto expected = ComplexScalarField::sample(g, [&](double, double, double z) { return f(z - vg * t); });
  CHECK(max_abs_difference(out.psi(), expected) < 1e-10);
  CHECK(centroid(out.psi())[2] == doctest::Approx(0.3 + vg * t).epsilon(1e-8));
}

TEST_CASE("dispersive RS evolution") {
  const Grid g = Grid::box({4, 4, 64}, {1.0, 1.0, 1.0});
  const auto model = IndexModel::linear(1.5, 0.01, 10.0, 10.0);
  const double ng = group_index(model, 10.0);
  const auto em = circular_plane_wave(g, Medium::vacuum(), 3, +1);
  // H = n_g z^ x E in the group-index form
  const EMField wave(em.electric(), ng * em.magnetic(), carrier_medium(model));
  const auto rs = rs_pack_dispersive(wave, model);
  CHECK(std::abs(rs.psi()[0][0] - Complex(ng * wave.electric()[0][0], wave.magnetic()[0][0])) < 1e-15);
  CHECK(em_distance(rs_unpack_dispersive(rs, model), wave) < 1e-14);

  const double dt = 1e-3;
  std::vector<EMField> series;
  for (int j = 0; j < 5; ++j) series.push_back(rs_unpack_dispersive(evolve_rs_dispersive(rs, j * dt, model), model));
  const auto r = dispersive_maxwell_residual(series, dt, model);
  CHECK(r.relative_electric() < 1e-4);  // (omega dt)^2 / 6 truncation
  CHECK(r.relative_magnetic() < 1e-4);

  const RSField magnetic(rs.psi(), Medium{2.25, 1.1});
  CHECK_THROWS_AS(evolve_rs_dispersive(magnetic, 0.1, model), UnsupportedError);
}

TEST_CASE("bandwidth warning") {
  const Grid g = Grid::line(2048, 1.0);
  const double k0 = mode_k(g, 200);
  const auto wide = ComplexScalarField::sample(g, [&](double, double, double z) {
    return periodic_gaussian(z, 0.5, 0.05, 1.0) * std::polar(1.0, k0 * z);
  });
  CHECK_FALSE(bandwidth_warning(wide).has_value());
  const auto narrow = ComplexScalarField::sample(g, [&](double, double, double z) {
    return periodic_gaussian(z, 0.5, 0.004, 1.0) * std::polar(1.0, k0 * z);
  });
  CHECK(bandwidth_warning(narrow).has_value());
}
