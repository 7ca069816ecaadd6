#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "photonqm/random_fields.hpp"
#include "photonqm/scalar_qm.hpp"
#include "photonqm/spectral.hpp"

using namespace photonqm;
using namespace testing;

TEST_CASE("helmholtz residual of a lattice mode") {
  const Grid g = Grid::line(64, 1.0);
  const Medium m = Medium::dielectric(1.5);
  const double k = mode_k(g, 4);
  const auto psi = plane_mode(g, k);
  CHECK(helmholtz_residual(psi, kSpeedOfLight * k / m.index(), m) < 1e-12 * k * k);
  // wrong frequency: omega' = 2ck/n leaves (4 - 1) k^2
  CHECK(helmholtz_residual(psi, 2.0 * kSpeedOfLight * k / m.index(), m) == doctest::Approx(3.0 * k * k).epsilon(1e-10));
  CHECK_THROWS_AS(helmholtz_residual(psi, 0.0, m), DomainError);
}

TEST_CASE("wave propagator splits a Gaussian into two halves") {
  const Grid g = Grid::line(1024, 1.0);
  const Medium m = Medium::dielectric(2.0);
  const auto f = [](double z) { return periodic_gaussian(z, 0.5, 0.04, 1.0); };
  const auto psi = ComplexScalarField::sample(g, [&](double, double, double z) { return f(z); });
  const ScalarPhotonState s(psi, ComplexScalarField::zeros(g), m);
  const double t = 0.3;
  const double d = m.phase_speed() * t;
  const auto out = evolve_wave(s, t);
  const auto expected =
      ComplexScalarField::sample(g, [&](double, double, double z) { return 0.5 * (f(z - d) + f(z + d)); });
  CHECK(max_abs_difference(out.psi(), expected) < 1e-10);
}

TEST_CASE("one-way initial data moves without changing shape") {
  const Grid g = Grid::line(512, 1.0);
  const Medium m = Medium::dielectric(1.5);
  const auto f = [](double z) { return periodic_gaussian(z, 0.3, 0.05, 1.0); };
  const auto psi = ComplexScalarField::sample(g, [&](double, double, double z) { return f(z); });
  for (int dir : {+1, -1}) {
    const ScalarPhotonState s(psi, one_way_time_derivative(psi, m.phase_speed(), dir), m);
    const double t = 0.2;
    const auto out = evolve_wave(s, t);
    const auto expected = ComplexScalarField::sample(
        g, [&](double, double, double z) { return f(z - dir * m.phase_speed() * t); });
    CHECK(max_abs_difference(out.psi(), expected) < 1e-10);
    CHECK(max_abs_difference(evolve_advection(psi, t, dir, m), expected) < 1e-10);
  }
}

TEST_CASE("wave evolution is reversible and energy conserving") {
  std::mt19937_64 rng(21);
  const Grid g = Grid::line(128, 2.0);
  const Medium m = Medium::dielectric(1.3);
  const ScalarPhotonState s(random_band_limited(g, rng), random_band_limited(g, rng), m);
  const auto fwd = evolve_wave(s, 0.77);
  const auto back = evolve_wave(fwd, -0.77);
  CHECK(max_abs_difference(back.psi(), s.psi()) < 1e-12);
  CHECK(std::abs(wave_energy(fwd) - wave_energy(s)) / wave_energy(s) < 1e-12);
}

TEST_CASE("wave propagator rejects data outside the band limit") {
  const Grid g = Grid::line(30, 1.0);
  const auto psi = plane_mode(g, mode_k(g, 12));
  const ScalarPhotonState s(psi, ComplexScalarField::zeros(g), Medium::vacuum());
  CHECK_THROWS_AS(evolve_wave(s, 0.1), ValidationError);
}

TEST_CASE("normalized state has unit norm") {
  const Grid g = Grid::line(64, 3.0);
  const auto psi = Complex(2.5) * plane_mode(g, mode_k(g, 3));
  const ScalarPhotonState s(psi, psi, Medium::vacuum());
  CHECK(l2_norm(s.normalized().psi()) == doctest::Approx(1.0).epsilon(1e-14));
  const ScalarPhotonState zero(ComplexScalarField::zeros(g), ComplexScalarField::zeros(g), Medium::vacuum());
  CHECK_THROWS(zero.normalized());
}

TEST_CASE("factorization of the 1-D wave operator") {
  const Grid g = Grid::line(64, 1.0);
  const Medium m = Medium::dielectric(1.5);
  const double a = m.phase_speed();
  const double k1 = mode_k(g, 3), k2 = mode_k(g, 5);
  const double period = 1.0 / a;  // one full transit
  const auto sol = SpaceTimeField::sample(g, 64, period, [&](double z, double t) {
    return std::polar(1.0, k1 * (z - a * t)) + 0.5 * std::polar(1.0, -k2 * (z + a * t));
  });
  const auto r = factorization_check(sol, m);
  CHECK(r.factored / r.scale < 1e-12);
  CHECK(r.direct / r.scale < 1e-12);
  CHECK(r.disagreement / r.scale < 1e-12);

  const auto wrong = SpaceTimeField::sample(g, 64, period, [&](double z, double t) {
    return std::polar(1.0, k1 * (z - 2.0 * a * t));
  });
  CHECK(factorization_check(wrong, m).direct / factorization_check(wrong, m).scale > 0.1);
}

TEST_CASE("field magnitudes from psi") {
  const Grid g = Grid::line(16, 1.0);
  const Medium m{2.0, 1.5};
  const auto psi = ComplexScalarField::sample(g, [](double, double, double) { return Complex(0.6, 0.8); });
  const auto f = field_magnitude_from_psi(psi, m, 3.0);
  const double pi8 = 8.0 * kPi;
  CHECK(f.electric[0] == doctest::Approx(std::sqrt(pi8 * 3.0 / 2.0)));
  CHECK(f.magnetic[0] == doctest::Approx(std::sqrt(pi8 * 3.0 / 1.5)));
  CHECK_THROWS_AS(field_magnitude_from_psi(psi, m, 0.0), DomainError);
}

TEST_CASE("energy normalization") {
  std::mt19937_64 rng(4);
  const Grid g = Grid::box(8, 1.0);
  const Medium m{2.25, 1.0};
  const auto e = random_band_limited_vector(g, rng);
  const RealVectorField3 er(real_part(e[0]), real_part(e[1]), real_part(e[2]));
  const RealVectorField3 hr(imag_part(e[0]), imag_part(e[1]), imag_part(e[2]));
  const auto n = energy_normalize_fields(er, hr, m, 0.7);
  CHECK(m.epsilon / (8.0 * kPi) * std::pow(l2_norm(n.electric), 2) == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(m.mu / (8.0 * kPi) * std::pow(l2_norm(n.magnetic), 2) == doctest::Approx(0.7).epsilon(1e-13));
  CHECK_THROWS(energy_normalize_fields(RealVectorField3::zeros(g), hr, m, 0.7));
}

TEST_CASE("photon spectrum normalization and mean frequency") {
  const auto s = PhotonSpectrum::gaussian(5.0, 0.3, 2.0, 8.0, 2001);
  CHECK(s.total_weight() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(mean_frequency(s) == doctest::Approx(5.0).epsilon(1e-9));

  const PhotonSpectrum raw({1.0, 2.0, 3.0}, {1.0, 1.0, 1.0});
  CHECK(raw.total_weight() == doctest::Approx(2.0));
  CHECK_THROWS(mean_frequency(raw));
  CHECK(mean_frequency(raw.normalized()) == doctest::Approx(2.0));
  CHECK_THROWS_AS(PhotonSpectrum({1.0, 0.5}, {1.0, 1.0}), ContractViolation);
  CHECK_THROWS(PhotonSpectrum({1.0, 2.0}, {1.0, -1.0}));
}

TEST_CASE("centroid and width of a packet") {
  const Grid g = Grid::line(512, 2.0);
  const auto psi = ComplexScalarField::sample(g, [](double, double, double z) {
    return std::sqrt(periodic_gaussian(z, 1.7, 0.05, 2.0)) * std::polar(1.0, 40.0 * z);
  });
  CHECK(centroid(psi)[2] == doctest::Approx(1.7).epsilon(1e-9));
  CHECK(centroid(psi)[0] == 0.0);
  // |psi|^2 is a Gaussian of width 0.05
  CHECK(rms_width(psi) == doctest::Approx(0.05).epsilon(1e-6));
  CHECK(centroid(plane_mode(g, mode_k(g, 3)))[2] == 0.0);
}

TEST_CASE("spectral moments and the localization warning") {
  const Grid g = Grid::line(1024, 1.0);
  const double k0 = mode_k(g, 100);
  const auto narrow_band = ComplexScalarField::sample(g, [&](double, double, double z) {
    return periodic_gaussian(z, 0.5, 0.1, 1.0) * std::polar(1.0, k0 * z);
  });
  const auto mom = spectral_moments(narrow_band);
  CHECK(mom.mean_wavenumber == doctest::Approx(k0).epsilon(1e-3));
  CHECK(mom.relative_bandwidth < 0.02);
  CHECK_FALSE(localization_warning(narrow_band).has_value());

  const auto tight = ComplexScalarField::sample(g, [&](double, double, double z) {
    return periodic_gaussian(z, 0.5, 0.003, 1.0) * std::polar(1.0, mode_k(g, 20) * z);
  });
  CHECK(localization_warning(tight).has_value());
}
