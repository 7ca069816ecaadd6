#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "photonqm/equivalence.hpp"
#include "photonqm/random_fields.hpp"
#include "photonqm/spectral.hpp"

using namespace photonqm;
using namespace testing;

TEST_CASE("Pauli vector identity for real and complex vectors") {
  std::mt19937_64 rng(40);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 50; ++trial) {
    const Vector3c a(Complex(nd(rng), nd(rng)), Complex(nd(rng), nd(rng)), Complex(nd(rng), nd(rng)));
    const Vector3c b(Complex(nd(rng), nd(rng)), Complex(nd(rng), nd(rng)), Complex(nd(rng), nd(rng)));
    CHECK(pauli_vector_identity_deviation(a, b) < 1e-13);
    CHECK(pauli_vector_identity_deviation(a.real().cast<Complex>(), b.real().cast<Complex>()) < 1e-13);
  }
}

TEST_CASE("sigma dot field and sigma dot momentum") {
  const Grid g = Grid::box({4, 4, 16}, {1.0, 1.0, 1.0});
  const double k = mode_k(g, 2);
  const auto w = plane_mode(g, k);
  const auto zero = ComplexScalarField::zeros(g);
  const auto m = sigma_dot_field(VectorField3(zero, zero, w));
  CHECK(max_abs_difference(m.m00, w) < 1e-15);
  CHECK(max_abs_difference(m.m11, Complex(-1.0) * w) < 1e-15);
  CHECK(l2_norm(m.m01) == 0.0);
  // (sigma.p)(sigma.V) with p = k z^ and V = w z^ gives k w I
  const auto pm = sigma_dot_momentum(m);
  CHECK(max_abs_difference(pm.m00, Complex(k) * w) < 1e-12);
  CHECK(max_abs_difference(pm.m11, Complex(k) * w) < 1e-12);
  CHECK(l2_norm(pm.m10) < 1e-12);
}

TEST_CASE("field to spinor mapping for circular waves") {
  const Grid g = Grid::box({4, 4, 32}, {1.0, 1.0, 1.0});
  const Medium m{2.25, 1.0};
  const double hw = 0.8, e0 = 0.7;
  const double amplitude = std::sqrt(m.epsilon / (8.0 * kPi * hw)) * e0;

  // E = (cos, sin): lower phi component only
  const auto minus = circular_plane_wave(g, m, 3, -1, e0);
  CHECK(detect_circular_branch(minus) == CircularBranch::Negative);
  const auto sm = fields_to_spinors(minus, hw);
  CHECK(sm.branch() == CircularBranch::Negative);
  CHECK(l2_norm(sm.phi().upper()) < 1e-14);
  for (std::size_t i = 0; i < g.size(); i += 7) CHECK(std::abs(sm.phi().lower()[i]) == doctest::Approx(amplitude));

  const auto plus = circular_plane_wave(g, m, 3, +1, e0);
  const auto sp = fields_to_spinors(plus, hw);
  CHECK(sp.branch() == CircularBranch::Positive);
  CHECK(l2_norm(sp.phi().lower()) < 1e-14);
  CHECK(std::abs(sp.phi().upper()[3]) == doctest::Approx(amplitude));

  CHECK_THROWS_AS(fields_to_spinors(plus, 0.0), DomainError);
}

TEST_CASE("bridge rejects fields it cannot represent") {
  const Grid g = Grid::box({4, 4, 32}, {1.0, 1.0, 1.0});
  const Medium m = Medium::vacuum();
  const auto a = circular_plane_wave(g, m, 3, +1), b = circular_plane_wave(g, m, 3, -1);
  // linear polarization: equal helicity mix
  const EMField linear(a.electric() + b.electric(), a.magnetic() + b.magnetic(), m);
  CHECK_THROWS_AS(detect_circular_branch(linear), ValidationError);
  CHECK_THROWS_AS(fields_to_spinors(linear, 1.0), ValidationError);
  CHECK_NOTHROW(fields_to_spinors(linear, 1.0, CircularBranch::Positive));

  // longitudinal E_z
  const auto ez = RealScalarField::sample(g, [](double, double, double) { return 0.1; });
  const EMField longitudinal(RealVectorField3(a.electric()[0], a.electric()[1], ez), a.magnetic(), m);
  CHECK_THROWS_AS(require_axial_transverse(longitudinal), ValidationError);

  // content with k along x
  const auto ox = RealScalarField::sample(g, [](double x, double, double) { return std::cos(2.0 * kPi * x); });
  const auto zero = RealScalarField::zeros(g);
  const EMField oblique(RealVectorField3(zero, ox, zero), RealVectorField3(zero, zero, ox), m);
  CHECK_THROWS_AS(require_axial_transverse(oblique), ValidationError);
}

TEST_CASE("Pauli-projected Maxwell residual") {
  const Grid g = Grid::box({4, 4, 64}, {1.0, 1.0, 1.0});
  const Medium m = Medium::dielectric(1.5);
  const auto rs = rs_pack(circular_plane_wave(g, m, 3, +1));
  const double dt = 1e-3;
  std::vector<EMField> series;
  for (int j = 0; j < 5; ++j) series.push_back(rs_unpack(evolve_rs(rs, j * dt)));
  const auto r = sigma_maxwell_residual(series, dt);
  CHECK(r.relative_electric() < 1e-4);  // (omega dt)^2 / 6 truncation
  CHECK(r.relative_magnetic() < 1e-4);

  // H scaled by 1.01 breaks both equations
  std::vector<EMField> corrupt;
  for (const auto& s : series) corrupt.emplace_back(s.electric(), 1.01 * s.magnetic(), m);
  const auto c = sigma_maxwell_residual(corrupt, dt);
  CHECK(c.relative_electric() > 100.0 * r.relative_electric());
  CHECK(c.relative_electric() > 1e-3);
}

TEST_CASE("Maxwell and Dirac evolution agree") {
  const Grid g = Grid::box({4, 4, 64}, {1.0, 1.0, 1.0});
  const Medium m{2.25, 1.0};
  for (int h : {+1, -1}) {
    const auto em = circular_plane_wave(g, m, 4, h);
    CHECK(dirac_maxwell_crosscheck(em, 0.37, 1.0) < 1e-12);
  }
  // a circular packet: superpose modes of one helicity
  auto packet = circular_plane_wave(g, m, 3, -1);
  for (long mode : {4L, 5L, 6L}) {
    const auto w = circular_plane_wave(g, m, mode, -1, 1.0 / mode);
    packet = EMField(packet.electric() + w.electric(), packet.magnetic() + w.magnetic(), m);
  }
  CHECK(dirac_maxwell_crosscheck(packet, 1.1, 2.0) < 1e-12);
}
