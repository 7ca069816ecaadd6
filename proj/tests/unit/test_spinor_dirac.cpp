#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "photonqm/random_fields.hpp"
#include "photonqm/spectral.hpp"
#include "photonqm/spinor_dirac.hpp"

using namespace photonqm;
using namespace testing;

namespace {

TwoSpinorField random_spinor(const Grid& g, std::mt19937_64& rng) {
  return TwoSpinorField(random_band_limited(g, rng), random_band_limited(g, rng));
}

double spinor4_distance(const Spinor4Field& a, const Spinor4Field& b) {
  return std::hypot(l2_norm(a.phi() - b.phi()), l2_norm(a.chi() - b.chi()));
}

}  // namespace

TEST_CASE("pauli matrices and sigma dot p") {
  const Complex i(0.0, 1.0);
  Matrix2c expected;
  expected << 3.0, 1.0 - 2.0 * i, 1.0 + 2.0 * i, -3.0;
  CHECK(max_entry_difference(sigma_dot(Vector3r(1.0, 2.0, 3.0)), expected) < 1e-15);

  CHECK(max_entry_difference(pauli::sigma_x() * pauli::sigma_y(), i * pauli::sigma_z()) < 1e-15);
  CHECK(max_entry_difference(pauli::sigma_y() * pauli::sigma_y(), pauli::identity()) < 1e-15);
  CHECK(sigma_dot_squared_deviation(Vector3r(0.3, -1.7, 2.2)) < 1e-14);

  // cross() is bilinear: (i e_x) x e_y = i e_z
  const Vector3c a(i, 0.0, 0.0), b(0.0, 1.0, 0.0);
  CHECK(std::abs(cross(a, b)(2) - i) < 1e-15);
}

TEST_CASE("electron and photon Hamiltonians") {
  const Matrix4c h0 = electron_dirac_hamiltonian(Vector3r::Zero(), {1.0, 0.0});
  Matrix4c expected = Matrix4c::Zero();
  expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK(max_entry_difference(h0, expected) < 1e-15);

  const Matrix4c hv = electron_dirac_hamiltonian(Vector3r::Zero(), {0.0, 5.0});
  CHECK(max_entry_difference(hv, Complex(5.0) * Matrix4c::Identity()) < 1e-15);

  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(hamiltonian_coincidence_deviation(Vector3r(nd(rng), nd(rng), nd(rng))) < 1e-14);
  }

  const Vector3r k(0.0, 0.0, 2.0);
  const Matrix4c chiral = photon_chiral_hamiltonian(k, 2.0);
  // (c/n) sigma.k for the upper block
  CHECK(std::abs(chiral(0, 0) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(chiral(2, 2) - Complex(-1.0)) < 1e-15);
  const Matrix4c coupled = photon_coupled_hamiltonian(k, 2.0);
  CHECK(std::abs(coupled(0, 2) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(coupled(0, 0)) < 1e-15);
  // H^2 = (c|k|/n)^2 for both
  CHECK(max_entry_difference(coupled * coupled, Matrix4c::Identity()) < 1e-14);
  CHECK(max_entry_difference(chiral * chiral, Matrix4c::Identity()) < 1e-14);
}

TEST_CASE("spinor propagators are unitary and reversible") {
  std::mt19937_64 rng(12);
  const Grid g = Grid::box({8, 8, 16}, {1.0, 1.0, 2.0});
  const Spinor4Field s(random_spinor(g, rng), random_spinor(g, rng), Medium::dielectric(1.4));
  for (auto evolve : {&evolve_chiral, &evolve_coupled}) {
    const auto out = evolve(s, 0.9);
    CHECK(std::abs(l2_norm(out) - l2_norm(s)) / l2_norm(s) < 1e-13);
    CHECK(spinor4_distance(evolve(out, -0.9), s) / l2_norm(s) < 1e-13);
    CHECK(spinor4_distance(evolve(evolve(s, 0.4), 0.5), out) / l2_norm(s) < 1e-13);
  }
}

TEST_CASE("every component obeys the scalar wave equation") {
  std::mt19937_64 rng(13);
  const Grid g = Grid::line(64, 1.0);
  const Medium m = Medium::dielectric(1.5);
  const Spinor4Field s(random_spinor(g, rng), random_spinor(g, rng), m);
  // second derivative in time by the symmetric difference of the exact propagator
  const double h = 1e-4;
  const auto plus = evolve_coupled(s, h), minus = evolve_coupled(s, -h);
  for (int c = 1; c <= 4; ++c) {
    const auto d2 = Complex(1.0 / (h * h)) * (plus.component(c) - Complex(2.0) * s.component(c) + minus.component(c));
    const auto rhs = Complex(m.phase_speed() * m.phase_speed()) * laplacian(s.component(c));
    CHECK(l2_norm(d2 - rhs) / l2_norm(rhs) < 1e-5);
  }
}

TEST_CASE("chiral evolution of a helicity eigenstate is a pure phase") {
  const Grid g = Grid::line(32, 1.0);
  const Medium m = Medium::dielectric(2.0);
  const double k = mode_k(g, 3);
  const auto wave = plane_mode(g, k);
  const auto zero = ComplexScalarField::zeros(g);
  // k along +z: (1, 0) is the sigma.k^ = +1 eigenvector
  const Spinor4Field s(TwoSpinorField(wave, zero), TwoSpinorField::zeros(g), m);
  const double t = 0.37;
  const auto out = evolve_chiral(s, t);
  const Complex phase = std::polar(1.0, -m.phase_speed() * k * t);
  CHECK(max_abs_difference(out.phi().upper(), phase * wave) < 1e-13);
  CHECK(l2_norm(out.phi().lower()) < 1e-13);
}

TEST_CASE("helicity projectors") {
  std::mt19937_64 rng(14);
  const Grid g = Grid::box(8, 1.0);
  const auto f = random_spinor(g, rng);
  const auto p = helicity_project(f, +1);
  const auto q = helicity_project(f, -1);
  CHECK(l2_norm(p.projected + q.projected + p.zero_mode - f) / l2_norm(f) < 1e-13);
  CHECK(l2_norm(helicity_project(p.projected, +1).projected - p.projected) / l2_norm(f) < 1e-13);
  CHECK(l2_norm(helicity_project(p.projected, -1).projected) / l2_norm(f) < 1e-13);
  CHECK_THROWS_AS(helicity_project(f, 0), ContractViolation);
}

TEST_CASE("spinor fields validate their grids") {
  const auto a = ComplexScalarField::zeros(Grid::line(8, 1.0));
  const auto b = ComplexScalarField::zeros(Grid::line(16, 1.0));
  CHECK_THROWS_AS(TwoSpinorField(a, b), ContractViolation);
  CHECK_THROWS_AS(Spinor4Field(TwoSpinorField(a, a), TwoSpinorField(b, b), Medium::vacuum()), ContractViolation);
  CHECK_THROWS_AS(Spinor4Field(TwoSpinorField(a, a), TwoSpinorField(a, a), Medium::vacuum()).component(5),
                  ContractViolation);
}
