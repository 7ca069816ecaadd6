#include "photonqm/spinor_dirac.hpp"

#include <cmath>
#include <string>

#include "mode_map.hpp"
#include "photonqm/spectral.hpp"

namespace photonqm {

namespace {

constexpr Complex kI{0.0, 1.0};

Vector3r to_vector(const std::array<double, 3>& k) { return {k[0], k[1], k[2]}; }

void require_band_limited(const Spinor4Field& s) {
  for (int i = 1; i <= 4; ++i) photonqm::require_band_limited(s.component(i), "spinor component " + std::to_string(i));
}

Eigen::Vector2cd apply(const Matrix2c& m, Complex a, Complex b) { return m * Eigen::Vector2cd(a, b); }

}  // namespace

TwoSpinorField::TwoSpinorField(ComplexScalarField upper, ComplexScalarField lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (!(upper_.grid() == lower_.grid())) throw ContractViolation("spinor components live on different grids");
}

TwoSpinorField TwoSpinorField::zeros(const Grid& grid) {
  return {ComplexScalarField::zeros(grid), ComplexScalarField::zeros(grid)};
}

TwoSpinorField& TwoSpinorField::operator+=(const TwoSpinorField& o) {
  upper_ += o.upper_;
  lower_ += o.lower_;
  return *this;
}

TwoSpinorField& TwoSpinorField::operator-=(const TwoSpinorField& o) {
  upper_ -= o.upper_;
  lower_ -= o.lower_;
  return *this;
}

TwoSpinorField& TwoSpinorField::operator*=(Complex s) {
  upper_ *= s;
  lower_ *= s;
  return *this;
}

double l2_norm(const TwoSpinorField& s) { return std::hypot(l2_norm(s.upper()), l2_norm(s.lower())); }

Spinor4Field::Spinor4Field(TwoSpinorField phi, TwoSpinorField chi, Medium medium)
    : phi_(std::move(phi)), chi_(std::move(chi)), medium_(medium) {
  if (!(phi_.grid() == chi_.grid())) throw ContractViolation("phi and chi spinors live on different grids");
  medium_.validate();
}

const ComplexScalarField& Spinor4Field::component(int index) const {
  switch (index) {
    case 1: return phi_.upper();
    case 2: return phi_.lower();
    case 3: return chi_.upper();
    case 4: return chi_.lower();
    default: throw ContractViolation("spinor component index must be 1..4");
  }
}

double l2_norm(const Spinor4Field& s) { return std::hypot(l2_norm(s.phi()), l2_norm(s.chi())); }

Spinor4Field evolve_chiral(const Spinor4Field& state, double t) {
  require_band_limited(state);
  const double speed = state.medium().phase_speed();
  auto out = detail::map_modes<4>(
      {&state.component(1), &state.component(2), &state.component(3), &state.component(4)},
      [&](const std::array<double, 3>& k, std::array<Complex, 4>& m) {
        const Vector3r kv = to_vector(k);
        const double kn = kv.norm();
        if (kn == 0.0) return;
        const double theta = speed * kn * t;
        const Matrix2c s = sigma_dot(Vector3r(kv / kn));
        const Matrix2c forward = std::cos(theta) * pauli::identity() - kI * std::sin(theta) * s;
        const Matrix2c backward = std::cos(theta) * pauli::identity() + kI * std::sin(theta) * s;
        const auto phi = apply(forward, m[0], m[1]);
        const auto chi = apply(backward, m[2], m[3]);
        m = {phi(0), phi(1), chi(0), chi(1)};
      });
  return Spinor4Field(TwoSpinorField(std::move(out[0]), std::move(out[1])),
                      TwoSpinorField(std::move(out[2]), std::move(out[3])), state.medium());
}

Spinor4Field evolve_coupled(const Spinor4Field& state, double t) {
  require_band_limited(state);
  const double speed = state.medium().phase_speed();
  auto out = detail::map_modes<4>(
      {&state.component(1), &state.component(2), &state.component(3), &state.component(4)},
      [&](const std::array<double, 3>& k, std::array<Complex, 4>& m) {
        const Vector3r kv = to_vector(k);
        const double kn = kv.norm();
        if (kn == 0.0) return;
        const double theta = speed * kn * t;
        const Matrix2c s = sigma_dot(Vector3r(kv / kn));
        const Complex c = std::cos(theta);
        const Complex js = -kI * std::sin(theta);
        const auto s_chi = apply(s, m[2], m[3]);
        const auto s_phi = apply(s, m[0], m[1]);
        m = {c * m[0] + js * s_chi(0), c * m[1] + js * s_chi(1), c * m[2] + js * s_phi(0), c * m[3] + js * s_phi(1)};
      });
  return Spinor4Field(TwoSpinorField(std::move(out[0]), std::move(out[1])),
                      TwoSpinorField(std::move(out[2]), std::move(out[3])), state.medium());
}

Matrix4c photon_chiral_hamiltonian(const Vector3r& k, double n) {
  const Matrix2c s = (kSpeedOfLight / n) * sigma_dot(k);
  Matrix4c h = Matrix4c::Zero();
  h.topLeftCorner<2, 2>() = s;
  h.bottomRightCorner<2, 2>() = -s;
  return h;
}

Matrix4c photon_coupled_hamiltonian(const Vector3r& k, double n) {
  const Matrix2c s = (kSpeedOfLight / n) * sigma_dot(k);
  Matrix4c h = Matrix4c::Zero();
  h.topRightCorner<2, 2>() = s;
  h.bottomLeftCorner<2, 2>() = s;
  return h;
}

Matrix4c electron_dirac_hamiltonian(const Vector3r& k, const ElectronDiracParams& params) {
  const double rest = params.mass * kSpeedOfLight * kSpeedOfLight;
  const Matrix2c s = kSpeedOfLight * sigma_dot(k);
  Matrix4c h;
  h.topLeftCorner<2, 2>() = (params.potential + rest) * pauli::identity();
  h.topRightCorner<2, 2>() = s;
  h.bottomLeftCorner<2, 2>() = s;
  h.bottomRightCorner<2, 2>() = (params.potential - rest) * pauli::identity();
  return h;
}

double hamiltonian_coincidence_deviation(const Vector3r& k) {
  return max_entry_difference(electron_dirac_hamiltonian(k, {}), photon_coupled_hamiltonian(k, 1.0));
}

HelicityProjection helicity_project(const TwoSpinorField& field, int sign) {
  if (sign != 1 && sign != -1) throw ContractViolation("helicity sign must be +1 or -1");
  auto projected = detail::map_modes<2>({&field.upper(), &field.lower()},
                                        [&](const std::array<double, 3>& k, std::array<Complex, 2>& m) {
                                          const Vector3r kv = to_vector(k);
                                          const double kn = kv.norm();
                                          if (kn == 0.0) {
                                            m = {Complex{}, Complex{}};
                                            return;
                                          }
                                          const Matrix2c p = 0.5 * (pauli::identity() +
                                                                    double(sign) * sigma_dot(Vector3r(kv / kn)));
                                          const auto v = apply(p, m[0], m[1]);
                                          m = {v(0), v(1)};
                                        });
  auto zero = detail::map_modes<2>({&field.upper(), &field.lower()},
                                   [](const std::array<double, 3>& k, std::array<Complex, 2>& m) {
                                     if (k[0] != 0.0 || k[1] != 0.0 || k[2] != 0.0) m = {Complex{}, Complex{}};
                                   });
  return {TwoSpinorField(std::move(projected[0]), std::move(projected[1])),
          TwoSpinorField(std::move(zero[0]), std::move(zero[1]))};
}

}  // namespace photonqm
