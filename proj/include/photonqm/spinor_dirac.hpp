#pragma once

#include "photonqm/field.hpp"
#include "photonqm/medium.hpp"
#include "photonqm/pauli.hpp"

namespace photonqm {

/// Two-component spinor field (upper, lower) on one grid.
class TwoSpinorField {
 public:
  TwoSpinorField(ComplexScalarField upper, ComplexScalarField lower);
  static TwoSpinorField zeros(const Grid& grid);

  const ComplexScalarField& upper() const noexcept { return upper_; }
  const ComplexScalarField& lower() const noexcept { return lower_; }
  const Grid& grid() const noexcept { return upper_.grid(); }

  TwoSpinorField& operator+=(const TwoSpinorField& o);
  TwoSpinorField& operator-=(const TwoSpinorField& o);
  TwoSpinorField& operator*=(Complex s);
  friend TwoSpinorField operator+(TwoSpinorField a, const TwoSpinorField& b) { return a += b; }
  friend TwoSpinorField operator-(TwoSpinorField a, const TwoSpinorField& b) { return a -= b; }
  friend TwoSpinorField operator*(Complex s, TwoSpinorField a) { return a *= s; }

 private:
  ComplexScalarField upper_;
  ComplexScalarField lower_;
};

double l2_norm(const TwoSpinorField& s);

/// Four-component photon state (phi_1, phi_2, chi_1, chi_2): phi carries the
/// +z-propagating spinor and chi the counter-propagating one.
class Spinor4Field {
 public:
  Spinor4Field(TwoSpinorField phi, TwoSpinorField chi, Medium medium);

  const TwoSpinorField& phi() const noexcept { return phi_; }
  const TwoSpinorField& chi() const noexcept { return chi_; }
  const Medium& medium() const noexcept { return medium_; }
  const Grid& grid() const noexcept { return phi_.grid(); }
  /// Psi_1..Psi_4 = phi_1, phi_2, chi_1, chi_2 (1-based as written in the
  /// 4x4 equations).
  const ComplexScalarField& component(int index) const;

 private:
  TwoSpinorField phi_;
  TwoSpinorField chi_;
  Medium medium_;
};

double l2_norm(const Spinor4Field& s);

/// Block-diagonal evolution with H = diag(+(c/n) sigma.p, -(c/n) sigma.p).
/// Per mode, phi picks up cos(theta) I - i sin(theta) sigma.k^ and chi the
/// conjugate sign, theta = (c/n)|k|t. The k = 0 mode is left unchanged.
Spinor4Field evolve_chiral(const Spinor4Field& state, double t);

/// Evolution with the off-diagonal Dirac-form Hamiltonian
/// H = [[0, (c/n) sigma.p], [(c/n) sigma.p, 0]]; per mode
/// exp(-iHt) = cos(theta) I4 - i sin(theta) [[0, sigma.k^], [sigma.k^, 0]].
Spinor4Field evolve_coupled(const Spinor4Field& state, double t);

/// Per-mode 4x4 Hamiltonians (hbar = 1, so p = k).
Matrix4c photon_chiral_hamiltonian(const Vector3r& k, double n);
Matrix4c photon_coupled_hamiltonian(const Vector3r& k, double n);

struct ElectronDiracParams {
  double mass = 0.0;
  double potential = 0.0;
};

/// [[I (V + m c^2), c sigma.k], [c sigma.k, I (V - m c^2)]]
Matrix4c electron_dirac_hamiltonian(const Vector3r& k, const ElectronDiracParams& params);

/// Largest entry of |H_electron(V = 0, m = 0) - H_photon(n = 1)| at k.
double hamiltonian_coincidence_deviation(const Vector3r& k);

struct HelicityProjection {
  TwoSpinorField projected;
  /// The k = 0 content, where sigma.k^ is undefined; it belongs to neither
  /// helicity.
  TwoSpinorField zero_mode;
};

/// Applies P = (I + sign sigma.k^)/2 mode by mode. sign is +1 or -1.
HelicityProjection helicity_project(const TwoSpinorField& field, int sign);

}  // namespace photonqm
