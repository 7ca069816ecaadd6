#pragma once

#include <span>

#include "photonqm/pauli.hpp"
#include "photonqm/spinor_dirac.hpp"
#include "photonqm/vector_maxwell.hpp"

namespace photonqm {

/// Largest entry of |i sigma.(a x b) - [(sigma.a)(sigma.b) - (a.b) I]|.
/// a.b is the bilinear (unconjugated) product, so complex vectors work.
double pauli_vector_identity_deviation(const Vector3c& a, const Vector3c& b);

/// The 2x2-matrix-valued field sigma.V(r), stored entrywise.
struct SigmaMatrixField {
  ComplexScalarField m00;
  ComplexScalarField m01;
  ComplexScalarField m10;
  ComplexScalarField m11;

  SigmaMatrixField& operator+=(const SigmaMatrixField& o);
  SigmaMatrixField& operator*=(Complex s);
  friend SigmaMatrixField operator+(SigmaMatrixField a, const SigmaMatrixField& b) { return a += b; }
  friend SigmaMatrixField operator*(Complex s, SigmaMatrixField a) { return a *= s; }
};

double l2_norm(const SigmaMatrixField& m);

SigmaMatrixField sigma_dot_field(const VectorField3& v);
SigmaMatrixField sigma_dot_field(const RealVectorField3& v);

/// (sigma . p) M with p = -i hbar grad evaluated spectrally; the Pauli
/// matrix multiplies M from the left.
SigmaMatrixField sigma_dot_momentum(const SigmaMatrixField& m);

/// Which column of sigma.E (and sigma.H) becomes the spinor. Explicit
/// forms for E_z = 0:
///   Positive (helicity +1): phi = sqrt(eps/8pi hw) (E_x - i E_y, 0)
///   Negative (helicity -1): phi = sqrt(eps/8pi hw) (0, E_x + i E_y)
/// and chi analogously with prefactor i sqrt(mu/8pi hw) and H.
enum class CircularBranch { Positive, Negative };

class SpinorFieldPair {
 public:
  SpinorFieldPair(TwoSpinorField phi, TwoSpinorField chi, Medium medium, double hbar_omega, CircularBranch branch);

  const TwoSpinorField& phi() const noexcept { return phi_; }
  const TwoSpinorField& chi() const noexcept { return chi_; }
  const Medium& medium() const noexcept { return medium_; }
  double hbar_omega() const noexcept { return hbar_omega_; }
  CircularBranch branch() const noexcept { return branch_; }

  Spinor4Field to_spinor4() const { return Spinor4Field(phi_, chi_, medium_); }

 private:
  TwoSpinorField phi_;
  TwoSpinorField chi_;
  Medium medium_;
  double hbar_omega_;
  CircularBranch branch_;
};

/// Tolerances for the axial-circular validation of the field-spinor bridge.
/// The helicity purity bound applies to power fractions.
inline constexpr double kLongitudinalTolerance = 1e-12;
inline constexpr double kOffAxisTolerance = 1e-10;
inline constexpr double kHelicityPurityTolerance = 1e-8;

/// Throws ValidationError unless E_z and H_z vanish (relative to the
/// transverse field) and all spectral content has k parallel to z.
void require_axial_transverse(const EMField& em);

/// Helicity sector of the Riemann-Silberstein vector of `em`; throws
/// ValidationError when the field is not a single circular polarization.
CircularBranch detect_circular_branch(const EMField& em);

/// phi = sqrt(eps/(8 pi hw)) (sigma.E) column, chi = i sqrt(mu/(8 pi hw))
/// (sigma.H) column, column chosen by `branch`. Requires transverse fields.
SpinorFieldPair fields_to_spinors(const EMField& em, double hbar_omega, CircularBranch branch);

/// As above with the branch taken from the field's helicity; rejects
/// non-circular input.
SpinorFieldPair fields_to_spinors(const EMField& em, double hbar_omega);

struct SigmaMaxwellResidual {
  /// RMS of ||hbar eps d(sigma.E)/dt - c (sigma.p)(sigma.H)||
  double electric;
  /// RMS of ||hbar mu d(sigma.H)/dt + c (sigma.p)(sigma.E)||
  double magnetic;
  double electric_scale;
  double magnetic_scale;

  double relative_electric() const { return electric_scale > 0.0 ? electric / electric_scale : electric; }
  double relative_magnetic() const { return magnetic_scale > 0.0 ? magnetic / magnetic_scale : magnetic; }
};

/// Pauli-projected Maxwell equations with centered time differences over a
/// uniformly sampled series (>= 3 samples).
SigmaMaxwellResidual sigma_maxwell_residual(std::span<const EMField> series, double dt);

/// Relative L2 distance between (A) evolving the Riemann-Silberstein vector
/// and then mapping to spinors, and (B) mapping to spinors and then evolving
/// with the coupled Dirac Hamiltonian. Input must be a circularly polarized,
/// divergence-free field propagating along z.
double dirac_maxwell_crosscheck(const EMField& em0, double t, double hbar_omega);

}  // namespace photonqm
