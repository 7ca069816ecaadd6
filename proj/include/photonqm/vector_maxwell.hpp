#pragma once

#include <array>
#include <span>

#include "photonqm/field.hpp"
#include "photonqm/medium.hpp"
#include "photonqm/pauli.hpp"

namespace photonqm {

/// Real electric and magnetic fields in a homogeneous medium.
class EMField {
 public:
  EMField(RealVectorField3 electric, RealVectorField3 magnetic, Medium medium);

  const RealVectorField3& electric() const noexcept { return electric_; }
  const RealVectorField3& magnetic() const noexcept { return magnetic_; }
  const Medium& medium() const noexcept { return medium_; }
  const Grid& grid() const noexcept { return electric_.grid(); }

 private:
  RealVectorField3 electric_;
  RealVectorField3 magnetic_;
  Medium medium_;
};

/// Riemann-Silberstein vector Psi = sqrt(eps) E + i sqrt(mu) H.
class RSField {
 public:
  RSField(VectorField3 psi, Medium medium);

  const VectorField3& psi() const noexcept { return psi_; }
  const Medium& medium() const noexcept { return medium_; }
  const Grid& grid() const noexcept { return psi_.grid(); }

 private:
  VectorField3 psi_;
  Medium medium_;
};

RSField rs_pack(const EMField& em);
/// E = Re(Psi)/sqrt(eps), H = Im(Psi)/sqrt(mu).
EMField rs_unpack(const RSField& rs);

/// Largest relative_divergence accepted as divergence-free.
inline constexpr double kDivergenceTolerance = 1e-10;

/// Throws ValidationError naming `what` when v is not divergence-free.
void require_solenoidal(const VectorField3& v, std::string_view what);

/// ||curl curl v + Laplacian v|| / ||v|| for a divergence-free v, where the
/// curl-squared momentum operator must reduce to -Laplacian.
double curl_momentum_check(const VectorField3& v);

/// Exact solution of i dPsi/dt = (c/n) curl Psi: every mode Psi(k) is
/// rotated about k^ by theta = (c/n)|k|t (Rodrigues form, applied to the
/// complex vector componentwise).
RSField evolve_rs(const RSField& rs, double t);

/// Same rotation with an explicit phase speed (c/n_g for dispersive media).
RSField evolve_rs_with_speed(const RSField& rs, double t, double speed);

struct MaxwellResidual {
  /// RMS over interior samples of ||a_E dE/dt - curl H||
  double electric;
  /// RMS over interior samples of ||a_H dH/dt + curl E||
  double magnetic;
  /// RMS of ||curl H|| and ||curl E|| over the same samples.
  double electric_scale;
  double magnetic_scale;

  double relative_electric() const { return electric_scale > 0.0 ? electric / electric_scale : electric; }
  double relative_magnetic() const { return magnetic_scale > 0.0 ? magnetic / magnetic_scale : magnetic; }
};

/// Centered-difference residuals of (eps/c) dE/dt = curl H and
/// -(mu/c) dH/dt = curl E over a uniformly sampled series (>= 3 samples).
MaxwellResidual maxwell_residual(std::span<const EMField> series, double dt);

/// General form with coefficients (a_E/c) dE/dt = curl H and
/// -(a_H/c) dH/dt = curl E.
MaxwellResidual maxwell_residual(std::span<const EMField> series, double dt, double electric_coefficient,
                                 double magnetic_coefficient);

/// Largest |dt| for which the spectral leapfrog stays stable on this grid:
/// 2 n / (c |k|_max).
double leapfrog_stability_limit(const Grid& grid, const Medium& medium);

/// One kick-drift-kick step (half H update, full E update, half H update)
/// with spectral curls. Second order in dt; synchronized input and output.
EMField maxwell_leapfrog_step(const EMField& em, double dt);

struct EnergySplit {
  /// (eps/8pi) integral |E|^2
  double electric;
  /// (mu/8pi) integral |H|^2
  double magnetic;
  double total() const { return electric + magnetic; }
};

EnergySplit em_energy(const EMField& em);

/// Quadratic invariant conserved exactly by maxwell_leapfrog_step(., dt):
/// (eps/8pi)[||E||^2 - (dt/2)^2 (c/n)^2 ||curl E||^2] + (mu/8pi)||H||^2.
/// It tends to em_energy().total() as dt -> 0; the plain energy oscillates
/// around it by O((omega dt)^2) from step to step.
double leapfrog_energy(const EMField& em, double dt);

/// (c/4pi) integral E x H dV
Vector3r poynting_diagnostic(const EMField& em);

/// Helicity sector s = +-1 of a vector field: the eigenspace of i k^ x with
/// eigenvalue s, P_s v = ((v - k^(k^.v)) + s i k^ x v) / 2. The k = 0 mode
/// and longitudinal parts belong to neither sector.
VectorField3 rs_helicity_project(const VectorField3& v, int sign);

struct HelicityFractions {
  double positive;
  double negative;
};

/// ||P_+ v||^2 / ||v||^2 and ||P_- v||^2 / ||v||^2 (zeros for a zero field).
HelicityFractions helicity_fractions(const VectorField3& v);

}  // namespace photonqm
