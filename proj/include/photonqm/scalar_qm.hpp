#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "photonqm/field.hpp"
#include "photonqm/medium.hpp"

namespace photonqm {

/// Scalar photon wave function together with its time derivative; the
/// second-order wave equation needs both to be an initial-value problem.
class ScalarPhotonState {
 public:
  ScalarPhotonState(ComplexScalarField psi, ComplexScalarField psi_dot, Medium medium);

  const ComplexScalarField& psi() const noexcept { return psi_; }
  const ComplexScalarField& psi_dot() const noexcept { return psi_dot_; }
  const Medium& medium() const noexcept { return medium_; }
  const Grid& grid() const noexcept { return psi_.grid(); }

  /// Scales psi and psi_dot together so that integral |psi|^2 = 1.
  ScalarPhotonState normalized() const;

 private:
  ComplexScalarField psi_;
  ComplexScalarField psi_dot_;
  Medium medium_;
};

/// Time derivative that makes `psi` a pure one-way mover along z at
/// `speed`: psi_dot = -direction * speed * d psi/dz.
ComplexScalarField one_way_time_derivative(const ComplexScalarField& psi, double speed, int direction = +1);

/// Exact k-space solution of (d2/dt2 - (c/n)^2 Laplacian) psi = 0:
///   psi(k,t) = psi(k,0) cos(w t) + psi_dot(k,0) sin(w t) / w,  w = c|k|/n,
/// with the k = 0 mode advanced linearly. Negative t evolves backward.
ScalarPhotonState evolve_wave(const ScalarPhotonState& state, double t);

/// Same propagator with an explicit phase speed in place of c/n. The
/// dispersive solver calls this with c/n_g.
ScalarPhotonState evolve_wave_with_speed(const ScalarPhotonState& state, double t, double speed);

/// integral (|psi_dot|^2 + speed^2 |grad psi|^2) dV, conserved by the wave
/// propagator. `speed` defaults to c/n of the state's medium.
double wave_energy(const ScalarPhotonState& state, std::optional<double> speed = std::nullopt);

/// ||(Laplacian + k^2) psi|| / ||psi|| with k = omega n / c.
double helmholtz_residual(const ComplexScalarField& psi_mode, double omega, const Medium& medium);

/// One-way (Schroedinger-like) evolution along z by exact phase
/// multiplication psi(k,t) = psi(k,0) exp(-i direction (c/n) k_z t).
/// direction = +1 moves toward +z, -1 toward -z.
ComplexScalarField evolve_advection(const ComplexScalarField& psi, double t, int direction, const Medium& medium);

/// A 1-D field sampled on a periodic space-time lattice: `time_points`
/// equally spaced instants over `period`, each a full slice on `space`.
/// Storage is time-major: values[it * Nz + iz].
class SpaceTimeField {
 public:
  SpaceTimeField(Grid space, std::size_t time_points, double period, std::vector<Complex> values);

  /// Samples fn(z, t) at every lattice point.
  static SpaceTimeField sample(const Grid& space, std::size_t time_points, double period,
                               const std::function<Complex(double, double)>& fn);

  const Grid& space() const noexcept { return space_; }
  std::size_t time_points() const noexcept { return time_points_; }
  double period() const noexcept { return period_; }
  double time_step() const noexcept { return period_ / static_cast<double>(time_points_); }
  const std::vector<Complex>& values() const noexcept { return values_; }

 private:
  Grid space_;
  std::size_t time_points_;
  double period_;
  std::vector<Complex> values_;
};

struct FactorizationResidual {
  /// ||(d/dt + a d/dz)(d/dt - a d/dz) psi|| with the two first-order
  /// operators applied one after another.
  double factored;
  /// ||(d2/dt2 - a^2 d2/dz2) psi|| from one combined symbol.
  double direct;
  /// ||factored result - direct result||
  double disagreement;
  /// ||d2 psi/dt2|| + a^2 ||d2 psi/dz2||; divide by this for a relative value.
  double scale;
};

/// Evaluates the one-way factorization of the 1-D wave equation spectrally
/// in both z and t, with a = c/n.
FactorizationResidual factorization_check(const SpaceTimeField& history, const Medium& medium);

struct FieldMagnitudes {
  RealScalarField electric;
  RealScalarField magnetic;
};

/// |E| = sqrt(8 pi hbar_omega / epsilon) |psi|, |H| = sqrt(8 pi hbar_omega / mu) |psi|.
FieldMagnitudes field_magnitude_from_psi(const ComplexScalarField& psi, const Medium& medium, double hbar_omega);

struct NormalizedFields {
  RealVectorField3 electric;
  RealVectorField3 magnetic;
  double electric_scale;
  double magnetic_scale;
};

/// Rescales E and H independently so that (eps/8pi) int |E|^2 = hbar_omega
/// and (mu/8pi) int |H|^2 = hbar_omega.
NormalizedFields energy_normalize_fields(const RealVectorField3& electric, const RealVectorField3& magnetic,
                                         const Medium& medium, double hbar_omega);

/// Spectral weight a(omega) sampled on an increasing omega grid.
class PhotonSpectrum {
 public:
  PhotonSpectrum(std::vector<double> omegas, std::vector<double> weights);

  /// Gaussian weight exp(-(w - center)^2 / (2 width^2)) on [lo, hi],
  /// normalized to unit area.
  static PhotonSpectrum gaussian(double center, double width, double lo, double hi, std::size_t samples);

  const std::vector<double>& omegas() const noexcept { return omegas_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// Trapezoid integral of a(omega).
  double total_weight() const;
  PhotonSpectrum normalized() const;

 private:
  std::vector<double> omegas_;
  std::vector<double> weights_;
};

inline constexpr double kSpectrumNormTolerance = 1e-9;

/// integral omega a(omega) d omega of a normalized spectrum; this is the
/// averaged photon energy hbar*omega used by the normalization relations.
double mean_frequency(const PhotonSpectrum& spectrum);

/// |psi|^2-weighted circular mean position along every active axis, in
/// [0, L). Inactive axes, and axes along which the density has no first
/// Fourier harmonic (a uniform plane wave), report 0.
std::array<double, 3> centroid(const ComplexScalarField& psi);
/// Same for an arbitrary nonnegative density.
std::array<double, 3> density_centroid(const RealScalarField& density);

/// RMS distance from the centroid using minimum-image separations.
double rms_width(const ComplexScalarField& psi);

/// Power-weighted mean of |k| and the relative spread std(|k|)/mean(|k|).
struct SpectralMoments {
  double mean_wavenumber;
  double relative_bandwidth;
};
SpectralMoments spectral_moments(const ComplexScalarField& psi);

/// Warning text when the packet is narrower than three carrier wavelengths,
/// where reading |psi|^2 as a position density stops being meaningful.
std::optional<std::string> localization_warning(const ComplexScalarField& psi);

}  // namespace photonqm
