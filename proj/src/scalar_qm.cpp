#include "photonqm/scalar_qm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "photonqm/spectral.hpp"

namespace photonqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wavenumber_norm(const std::array<double, 3>& k) { return std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]); }

// 2-D (t, z) transform of a space-time history built from two passes of 1-D
// transforms. Coefficient [it * Nz + iz] belongs to (Omega_it, k_iz).
std::vector<Complex> space_time_forward(const SpaceTimeField& h) {
  const std::size_t nz = h.space().size();
  const std::size_t nt = h.time_points();
  std::vector<Complex> c(nz * nt);
  for (std::size_t it = 0; it < nt; ++it) {
    std::vector<Complex> slice(h.values().begin() + it * nz, h.values().begin() + (it + 1) * nz);
    const Spectrum s = forward_transform(ComplexScalarField(h.space(), std::move(slice)));
    std::copy(s.coefficients().begin(), s.coefficients().end(), c.begin() + it * nz);
  }
  const Grid time_axis = Grid::line(nt, h.period());
  for (std::size_t iz = 0; iz < nz; ++iz) {
    std::vector<Complex> column(nt);
    for (std::size_t it = 0; it < nt; ++it) column[it] = c[it * nz + iz];
    const Spectrum s = forward_transform(ComplexScalarField(time_axis, std::move(column)));
    for (std::size_t it = 0; it < nt; ++it) c[it * nz + iz] = s[it];
  }
  return c;
}

SpaceTimeField space_time_inverse(const SpaceTimeField& like, std::vector<Complex> c) {
  const std::size_t nz = like.space().size();
  const std::size_t nt = like.time_points();
  const Grid time_axis = Grid::line(nt, like.period());
  for (std::size_t iz = 0; iz < nz; ++iz) {
    std::vector<Complex> column(nt);
    for (std::size_t it = 0; it < nt; ++it) column[it] = c[it * nz + iz];
    const auto f = inverse_transform(Spectrum(time_axis, std::move(column)));
    for (std::size_t it = 0; it < nt; ++it) c[it * nz + iz] = f[it];
  }
  for (std::size_t it = 0; it < nt; ++it) {
    std::vector<Complex> slice(c.begin() + it * nz, c.begin() + (it + 1) * nz);
    const auto f = inverse_transform(Spectrum(like.space(), std::move(slice)));
    std::copy(f.values().begin(), f.values().end(), c.begin() + it * nz);
  }
  return SpaceTimeField(like.space(), nt, like.period(), std::move(c));
}

template <typename Symbol>
SpaceTimeField apply_space_time_symbol(const SpaceTimeField& h, Symbol symbol) {
  auto c = space_time_forward(h);
  const std::size_t nz = h.space().size();
  const Grid time_axis = Grid::line(h.time_points(), h.period());
  for (std::size_t it = 0; it < h.time_points(); ++it) {
    const double omega = time_axis.wavenumber(2, it);
    for (std::size_t iz = 0; iz < nz; ++iz) {
      c[it * nz + iz] *= symbol(omega, h.space().wavenumber(2, iz));
    }
  }
  return space_time_inverse(h, std::move(c));
}

double space_time_norm(const SpaceTimeField& h) {
  double sum = 0.0;
  for (const auto& v : h.values()) sum += std::norm(v);
  return std::sqrt(sum * h.space().cell_volume() * h.time_step());
}

}  // namespace

ScalarPhotonState::ScalarPhotonState(ComplexScalarField psi, ComplexScalarField psi_dot, Medium medium)
    : psi_(std::move(psi)), psi_dot_(std::move(psi_dot)), medium_(medium) {
  if (!(psi_.grid() == psi_dot_.grid())) throw ContractViolation("psi and psi_dot live on different grids");
  medium_.validate();
}

ScalarPhotonState ScalarPhotonState::normalized() const {
  const double norm = l2_norm(psi_);
  if (!(norm > 0.0)) throw ValidationError("cannot normalize a zero wave function");
  const Complex s(1.0 / norm, 0.0);
  return ScalarPhotonState(s * psi_, s * psi_dot_, medium_);
}

ComplexScalarField one_way_time_derivative(const ComplexScalarField& psi, double speed, int direction) {
  if (direction != 1 && direction != -1) throw ContractViolation("direction must be +1 or -1");
  return Complex(-direction * speed, 0.0) * partial_derivative(psi, 2);
}

ScalarPhotonState evolve_wave(const ScalarPhotonState& state, double t) {
  return evolve_wave_with_speed(state, t, state.medium().phase_speed());
}

ScalarPhotonState evolve_wave_with_speed(const ScalarPhotonState& state, double t, double speed) {
  require_band_limited(state.psi(), "psi");
  require_band_limited(state.psi_dot(), "psi_dot");
  const Spectrum p = forward_transform(state.psi());
  const Spectrum q = forward_transform(state.psi_dot());
  const Grid& g = state.grid();
  std::vector<Complex> pc(g.size()), qc(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double omega = speed * wavenumber_norm(g.wavevector(n));
    if (omega == 0.0) {
      pc[n] = p[n] + q[n] * t;
      qc[n] = q[n];
      continue;
    }
    const double c = std::cos(omega * t);
    const double s = std::sin(omega * t);
    pc[n] = p[n] * c + q[n] * (s / omega);
    qc[n] = q[n] * c - p[n] * (omega * s);
  }
  return ScalarPhotonState(inverse_transform(Spectrum(g, std::move(pc))), inverse_transform(Spectrum(g, std::move(qc))),
                           state.medium());
}

double wave_energy(const ScalarPhotonState& state, std::optional<double> speed) {
  const double v = speed.value_or(state.medium().phase_speed());
  const double kinetic = l2_norm(state.psi_dot());
  double gradient_sq = 0.0;
  for (int a = 0; a < 3; ++a) {
    if (!state.grid().is_active(a)) continue;
    const double d = l2_norm(partial_derivative(state.psi(), a));
    gradient_sq += d * d;
  }
  return kinetic * kinetic + v * v * gradient_sq;
}

double helmholtz_residual(const ComplexScalarField& psi_mode, double omega, const Medium& medium) {
  if (!(omega > 0.0)) throw DomainError("Helmholtz residual needs omega > 0");
  medium.validate();
  const double norm = l2_norm(psi_mode);
  if (!(norm > 0.0)) throw ContractViolation("Helmholtz residual of a zero field is undefined");
  const double k = omega * medium.index() / kSpeedOfLight;
  ComplexScalarField r = laplacian(psi_mode);
  r += Complex(k * k, 0.0) * psi_mode;
  return l2_norm(r) / norm;
}

ComplexScalarField evolve_advection(const ComplexScalarField& psi, double t, int direction, const Medium& medium) {
  if (direction != 1 && direction != -1) throw ContractViolation("direction must be +1 or -1");
  medium.validate();
  const double shift = direction * medium.phase_speed() * t;
  return apply_symbol(psi, [shift](const std::array<double, 3>& k) { return std::polar(1.0, -k[2] * shift); });
}

SpaceTimeField::SpaceTimeField(Grid space, std::size_t time_points, double period, std::vector<Complex> values)
    : space_(std::move(space)), time_points_(time_points), period_(period), values_(std::move(values)) {
  if (space_.dims() != 1) throw UnsupportedError("space-time histories are 1-D in space");
  if (time_points_ < Grid::kMinPoints) throw ContractViolation("space-time history needs at least 4 time samples");
  if (!(period_ > 0.0)) throw ContractViolation("space-time history needs a positive period");
  if (values_.size() != space_.size() * time_points_) {
    throw ContractViolation("space-time history has the wrong number of samples");
  }
}

SpaceTimeField SpaceTimeField::sample(const Grid& space, std::size_t time_points, double period,
                                      const std::function<Complex(double, double)>& fn) {
  std::vector<Complex> v(space.size() * time_points);
  const double dt = period / static_cast<double>(time_points);
  for (std::size_t it = 0; it < time_points; ++it) {
    for (std::size_t iz = 0; iz < space.size(); ++iz) {
      v[it * space.size() + iz] = fn(space.coordinate(2, iz), dt * static_cast<double>(it));
    }
  }
  return SpaceTimeField(space, time_points, period, std::move(v));
}

FactorizationResidual factorization_check(const SpaceTimeField& history, const Medium& medium) {
  medium.validate();
  const double a = medium.phase_speed();
  const Complex i{0.0, 1.0};
  const SpaceTimeField backward = apply_space_time_symbol(history, [&](double w, double k) { return i * w - a * i * k; });
  const SpaceTimeField factored = apply_space_time_symbol(backward, [&](double w, double k) { return i * w + a * i * k; });
  const SpaceTimeField direct =
      apply_space_time_symbol(history, [&](double w, double k) { return Complex(-w * w + a * a * k * k, 0.0); });
  const SpaceTimeField dtt = apply_space_time_symbol(history, [](double w, double) { return Complex(-w * w, 0.0); });
  const SpaceTimeField dzz = apply_space_time_symbol(history, [](double, double k) { return Complex(-k * k, 0.0); });

  std::vector<Complex> diff(factored.values().size());
  for (std::size_t n = 0; n < diff.size(); ++n) diff[n] = factored.values()[n] - direct.values()[n];
  const SpaceTimeField delta(history.space(), history.time_points(), history.period(), std::move(diff));

  return {space_time_norm(factored), space_time_norm(direct), space_time_norm(delta),
          space_time_norm(dtt) + a * a * space_time_norm(dzz)};
}

FieldMagnitudes field_magnitude_from_psi(const ComplexScalarField& psi, const Medium& medium, double hbar_omega) {
  medium.validate();
  if (!(hbar_omega > 0.0)) throw DomainError("photon energy hbar*omega must be positive");
  const RealScalarField m = modulus(psi);
  return {std::sqrt(8.0 * std::numbers::pi * hbar_omega / medium.epsilon) * m,
          std::sqrt(8.0 * std::numbers::pi * hbar_omega / medium.mu) * m};
}

NormalizedFields energy_normalize_fields(const RealVectorField3& electric, const RealVectorField3& magnetic,
                                         const Medium& medium, double hbar_omega) {
  medium.validate();
  if (!(hbar_omega > 0.0)) throw DomainError("photon energy hbar*omega must be positive");
  const double ne = l2_norm(electric);
  const double nh = l2_norm(magnetic);
  const double we = medium.epsilon / (8.0 * std::numbers::pi) * ne * ne;
  const double wh = medium.mu / (8.0 * std::numbers::pi) * nh * nh;
  if (!(we > 0.0) || !(wh > 0.0)) throw ValidationError("cannot normalize fields with zero electric or magnetic energy");
  const double se = std::sqrt(hbar_omega / we);
  const double sh = std::sqrt(hbar_omega / wh);
  return {se * electric, sh * magnetic, se, sh};
}

PhotonSpectrum::PhotonSpectrum(std::vector<double> omegas, std::vector<double> weights)
    : omegas_(std::move(omegas)), weights_(std::move(weights)) {
  if (omegas_.size() != weights_.size()) throw ContractViolation("spectrum needs one weight per frequency sample");
  if (omegas_.size() < 2) throw ContractViolation("spectrum needs at least two frequency samples");
  for (std::size_t i = 1; i < omegas_.size(); ++i) {
    if (!(omegas_[i] > omegas_[i - 1])) throw ContractViolation("spectrum frequencies must increase strictly");
  }
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("spectral weights must be nonnegative and finite");
  }
}

PhotonSpectrum PhotonSpectrum::gaussian(double center, double width, double lo, double hi, std::size_t samples) {
  if (!(hi > lo) || samples < 2 || !(width > 0.0)) throw ContractViolation("invalid Gaussian spectrum parameters");
  std::vector<double> w(samples), a(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    w[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double x = (w[i] - center) / width;
    a[i] = std::exp(-0.5 * x * x);
  }
  return PhotonSpectrum(std::move(w), std::move(a)).normalized();
}

double PhotonSpectrum::total_weight() const {
  double sum = 0.0;
  for (std::size_t i = 1; i < omegas_.size(); ++i) {
    sum += 0.5 * (weights_[i] + weights_[i - 1]) * (omegas_[i] - omegas_[i - 1]);
  }
  return sum;
}

PhotonSpectrum PhotonSpectrum::normalized() const {
  const double total = total_weight();
  if (!(total > 0.0)) throw ValidationError("cannot normalize an all-zero spectrum");
  std::vector<double> a = weights_;
  for (auto& v : a) v /= total;
  return PhotonSpectrum(omegas_, std::move(a));
}

double mean_frequency(const PhotonSpectrum& spectrum) {
  const double total = spectrum.total_weight();
  if (std::abs(total - 1.0) > kSpectrumNormTolerance) {
    throw ValidationError("spectrum is not normalized: integral a(omega) d omega = " + std::to_string(total));
  }
  const auto& w = spectrum.omegas();
  const auto& a = spectrum.weights();
  double sum = 0.0;
  for (std::size_t i = 1; i < w.size(); ++i) sum += 0.5 * (w[i] * a[i] + w[i - 1] * a[i - 1]) * (w[i] - w[i - 1]);
  return sum;
}

constexpr double kUnlocalized = 1e-9;

std::array<double, 3> centroid(const ComplexScalarField& psi) {
  std::vector<double> density(psi.size());
  for (std::size_t n = 0; n < psi.size(); ++n) density[n] = std::norm(psi[n]);
  return density_centroid(RealScalarField(psi.grid(), std::move(density)));
}

std::array<double, 3> density_centroid(const RealScalarField& density) {
  const Grid& g = density.grid();
  std::array<Complex, 3> phasor{};
  double weight = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double p = density[n];
    weight += p;
    const auto r = g.position(n);
    for (int a = 0; a < 3; ++a) phasor[a] += p * std::polar(1.0, kTwoPi * r[a] / g.length(a));
  }
  std::array<double, 3> out{};
  for (int a = 0; a < 3; ++a) {
    // A density with no first harmonic along an axis is not localized there.
    if (!g.is_active(a) || std::abs(phasor[a]) <= kUnlocalized * weight) continue;
    double angle = std::arg(phasor[a]);
    if (angle < 0.0) angle += kTwoPi;
    out[a] = angle / kTwoPi * g.length(a);
  }
  return out;
}

double rms_width(const ComplexScalarField& psi) {
  const Grid& g = psi.grid();
  const auto c = centroid(psi);
  double weight = 0.0;
  double sum = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double p = std::norm(psi[n]);
    const auto r = g.position(n);
    double d2 = 0.0;
    for (int a = 0; a < 3; ++a) {
      if (!g.is_active(a)) continue;
      double d = r[a] - c[a];
      d -= g.length(a) * std::round(d / g.length(a));
      d2 += d * d;
    }
    weight += p;
    sum += p * d2;
  }
  return weight > 0.0 ? std::sqrt(sum / weight) : 0.0;
}

SpectralMoments spectral_moments(const ComplexScalarField& psi) {
  const Spectrum s = forward_transform(psi);
  double w = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    const double p = std::norm(s[n]);
    const double k = wavenumber_norm(s.grid().wavevector(n));
    w += p;
    m1 += p * k;
    m2 += p * k * k;
  }
  if (!(w > 0.0)) return {0.0, 0.0};
  const double mean = m1 / w;
  const double var = std::max(0.0, m2 / w - mean * mean);
  return {mean, mean > 0.0 ? std::sqrt(var) / mean : 0.0};
}

std::optional<std::string> localization_warning(const ComplexScalarField& psi) {
  const auto moments = spectral_moments(psi);
  if (!(moments.mean_wavenumber > 0.0)) return std::nullopt;
  const double wavelength = kTwoPi / moments.mean_wavenumber;
  const double width = rms_width(psi);
  if (width < 3.0 * wavelength) {
    return "packet rms width " + std::to_string(width) + " is below three wavelengths (" +
           std::to_string(3.0 * wavelength) + "); |psi|^2 is not a reliable position density at this scale";
  }
  return std::nullopt;
}

}  // namespace photonqm
