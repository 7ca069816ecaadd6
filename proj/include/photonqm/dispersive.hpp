#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "photonqm/scalar_qm.hpp"
#include "photonqm/vector_maxwell.hpp"

namespace photonqm {

/// Refractive index n(omega) of a weakly dispersive medium with a carrier
/// frequency omega_0 at which the group index is frozen.
class IndexModel {
 public:
  static IndexModel constant(double n0, double carrier);
  /// n(omega) = n0 + slope (omega - reference)
  static IndexModel linear(double n0, double slope, double reference, double carrier);
  /// Piecewise-cubic (PCHIP) interpolation through at least 4 samples.
  static IndexModel tabulated(std::vector<double> omegas, std::vector<double> indices, double carrier);

  double carrier() const noexcept { return carrier_; }
  double index(double omega) const;
  /// dn/domega: analytic for constant and linear models, centered finite
  /// difference with h = 1e-6 omega for tabulated ones.
  double derivative(double omega) const;
  bool is_tabulated() const noexcept { return std::holds_alternative<Table>(form_); }

 private:
  struct Constant {
    double n0;
  };
  struct Linear {
    double n0, slope, reference;
  };
  struct Table {
    double lo, hi;
    std::function<double(double)> interpolant;
  };
  using Form = std::variant<Constant, Linear, Table>;

  IndexModel(Form form, double carrier);
  void require_in_range(double omega) const;

  Form form_;
  double carrier_;
};

/// n_g = n + omega dn/domega
double group_index(const IndexModel& model, double omega);

/// delta = omega (dn/domega) / n, the small parameter of the first-order
/// dispersion theory.
double dispersion_parameter(const IndexModel& model, double omega);

/// Medium seen by the carrier: epsilon = n(omega_0)^2, mu = 1.
Medium carrier_medium(const IndexModel& model);

/// Wave propagator with phase speed c/n_g(omega_0) for every mode.
ScalarPhotonState evolve_wave_dispersive(const ScalarPhotonState& state, double t, const IndexModel& model);

inline constexpr double kFrozenGroupIndexBandwidth = 0.10;

/// Warning when the packet's relative spectral width exceeds the range where
/// a frozen group index is a sensible approximation.
std::optional<std::string> bandwidth_warning(const ComplexScalarField& psi,
                                             double limit = kFrozenGroupIndexBandwidth);

/// Psi = n_g E + i H (mu = 1).
RSField rs_pack_dispersive(const EMField& em, const IndexModel& model);
/// E = Re(Psi)/n_g, H = Im(Psi).
EMField rs_unpack_dispersive(const RSField& rs, const IndexModel& model);

/// i dPsi/dt = (c/n_g) curl Psi, solved by per-mode rotation with
/// theta = (c/n_g)|k|t. Requires mu = 1.
RSField evolve_rs_dispersive(const RSField& rs, double t, const IndexModel& model);

/// Residuals of (n_g^2/c) dE/dt = curl H and -(1/c) dH/dt = curl E.
MaxwellResidual dispersive_maxwell_residual(std::span<const EMField> series, double dt, const IndexModel& model);

/// U = n_g^2 E0^2 / 8pi = H0^2 / 8pi, I = U v_g = c n_g E0^2 / 8pi.
struct GroupIndexEnergyDensity {
  double electric_form;
  double magnetic_form;
  double intensity;
  /// H0 = n_g E0 within 1e-12 relative, the condition for the two forms to agree.
  bool consistent;
};
GroupIndexEnergyDensity energy_density_group_index(double e0, double h0, const IndexModel& model, double omega);

/// Textbook dispersive-medium values with epsilon = n^2, mu = 1:
/// U = [d(omega eps)/domega E0^2 + mu H0^2] / 16pi = n n_g E0^2 / 8pi
///   = n_g H0^2 / (8 pi n),  I = c n E0^2 / 8pi.
struct TextbookEnergyDensity {
  double bracket_form;
  double electric_form;
  double magnetic_form;
  double intensity;
};
TextbookEnergyDensity energy_density_landau(double e0, double h0, const IndexModel& model, double omega);

/// The two electric energy densities compared to first order in dn/domega:
/// (n^2 + 2 n omega n') E0^2 / 16pi against n_g^2 E0^2 / 16pi; they differ
/// by exactly (omega n')^2 E0^2 / 16pi.
struct ElectricEnergyExpansion {
  double textbook;
  double group_index;
  double difference;
};
ElectricEnergyExpansion electric_energy_expansion(const IndexModel& model, double omega, double e0);

/// |U_E(group index) - U_E(textbook)| / U_E(textbook) = delta^2 / (1 + 2 delta).
double first_order_agreement_check(const IndexModel& model, double omega, double e0);

struct AgreementSample {
  double delta;
  double ratio;
};

/// first_order_agreement_check over log-spaced delta in [lo, hi], each from
/// the linear model n(w) = n0 + (delta n0 / omega)(w - omega) evaluated at
/// w = omega.
std::vector<AgreementSample> first_order_sweep(double n0, double omega, double lo, double hi, std::size_t samples);

/// Least-squares slope of log(ratio) against log(delta).
double loglog_slope(std::span<const AgreementSample> sweep);

}  // namespace photonqm
