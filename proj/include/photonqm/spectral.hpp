#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include "photonqm/field.hpp"

namespace photonqm {

/// Fourier coefficients F(k) of a field on `grid`, in the synthesis
/// convention f(r) = sum_k F(k) exp(+i k.r). Coefficient order matches the
/// lattice storage order; the wavevector of entry i is grid.wavevector(i).
///
/// Normalization: F = (1/N) sum_r f(r) exp(-i k.r), so Parseval reads
/// integral |f|^2 dV = V * sum_k |F(k)|^2.
class Spectrum {
 public:
  Spectrum(Grid grid, std::vector<Complex> coefficients);

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return coefficients_.size(); }
  const Complex& operator[](std::size_t i) const { return coefficients_[i]; }

 private:
  Grid grid_;
  std::vector<Complex> coefficients_;
};

/// Relative power allowed in the top third of the k-lattice for any field
/// handed to a propagator.
inline constexpr double kBandLimitTolerance = 1e-12;

Spectrum forward_transform(const ComplexScalarField& f);
ComplexScalarField inverse_transform(const Spectrum& s);

/// sqrt(V * sum |F|^2); equals l2_norm of the synthesized field.
double spectral_l2_norm(const Spectrum& s);

/// Fraction of spectral power carried by modes in the top third of the
/// lattice. Zero for the zero field.
double band_limit_excess(const Spectrum& s);
double band_limit_excess(const ComplexScalarField& f);

/// Throws ValidationError naming `what` when the field carries more than
/// kBandLimitTolerance of its power in the top third of the lattice.
void require_band_limited(const ComplexScalarField& f, std::string_view what);
void require_band_limited(const VectorField3& v, std::string_view what);

/// Multiplies every Fourier coefficient by symbol(k) and synthesizes.
ComplexScalarField apply_symbol(const ComplexScalarField& f,
                                const std::function<Complex(const std::array<double, 3>&)>& symbol);

ComplexScalarField partial_derivative(const ComplexScalarField& f, int axis);
ComplexScalarField laplacian(const ComplexScalarField& f);
VectorField3 laplacian(const VectorField3& v);
VectorField3 gradient(const ComplexScalarField& f);
VectorField3 curl(const VectorField3& v);
ComplexScalarField divergence(const VectorField3& v);

/// ||div v|| / || |k| v ||: zero for solenoidal fields, one for purely
/// longitudinal ones. Zero for a field with no k != 0 content.
double relative_divergence(const VectorField3& v);

struct SolenoidalProjection {
  VectorField3 field;
  /// ||removed longitudinal part|| / ||input||
  double removed_fraction;
};

/// Removes the longitudinal part k^(k^.v) of every mode.
SolenoidalProjection project_solenoidal(const VectorField3& v);

}  // namespace photonqm
