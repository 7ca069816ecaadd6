#include "photonqm/field.hpp"

#include <algorithm>

namespace photonqm {

Complex inner_product(const ComplexScalarField& a, const ComplexScalarField& b) {
  if (!(a.grid() == b.grid())) throw ContractViolation("inner product of fields on different grids");
  Complex sum{};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum * a.grid().cell_volume();
}

ComplexScalarField to_complex(const RealScalarField& f) {
  return ComplexScalarField(f.grid(), std::vector<Complex>(f.values().begin(), f.values().end()));
}

VectorField3 to_complex(const RealVectorField3& v) { return {to_complex(v[0]), to_complex(v[1]), to_complex(v[2])}; }

namespace {

template <typename Fn>
RealScalarField map_real(const ComplexScalarField& f, Fn fn) {
  std::vector<double> out(f.size());
  std::transform(f.values().begin(), f.values().end(), out.begin(), fn);
  return RealScalarField(f.grid(), std::move(out));
}

}  // namespace

RealScalarField real_part(const ComplexScalarField& f) {
  return map_real(f, [](const Complex& z) { return z.real(); });
}

RealScalarField imag_part(const ComplexScalarField& f) {
  return map_real(f, [](const Complex& z) { return z.imag(); });
}

RealScalarField modulus(const ComplexScalarField& f) {
  return map_real(f, [](const Complex& z) { return std::abs(z); });
}

double max_abs_difference(const ComplexScalarField& a, const ComplexScalarField& b) {
  if (!(a.grid() == b.grid())) throw ContractViolation("comparing fields on different grids");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace photonqm
