#pragma once

// Internal helper: transform N component fields, let a callback rewrite each
// mode's N coefficients in place, transform back.

#include <array>
#include <cstddef>
#include <vector>

#include "photonqm/spectral.hpp"

namespace photonqm::detail {

template <std::size_t N, typename Fn>
std::array<ComplexScalarField, N> map_modes(const std::array<const ComplexScalarField*, N>& in, Fn&& fn) {
  const Grid& g = in[0]->grid();
  std::array<std::vector<Complex>, N> c;
  for (std::size_t a = 0; a < N; ++a) {
    if (!(in[a]->grid() == g)) throw ContractViolation("component fields live on different grids");
    c[a] = forward_transform(*in[a]).coefficients();
  }
  std::array<Complex, N> mode;
  for (std::size_t n = 0; n < g.size(); ++n) {
    for (std::size_t a = 0; a < N; ++a) mode[a] = c[a][n];
    fn(g.wavevector(n), mode);
    for (std::size_t a = 0; a < N; ++a) c[a][n] = mode[a];
  }
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<ComplexScalarField, N>{inverse_transform(Spectrum(g, std::move(c[I])))...};
  }(std::make_index_sequence<N>{});
}

}  // namespace photonqm::detail
