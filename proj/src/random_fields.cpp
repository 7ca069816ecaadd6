#include "photonqm/random_fields.hpp"

#include <cstdlib>

#include "photonqm/spectral.hpp"

namespace photonqm {

namespace {

bool in_random_band(const Grid& g, std::size_t flat) {
  const auto idx = g.unravel(flat);
  for (int a = 0; a < 3; ++a) {
    if (!g.is_active(a)) continue;
    if (4 * std::labs(g.signed_mode(a, idx[a])) > static_cast<long>(g.points(a))) return false;
  }
  return true;
}

}  // namespace

ComplexScalarField random_band_limited(const Grid& grid, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> c(grid.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double re = normal(rng);
    const double im = normal(rng);
    if (in_random_band(grid, n)) c[n] = Complex(re, im);
  }
  return inverse_transform(Spectrum(grid, std::move(c)));
}

RealScalarField random_band_limited_real(const Grid& grid, std::mt19937_64& rng) {
  // The band |j| <= N/4 is symmetric under j -> -j, so the real part keeps the
  // band limit.
  return real_part(random_band_limited(grid, rng));
}

VectorField3 random_band_limited_vector(const Grid& grid, std::mt19937_64& rng) {
  auto x = random_band_limited(grid, rng);
  auto y = random_band_limited(grid, rng);
  auto z = random_band_limited(grid, rng);
  return {std::move(x), std::move(y), std::move(z)};
}

VectorField3 random_solenoidal(const Grid& grid, std::mt19937_64& rng) {
  return project_solenoidal(random_band_limited_vector(grid, rng)).field;
}

}  // namespace photonqm
