#pragma once

#include <random>

#include "photonqm/field.hpp"

namespace photonqm {

/// Seeded generators for band-limited test and verification fields. Modes
/// with |j| > N/4 on any active axis are left empty, so the results clear the
/// top-third band limit with margin.
ComplexScalarField random_band_limited(const Grid& grid, std::mt19937_64& rng);
/// Real-valued variant (Hermitian-symmetric spectrum).
RealScalarField random_band_limited_real(const Grid& grid, std::mt19937_64& rng);
VectorField3 random_band_limited_vector(const Grid& grid, std::mt19937_64& rng);
/// Random band-limited field with the longitudinal part of every mode removed.
VectorField3 random_solenoidal(const Grid& grid, std::mt19937_64& rng);

}  // namespace photonqm
