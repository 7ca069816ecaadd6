#pragma once

#include <cmath>
#include <string>

#include "photonqm/errors.hpp"
#include "photonqm/grid.hpp"

namespace photonqm {

/// Homogeneous, lossless magneto-dielectric: real epsilon, mu > 0 and
/// n = sqrt(epsilon * mu).
struct Medium {
  double epsilon = 1.0;
  double mu = 1.0;

  static Medium vacuum() { return {1.0, 1.0}; }
  /// Non-magnetic medium with refractive index n (epsilon = n^2, mu = 1).
  static Medium dielectric(double n) { return {n * n, 1.0}; }

  double index() const { return std::sqrt(epsilon * mu); }
  /// Phase velocity c/n.
  double phase_speed() const { return kSpeedOfLight / index(); }

  void validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
      throw DomainError("medium epsilon must be positive and finite, got " + std::to_string(epsilon));
    }
    if (!(mu > 0.0) || !std::isfinite(mu)) {
      throw DomainError("medium mu must be positive and finite, got " + std::to_string(mu));
    }
  }

  friend bool operator==(const Medium&, const Medium&) = default;
};

}  // namespace photonqm
