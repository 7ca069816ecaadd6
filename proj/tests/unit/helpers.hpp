#pragma once

#include <cmath>
#include <numbers>

#include "photonqm/field.hpp"
#include "photonqm/vector_maxwell.hpp"

namespace testing {

using photonqm::Complex;
using photonqm::ComplexScalarField;
using photonqm::Grid;
using photonqm::RealScalarField;
using photonqm::RealVectorField3;

inline constexpr double kPi = std::numbers::pi;

inline ComplexScalarField plane_mode(const Grid& g, double k) {
  return ComplexScalarField::sample(g, [k](double, double, double z) { return std::polar(1.0, k * z); });
}

inline double mode_k(const Grid& g, long j) { return 2.0 * kPi * static_cast<double>(j) / g.length(2); }

// Periodic Gaussian along z.
inline double periodic_gaussian(double z, double center, double width, double length) {
  double s = 0.0;
  for (int m = -3; m <= 3; ++m) {
    const double d = z - center - m * length;
    s += std::exp(-d * d / (2.0 * width * width));
  }
  return s;
}

// E = E0 (cos kz, -h sin kz, 0) travelling along +z with H = sqrt(eps/mu) z x E.
inline photonqm::EMField circular_plane_wave(const Grid& g, const photonqm::Medium& m, long mode, int helicity,
                                             double e0 = 1.0) {
  const double k = mode_k(g, mode);
  const double z0 = std::sqrt(m.epsilon / m.mu);
  const auto ex = RealScalarField::sample(g, [&](double, double, double z) { return e0 * std::cos(k * z); });
  const auto ey = RealScalarField::sample(g, [&](double, double, double z) { return -helicity * e0 * std::sin(k * z); });
  const auto zero = RealScalarField::zeros(g);
  return photonqm::EMField(RealVectorField3(ex, ey, zero), RealVectorField3((-z0) * ey, z0 * ex, zero), m);
}

inline double em_distance(const photonqm::EMField& a, const photonqm::EMField& b) {
  return std::hypot(photonqm::l2_norm(a.electric() - b.electric()), photonqm::l2_norm(a.magnetic() - b.magnetic()));
}

}  // namespace testing
