#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "photonqm/errors.hpp"
#include "photonqm/grid.hpp"

namespace photonqm {

using Complex = std::complex<double>;

/// Samples of a scalar quantity on every point of a Grid.
template <typename T>
class ScalarField {
 public:
  using value_type = T;

  ScalarField(Grid grid, std::vector<T> values) : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
      throw ContractViolation("field has " + std::to_string(values_.size()) + " values but grid has " +
                              std::to_string(grid_.size()) + " points");
    }
  }

  static ScalarField zeros(const Grid& grid) { return ScalarField(grid, std::vector<T>(grid.size(), T{})); }

  /// Evaluates fn(x, y, z) at every lattice point.
  template <typename Fn>
  static ScalarField sample(const Grid& grid, Fn&& fn) {
    std::vector<T> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto r = grid.position(i);
      v[i] = static_cast<T>(fn(r[0], r[1], r[2]));
    }
    return ScalarField(grid, std::move(v));
  }

  const Grid& grid() const noexcept { return grid_; }
  const std::vector<T>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const T& operator[](std::size_t i) const { return values_[i]; }

  ScalarField& operator+=(const ScalarField& o) {
    require_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  ScalarField& operator-=(const ScalarField& o) {
    require_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  ScalarField& operator*=(T s) {
    for (auto& v : values_) v *= s;
    return *this;
  }

  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(T s, ScalarField a) { return a *= s; }

 private:
  void require_same_grid(const ScalarField& o) const {
    if (!(grid_ == o.grid_)) throw ContractViolation("fields live on different grids");
  }

  Grid grid_;
  std::vector<T> values_;
};

using ComplexScalarField = ScalarField<Complex>;
using RealScalarField = ScalarField<double>;

/// Three component fields (x, y, z) sharing one 3-D grid.
template <typename T>
class VectorField {
 public:
  using component_type = ScalarField<T>;

  VectorField(ScalarField<T> x, ScalarField<T> y, ScalarField<T> z)
      : components_{std::move(x), std::move(y), std::move(z)} {
    if (!(components_[0].grid() == components_[1].grid()) || !(components_[0].grid() == components_[2].grid())) {
      throw ContractViolation("vector field components live on different grids");
    }
    if (components_[0].grid().dims() != 3) {
      throw UnsupportedError("vector fields require a 3-D grid");
    }
  }

  static VectorField zeros(const Grid& grid) {
    return VectorField(ScalarField<T>::zeros(grid), ScalarField<T>::zeros(grid), ScalarField<T>::zeros(grid));
  }

  const Grid& grid() const noexcept { return components_[0].grid(); }
  const ScalarField<T>& operator[](int axis) const { return components_.at(axis); }
  const std::array<ScalarField<T>, 3>& components() const noexcept { return components_; }

  VectorField& operator+=(const VectorField& o) {
    for (int a = 0; a < 3; ++a) components_[a] += o.components_[a];
    return *this;
  }
  VectorField& operator-=(const VectorField& o) {
    for (int a = 0; a < 3; ++a) components_[a] -= o.components_[a];
    return *this;
  }
  VectorField& operator*=(T s) {
    for (auto& c : components_) c *= s;
    return *this;
  }
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(T s, VectorField a) { return a *= s; }

 private:
  std::array<ScalarField<T>, 3> components_;
};

using VectorField3 = VectorField<Complex>;
using RealVectorField3 = VectorField<double>;

/// sqrt(integral |f|^2 dV) with the spacing-weighted (periodic trapezoid) rule.
template <typename T>
double l2_norm(const ScalarField<T>& f) {
  double sum = 0.0;
  for (const auto& v : f.values()) sum += std::norm(v);
  return std::sqrt(sum * f.grid().cell_volume());
}

template <typename T>
double l2_norm(const VectorField<T>& v) {
  double sum = 0.0;
  for (const auto& c : v.components()) {
    const double n = l2_norm(c);
    sum += n * n;
  }
  return std::sqrt(sum);
}

/// integral conj(a) b dV
Complex inner_product(const ComplexScalarField& a, const ComplexScalarField& b);

ComplexScalarField to_complex(const RealScalarField& f);
VectorField3 to_complex(const RealVectorField3& v);
RealScalarField real_part(const ComplexScalarField& f);
RealScalarField imag_part(const ComplexScalarField& f);
RealScalarField modulus(const ComplexScalarField& f);

/// Largest |a_i - b_i| over all samples.
double max_abs_difference(const ComplexScalarField& a, const ComplexScalarField& b);

}  // namespace photonqm
