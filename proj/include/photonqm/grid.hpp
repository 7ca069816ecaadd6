#pragma once

#include <array>
#include <cstddef>

namespace photonqm {

/// Speed of light and reduced Planck constant in the internal natural units.
/// Gaussian-unit factors such as 8*pi are kept explicit in every formula.
inline constexpr double kSpeedOfLight = 1.0;
inline constexpr double kHbar = 1.0;

/// Uniform periodic lattice in 1 or 3 dimensions.
///
/// Storage is always three axes (x, y, z) in row-major order with z fastest.
/// A 1-D grid lives on the z axis; its x and y axes hold a single point of
/// unit length so that cell volumes and integrals reduce to plain dz sums.
///
/// Wavenumbers follow the DFT frequency set k_j = 2*pi*j/L with
/// j in [-N/2, N/2), matching the synthesis convention
/// f(r) = sum_k F(k) exp(+i k.r).
class Grid {
 public:
  static constexpr std::size_t kMinPoints = 4;

  static Grid line(std::size_t points, double length);
  static Grid box(std::size_t points, double length);
  static Grid box(const std::array<std::size_t, 3>& points, const std::array<double, 3>& lengths);

  int dims() const noexcept { return dims_; }
  const std::array<std::size_t, 3>& shape() const noexcept { return shape_; }
  const std::array<double, 3>& lengths() const noexcept { return lengths_; }
  std::size_t points(int axis) const { return shape_.at(axis); }
  double length(int axis) const { return lengths_.at(axis); }
  double spacing(int axis) const { return lengths_.at(axis) / static_cast<double>(shape_.at(axis)); }
  bool is_active(int axis) const { return shape_.at(axis) > 1; }

  std::size_t size() const noexcept { return shape_[0] * shape_[1] * shape_[2]; }
  double cell_volume() const { return spacing(0) * spacing(1) * spacing(2); }
  double volume() const noexcept { return lengths_[0] * lengths_[1] * lengths_[2]; }

  std::size_t flat_index(std::size_t ix, std::size_t iy, std::size_t iz) const noexcept {
    return (ix * shape_[1] + iy) * shape_[2] + iz;
  }
  std::array<std::size_t, 3> unravel(std::size_t flat) const noexcept;

  double coordinate(int axis, std::size_t index) const { return spacing(axis) * static_cast<double>(index); }
  std::array<double, 3> position(std::size_t flat) const;

  /// Signed mode number j in [-N/2, N/2) for lattice index i along an axis.
  long signed_mode(int axis, std::size_t index) const;
  double wavenumber(int axis, std::size_t index) const;
  std::array<double, 3> wavevector(std::size_t flat) const;
  /// Largest |k| present on the lattice.
  double max_wavenumber_norm() const;

  /// True when the mode at `flat` lies in the upper third of the k-lattice
  /// along any active axis (|j| > N/3). Initial data must carry no power
  /// there.
  bool in_top_third(std::size_t flat) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  Grid(int dims, const std::array<std::size_t, 3>& shape, const std::array<double, 3>& lengths);

  int dims_;
  std::array<std::size_t, 3> shape_;
  std::array<double, 3> lengths_;
};

}  // namespace photonqm
