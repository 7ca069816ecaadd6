#include "photonqm/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "photonqm/errors.hpp"

namespace photonqm {

namespace {

void require_axis(std::size_t points, double length, const char* axis) {
  if (points < Grid::kMinPoints) {
    throw ContractViolation("grid axis " + std::string(axis) + " needs at least " +
                            std::to_string(Grid::kMinPoints) + " points, got " + std::to_string(points));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw ContractViolation("grid axis " + std::string(axis) + " needs a positive finite length");
  }
}

}  // namespace

Grid::Grid(int dims, const std::array<std::size_t, 3>& shape, const std::array<double, 3>& lengths)
    : dims_(dims), shape_(shape), lengths_(lengths) {}

Grid Grid::line(std::size_t points, double length) {
  require_axis(points, length, "z");
  return Grid(1, {1, 1, points}, {1.0, 1.0, length});
}

Grid Grid::box(std::size_t points, double length) { return box({points, points, points}, {length, length, length}); }

Grid Grid::box(const std::array<std::size_t, 3>& points, const std::array<double, 3>& lengths) {
  require_axis(points[0], lengths[0], "x");
  require_axis(points[1], lengths[1], "y");
  require_axis(points[2], lengths[2], "z");
  return Grid(3, points, lengths);
}

std::array<std::size_t, 3> Grid::unravel(std::size_t flat) const noexcept {
  const std::size_t iz = flat % shape_[2];
  const std::size_t rest = flat / shape_[2];
  return {rest / shape_[1], rest % shape_[1], iz};
}

std::array<double, 3> Grid::position(std::size_t flat) const {
  const auto idx = unravel(flat);
  return {coordinate(0, idx[0]), coordinate(1, idx[1]), coordinate(2, idx[2])};
}

long Grid::signed_mode(int axis, std::size_t index) const {
  const auto n = static_cast<long>(shape_.at(axis));
  const auto i = static_cast<long>(index);
  return i < (n + 1) / 2 ? i : i - n;
}

double Grid::wavenumber(int axis, std::size_t index) const {
  if (!is_active(axis)) return 0.0;
  return 2.0 * std::numbers::pi * static_cast<double>(signed_mode(axis, index)) / lengths_.at(axis);
}

std::array<double, 3> Grid::wavevector(std::size_t flat) const {
  const auto idx = unravel(flat);
  return {wavenumber(0, idx[0]), wavenumber(1, idx[1]), wavenumber(2, idx[2])};
}

double Grid::max_wavenumber_norm() const {
  double sum = 0.0;
  for (int a = 0; a < 3; ++a) {
    if (!is_active(a)) continue;
    const double kmax = std::numbers::pi * static_cast<double>(shape_[a]) / lengths_[a];
    sum += kmax * kmax;
  }
  return std::sqrt(sum);
}

bool Grid::in_top_third(std::size_t flat) const {
  const auto idx = unravel(flat);
  for (int a = 0; a < 3; ++a) {
    if (!is_active(a)) continue;
    const long j = signed_mode(a, idx[a]);
    if (3 * std::labs(j) > static_cast<long>(shape_[a])) return true;
  }
  return false;
}

}  // namespace photonqm
