#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace photonqm {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector3r = Eigen::Vector3d;
using Vector3c = Eigen::Vector3cd;

namespace pauli {

const Matrix2c& identity();
const Matrix2c& sigma_x();
const Matrix2c& sigma_y();
const Matrix2c& sigma_z();

}  // namespace pauli

/// sigma . p = [[p_z, p_x - i p_y], [p_x + i p_y, -p_z]]. Linear in p, so
/// complex vectors are accepted as well.
Matrix2c sigma_dot(const Vector3c& p);
Matrix2c sigma_dot(const Vector3r& p);

/// Bilinear cross product. Eigen's cross() conjugates complex operands,
/// which is not the vector identity used here.
inline Vector3c cross(const Vector3c& a, const Vector3c& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

/// Largest entry of |(sigma.p)^2 - |p|^2 I|.
double sigma_dot_squared_deviation(const Vector3r& p);

/// Largest entry modulus of a matrix difference; the deviation measure used
/// by every algebraic check.
template <typename A, typename B>
double max_entry_difference(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace photonqm
