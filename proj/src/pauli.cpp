#include "photonqm/pauli.hpp"

namespace photonqm {

namespace pauli {

namespace {

Matrix2c make(std::complex<double> a, std::complex<double> b, std::complex<double> c, std::complex<double> d) {
  Matrix2c m;
  m << a, b, c, d;
  return m;
}

constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

const Matrix2c& identity() {
  static const Matrix2c m = Matrix2c::Identity();
  return m;
}

const Matrix2c& sigma_x() {
  static const Matrix2c m = make(0.0, 1.0, 1.0, 0.0);
  return m;
}

const Matrix2c& sigma_y() {
  static const Matrix2c m = make(0.0, -kI, kI, 0.0);
  return m;
}

const Matrix2c& sigma_z() {
  static const Matrix2c m = make(1.0, 0.0, 0.0, -1.0);
  return m;
}

}  // namespace pauli

Matrix2c sigma_dot(const Vector3c& p) {
  const std::complex<double> i{0.0, 1.0};
  Matrix2c m;
  m << p.z(), p.x() - i * p.y(), p.x() + i * p.y(), -p.z();
  return m;
}

Matrix2c sigma_dot(const Vector3r& p) { return sigma_dot(Vector3c(p.cast<std::complex<double>>())); }

double sigma_dot_squared_deviation(const Vector3r& p) {
  const Matrix2c s = sigma_dot(p);
  return max_entry_difference(s * s, p.squaredNorm() * pauli::identity());
}

}  // namespace photonqm
