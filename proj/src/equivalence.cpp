#include "photonqm/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mode_map.hpp"
#include "photonqm/spectral.hpp"

namespace photonqm {

namespace {

constexpr Complex kI{0.0, 1.0};

double sq(double x) { return x * x; }

// sqrt(power in modes with k_x or k_y != 0 / total power)
double off_axis_fraction(const RealScalarField& f) {
  const Spectrum s = forward_transform(to_complex(f));
  double off = 0.0, total = 0.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    const auto k = s.grid().wavevector(n);
    const double p = std::norm(s[n]);
    total += p;
    if (k[0] != 0.0 || k[1] != 0.0) off += p;
  }
  return total > 0.0 ? std::sqrt(off / total) : 0.0;
}

void require_transverse(const RealVectorField3& v, const char* name) {
  double transverse = 0.0, longitudinal = 0.0;
  for (std::size_t n = 0; n < v.grid().size(); ++n) {
    transverse = std::max(transverse, std::hypot(v[0][n], v[1][n]));
    longitudinal = std::max(longitudinal, std::abs(v[2][n]));
  }
  if (longitudinal > kLongitudinalTolerance * transverse) {
    throw ValidationError(std::string("significant longitudinal field: max |") + name + "_z| = " +
                          std::to_string(longitudinal) + " against max transverse " + std::to_string(transverse));
  }
}

// Column of sigma.V: column 0 is (V_z, V_x + i V_y), column 1 is
// (V_x - i V_y, -V_z).
TwoSpinorField sigma_column(const RealVectorField3& v, CircularBranch branch, Complex prefactor) {
  const Grid& g = v.grid();
  std::vector<Complex> up(g.size()), down(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    const double x = v[0][n], y = v[1][n], z = v[2][n];
    if (branch == CircularBranch::Positive) {
      up[n] = prefactor * Complex(x, -y);
      down[n] = prefactor * Complex(-z, 0.0);
    } else {
      up[n] = prefactor * Complex(z, 0.0);
      down[n] = prefactor * Complex(x, y);
    }
  }
  return {ComplexScalarField(g, std::move(up)), ComplexScalarField(g, std::move(down))};
}

SigmaMatrixField difference_quotient(const SigmaMatrixField& next, const SigmaMatrixField& prev, double dt) {
  const Complex s(1.0 / (2.0 * dt), 0.0);
  return {s * (next.m00 - prev.m00), s * (next.m01 - prev.m01), s * (next.m10 - prev.m10), s * (next.m11 - prev.m11)};
}

}  // namespace

double pauli_vector_identity_deviation(const Vector3c& a, const Vector3c& b) {
  const Matrix2c lhs = kI * sigma_dot(Vector3c(cross(a, b)));
  const Complex ab = a.transpose() * b;
  const Matrix2c rhs = sigma_dot(a) * sigma_dot(b) - ab * pauli::identity();
  return max_entry_difference(lhs, rhs);
}

SigmaMatrixField& SigmaMatrixField::operator+=(const SigmaMatrixField& o) {
  m00 += o.m00;
  m01 += o.m01;
  m10 += o.m10;
  m11 += o.m11;
  return *this;
}

SigmaMatrixField& SigmaMatrixField::operator*=(Complex s) {
  m00 *= s;
  m01 *= s;
  m10 *= s;
  m11 *= s;
  return *this;
}

double l2_norm(const SigmaMatrixField& m) {
  return std::sqrt(sq(l2_norm(m.m00)) + sq(l2_norm(m.m01)) + sq(l2_norm(m.m10)) + sq(l2_norm(m.m11)));
}

SigmaMatrixField sigma_dot_field(const VectorField3& v) {
  const Grid& g = v.grid();
  std::vector<Complex> a(g.size()), b(g.size()), c(g.size()), d(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    const Matrix2c m = sigma_dot(Vector3c(v[0][n], v[1][n], v[2][n]));
    a[n] = m(0, 0);
    b[n] = m(0, 1);
    c[n] = m(1, 0);
    d[n] = m(1, 1);
  }
  return {ComplexScalarField(g, std::move(a)), ComplexScalarField(g, std::move(b)), ComplexScalarField(g, std::move(c)),
          ComplexScalarField(g, std::move(d))};
}

SigmaMatrixField sigma_dot_field(const RealVectorField3& v) { return sigma_dot_field(to_complex(v)); }

SigmaMatrixField sigma_dot_momentum(const SigmaMatrixField& m) {
  auto out = detail::map_modes<4>({&m.m00, &m.m01, &m.m10, &m.m11},
                                  [](const std::array<double, 3>& k, std::array<Complex, 4>& e) {
                                    Matrix2c x;
                                    x << e[0], e[1], e[2], e[3];
                                    const Matrix2c y = sigma_dot(Vector3r(kHbar * k[0], kHbar * k[1], kHbar * k[2])) * x;
                                    e = {y(0, 0), y(0, 1), y(1, 0), y(1, 1)};
                                  });
  return {std::move(out[0]), std::move(out[1]), std::move(out[2]), std::move(out[3])};
}

SpinorFieldPair::SpinorFieldPair(TwoSpinorField phi, TwoSpinorField chi, Medium medium, double hbar_omega,
                                 CircularBranch branch)
    : phi_(std::move(phi)), chi_(std::move(chi)), medium_(medium), hbar_omega_(hbar_omega), branch_(branch) {
  if (!(phi_.grid() == chi_.grid())) throw ContractViolation("phi and chi spinors live on different grids");
  if (!(hbar_omega_ > 0.0)) throw DomainError("photon energy hbar*omega must be positive");
  medium_.validate();
}

void require_axial_transverse(const EMField& em) {
  require_transverse(em.electric(), "E");
  require_transverse(em.magnetic(), "H");
  static constexpr const char* kNames[2][3] = {{"E_x", "E_y", "E_z"}, {"H_x", "H_y", "H_z"}};
  const RealVectorField3* fields[2] = {&em.electric(), &em.magnetic()};
  for (int f = 0; f < 2; ++f) {
    for (int a = 0; a < 2; ++a) {
      const double off = off_axis_fraction((*fields[f])[a]);
      if (off > kOffAxisTolerance) {
        throw ValidationError(std::string("oblique propagation: ") + kNames[f][a] +
                              " has relative amplitude " + std::to_string(off) +
                              " in modes with k not parallel to z; the field-spinor mapping is established for k || z only");
      }
    }
  }
}

CircularBranch detect_circular_branch(const EMField& em) {
  require_axial_transverse(em);
  const RSField rs = rs_pack(em);
  if (l2_norm(rs.psi()) == 0.0) throw ValidationError("a zero field carries no circular polarization");
  const HelicityFractions h = helicity_fractions(rs.psi());
  const double minority = std::min(h.positive, h.negative);
  const double unassigned = std::abs(1.0 - h.positive - h.negative);
  if (minority > kHelicityPurityTolerance || unassigned > kHelicityPurityTolerance) {
    throw ValidationError("field is not circularly polarized: helicity fractions +" + std::to_string(h.positive) +
                          " / -" + std::to_string(h.negative));
  }
  return h.positive >= h.negative ? CircularBranch::Positive : CircularBranch::Negative;
}

SpinorFieldPair fields_to_spinors(const EMField& em, double hbar_omega, CircularBranch branch) {
  if (!(hbar_omega > 0.0)) throw DomainError("photon energy hbar*omega must be positive");
  require_transverse(em.electric(), "E");
  require_transverse(em.magnetic(), "H");
  const double denom = 8.0 * std::numbers::pi * hbar_omega;
  const Complex a(std::sqrt(em.medium().epsilon / denom), 0.0);
  const Complex b = kI * std::sqrt(em.medium().mu / denom);
  return SpinorFieldPair(sigma_column(em.electric(), branch, a), sigma_column(em.magnetic(), branch, b), em.medium(),
                         hbar_omega, branch);
}

SpinorFieldPair fields_to_spinors(const EMField& em, double hbar_omega) {
  return fields_to_spinors(em, hbar_omega, detect_circular_branch(em));
}

SigmaMaxwellResidual sigma_maxwell_residual(std::span<const EMField> series, double dt) {
  if (series.size() < 3) throw ContractViolation("Pauli-Maxwell residual needs at least 3 time samples");
  if (!(dt > 0.0)) throw ContractViolation("Pauli-Maxwell residual needs a positive sampling step");
  const Medium& medium = series.front().medium();
  double re = 0.0, rh = 0.0, se = 0.0, sh = 0.0;
  for (std::size_t j = 1; j + 1 < series.size(); ++j) {
    if (!(series[j].grid() == series.front().grid())) throw ContractViolation("time samples live on different grids");
    const SigmaMatrixField de =
        difference_quotient(sigma_dot_field(series[j + 1].electric()), sigma_dot_field(series[j - 1].electric()), dt);
    const SigmaMatrixField dh =
        difference_quotient(sigma_dot_field(series[j + 1].magnetic()), sigma_dot_field(series[j - 1].magnetic()), dt);
    const SigmaMatrixField ph = Complex(kSpeedOfLight, 0.0) * sigma_dot_momentum(sigma_dot_field(series[j].magnetic()));
    const SigmaMatrixField pe = Complex(kSpeedOfLight, 0.0) * sigma_dot_momentum(sigma_dot_field(series[j].electric()));
    const double e = l2_norm(Complex(kHbar * medium.epsilon, 0.0) * de + Complex(-1.0, 0.0) * ph);
    const double h = l2_norm(Complex(kHbar * medium.mu, 0.0) * dh + pe);
    re += e * e;
    rh += h * h;
    se += sq(l2_norm(ph));
    sh += sq(l2_norm(pe));
  }
  const double count = static_cast<double>(series.size() - 2);
  return {std::sqrt(re / count), std::sqrt(rh / count), std::sqrt(se / count), std::sqrt(sh / count)};
}

double dirac_maxwell_crosscheck(const EMField& em0, double t, double hbar_omega) {
  const CircularBranch branch = detect_circular_branch(em0);

  const EMField evolved = rs_unpack(evolve_rs(rs_pack(em0), t));
  const SpinorFieldPair a = fields_to_spinors(evolved, hbar_omega, branch);

  const SpinorFieldPair initial = fields_to_spinors(em0, hbar_omega, branch);
  const Spinor4Field b = evolve_coupled(initial.to_spinor4(), t);

  const double norm = std::hypot(l2_norm(a.phi()), l2_norm(a.chi()));
  if (norm == 0.0) return 0.0;
  const double diff = std::hypot(l2_norm(a.phi() - b.phi()), l2_norm(a.chi() - b.chi()));
  return diff / norm;
}

}  // namespace photonqm
