#include "photonqm/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace photonqm {

namespace {

// FFTW's planner is not thread-safe; executing an existing plan on new arrays
// is. Plans are created once per (shape, direction) under a lock and reused.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const std::array<std::size_t, 3>& shape, int sign) {
    const Key key{shape[0], shape[1], shape[2], sign};
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const std::size_t n = shape[0] * shape[1] * shape[2];
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    const int dims[3] = {static_cast<int>(shape[0]), static_cast<int>(shape[1]), static_cast<int>(shape[2])};
    fftw_plan plan = fftw_plan_dft(3, dims, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, int>;
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

std::vector<Complex> execute(const Grid& grid, const std::vector<Complex>& in, int sign) {
  std::vector<Complex> out(in.size());
  fftw_plan plan = plan_cache().get(grid.shape(), sign);
  // new-array execute never writes to the input for out-of-place complex DFTs
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data()));
  fftw_execute_dft(plan, src, reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

Spectrum multiply(const Spectrum& s, const std::function<Complex(const std::array<double, 3>&)>& symbol) {
  std::vector<Complex> c = s.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= symbol(s.grid().wavevector(i));
  return Spectrum(s.grid(), std::move(c));
}

void require_3d(const Grid& g, const char* op) {
  if (g.dims() != 3) throw UnsupportedError(std::string(op) + " requires a 3-D grid");
}

}  // namespace

Spectrum::Spectrum(Grid grid, std::vector<Complex> coefficients)
    : grid_(std::move(grid)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != grid_.size()) {
    throw ContractViolation("spectrum has " + std::to_string(coefficients_.size()) + " coefficients but grid has " +
                            std::to_string(grid_.size()) + " points");
  }
}

Spectrum forward_transform(const ComplexScalarField& f) {
  auto c = execute(f.grid(), f.values(), FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(c.size());
  for (auto& v : c) v *= scale;
  return Spectrum(f.grid(), std::move(c));
}

ComplexScalarField inverse_transform(const Spectrum& s) {
  return ComplexScalarField(s.grid(), execute(s.grid(), s.coefficients(), FFTW_BACKWARD));
}

double spectral_l2_norm(const Spectrum& s) {
  double sum = 0.0;
  for (const auto& c : s.coefficients()) sum += std::norm(c);
  return std::sqrt(sum * s.grid().volume());
}

double band_limit_excess(const Spectrum& s) {
  double total = 0.0;
  double top = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double p = std::norm(s[i]);
    total += p;
    if (s.grid().in_top_third(i)) top += p;
  }
  return total > 0.0 ? top / total : 0.0;
}

double band_limit_excess(const ComplexScalarField& f) { return band_limit_excess(forward_transform(f)); }

void require_band_limited(const ComplexScalarField& f, std::string_view what) {
  const double excess = band_limit_excess(f);
  if (excess >= kBandLimitTolerance) {
    throw ValidationError("band limit violated for " + std::string(what) + ": relative power " +
                          std::to_string(excess) + " in the top third of the k-lattice");
  }
}

void require_band_limited(const VectorField3& v, std::string_view what) {
  static constexpr const char* kAxis[3] = {"x", "y", "z"};
  for (int a = 0; a < 3; ++a) require_band_limited(v[a], std::string(what) + "." + kAxis[a]);
}

ComplexScalarField apply_symbol(const ComplexScalarField& f,
                                const std::function<Complex(const std::array<double, 3>&)>& symbol) {
  return inverse_transform(multiply(forward_transform(f), symbol));
}

ComplexScalarField partial_derivative(const ComplexScalarField& f, int axis) {
  if (axis < 0 || axis > 2) throw ContractViolation("axis must be 0, 1 or 2");
  return apply_symbol(f, [axis](const std::array<double, 3>& k) { return Complex(0.0, k[axis]); });
}

ComplexScalarField laplacian(const ComplexScalarField& f) {
  return apply_symbol(f, [](const std::array<double, 3>& k) {
    return Complex(-(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]), 0.0);
  });
}

VectorField3 laplacian(const VectorField3& v) { return {laplacian(v[0]), laplacian(v[1]), laplacian(v[2])}; }

VectorField3 gradient(const ComplexScalarField& f) {
  require_3d(f.grid(), "gradient");
  const Spectrum s = forward_transform(f);
  auto component = [&](int a) {
    return inverse_transform(multiply(s, [a](const std::array<double, 3>& k) { return Complex(0.0, k[a]); }));
  };
  return {component(0), component(1), component(2)};
}

VectorField3 curl(const VectorField3& v) {
  require_3d(v.grid(), "curl");
  const Spectrum sx = forward_transform(v[0]);
  const Spectrum sy = forward_transform(v[1]);
  const Spectrum sz = forward_transform(v[2]);
  const Grid& g = v.grid();
  std::vector<Complex> cx(g.size()), cy(g.size()), cz(g.size());
  const Complex i{0.0, 1.0};
  for (std::size_t n = 0; n < g.size(); ++n) {
    const auto k = g.wavevector(n);
    cx[n] = i * (k[1] * sz[n] - k[2] * sy[n]);
    cy[n] = i * (k[2] * sx[n] - k[0] * sz[n]);
    cz[n] = i * (k[0] * sy[n] - k[1] * sx[n]);
  }
  return {inverse_transform(Spectrum(g, std::move(cx))), inverse_transform(Spectrum(g, std::move(cy))),
          inverse_transform(Spectrum(g, std::move(cz)))};
}

ComplexScalarField divergence(const VectorField3& v) {
  require_3d(v.grid(), "divergence");
  const Spectrum sx = forward_transform(v[0]);
  const Spectrum sy = forward_transform(v[1]);
  const Spectrum sz = forward_transform(v[2]);
  const Grid& g = v.grid();
  std::vector<Complex> c(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    const auto k = g.wavevector(n);
    c[n] = Complex(0.0, 1.0) * (k[0] * sx[n] + k[1] * sy[n] + k[2] * sz[n]);
  }
  return inverse_transform(Spectrum(g, std::move(c)));
}

double relative_divergence(const VectorField3& v) {
  require_3d(v.grid(), "divergence");
  const Spectrum sx = forward_transform(v[0]);
  const Spectrum sy = forward_transform(v[1]);
  const Spectrum sz = forward_transform(v[2]);
  double longitudinal = 0.0;
  double total = 0.0;
  for (std::size_t n = 0; n < sx.size(); ++n) {
    const auto k = v.grid().wavevector(n);
    longitudinal += std::norm(k[0] * sx[n] + k[1] * sy[n] + k[2] * sz[n]);
    total += (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]) * (std::norm(sx[n]) + std::norm(sy[n]) + std::norm(sz[n]));
  }
  return total > 0.0 ? std::sqrt(longitudinal / total) : 0.0;
}

SolenoidalProjection project_solenoidal(const VectorField3& v) {
  require_3d(v.grid(), "solenoidal projection");
  const Grid& g = v.grid();
  std::array<std::vector<Complex>, 3> c{forward_transform(v[0]).coefficients(), forward_transform(v[1]).coefficients(),
                                        forward_transform(v[2]).coefficients()};
  double removed = 0.0;
  double total = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    for (int a = 0; a < 3; ++a) total += std::norm(c[a][n]);
    const auto k = g.wavevector(n);
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    if (k2 == 0.0) continue;
    const Complex along = (k[0] * c[0][n] + k[1] * c[1][n] + k[2] * c[2][n]) / k2;
    for (int a = 0; a < 3; ++a) {
      const Complex part = along * k[a];
      removed += std::norm(part);
      c[a][n] -= part;
    }
  }
  return {VectorField3(inverse_transform(Spectrum(g, std::move(c[0]))), inverse_transform(Spectrum(g, std::move(c[1]))),
                       inverse_transform(Spectrum(g, std::move(c[2])))),
          total > 0.0 ? std::sqrt(removed / total) : 0.0};
}

}  // namespace photonqm
