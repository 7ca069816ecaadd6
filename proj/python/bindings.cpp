#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "photonqm/dispersive.hpp"
#include "photonqm/equivalence.hpp"
#include "photonqm/runner.hpp"
#include "photonqm/scalar_qm.hpp"
#include "photonqm/scenario.hpp"
#include "photonqm/spectral.hpp"
#include "photonqm/spinor_dirac.hpp"
#include "photonqm/vector_maxwell.hpp"
#include "photonqm/verify.hpp"

namespace py = pybind11;
using namespace photonqm;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;
using RArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

// 1-D grids map to flat arrays, 3-D grids to (nx, ny, nz).
std::vector<py::ssize_t> field_shape(const Grid& g) {
  if (g.dims() == 1) return {static_cast<py::ssize_t>(g.size())};
  const auto& s = g.shape();
  return {static_cast<py::ssize_t>(s[0]), static_cast<py::ssize_t>(s[1]), static_cast<py::ssize_t>(s[2])};
}

template <typename T>
std::vector<T> take(const py::array_t<T, py::array::c_style | py::array::forcecast>& a, std::size_t offset,
                    std::size_t count) {
  if (static_cast<std::size_t>(a.size()) < offset + count) throw ContractViolation("array is too small for the grid");
  return std::vector<T>(a.data() + offset, a.data() + offset + count);
}

ComplexScalarField scalar_in(const Grid& g, const CArray& a) {
  if (static_cast<std::size_t>(a.size()) != g.size()) {
    throw ContractViolation("expected " + std::to_string(g.size()) + " samples, got " + std::to_string(a.size()));
  }
  return ComplexScalarField(g, take(a, 0, g.size()));
}

CArray scalar_out(const ComplexScalarField& f) {
  CArray out(field_shape(f.grid()));
  std::copy(f.values().begin(), f.values().end(), out.mutable_data());
  return out;
}

// Stacked components: leading axis of length `count`.
template <typename T>
void require_stack(const Grid& g, const py::array_t<T, py::array::c_style | py::array::forcecast>& a, std::size_t count) {
  if (static_cast<std::size_t>(a.size()) != count * g.size() || a.ndim() < 1 ||
      static_cast<std::size_t>(a.shape(0)) != count) {
    throw ContractViolation("expected an array of shape (" + std::to_string(count) + ", ...) with " +
                            std::to_string(count * g.size()) + " samples");
  }
}

RealVectorField3 vector_in(const Grid& g, const RArray& a) {
  require_stack(g, a, 3);
  const std::size_t n = g.size();
  return RealVectorField3(RealScalarField(g, take(a, 0, n)), RealScalarField(g, take(a, n, n)),
                          RealScalarField(g, take(a, 2 * n, n)));
}

template <typename T, typename Field>
py::array_t<T> stack_out(const std::vector<const Field*>& parts) {
  auto shape = field_shape(parts.front()->grid());
  shape.insert(shape.begin(), static_cast<py::ssize_t>(parts.size()));
  py::array_t<T> out(shape);
  T* dst = out.mutable_data();
  for (const auto* p : parts) dst = std::copy(p->values().begin(), p->values().end(), dst);
  return out;
}

RArray vector_out(const RealVectorField3& v) { return stack_out<double>(std::vector{&v[0], &v[1], &v[2]}); }

TwoSpinorField spinor_in(const Grid& g, const CArray& a) {
  require_stack(g, a, 2);
  const std::size_t n = g.size();
  return TwoSpinorField(ComplexScalarField(g, take(a, 0, n)), ComplexScalarField(g, take(a, n, n)));
}

CArray spinor_out(const TwoSpinorField& s) { return stack_out<Complex>(std::vector{&s.upper(), &s.lower()}); }

py::dict row_dict(const ObservableRow& r) {
  py::dict d;
  d["t"] = r.t;
  d["norm"] = r.norm;
  d["energy_electric"] = r.energy_electric;
  d["energy_magnetic"] = r.energy_magnetic;
  d["centroid"] = r.centroid;
  d["helicity_plus"] = r.helicity_plus;
  d["helicity_minus"] = r.helicity_minus;
  d["invariant_drift"] = r.invariant_drift;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Photon wave mechanics on periodic grids";

  auto base = py::register_exception<Error>(m, "PhotonqmError", PyExc_RuntimeError);
  py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<StabilityError>(m, "StabilityError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<Grid>(m, "Grid")
      .def_static("line", &Grid::line, py::arg("points"), py::arg("length"))
      .def_static("box", py::overload_cast<const std::array<std::size_t, 3>&, const std::array<double, 3>&>(&Grid::box),
                  py::arg("points"), py::arg("lengths"))
      .def_property_readonly("dims", &Grid::dims)
      .def_property_readonly("shape", &Grid::shape)
      .def_property_readonly("lengths", &Grid::lengths)
      .def_property_readonly("size", &Grid::size)
      .def_property_readonly("field_shape", [](const Grid& g) { return py::tuple(py::cast(field_shape(g))); })
      .def("spacing", &Grid::spacing, py::arg("axis"))
      .def("coordinates", [](const Grid& g, int axis) {
        py::array_t<double> out(static_cast<py::ssize_t>(g.points(axis)));
        for (std::size_t i = 0; i < g.points(axis); ++i) out.mutable_at(i) = g.coordinate(axis, i);
        return out;
      }, py::arg("axis"))
      .def("__repr__", [](const Grid& g) {
        const auto& s = g.shape();
        return "Grid(dims=" + std::to_string(g.dims()) + ", shape=(" + std::to_string(s[0]) + ", " +
               std::to_string(s[1]) + ", " + std::to_string(s[2]) + "))";
      });

  py::class_<Medium>(m, "Medium")
      .def(py::init([](double epsilon, double mu) {
             Medium md{epsilon, mu};
             md.validate();
             return md;
           }),
           py::arg("epsilon") = 1.0, py::arg("mu") = 1.0)
      .def_static("dielectric", &Medium::dielectric, py::arg("n"))
      .def_readonly("epsilon", &Medium::epsilon)
      .def_readonly("mu", &Medium::mu)
      .def_property_readonly("index", &Medium::index)
      .def_property_readonly("phase_speed", &Medium::phase_speed);

  // Pauli algebra and Hamiltonians.
  m.def("sigma_dot", [](const Vector3c& p) { return sigma_dot(p); }, py::arg("p"));
  m.def("pauli_vector_identity_deviation", &pauli_vector_identity_deviation, py::arg("a"), py::arg("b"));
  m.def("photon_chiral_hamiltonian", &photon_chiral_hamiltonian, py::arg("k"), py::arg("n"));
  m.def("photon_coupled_hamiltonian", &photon_coupled_hamiltonian, py::arg("k"), py::arg("n"));
  m.def("electron_dirac_hamiltonian",
        [](const Vector3r& k, double mass, double potential) {
          return electron_dirac_hamiltonian(k, {mass, potential});
        },
        py::arg("k"), py::arg("mass") = 0.0, py::arg("potential") = 0.0);

  // Scalar fields.
  m.def("forward_transform", [](const Grid& g, const CArray& f) {
    const auto s = forward_transform(scalar_in(g, f));
    return scalar_out(ComplexScalarField(g, s.coefficients()));
  }, py::arg("grid"), py::arg("field"));
  m.def("band_limit_excess", [](const Grid& g, const CArray& f) { return band_limit_excess(scalar_in(g, f)); },
        py::arg("grid"), py::arg("field"));
  m.def("laplacian", [](const Grid& g, const CArray& f) { return scalar_out(laplacian(scalar_in(g, f))); },
        py::arg("grid"), py::arg("field"));
  m.def("evolve_wave",
        [](const Grid& g, const CArray& psi, const CArray& psi_dot, const Medium& md, double t) {
          const auto s = evolve_wave(ScalarPhotonState(scalar_in(g, psi), scalar_in(g, psi_dot), md), t);
          return py::make_tuple(scalar_out(s.psi()), scalar_out(s.psi_dot()));
        },
        py::arg("grid"), py::arg("psi"), py::arg("psi_dot"), py::arg("medium"), py::arg("t"));
  m.def("wave_energy",
        [](const Grid& g, const CArray& psi, const CArray& psi_dot, const Medium& md) {
          return wave_energy(ScalarPhotonState(scalar_in(g, psi), scalar_in(g, psi_dot), md));
        },
        py::arg("grid"), py::arg("psi"), py::arg("psi_dot"), py::arg("medium"));
  m.def("evolve_advection",
        [](const Grid& g, const CArray& psi, double t, int direction, const Medium& md) {
          return scalar_out(evolve_advection(scalar_in(g, psi), t, direction, md));
        },
        py::arg("grid"), py::arg("psi"), py::arg("t"), py::arg("direction"), py::arg("medium"));
  m.def("one_way_time_derivative",
        [](const Grid& g, const CArray& psi, double speed, int direction) {
          return scalar_out(one_way_time_derivative(scalar_in(g, psi), speed, direction));
        },
        py::arg("grid"), py::arg("psi"), py::arg("speed"), py::arg("direction") = 1);
  m.def("helmholtz_residual",
        [](const Grid& g, const CArray& psi, double omega, const Medium& md) {
          return helmholtz_residual(scalar_in(g, psi), omega, md);
        },
        py::arg("grid"), py::arg("psi"), py::arg("omega"), py::arg("medium"));
  m.def("centroid", [](const Grid& g, const CArray& psi) { return centroid(scalar_in(g, psi)); }, py::arg("grid"),
        py::arg("psi"));
  m.def("l2_norm", [](const Grid& g, const CArray& f) { return l2_norm(scalar_in(g, f)); }, py::arg("grid"),
        py::arg("field"));

  // Spinors.
  m.def("evolve_chiral",
        [](const Grid& g, const CArray& phi, const CArray& chi, const Medium& md, double t) {
          const auto s = evolve_chiral(Spinor4Field(spinor_in(g, phi), spinor_in(g, chi), md), t);
          return py::make_tuple(spinor_out(s.phi()), spinor_out(s.chi()));
        },
        py::arg("grid"), py::arg("phi"), py::arg("chi"), py::arg("medium"), py::arg("t"));
  m.def("evolve_coupled",
        [](const Grid& g, const CArray& phi, const CArray& chi, const Medium& md, double t) {
          const auto s = evolve_coupled(Spinor4Field(spinor_in(g, phi), spinor_in(g, chi), md), t);
          return py::make_tuple(spinor_out(s.phi()), spinor_out(s.chi()));
        },
        py::arg("grid"), py::arg("phi"), py::arg("chi"), py::arg("medium"), py::arg("t"));

  // Vector Maxwell fields, arrays of shape (3, nx, ny, nz).
  m.def("evolve_rs",
        [](const Grid& g, const RArray& e, const RArray& h, const Medium& md, double t) {
          const auto em = rs_unpack(evolve_rs(rs_pack(EMField(vector_in(g, e), vector_in(g, h), md)), t));
          return py::make_tuple(vector_out(em.electric()), vector_out(em.magnetic()));
        },
        py::arg("grid"), py::arg("electric"), py::arg("magnetic"), py::arg("medium"), py::arg("t"));
  m.def("maxwell_leapfrog_step",
        [](const Grid& g, const RArray& e, const RArray& h, const Medium& md, double dt) {
          const auto em = maxwell_leapfrog_step(EMField(vector_in(g, e), vector_in(g, h), md), dt);
          return py::make_tuple(vector_out(em.electric()), vector_out(em.magnetic()));
        },
        py::arg("grid"), py::arg("electric"), py::arg("magnetic"), py::arg("medium"), py::arg("dt"));
  m.def("leapfrog_stability_limit", &leapfrog_stability_limit, py::arg("grid"), py::arg("medium"));
  m.def("em_energy",
        [](const Grid& g, const RArray& e, const RArray& h, const Medium& md) {
          const auto s = em_energy(EMField(vector_in(g, e), vector_in(g, h), md));
          return py::make_tuple(s.electric, s.magnetic);
        },
        py::arg("grid"), py::arg("electric"), py::arg("magnetic"), py::arg("medium"));
  m.def("helicity_fractions",
        [](const Grid& g, const RArray& e, const RArray& h, const Medium& md) {
          const auto f = helicity_fractions(rs_pack(EMField(vector_in(g, e), vector_in(g, h), md)).psi());
          return py::make_tuple(f.positive, f.negative);
        },
        py::arg("grid"), py::arg("electric"), py::arg("magnetic"), py::arg("medium"));
  m.def("fields_to_spinors",
        [](const Grid& g, const RArray& e, const RArray& h, const Medium& md, double hbar_omega) {
          const auto p = fields_to_spinors(EMField(vector_in(g, e), vector_in(g, h), md), hbar_omega);
          return py::make_tuple(spinor_out(p.phi()), spinor_out(p.chi()),
                                p.branch() == CircularBranch::Positive ? 1 : -1);
        },
        py::arg("grid"), py::arg("electric"), py::arg("magnetic"), py::arg("medium"), py::arg("hbar_omega"));
  m.def("dirac_maxwell_crosscheck",
        [](const Grid& g, const RArray& e, const RArray& h, const Medium& md, double t, double hbar_omega) {
          return dirac_maxwell_crosscheck(EMField(vector_in(g, e), vector_in(g, h), md), t, hbar_omega);
        },
        py::arg("grid"), py::arg("electric"), py::arg("magnetic"), py::arg("medium"), py::arg("t"),
        py::arg("hbar_omega"));

  // Dispersion.
  py::class_<IndexModel>(m, "IndexModel")
      .def_static("constant", &IndexModel::constant, py::arg("n0"), py::arg("carrier"))
      .def_static("linear", &IndexModel::linear, py::arg("n0"), py::arg("slope"), py::arg("reference"),
                  py::arg("carrier"))
      .def_static("tabulated", &IndexModel::tabulated, py::arg("omegas"), py::arg("indices"), py::arg("carrier"))
      .def_property_readonly("carrier", &IndexModel::carrier)
      .def("index", &IndexModel::index, py::arg("omega"))
      .def("derivative", &IndexModel::derivative, py::arg("omega"));
  m.def("group_index", &group_index, py::arg("model"), py::arg("omega"));
  m.def("dispersion_parameter", &dispersion_parameter, py::arg("model"), py::arg("omega"));
  m.def("first_order_agreement_check", &first_order_agreement_check, py::arg("model"), py::arg("omega"),
        py::arg("e0") = 1.0);
  m.def("first_order_slope",
        [](double n0, double omega, double lo, double hi, std::size_t samples) {
          const auto sweep = first_order_sweep(n0, omega, lo, hi, samples);
          return loglog_slope(sweep);
        },
        py::arg("n0"), py::arg("omega"), py::arg("lo") = 1e-4, py::arg("hi") = 1e-1, py::arg("samples") = 16);

  // Scenario runner and verification.
  m.def("config_schema", &config_schema);
  m.def("validate_config", [](const std::string& text) { parse_config(text); }, py::arg("text"),
        "Raises ConfigError when the scenario document is invalid.");
  m.def("run",
        [](const std::string& config_path, const std::string& output_dir, std::optional<std::uint64_t> seed) {
          const auto config = load_config(config_path);
          const auto result = run(config, RunOptions{output_dir, seed, nullptr});
          py::list rows;
          for (const auto& r : result.rows) rows.append(row_dict(r));
          py::dict out;
          out["rows"] = rows;
          out["observables_path"] = result.observables_path;
          out["snapshot_paths"] = result.snapshot_paths;
          out["warnings"] = result.warnings;
          return out;
        },
        py::arg("config_path"), py::arg("output_dir") = ".", py::arg("seed") = py::none());
  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& suite, std::uint64_t seed) {
          py::list out;
          for (const auto& r : run_suite(suite, seed)) {
            py::dict d;
            d["suite"] = r.suite;
            d["name"] = r.name;
            d["measured"] = r.measured;
            d["lower"] = r.lower;
            d["upper"] = r.upper;
            d["passed"] = r.passed;
            out.append(d);
          }
          return out;
        },
        py::arg("suite"), py::arg("seed") = 0);
}
