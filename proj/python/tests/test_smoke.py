import os

import numpy as np
import pytest

import photonqm as pq

CONFIGS = os.environ.get("PHOTONQM_CONFIG_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "configs"))


def test_sigma_dot_example():
    m = pq.sigma_dot(np.array([1, 2, 3], dtype=complex))
    np.testing.assert_allclose(m, [[3, 1 - 2j], [1 + 2j, -3]], atol=1e-15)


def test_hamiltonians_coincide_in_vacuum():
    k = np.array([0.3, -1.2, 2.0])
    np.testing.assert_array_equal(pq.photon_coupled_hamiltonian(k, 1.0), pq.electron_dirac_hamiltonian(k))


def test_wave_energy_and_band_limit():
    g = pq.Grid.line(128, 1.0)
    z = g.coordinates(2)
    psi = np.exp(2j * np.pi * 5 * z)
    medium = pq.Medium.dielectric(1.5)
    out, dot = pq.evolve_wave(g, psi, np.zeros_like(psi), medium, 0.3)
    assert out.shape == (128,)
    e0 = pq.wave_energy(g, psi, np.zeros_like(psi), medium)
    assert abs(pq.wave_energy(g, out, dot, medium) - e0) < 1e-12 * e0

    bad = np.exp(2j * np.pi * 60 * z)
    with pytest.raises(pq.ValidationError):
        pq.evolve_wave(g, bad, np.zeros_like(bad), medium, 0.1)


def test_circular_wave_crosscheck_and_helicity():
    g = pq.Grid.box([4, 4, 32], [1.0, 1.0, 1.0])
    medium = pq.Medium(2.25, 1.0)
    z = g.coordinates(2)[None, None, :] * np.ones(g.field_shape)
    k = 2 * np.pi * 3
    e = np.stack([np.cos(k * z), -np.sin(k * z), np.zeros_like(z)])
    h = 1.5 * np.stack([np.sin(k * z), np.cos(k * z), np.zeros_like(z)])
    plus, minus = pq.helicity_fractions(g, e, h, medium)
    assert plus == pytest.approx(1.0) and minus < 1e-20
    assert pq.dirac_maxwell_crosscheck(g, e, h, medium, 0.3, 1.0) < 1e-10
    e2, h2 = pq.evolve_rs(g, e, h, medium, 0.2)
    assert e2.shape == (3, 4, 4, 32)


def test_dispersion_slope():
    assert pq.first_order_slope(1.5, 10.0) == pytest.approx(2.0, abs=0.1)
    model = pq.IndexModel.linear(1.5, 0.01, 10.0, 10.0)
    assert pq.group_index(model, 10.0) == pytest.approx(1.6)


def test_run_and_verify(tmp_path):
    result = pq.run(os.path.join(CONFIGS, "spinor_packet_coupled.json"), str(tmp_path), 3)
    assert len(result["rows"]) == 6
    assert all(r["invariant_drift"] < 1e-12 for r in result["rows"])
    assert (tmp_path / "observables.csv").read_text().startswith("t,norm,")
    checks = pq.run_suite("algebra")
    assert checks and all(c["passed"] for c in checks)


def test_config_errors_are_typed():
    with pytest.raises(pq.ConfigError):
        pq.validate_config("{}")
    with pytest.raises(pq.ConfigError):
        pq.run_suite("nonsense")
