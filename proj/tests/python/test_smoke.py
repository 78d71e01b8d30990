import math

import pytest

import cra_transport as cra


def test_band_and_inverse():
    p = cra.ModelParams(g0=0.5, g1=0.5)
    assert cra.dispersion(math.pi / 2, p) == pytest.approx(2.0)
    assert cra.momentum_from_energy(3.0, p) == pytest.approx(2 * math.pi / 3)
    assert cra.group_velocity(math.pi / 3, p) == pytest.approx(math.sqrt(3))
    with pytest.raises(ValueError):
        cra.momentum_from_energy(4.5, p)


def test_resonant_half_transmission_and_unitarity():
    p = cra.ModelParams(g0=0.5, g1=0.5)
    R, T = cra.scattering_coefficients(math.pi / 2, p)
    assert T == pytest.approx(0.5, abs=1e-12)
    assert R + T == pytest.approx(1.0, abs=1e-12)
    assert abs(cra.resonant_transmission(p)) ** 2 == pytest.approx(0.5, abs=1e-12)


def test_zero_shift():
    assert cra.transmission_zero_energy(cra.ModelParams(g0=1, g1=1.5)) == 3.5
    assert cra.transmission_zero_energy(cra.ModelParams(g0=1, g1=2.5)) is None


def test_closed_form_matches_oracles():
    p = cra.ModelParams(omega=2.3, g0=0.7, g1=0.7)
    k = 1.1
    t = cra.transmission_amplitude(k, p)
    exact = cra.solve_scattering_exact(k, p)
    ring = cra.solve_path_space(k, p)
    t_b, t_d = cra.decompose(k, p)
    assert abs(t - exact["t"]) < 1e-10
    assert abs(cra.reflection_amplitude(k, p) - exact["r"]) < 1e-10
    assert abs(t - ring["t"]) < 1e-10
    assert abs(t_b + t_d - t) < 1e-10


def test_path_basis_and_errors():
    b = cra.path_basis(cra.ModelParams(g0=0.5, g1=0.5))
    assert b["theta"] == pytest.approx(math.pi / 4)
    assert (b["omega_B"], b["omega_D"]) == pytest.approx((1.0, 3.0))
    with pytest.raises(ValueError):
        cra.mixing_angle(0.0, 0.0)
    with pytest.raises(ValueError):
        cra.decompose(1.0, cra.ModelParams(g0=1, g1=1.5))
    with pytest.raises(ValueError):
        cra.ModelParams(xi=-1)


def test_sweep_and_grid():
    sweep = cra.run_sweep(cra.ModelParams(g0=0.5, g1=0.5), (0.0, 4.0, 5))
    assert list(sweep) == ["E", "k", "T", "R", "re_t", "im_t", "re_r", "im_r"]
    assert sweep["T"][2] == pytest.approx(0.5, abs=1e-12)
    grid = cra.run_grid(e_range=(0.0, 4.0, 17), g_range=(0.0, 1.0, 3))
    assert len(grid["T"]) == 17 * 3
    assert all(t == 1.0 for t in grid["T"][:17])


def test_verify_and_wavepacket():
    ok, report = cra.verify(cra.ModelParams(g0=0.5, g1=0.5), cases=50)
    assert ok and report.startswith("PASS")
    res = cra.evolve_wavepacket(cra.ModelParams(g0=0.5, g1=0.5))
    assert res["T_num"] == pytest.approx(0.5, abs=0.01)
    assert res["norm_drift"] < 1e-8
