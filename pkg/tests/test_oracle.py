import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cutcell_dod import (AdvectionConfig, EtaRule, PiecewiseConstantState, Sine, Step,
                         advect_and_average, assemble_dod, build_mesh,
                         exact_solution_samples, step, transport_matrix)


def test_zero_shift_is_identity(cut_mesh, step_data):
    out = advect_and_average(step_data, cut_mesh, 0.0)
    np.testing.assert_array_equal(out.values, step_data.values)


@pytest.mark.parametrize("lam", [0.1, 0.4, 0.75])
def test_uniform_mesh_shift_is_upwind(lam):
    n = 8
    nodes = np.arange(n + 1) / n
    u = np.random.default_rng(1).uniform(-1, 1, n)
    out = advect_and_average(PiecewiseConstantState(u), nodes, lam / n)
    np.testing.assert_allclose(out.values, (1 - lam) * u + lam * np.roll(u, 1), atol=1e-14)


def test_reference_step(cut_mesh, step_data):
    out = advect_and_average(step_data, cut_mesh, 0.04)
    assert out.values[cut_mesh.k1] == pytest.approx(1.0, abs=1e-12)
    assert out.values[cut_mesh.k2] == pytest.approx(0.399 / 0.999, abs=1e-12)


def test_transport_rows_and_columns(cut_mesh):
    for shift in (0.0, 0.04, 0.37, 0.9999, 1.3):
        T = transport_matrix(cut_mesh, shift)
        np.testing.assert_allclose(T.sum(axis=1), cut_mesh.lengths, atol=1e-14)
        np.testing.assert_allclose(T.sum(axis=0), cut_mesh.lengths, atol=1e-14)


def test_shift_modulo_domain(cut_mesh, step_data):
    a = advect_and_average(step_data, cut_mesh, 0.3)
    b = advect_and_average(step_data, cut_mesh, 2.3)
    np.testing.assert_allclose(a.values, b.values, atol=1e-13)


def test_whole_cell_shifts_compose():
    n = 12
    nodes = np.arange(n + 1) / n
    u = PiecewiseConstantState(np.random.default_rng(5).normal(size=n))
    h = 1 / n
    twice = advect_and_average(advect_and_average(u, nodes, h), nodes, h)
    once = advect_and_average(u, nodes, 2 * h)
    np.testing.assert_allclose(twice.values, once.values, atol=1e-14)
    np.testing.assert_allclose(once.values, np.roll(u.values, 2), atol=1e-14)


@settings(max_examples=200)
@given(st.integers(3, 30), st.floats(1e-3, 0.999), st.floats(0.01, 0.5),
       st.integers(0, 2**31))
def test_dod_exact_rule_equals_oracle(n, frac, lam, seed):
    alpha = frac * lam
    rng = np.random.default_rng(seed)
    mesh = build_mesh(n, alpha, int(rng.integers(n)) / n)
    cfg = AdvectionConfig(1.0, lam)
    mats = assemble_dod(mesh, cfg, EtaRule.EXACT)
    u = PiecewiseConstantState(rng.uniform(-1, 1, mesh.n_cells))
    np.testing.assert_allclose(step(u, mats).values,
                               advect_and_average(u, mesh, cfg.tau(mesh.h)).values,
                               atol=1e-12)


@settings(max_examples=100)
@given(st.integers(3, 30), st.floats(1e-3, 0.5), st.floats(0.0, 3.0), st.integers(0, 2**31))
def test_oracle_conserves_mass(n, alpha, shift, seed):
    mesh = build_mesh(n, alpha, 0.0)
    u = PiecewiseConstantState(np.random.default_rng(seed).uniform(-1, 1, mesh.n_cells))
    out = advect_and_average(u, mesh, shift)
    assert mesh.lengths @ out.values == pytest.approx(mesh.lengths @ u.values, abs=1e-14)


def test_exact_solution_samples():
    xs = np.linspace(0, 0.99, 37)
    np.testing.assert_allclose(exact_solution_samples(Sine(), 1.0, 1.0, xs),
                               np.sin(2 * np.pi * xs), atol=1e-12)
    assert exact_solution_samples(Step(0.1, 0.5), 1.0, 0.25, [0.5])[0] == 1.0
    np.testing.assert_array_equal(exact_solution_samples(Step(0.1, 0.5), 2.0, 0.0, xs),
                                  Step(0.1, 0.5)(xs))
