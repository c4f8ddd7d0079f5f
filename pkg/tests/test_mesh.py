import numpy as np
import pytest
from hypothesis import given, strategies as st

from cutcell_dod import build_mesh, cell_index_of


def test_cut_mesh(cut_mesh):
    m = cut_mesh
    assert m.n_cells == 11
    assert (m.k1, m.k2, m.upwind) == (5, 6, 4)
    assert m.cells[5] == pytest.approx((0.5, 0.5001, 1e-4), abs=1e-15)
    assert m.cells[6] == pytest.approx((0.5001, 0.6, 0.0999), abs=1e-15)


def test_symmetric_split():
    m = build_mesh(10, 0.5, 0.5)
    assert m.cells[5] == pytest.approx((0.5, 0.55, 0.05), abs=1e-15)
    assert m.cells[6] == pytest.approx((0.55, 0.6, 0.05), abs=1e-15)


def test_small_mesh_lengths():
    m = build_mesh(4, 0.25, 0.25)
    np.testing.assert_allclose(m.lengths, [0.25, 0.0625, 0.1875, 0.25, 0.25], atol=1e-15)


@pytest.mark.parametrize("alpha", [0.0, -0.1, 0.51, 1.0])
def test_rejects_alpha(alpha):
    with pytest.raises(ValueError):
        build_mesh(10, alpha, 0.5)


@pytest.mark.parametrize("split", [0.55, 0.123, 1.0, -0.1])
def test_rejects_off_grid_split(split):
    with pytest.raises(ValueError):
        build_mesh(10, 0.1, split)


def test_rejects_tiny_background():
    with pytest.raises(ValueError):
        build_mesh(2, 0.1, 0.5)


def test_split_at_domain_ends_wraps():
    first = build_mesh(5, 0.2, 0.0)
    assert (first.k1, first.k2, first.upwind) == (0, 1, 5)
    last = build_mesh(5, 0.2, 0.8)
    assert (last.k1, last.k2, last.upwind) == (4, 5, 3)
    assert last.nodes[-1] == 1.0


def test_cell_index_of(cut_mesh):
    assert cell_index_of(cut_mesh, 0.50005) == cut_mesh.k1
    assert cell_index_of(cut_mesh, 0.0) == 0
    assert cell_index_of(cut_mesh, 0.55) == cut_mesh.k2
    assert cell_index_of(cut_mesh, 0.5) == cut_mesh.k1
    with pytest.raises(ValueError):
        cell_index_of(cut_mesh, 1.0)


@st.composite
def meshes(draw):
    n = draw(st.integers(3, 200))
    alpha = draw(st.floats(1e-9, 0.5))
    k = draw(st.integers(0, n - 1))
    return build_mesh(n, alpha, k / n)


@given(meshes())
def test_tiling(m):
    assert m.nodes[0] == 0.0 and m.nodes[-1] == 1.0
    assert np.all(np.diff(m.nodes) > 0)
    np.testing.assert_allclose(np.diff(m.nodes), m.lengths, atol=1e-14)
    assert abs(m.lengths.sum() - 1.0) < 1e-14
    h = m.h
    cut = [j for j in range(m.n_cells - 1)
           if np.isclose(m.lengths[j], m.alpha * h, rtol=1e-14)
           and np.isclose(m.lengths[j + 1], (1 - m.alpha) * h, rtol=1e-14)]
    assert m.k1 in cut
    others = np.delete(m.lengths, [m.k1, m.k2])
    assert np.all(others == h)


@given(meshes())
def test_cell_index_of_midpoints(m):
    for j, x in enumerate(m.midpoints):
        assert m.cell_index_of(x) == j
