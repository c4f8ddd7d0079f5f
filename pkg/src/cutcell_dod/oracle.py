"""Exact reference solutions by characteristic tracing on the periodic domain."""
from __future__ import annotations

import numpy as np

from .stepping import PiecewiseConstantState

SNAP_TOL = 1e-14


def _nodes(mesh) -> np.ndarray:
    return np.asarray(getattr(mesh, "nodes", mesh), dtype=float)


def transport_matrix(mesh, shift: float) -> np.ndarray:
    """``T[j, i] = |I_j ∩ (I_i + shift)|`` on the unit circle.

    ``mesh`` is a :class:`CutCellMesh` or any increasing array of nodes from
    0 to 1.
    """
    nodes = _nodes(mesh)
    s = float(shift) % 1.0
    left, right = nodes[:-1], nodes[1:]
    T = np.zeros((left.size, left.size))
    # shifted sources can spill past 1; the -1 copy catches the wrap
    for offset in (-1.0, 0.0):
        src_l = left + s + offset
        src_r = right + s + offset
        overlap = (np.minimum(right[:, None], src_r[None, :])
                   - np.maximum(left[:, None], src_l[None, :]))
        T += np.where(overlap > SNAP_TOL, overlap, 0.0)
    return T


def advect_and_average(state: PiecewiseConstantState, mesh, shift: float,
                       dt: float = 0.0) -> PiecewiseConstantState:
    """Transport piecewise-constant data by ``shift`` exactly, then average.

    ``dt`` is only added to the state's time stamp.
    """
    nodes = _nodes(mesh)
    T = transport_matrix(nodes, shift)
    values = T @ state.values / np.diff(nodes)
    return PiecewiseConstantState(values, state.time + dt)


def exact_solution_samples(profile, beta: float, t: float, xs) -> np.ndarray:
    """``u0(x - beta*t mod 1)`` at the points ``xs``."""
    xs = np.asarray(xs, dtype=float)
    return profile(np.mod(xs - beta * t, 1.0))
