"""Explicit Euler time stepping and initial data projection."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .mesh import CutCellMesh
from .assembly import SchemeMatrices
from .analysis import total_variation


@dataclass(frozen=True)
class PiecewiseConstantState:
    values: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))


# -- initial profiles ---------------------------------------------------------

@dataclass(frozen=True)
class Step:
    """Indicator of [a, b] (value 1 inside, 0 outside), 0 <= a < b <= 1."""
    a: float
    b: float

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return ((x >= self.a) & (x <= self.b)).astype(float)

    def cell_averages(self, nodes: np.ndarray) -> np.ndarray:
        left, right = nodes[:-1], nodes[1:]
        overlap = np.clip(np.minimum(right, self.b) - np.maximum(left, self.a), 0.0, None)
        return overlap / (right - left)


@dataclass(frozen=True)
class Constant:
    c: float

    def __call__(self, x):
        return np.full(np.shape(x), float(self.c))

    def cell_averages(self, nodes: np.ndarray) -> np.ndarray:
        return np.full(nodes.size - 1, float(self.c))


@dataclass(frozen=True)
class Sine:
    """sin(2 pi x)."""

    def __call__(self, x):
        return np.sin(2.0 * np.pi * np.asarray(x, dtype=float))

    def cell_averages(self, nodes: np.ndarray) -> np.ndarray:
        left, right = nodes[:-1], nodes[1:]
        k = 2.0 * np.pi
        return (np.cos(k * left) - np.cos(k * right)) / (k * (right - left))


@dataclass(frozen=True)
class Custom:
    """Arbitrary pointwise profile, averaged with Gauss-Legendre quadrature."""
    func: Callable[[np.ndarray], np.ndarray]
    order: int = 8

    def __call__(self, x):
        return self.func(np.asarray(x, dtype=float))

    def cell_averages(self, nodes: np.ndarray) -> np.ndarray:
        xi, w = np.polynomial.legendre.leggauss(self.order)
        left, right = nodes[:-1, None], nodes[1:, None]
        x = 0.5 * (left + right) + 0.5 * (right - left) * xi
        return 0.5 * (self.func(x) * w).sum(axis=1)


def project_initial_data(mesh: CutCellMesh, profile) -> PiecewiseConstantState:
    """Exact cell averages of ``profile``; a plain array is taken as cell values."""
    if isinstance(profile, (np.ndarray, list, tuple)):
        values = np.asarray(profile, dtype=float)
        if values.shape != (mesh.n_cells,):
            raise ValueError("need one value per cell")
        return PiecewiseConstantState(values.copy())
    return PiecewiseConstantState(profile.cell_averages(mesh.nodes))


# -- time stepping ------------------------------------------------------------

def step(state: PiecewiseConstantState,
         matrices: SchemeMatrices) -> PiecewiseConstantState:
    """One explicit Euler step, ``u <- M^{-1} B u``."""
    if state.values.shape != matrices.mass.shape:
        raise ValueError("state and matrices have different sizes")
    values = matrices.system @ state.values / matrices.mass
    return PiecewiseConstantState(values, state.time + matrices.dt)


@dataclass
class Diagnostics:
    mass: list = field(default_factory=list)
    total_variation: list = field(default_factory=list)
    minimum: list = field(default_factory=list)
    maximum: list = field(default_factory=list)

    def record(self, state: PiecewiseConstantState, lengths: np.ndarray):
        u = state.values
        self.mass.append(float(lengths @ u))
        self.total_variation.append(total_variation(u))
        self.minimum.append(float(u.min()))
        self.maximum.append(float(u.max()))


def run(initial: PiecewiseConstantState, matrices: SchemeMatrices, n_steps: int,
        diagnostics: Optional[Diagnostics] = None) -> list[PiecewiseConstantState]:
    """States at t^0 ... t^{n_steps}.

    If ``diagnostics`` is given it is filled with one entry per state.
    """
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    states = [initial]
    for _ in range(n_steps):
        states.append(step(states[-1], matrices))
    if diagnostics is not None:
        for s in states:
            diagnostics.record(s, matrices.mass)
    return states


def cut_cell_update_closed_form(u_km1: float, u_k1: float, u_k2: float,
                                alpha: float, lambda_cfl: float,
                                eta: float) -> tuple[float, float]:
    """New values on (k1, k2) for the DoD scheme, written out by hand.

    Independent of the matrix path; valid for alpha < lambda < 1/2.
    """
    lam_a = lambda_cfl / alpha
    lam_b = lambda_cfl / (1.0 - alpha)
    new_k1 = u_k1 - lam_a * (1.0 - eta) * (u_k1 - u_km1)
    new_k2 = u_k2 - lam_b * (u_k2 - u_k1) - lam_b * eta * (u_k1 - u_km1)
    return new_k1, new_k2

