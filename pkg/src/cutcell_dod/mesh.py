"""1D periodic cut-cell mesh on [0, 1].

N equidistant background cells, one of which is split into a small cut cell
``k1`` of length ``alpha * h`` followed by its outflow neighbour ``k2`` of
length ``(1 - alpha) * h``.  Cells are indexed 0..N left to right, so the
mesh has N + 1 cells and ``k2 == k1 + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

GRID_TOL = 1e-12


@dataclass(frozen=True)
class CutCellMesh:
    n_background: int
    alpha: float
    split_index: int  # background cell k that was split (0-based)
    nodes: np.ndarray  # N + 2 cell boundaries
    lengths: np.ndarray  # N + 1 cell lengths

    @property
    def h(self) -> float:
        return 1.0 / self.n_background

    @property
    def n_cells(self) -> int:
        return self.lengths.size

    @property
    def k1(self) -> int:
        """Index of the small cut cell."""
        return self.split_index

    @property
    def k2(self) -> int:
        """Index of the large cut cell (outflow neighbour of ``k1``)."""
        return self.split_index + 1

    @property
    def upwind(self) -> int:
        """Index of the inflow neighbour of ``k1`` (cell k-1, periodic)."""
        return (self.split_index - 1) % self.n_cells

    @property
    def x_left(self) -> np.ndarray:
        return self.nodes[:-1]

    @property
    def x_right(self) -> np.ndarray:
        return self.nodes[1:]

    @property
    def midpoints(self) -> np.ndarray:
        return 0.5 * (self.nodes[:-1] + self.nodes[1:])

    @property
    def cells(self) -> list[tuple[float, float, float]]:
        return [(float(a), float(b), float(l))
                for a, b, l in zip(self.x_left, self.x_right, self.lengths)]

    def cell_index_of(self, x: float) -> int:
        """Index j with ``x_left[j] <= x < x_right[j]``; ``x`` in [0, 1)."""
        if not 0.0 <= x < 1.0:
            raise ValueError(f"x={x} outside [0, 1)")
        return int(np.searchsorted(self.nodes, x, side="right") - 1)


def build_mesh(n_background: int, alpha: float,
               split_left_coordinate: float) -> CutCellMesh:
    """Split the background cell starting at ``split_left_coordinate``.

    The cut is placed at ``split_left_coordinate + alpha * h``.  The split
    cell may be the first or last background cell; neighbours wrap
    periodically.
    """
    if n_background < 3:
        raise ValueError("need at least 3 background cells")
    if not 0.0 < alpha <= 0.5:
        raise ValueError(f"alpha={alpha} outside (0, 1/2]")
    h = 1.0 / n_background
    k = int(round(split_left_coordinate * n_background))
    if abs(split_left_coordinate - k * h) > GRID_TOL or not 0 <= k < n_background:
        raise ValueError(
            f"split_left_coordinate={split_left_coordinate} is not a left "
            f"boundary of the background grid with h={h}")

    background = np.arange(n_background + 1) / n_background
    cut = background[k] + alpha * h
    nodes = np.concatenate([background[:k + 1], [cut], background[k + 1:]])
    lengths = np.full(n_background + 1, h)
    lengths[k] = alpha * h
    lengths[k + 1] = (1.0 - alpha) * h
    return CutCellMesh(n_background=n_background, alpha=float(alpha),
                       split_index=k, nodes=nodes, lengths=lengths)


def cell_index_of(mesh: CutCellMesh, x: float) -> int:
    return mesh.cell_index_of(x)
