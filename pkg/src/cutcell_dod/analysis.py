"""Monotonicity analysis of the system matrix and solution functionals.

For the linear update ``M u^{n+1} = B u^n`` with positive diagonal ``M`` the
scheme is monotone iff every entry of ``B`` is non-negative.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .assembly import SchemeMatrices


@dataclass(frozen=True)
class MonotonicityReport:
    monotone: bool
    negative_entries: list  # (row, col, value)
    min_entry: float
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "verdict": "monotone" if self.monotone else "not monotone",
            "monotone": self.monotone,
            "min_entry": self.min_entry,
            "negative_entries": [[r, c, v] for r, c, v in self.negative_entries],
            "tolerance": self.tolerance,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def check_monotonicity(matrices: SchemeMatrices,
                       tolerance: Optional[float] = None) -> MonotonicityReport:
    """Scan B for entries below ``-tolerance`` (default ``1e-13 * h``)."""
    if tolerance is None:
        tolerance = 1e-13 * matrices.h
    if tolerance < 0:
        raise ValueError("tolerance must be non-negative")
    B = matrices.system
    rows, cols = np.nonzero(B < -tolerance)
    negative = [(int(r), int(c), float(B[r, c])) for r, c in zip(rows, cols)]
    return MonotonicityReport(not negative, negative, float(B.min()), float(tolerance))


@dataclass(frozen=True)
class EtaInterval:
    lower: float
    upper: float = 1.0
    empty: bool = False  # alpha > lambda: stabilization not needed

    def __contains__(self, eta: float) -> bool:
        return self.lower <= eta <= self.upper

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "empty": self.empty}


def admissible_eta_interval(alpha: float, lambda_cfl: float) -> EtaInterval:
    """Range of eta for which the DoD matrix has no negative entries.

    The non-negativity of the three stabilized entries gives
    ``alpha*h - tau*(1 - eta) >= 0``, ``tau*eta >= 0`` and
    ``tau*(1 - eta) >= 0``, i.e. ``eta in [1 - alpha/lambda, 1]``.
    """
    lower = max(0.0, 1.0 - alpha / lambda_cfl)
    return EtaInterval(lower, 1.0, empty=alpha > lambda_cfl)


# -- ghost penalty ------------------------------------------------------------

@dataclass(frozen=True)
class LinearConstraint:
    """``c0 + c1*eta1 + c2*eta2 >= 0``, in units of h."""
    name: str
    c0: float
    c1: float
    c2: float

    def value(self, eta1: float, eta2: float) -> float:
        return self.c0 + self.c1 * eta1 + self.c2 * eta2


def ghost_penalty_constraints(alpha: float, lambda_cfl: float) -> list[LinearConstraint]:
    """Every eta-dependent entry of B_GP, divided by h.

    Rows/columns k-1, k1, k2 carry all stabilization terms; the remaining
    entries are h - tau and tau, which do not involve eta.
    """
    lam = lambda_cfl
    return [
        LinearConstraint("diagonal(k-1)", 1.0 - lam, lam, 0.0),
        LinearConstraint("superdiagonal(k-1,k1)", 0.0, -lam, 0.0),
        LinearConstraint("subdiagonal(k1,k-1)", lam, -lam, 0.0),
        LinearConstraint("diagonal(k1)", alpha - lam, lam, lam),
        LinearConstraint("superdiagonal(k1,k2)", 0.0, 0.0, -lam),
        LinearConstraint("subdiagonal(k2,k1)", lam, 0.0, -lam),
        LinearConstraint("diagonal(k2)", 1.0 - alpha - lam, 0.0, lam),
    ]


@dataclass(frozen=True)
class GpFeasibilityCertificate:
    feasible: bool
    witness: Optional[tuple] = None
    violated_constraints: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "witness": list(self.witness) if self.witness is not None else None,
            "violated_constraints": list(self.violated_constraints),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def ghost_penalty_feasibility(alpha: float, lambda_cfl: float,
                              tol: float = 1e-13) -> GpFeasibilityCertificate:
    """Decide whether some (eta1, eta2) makes every B_GP entry non-negative.

    Each constraint except ``diagonal(k1)`` bounds a single parameter, so the
    admissible set is a box intersected with the half plane
    ``alpha - lambda + lambda*(eta1 + eta2) >= 0``.  That half plane grows
    with both parameters, hence the box's upper corner is the only candidate
    worth testing.
    """
    cons = ghost_penalty_constraints(alpha, lambda_cfl)
    lo = [-np.inf, -np.inf]
    hi = [np.inf, np.inf]
    for c in cons:
        if c.name == "diagonal(k1)":
            continue
        i, coef = (0, c.c1) if c.c1 != 0.0 else (1, c.c2)
        bound = -c.c0 / coef
        if coef > 0:
            lo[i] = max(lo[i], bound)
        else:
            hi[i] = min(hi[i], bound)

    empty_axes = [i for i in (0, 1) if lo[i] > hi[i] + tol]
    if empty_axes:
        names = [c.name for c in cons if c.name != "diagonal(k1)"
                 and any((c.c1, c.c2)[i] != 0.0 for i in empty_axes)]
        return GpFeasibilityCertificate(False, None, names)

    corner = (float(hi[0]), float(hi[1]))
    if all(c.value(*corner) >= -tol for c in cons):
        return GpFeasibilityCertificate(True, corner, [])
    # diagonal(k1) needs eta1 + eta2 > 0 while the superdiagonals cap both at 0
    binding = [c.name for c in cons
               if c.name.startswith("superdiagonal") or c.name == "diagonal(k1)"]
    return GpFeasibilityCertificate(False, None, binding)


# -- functionals --------------------------------------------------------------

def _values(state) -> np.ndarray:
    return np.asarray(getattr(state, "values", state), dtype=float)


def total_variation(state) -> float:
    """Periodic total variation, including the wrap-around jump."""
    u = _values(state)
    return float(np.abs(np.roll(u, -1) - u).sum())


def l1_norm(state, mesh) -> float:
    return float(mesh.lengths @ np.abs(_values(state)))


def mass(state, mesh) -> float:
    return float(mesh.lengths @ _values(state))


def extrema(state) -> tuple[float, float]:
    u = _values(state)
    return float(u.min()), float(u.max())
