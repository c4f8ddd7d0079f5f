"""Assembly of the explicit Euler system ``M u^{n+1} = B u^n``.

``M`` is the diagonal P0 mass matrix (the cell lengths) and
``B = M - dt * A`` where ``A`` discretizes the upwind bilinear form plus an
optional stabilization.  All matrices are dense; rows are indexed by test
cell, columns by trial cell.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .mesh import CutCellMesh


@dataclass(frozen=True)
class AdvectionConfig:
    beta: float = 1.0
    lambda_cfl: float = 0.4

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError("beta must be positive")
        if not 0.0 <= self.lambda_cfl < 1.0:
            raise ValueError("lambda_cfl must lie in [0, 1)")

    def dt(self, h: float) -> float:
        return self.lambda_cfl * h / self.beta

    def tau(self, h: float) -> float:
        """``beta * dt``, formed as ``lambda * h`` so it is exact."""
        return self.lambda_cfl * h


class EtaRule(str, enum.Enum):
    EXACT = "paper"  # 1 - alpha/lambda: exact advect-and-average
    HALF = "half"  # 1 - alpha/(2 lambda)
    ONE = "one"  # skip the small cell


class Variant(str, enum.Enum):
    NONE = "none"
    GHOST_PENALTY = "gp"
    DOD = "dod"


EtaSpec = Union[float, EtaRule, str]


@dataclass(frozen=True)
class StabilizationSpec:
    variant: Variant = Variant.NONE
    eta1: float = 0.0
    eta2: float = 0.0
    eta: EtaSpec = EtaRule.HALF
    force_eta: bool = False

    @classmethod
    def none(cls) -> "StabilizationSpec":
        return cls(Variant.NONE)

    @classmethod
    def ghost_penalty(cls, eta1: float, eta2: float) -> "StabilizationSpec":
        return cls(Variant.GHOST_PENALTY, eta1=eta1, eta2=eta2)

    @classmethod
    def dod(cls, eta: EtaSpec = EtaRule.HALF,
            force_eta: bool = False) -> "StabilizationSpec":
        return cls(Variant.DOD, eta=eta, force_eta=force_eta)


@dataclass(frozen=True)
class SchemeMatrices:
    mass: np.ndarray  # diagonal of M
    system: np.ndarray  # B
    dt: float
    h: float
    resolved_eta: Optional[float] = None

    @property
    def update(self) -> np.ndarray:
        """``M^{-1} B``, the one-step update operator."""
        return self.system / self.mass[:, None]


def _eta_and_complement(rule: EtaSpec, alpha: float,
                        lambda_cfl: float) -> tuple[float, float]:
    """(eta, 1 - eta), with the complement formed without cancellation."""
    if not isinstance(rule, (EtaRule, str)):
        return float(rule), 1.0 - float(rule)
    rule = EtaRule(rule)
    if alpha >= lambda_cfl:
        return 0.0, 1.0
    if rule is EtaRule.EXACT:
        slack = alpha / lambda_cfl
    elif rule is EtaRule.HALF:
        slack = alpha / (2.0 * lambda_cfl)
    else:
        slack = 0.0
    return 1.0 - slack, slack


def resolve_eta(rule: EtaSpec, alpha: float, lambda_cfl: float) -> float:
    """Numerical eta for a rule; plain numbers pass through unchanged.

    Rule-based choices return 0 (no stabilization) when ``alpha >= lambda``,
    since the small cell then satisfies the CFL condition on its own.
    """
    return _eta_and_complement(rule, alpha, lambda_cfl)[0]


def assemble_unstabilized(mesh: CutCellMesh, cfg: AdvectionConfig) -> SchemeMatrices:
    n = mesh.n_cells
    tau = cfg.tau(mesh.h)
    rows = np.arange(n)
    B = np.diag(mesh.lengths - tau)
    B[rows, (rows - 1) % n] += tau
    return SchemeMatrices(mesh.lengths.copy(), B, cfg.dt(mesh.h), mesh.h)


def assemble_ghost_penalty(mesh: CutCellMesh, cfg: AdvectionConfig,
                           eta1: float, eta2: float) -> SchemeMatrices:
    """Upwind scheme with jump-jump penalties at faces k-1/2 and k_cut.

    The sign follows the displayed B_GP matrix: positive eta raises the
    diagonals of the cells next to the penalized face and lowers the
    superdiagonal.
    """
    base = assemble_unstabilized(mesh, cfg)
    B = base.system
    tau, h, a = cfg.tau(mesh.h), mesh.h, mesh.alpha
    km1, k1, k2 = mesh.upwind, mesh.k1, mesh.k2
    B[km1, km1] = h - tau * (1.0 - eta1)
    B[km1, k1] = -tau * eta1
    B[k1, km1] = tau * (1.0 - eta1)
    B[k1, k1] = a * h - tau * (1.0 - eta1 - eta2)
    B[k1, k2] = -tau * eta2
    B[k2, k1] = tau * (1.0 - eta2)
    B[k2, k2] = (1.0 - a) * h - tau * (1.0 - eta2)
    return SchemeMatrices(base.mass, B, base.dt, base.h)


def assemble_dod(mesh: CutCellMesh, cfg: AdvectionConfig, eta: EtaSpec,
                 force: bool = False) -> SchemeMatrices:
    """Upwind scheme plus the domain-of-dependence penalty.

    The penalty ``beta * eta * [u]_{k-1/2} [w]_{k_cut}`` feeds the jump on
    the inflow face of ``k1`` into the test functions on both sides of the
    cut face, so only rows k1 and k2 change.  ``eta`` is a number in [0, 1]
    (anything with ``force``) or an :class:`EtaRule`.
    """
    eta, slack = _eta_and_complement(eta, mesh.alpha, cfg.lambda_cfl)
    if not force and not 0.0 <= eta <= 1.0:
        raise ValueError(f"eta={eta} outside [0, 1]; pass force=True to allow")
    base = assemble_unstabilized(mesh, cfg)
    B = base.system
    tau, h, a = cfg.tau(mesh.h), mesh.h, mesh.alpha
    km1, k1, k2 = mesh.upwind, mesh.k1, mesh.k2
    # alpha*h - tau*(1 - eta) rather than (alpha*h - tau) + tau*eta: the
    # latter cancels to ~1e-17 absolute, which is large next to alpha*h.
    B[k1, km1] = tau * slack
    B[k1, k1] = a * h - tau * slack
    B[k2, km1] = tau * eta
    B[k2, k1] = tau * slack
    return SchemeMatrices(base.mass, B, base.dt, base.h, resolved_eta=eta)


def assemble(mesh: CutCellMesh, cfg: AdvectionConfig,
             stab: Optional[StabilizationSpec] = None) -> SchemeMatrices:
    stab = stab or StabilizationSpec.none()
    variant = Variant(stab.variant)
    if variant is Variant.NONE:
        return assemble_unstabilized(mesh, cfg)
    if variant is Variant.GHOST_PENALTY:
        return assemble_ghost_penalty(mesh, cfg, stab.eta1, stab.eta2)
    return assemble_dod(mesh, cfg, stab.eta, force=stab.force_eta)
