"""
Ghost penalty versus domain-of-dependence stabilization
=======================================================

Penalizing the jumps at the two faces of the small cell cannot make every
entry of the system matrix non-negative: the superdiagonal entries force both
penalty parameters to be non-positive, while the small cell's diagonal needs
their sum to be positive.  Moving the penalty so that the inflow jump is tested
across the cut face (DoD) gives an interval of admissible parameters instead.
"""
import numpy as np

from cutcell_dod import (AdvectionConfig, admissible_eta_interval, assemble_dod,
                         assemble_ghost_penalty, build_mesh, check_monotonicity,
                         ghost_penalty_constraints, ghost_penalty_feasibility)

alpha, lam = 0.001, 0.4
mesh = build_mesh(10, alpha, 0.5)
cfg = AdvectionConfig(1.0, lam)

print("Ghost-penalty sign constraints (entry / h >= 0):")
for c in ghost_penalty_constraints(alpha, lam):
    print(f"  {c.name:24s} {c.c0:+.4f} {c.c1:+.2f}*eta1 {c.c2:+.2f}*eta2")
cert = ghost_penalty_feasibility(alpha, lam)
print("feasible:", cert.feasible, "| conflicting:", ", ".join(cert.violated_constraints))

# brute force for good measure
grid = np.linspace(-2, 2, 81)
hits = sum(check_monotonicity(assemble_ghost_penalty(mesh, cfg, a, b)).monotone
           for a in grid for b in grid)
print(f"monotone ghost-penalty matrices on an 81x81 grid: {hits}")

iv = admissible_eta_interval(alpha, lam)
print(f"\nDoD: monotone for eta in [{iv.lower}, {iv.upper}]")
for eta in (0.99, iv.lower, 0.99875, 1.0):
    rep = check_monotonicity(assemble_dod(mesh, cfg, eta))
    print(f"  eta={eta:<8} monotone={rep.monotone}  min entry={rep.min_entry:+.3e}")
