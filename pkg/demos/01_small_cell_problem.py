"""
The small cell problem
======================

Split one cell of a 10-cell periodic grid into pieces of length 0.0001 and
0.0999 and take an explicit Euler step with CFL number 0.4 measured on the
background cell size.  The plain upwind scheme puts a negative weight on the
small cell and the solution blows up within a few steps.
"""
import numpy as np

from cutcell_dod import (AdvectionConfig, PiecewiseConstantState, Step, assemble_unstabilized,
                         build_mesh, check_monotonicity, project_initial_data, run)

mesh = build_mesh(10, alpha=0.001, split_left_coordinate=0.5)
cfg = AdvectionConfig(beta=1.0, lambda_cfl=0.4)
print(f"{mesh.n_cells} cells, small cut cell #{mesh.k1} = {mesh.cells[mesh.k1]}")

mats = assemble_unstabilized(mesh, cfg)
report = check_monotonicity(mats)
print("monotone:", report.monotone)
for r, c, v in report.negative_entries:
    print(f"  B[{r},{c}] = {v:.4g}   (alpha*h - tau)")

# the weight on u_k1 in its own update is 1 - lambda/alpha = -399
u0 = project_initial_data(mesh, Step(0.1, 0.5))
states = run(u0, mats, 5)
for n, s in enumerate(states):
    print(f"step {n}: max |u| = {np.abs(s.values).max():.3e}")
