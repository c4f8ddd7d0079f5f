"""
One step with four choices of eta
=================================

Discontinuous data (1 on [0.1, 0.5]) with the jump right in front of the
small cut cell.  After one step:

* eta = 1 - alpha/lambda reproduces exact transport followed by averaging,
* eta = 1 leaves the small cell untouched,
* eta = 1 - alpha/(2 lambda) lands in between,
* eta = 1 - 2 alpha/lambda lies outside the monotone range and overshoots.

The plot is written to ``demos/one_step.png`` when matplotlib is available.
"""
from pathlib import Path

import numpy as np

from cutcell_dod import (AdvectionConfig, EtaRule, Step, advect_and_average, assemble_dod,
                         build_mesh, project_initial_data, step)

alpha, lam = 0.001, 0.4
mesh = build_mesh(10, alpha, 0.5)
cfg = AdvectionConfig(1.0, lam)
u0 = project_initial_data(mesh, Step(0.1, 0.5))

choices = {
    "1": EtaRule.ONE,
    "1 - a/l": EtaRule.EXACT,
    "1 - a/(2l)": EtaRule.HALF,
    "1 - 2a/l": 1 - 2 * alpha / lam,
}
results = {}
for label, eta in choices.items():
    results[label] = step(u0, assemble_dod(mesh, cfg, eta, force=True)).values
    u = results[label]
    print(f"eta = {label:11s} u[k-1]={u[mesh.upwind]:.4f}  u[k1]={u[mesh.k1]:.4f}  "
          f"u[k2]={u[mesh.k2]:.4f}")

exact = advect_and_average(u0, mesh, cfg.tau(mesh.h)).values
print("exact transport + average matches eta = 1 - a/l:",
      np.allclose(exact, results["1 - a/l"], atol=1e-14))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 3.5))
    idx = np.arange(mesh.n_cells)
    for (label, u), marker in zip(results.items(), "os^v"):
        left.stairs(u, mesh.nodes, label=f"eta = {label}")
        # the small cell is invisible on the x axis; plot by cell index too
        right.plot(idx, u, marker=marker, ls="", label=f"eta = {label}")
    left.stairs(u0.values, mesh.nodes, color="k", ls=":", label="initial")
    left.set_xlabel("x")
    right.set_xticks(idx, [("k1" if j == mesh.k1 else "k2" if j == mesh.k2 else str(j))
                           for j in idx])
    right.set_xlabel("cell")
    left.legend(fontsize=8)
    fig.tight_layout()
    out = Path(__file__).with_name("one_step.png")
    fig.savefig(out, dpi=120)
    print("wrote", out)
