"""Cut-cell P0 DG solver for 1D linear advection with small-cell stabilization.

Builds the explicit Euler system ``M u^{n+1} = B u^n`` on a periodic mesh
with one cut cell pair, for the unstabilized, ghost-penalty and
domain-of-dependence (DoD) variants, and checks the monotonicity of ``B``.
"""
from .mesh import CutCellMesh, build_mesh, cell_index_of
from .assembly import (AdvectionConfig, EtaRule, SchemeMatrices, StabilizationSpec,
                       Variant, assemble, assemble_dod, assemble_ghost_penalty,
                       assemble_unstabilized, resolve_eta)
from .analysis import (EtaInterval, GpFeasibilityCertificate, MonotonicityReport,
                       admissible_eta_interval, check_monotonicity, extrema,
                       ghost_penalty_constraints, ghost_penalty_feasibility, l1_norm,
                       mass, total_variation)
from .stepping import (Constant, Custom, Diagnostics, PiecewiseConstantState, Sine,
                       Step, cut_cell_update_closed_form, project_initial_data, run,
                       step)
from .oracle import advect_and_average, exact_solution_samples, transport_matrix

__version__ = "0.1.0"
