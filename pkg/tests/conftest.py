import pytest

from cutcell_dod import AdvectionConfig, Step, build_mesh, project_initial_data

# setup of the one-step experiment: h=0.1, cut pair at x=0.5
N, ALPHA, SPLIT, LAM, BETA = 10, 0.001, 0.5, 0.4, 1.0


@pytest.fixture
def cut_mesh():
    return build_mesh(N, ALPHA, SPLIT)


@pytest.fixture
def base_cfg():
    return AdvectionConfig(BETA, LAM)


@pytest.fixture
def step_data(cut_mesh):
    return project_initial_data(cut_mesh, Step(0.1, 0.5))
