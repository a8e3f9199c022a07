import numpy as np
import pytest
from hypothesis import settings

from sliring import LevelGrid, Trapezoid, build_power_basis

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def grid():
    return LevelGrid.uniform(101)


@pytest.fixture(scope="session")
def basis2(grid):
    """{1, A} with A the trapezoid (0, 1, 1, 3)."""
    return build_power_basis(Trapezoid(0, 1, 1, 3), 2, grid)


@pytest.fixture(scope="session")
def basis4(grid):
    """{1, A, A^2, A^3} with A the trapezoid (0, 1, 1, 3)."""
    return build_power_basis(Trapezoid(0, 1, 1, 3), 4, grid)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
