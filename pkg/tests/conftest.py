"""
Shared fixtures: the default composite space and seeded generators.
"""

import numpy as np
import pytest

from core.fock import default_space


@pytest.fixture(scope="session")
def space():
    """A (1 photon) ⊗ B (2 photons) ⊗ six-dimensional ancilla."""
    return default_space(1, 2, 6)


@pytest.fixture
def rng():
    return np.random.default_rng(20040101)


@pytest.fixture(scope="session")
def cli():
    """Dispatch a command line through the populated registry."""
    from main import main

    return main
