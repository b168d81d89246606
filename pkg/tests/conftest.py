import numpy as np
import pytest

from fuzzymono.verify.registry import get_context


@pytest.fixture(scope="session")
def ctx9():
    """Shared operator workspace at a mid-size truncation."""
    return get_context(9, 1.0)


@pytest.fixture(scope="session")
def ctx12():
    """Acceptance-scale workspace."""
    return get_context(12, 1.0)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
