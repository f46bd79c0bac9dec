import pytest

from _helpers import golden_pencil
from pencil_fibers.driver import compute


@pytest.fixture(scope="session")
def golden():
    """The cubic pencil with nine base points, computed once per session."""
    return compute(golden_pencil())
