import pytest

from gha.poly import degree_cap, set_degree_cap


@pytest.fixture(autouse=True)
def _restore_degree_cap():
    # tests that shrink the cap must not leak it into later tests
    saved = degree_cap()
    yield
    set_degree_cap(saved)
