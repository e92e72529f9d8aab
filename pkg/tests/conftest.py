import pytest

from macstab.perms import PermGroup
from macstab.simplicial import SimplicialComplex, Vertex


@pytest.fixture(scope="session")
def square():
    """Boundary of a square: 4-cycle 1-2-3-4 on indexed vertices."""
    v = {i: Vertex(i) for i in range(1, 5)}
    edges = [(1, 2), (2, 3), (3, 4), (4, 1)]
    return SimplicialComplex(
        v.values(), [frozenset({v[a], v[b]}) for a, b in edges]
    )


@pytest.fixture(scope="session")
def c4():
    return PermGroup.cyclic(4)
