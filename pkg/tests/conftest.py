import pytest

from lpa import IntegerRing, LeavittAlgebra

from helpers import six_graphs


@pytest.fixture(scope="session")
def graphs():
    return six_graphs()


@pytest.fixture(scope="session")
def algebras(graphs):
    ring = IntegerRing()
    return {name: LeavittAlgebra(g, ring) for name, g in graphs.items()}
