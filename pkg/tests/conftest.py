import pytest

from treewheel.enumeration import EnumFilter, enumerate_graphs


@pytest.fixture(scope="session")
def order8_corpus():
    """All 12346 isomorphism classes of order-8 graphs, enumerated once."""
    return list(enumerate_graphs(EnumFilter(order=8)))
