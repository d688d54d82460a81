import pytest

from ferrers.core import FerrersGraph, parse_partition


@pytest.fixture
def graph():
    """Build a FerrersGraph from partition text."""
    return lambda text: FerrersGraph(parse_partition(text))
