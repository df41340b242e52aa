import json
from pathlib import Path

import pytest

from asymtree import e7_tree

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def e7():
    return e7_tree()


@pytest.fixture(scope="session")
def tree_counts():
    """Frozen per-n class counts from the networkx/VF2 pipeline."""
    with open(FIXTURES / "tree_counts.json") as fh:
        raw = json.load(fh)
    return {int(k): (v["total"], v["asymmetric"]) for k, v in raw.items()}
