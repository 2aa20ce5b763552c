import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from stressfan.cli import parse_document

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"


def load_fixture(name):
    return parse_document((FIXTURES / name).read_text()).framework


@pytest.fixture(scope="session")
def wheel4():
    """Paper fixture (a): quadrilateral with a hub, stress space dimension 1."""
    return load_fixture("wheel4.json")


@pytest.fixture(scope="session")
def twinhub():
    """Paper fixture (b): quadrilateral with two hubs, no nonzero self-stress."""
    return load_fixture("twinhub.json")


@pytest.fixture(scope="session")
def plate_fins():
    """The 3-dimensional fixture: a plate with four up fins and four down fins."""
    return load_fixture("plate_fins.json")


def fixture_path(name):
    return str(FIXTURES / name)


def golden_text(name):
    return (GOLDEN / name).read_text()
