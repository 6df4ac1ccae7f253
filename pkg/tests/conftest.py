import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bnpair import params


@pytest.fixture(scope="session")
def tiny():
    return params.tiny_params()


@pytest.fixture(scope="session")
def paper():
    return params.paper_params()


@pytest.fixture()
def rng():
    return random.Random(0xBD)
