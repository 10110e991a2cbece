import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sibcover.genotypes import parse_population

WORKED_EXAMPLE = "3 2\nI1 1/2 1/1\nI2 4/3 6/6\nI3 1/2 1/6\n"


@pytest.fixture
def example_pop():
    return parse_population(WORKED_EXAMPLE)
