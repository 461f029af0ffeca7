from pathlib import Path

import pytest

from gdinv.fixtures import WORKED_EXAMPLES
from gdinv.matrix import Matrix

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.mark.parametrize("name", sorted(WORKED_EXAMPLES))
def test_json_fixture_matches_module(name):
    text = (FIXTURE_DIR / f"{name}.json").read_text()
    assert Matrix.from_json(text) == WORKED_EXAMPLES[name]
