import json
from pathlib import Path

import pytest

from circulant_ddp.records import seed_builtin

ORACLE_FILE = Path(__file__).parent / "oracle" / "derived_values.json"


@pytest.fixture(scope="session")
def oracle():
    return json.loads(ORACLE_FILE.read_text())


@pytest.fixture(scope="session")
def seeded():
    return seed_builtin()


def parse_gens(text):
    n, gens = text.split(";")
    return int(n), [int(g) for g in gens.split(",")]
