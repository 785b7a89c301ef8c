from __future__ import annotations

import csv
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"


def read_golden(name: str) -> list[dict]:
    """Rows of a golden CSV, integer columns converted."""
    with open(GOLDEN / name, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return [{k: (int(v) if v.lstrip("-").isdigit() else v) for k, v in r.items()} for r in rows]


@pytest.fixture
def golden():
    return read_golden
