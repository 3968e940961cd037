"""Shared fixtures: the list of test types, a seeded random corpus of cell
points, and the acceptance summary printed at the end of the run."""
from __future__ import annotations

import random
import sys
from pathlib import Path
from typing import Dict, List, Tuple

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lie_centralizer.root_data import LieType  # noqa: E402
from lie_centralizer.weyl_cell import CellPoint, sample_cell_point  # noqa: E402

SEED = 20261016
POINTS_PER_TYPE = 1000

# All nine families (A, B, C, D, E6, E7, E8, F4, G2) at every rank up to 8.
TYPE_NAMES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(3, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)
TYPES = tuple(LieType.parse(s) for s in TYPE_NAMES)
EXCEPTIONAL = tuple(LieType.parse(s) for s in ("G2", "F4", "E6", "E7", "E8"))

# Acceptance criterion number -> (passed, one-line detail).
ACCEPTANCE: Dict[int, Tuple[bool, str]] = {}


def build_corpus(seed: int = SEED, per_type: int = POINTS_PER_TYPE) -> List[CellPoint]:
    """per_type points for every type, alternating strictly interior and wall points."""
    rng = random.Random(seed)
    out = []
    for t in TYPES:
        for k in range(per_type):
            out.append(sample_cell_point(t, rng, wall=k % 2 == 1))
    return out


@pytest.fixture(scope="session")
def corpus() -> List[CellPoint]:
    return build_corpus()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
