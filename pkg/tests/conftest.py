import json
import sys
from pathlib import Path

import pytest
from hypothesis import settings

from richardson.dimvec import proper_dimvecs
from richardson.kinds import Kind

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"

ORTH_SIZES = range(3, 13)
SYMP_SIZES = range(2, 13, 2)


def sweep_vectors():
    out = []
    for N in ORTH_SIZES:
        out += proper_dimvecs(Kind.ORTHOGONAL, N)
    for N in SYMP_SIZES:
        out += proper_dimvecs(Kind.SYMPLECTIC, N)
    return out


@pytest.fixture(scope="session")
def sweep():
    return sweep_vectors()


@pytest.fixture(scope="session")
def figures():
    return json.loads((DATA / "figures.json").read_text())


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.LINES:
            terminalreporter.write_line(line)
