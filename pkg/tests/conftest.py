import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from primaltop.primal import PrimalSpace, validate_primal  # noqa: E402
from primaltop.sets import SetFamily, Universe  # noqa: E402
from primaltop.topology import validate_topology  # noqa: E402

DATA = Path(__file__).parent / "data"

# (topology, primal) of the six worked examples, as runs of point letters
EX_A = (("", "b", "c", "bc", "ac", "abc"), ("", "b", "c", "bc"))
EX_B = (("", "abc"), ("", "b", "c", "bc"))
EX_C = (("", "a", "c", "ac", "abc"), ("", "a", "b", "c", "ab", "ac"))
EX_D = (("", "abc", "ab", "bc", "b"), ("", "a", "b", "ab"))
EX_E = (("", "abc", "a", "b", "ab"), ("", "a", "b", "ab"))
EX_F = (("", "abc", "a", "b", "ab"), ("", "a", "b", "c", "ac", "bc"))

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def family(u, *sets):
    """``family(U, "", "b", "bc")`` with each string a run of one-letter points."""
    return SetFamily.of_names(u, [list(s) for s in sets])


def space(top, prim, points="abc", name=None):
    u = Universe(tuple(points))
    return PrimalSpace(
        validate_topology(family(u, *top)), validate_primal(family(u, *prim)), name
    )


@pytest.fixture
def U3():
    return Universe(("a", "b", "c"))


@pytest.fixture(scope="session")
def regressions():
    return json.loads((DATA / "regressions.json").read_text())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
