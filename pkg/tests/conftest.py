import pytest

from intervalham.graph import Graph

# filled by test_acceptance; printed after the run so the lines survive capture
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def _graph(n, edges, labels=None):
    return Graph.from_edges(n, edges, labels=labels)


@pytest.fixture
def diamond():
    """The diamond: edges ab, ac, bc, bd, cd."""
    return _graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], labels="abcd")


@pytest.fixture
def p3():
    return _graph(3, [(0, 1), (1, 2)], labels="abc")


@pytest.fixture
def claw():
    # centre c, leaves x y z
    return _graph(4, [(0, 1), (0, 2), (0, 3)], labels="cxyz")


@pytest.fixture
def k4():
    return _graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


@pytest.fixture
def k5e():
    """K_5 minus the edge 0-1."""
    return _graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) != (0, 1)])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
