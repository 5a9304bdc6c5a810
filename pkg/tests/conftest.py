import pytest
from hypothesis import strategies as st

from graphpoly.graph import Graph, complete_graph, cycle_graph, empty_graph, fig1_graph, path_graph

FIG1_TEXT = "1 2\n1 6\n2 3\n2 6\n3 4\n3 5\n5 6\n"


@pytest.fixture
def fig1():
    return fig1_graph()


@pytest.fixture
def k2():
    return complete_graph(2)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def fig1_file(tmp_path):
    path = tmp_path / "fig1.txt"
    path.write_text(FIG1_TEXT)
    return str(path)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, keep in zip(pairs, mask) if keep))


SMALL_NAMED = {
    "K1": complete_graph(1),
    "K2": complete_graph(2),
    "K3": complete_graph(3),
    "K4": complete_graph(4),
    "P3": path_graph(3),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "E3": empty_graph(3),
    "fig1": fig1_graph(),
}


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record PASS/FAIL for the acceptance criterion named by the test's docstring."""
    label = request.node.function.__doc__.strip().splitlines()[0]
    yield
    failed = getattr(request.node, "rep_call", None)
    status = "FAIL" if failed is None or failed.failed else "PASS"
    ACCEPTANCE_LINES.append(f"{status}  {label}")


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("AC")[1].split(" ")[0])):
            terminalreporter.write_line(line)
