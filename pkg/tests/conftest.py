import random

import pytest
from hypothesis import strategies as st

from twelverep.graph import LabeledGraph, new_labeled_graph
from twelverep.words import Word

G1_EDGES = [[4, 8], [6, 8], [1, 7], [1, 5], [2, 3], [4, 5], [2, 5], [1, 8], [1, 3], [6, 7]]
# the same graph as G1 under a different labeling
G2_EDGES = [[4, 7], [6, 7], [2, 8], [2, 5], [1, 3], [4, 5], [1, 5], [2, 7], [2, 3], [6, 8]]

G1_WORD = "8753532847616421"
G1_SHORT = "35278471246"
G2_WORD = "351748246"


@pytest.fixture
def g1() -> LabeledGraph:
    return new_labeled_graph(8, G1_EDGES)


@pytest.fixture
def g2() -> LabeledGraph:
    return new_labeled_graph(8, G2_EDGES)


def random_word(rng: random.Random, n: int, doubles: int | None = None) -> Word:
    """Uniformly shuffled word over [n] with a random set of doubled letters."""
    if doubles is None:
        doubles = rng.randint(0, n)
    letters = list(range(1, n + 1)) + rng.sample(range(1, n + 1), doubles)
    rng.shuffle(letters)
    return Word(tuple(letters), n)


@st.composite
def words(draw, max_n: int = 8, min_n: int = 1) -> Word:
    """Words with every letter occurring once or twice."""
    n = draw(st.integers(min_n, max_n))
    doubled = draw(st.lists(st.integers(1, n), unique=True, max_size=n))
    letters = draw(st.permutations(list(range(1, n + 1)) + doubled))
    return Word(tuple(letters), n)


@st.composite
def graphs(draw, max_n: int = 6, min_n: int = 1) -> LabeledGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return LabeledGraph(n, tuple(p for p, keep in zip(pairs, mask) if keep))


_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = "PASS" if rep.outcome == "passed" else "FAIL"
        prev = _criteria.get(number)
        if prev is None or prev[1] == "PASS":
            _criteria[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
