import time

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mcst.graph import Graph

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    """Random spanning tree over a shuffled vertex order plus arbitrary extra edges."""
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(n)))
    edges = set()
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        u, v = perm[i], perm[j]
        edges.add((min(u, v), max(u, v)))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
        edges.update(extra)
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graph_and_subset(draw, min_n=1, max_n=9):
    g = draw(connected_graphs(min_n, max_n))
    s = draw(st.frozensets(st.integers(0, g.n - 1))) if g.n else frozenset()
    return g, s


# ---- acceptance summary ------------------------------------------------------

_CRITERIA: dict[int, tuple[str, str, float]] = {}


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
    if rep.when == "setup" and rep.outcome != "passed":
        _CRITERIA[number] = (title, "FAIL", 0.0)
    elif rep.when == "call":
        _CRITERIA[number] = (title, "PASS" if rep.passed else "FAIL", rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, duration = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  ({duration:.2f}s)")


class Stopwatch:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
