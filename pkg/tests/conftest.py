"""Shared fixtures and the acceptance summary reporter.

Tests marked `criterion(<label>)` get one PASS/FAIL line each at the end
of the run so the acceptance status is readable at a glance.
"""

from __future__ import annotations

import pytest

from multiforce.model import MultiplexNetwork, Vertex


def build_mirrored_two_layer() -> MultiplexNetwork:
    """Two layers with identical edge structure over the same six actors."""
    net = MultiplexNetwork()
    actors = [net.add_actor(f"a{i}") for i in range(6)]
    layers = [net.add_layer(name) for name in ("top", "bottom")]
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]
    for layer in layers:
        for actor in actors:
            net.add_vertex(actor, layer)
        for i, j in pairs:
            net.add_edge(Vertex(actors[i], layer), Vertex(actors[j], layer))
    return net


@pytest.fixture
def mirrored_two_layer() -> MultiplexNetwork:
    return build_mirrored_two_layer()


_ACCEPTANCE_RESULTS: dict[str, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    _ACCEPTANCE_RESULTS.clear()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None or not marker.args:
        return
    label = str(marker.args[0])
    _ACCEPTANCE_RESULTS.setdefault(label, []).append((item.name, report.passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE_RESULTS):
        results = _ACCEPTANCE_RESULTS[label]
        ok = all(passed for _, passed in results)
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[acceptance] {label}: {verdict}")
