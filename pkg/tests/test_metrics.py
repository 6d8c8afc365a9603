import math

import numpy as np
import pytest

from force_oracle import brute_external_fit, brute_internal_fit

from multiforce.engine import LayoutConfig, ideal_distance, layout
from multiforce.generate import generate_synthetic_two_layer
from multiforce.metrics import external_fit, fit_report, internal_fit
from multiforce.model import MultiplexNetwork, Vertex

K = 10.0


def connected_pair() -> MultiplexNetwork:
    net = MultiplexNetwork()
    a = net.add_actor("a")
    b = net.add_actor("b")
    l = net.add_layer("l")
    net.add_edge(net.add_vertex(a, l), net.add_vertex(b, l))
    return net


def replica_chain(layers: int) -> MultiplexNetwork:
    net = MultiplexNetwork()
    a = net.add_actor("a")
    for i in range(layers):
        net.add_vertex(a, net.add_layer(f"l{i}"))
    return net


def test_internal_fit_connected_pair_at_twice_k():
    # repulsion k/2 against attraction 4k leaves 3.5k per endpoint: 7k total
    net = connected_pair()
    positions = {Vertex(0, 0): (0.0, 0.0), Vertex(1, 0): (2.0 * K, 0.0)}
    assert internal_fit(net, positions, K) == pytest.approx(7.0 * K, rel=1e-12)


def test_internal_fit_zero_at_equilibrium_distance():
    net = connected_pair()
    positions = {Vertex(0, 0): (0.0, 0.0), Vertex(1, 0): (K, 0.0)}
    assert internal_fit(net, positions, K) == pytest.approx(0.0, abs=1e-9 * K)


def test_internal_fit_pure_repulsion():
    net = MultiplexNetwork()
    net.add_actor("a")
    net.add_actor("b")
    net.add_layer("l")
    net.add_vertex(0, 0)
    net.add_vertex(1, 0)
    positions = {Vertex(0, 0): (0.0, 0.0), Vertex(1, 0): (5.0, 0.0)}
    # each vertex feels k^2 / 5 = 20
    assert internal_fit(net, positions, K) == pytest.approx(40.0, rel=1e-12)


def test_external_fit_two_replicas():
    net = replica_chain(2)
    positions = {Vertex(0, 0): (0.0, 0.0), Vertex(0, 1): (K, 0.0)}
    assert external_fit(net, positions, K) == pytest.approx(2.0 * K, rel=1e-12)


def test_external_fit_equilateral_replica_triangle():
    net = replica_chain(3)
    positions = {
        Vertex(0, 0): (0.0, 0.0),
        Vertex(0, 1): (K, 0.0),
        Vertex(0, 2): (K / 2.0, K * math.sqrt(3.0) / 2.0),
    }
    expected = 3.0 * math.sqrt(3.0) * K
    assert external_fit(net, positions, K) == pytest.approx(expected, rel=1e-12)
    assert brute_external_fit(net, positions, K) == pytest.approx(expected, rel=1e-12)


def test_external_fit_exactly_zero_for_stacked_replicas():
    net = replica_chain(4)
    positions = {v: (3.25, -1.5) for v in net.vertices_sorted()}
    assert external_fit(net, positions, K) == 0.0


def test_internal_ignores_replicas_external_ignores_edges():
    net = MultiplexNetwork()
    a = net.add_actor("a")
    b = net.add_actor("b")
    l0 = net.add_layer("l0")
    l1 = net.add_layer("l1")
    for actor in (a, b):
        for layer in (l0, l1):
            net.add_vertex(actor, layer)
    net.add_edge(Vertex(a, l0), Vertex(b, l0))
    positions = {
        Vertex(a, l0): (0.0, 0.0),
        Vertex(b, l0): (K, 0.0),
        Vertex(a, l1): (0.0, K),
        Vertex(b, l1): (K, K),
    }
    report = fit_report(net, positions, K)
    # layer 1 has no edge: its pair only repels, at distance k each feels k
    assert report.per_layer_internal[1] == pytest.approx(2.0 * K, rel=1e-12)
    # layer 0 is at equilibrium
    assert report.per_layer_internal[0] == pytest.approx(0.0, abs=1e-9 * K)
    # both actors' replicas sit k apart vertically
    assert report.per_actor_external[0] == pytest.approx(2.0 * K, rel=1e-12)
    assert report.per_actor_external[1] == pytest.approx(2.0 * K, rel=1e-12)


def test_totals_equal_breakdown_sums_exactly():
    net = generate_synthetic_two_layer(seed=1)
    positions = layout(net, LayoutConfig(iterations=20, seed=2))
    k = ideal_distance(net, LayoutConfig().frame)
    report = fit_report(net, positions, k)
    assert report.internal_fit == sum(report.per_layer_internal)
    assert report.external_fit == sum(report.per_actor_external)
    assert len(report.per_layer_internal) == net.layer_count
    assert len(report.per_actor_external) == net.actor_count


def test_fit_matches_brute_force_oracle():
    net = generate_synthetic_two_layer(seed=1)
    config = LayoutConfig(iterations=25, seed=3)
    positions = layout(net, config)
    k = ideal_distance(net, config.frame)
    report = fit_report(net, positions, k)
    assert report.internal_fit == pytest.approx(
        brute_internal_fit(net, positions, k), rel=1e-9
    )
    assert report.external_fit == pytest.approx(
        brute_external_fit(net, positions, k), rel=1e-9
    )


def test_fits_are_translation_invariant():
    net = generate_synthetic_two_layer(seed=1)
    positions = layout(net, LayoutConfig(iterations=15, seed=5))
    k = ideal_distance(net, LayoutConfig().frame)
    shifted = {v: (x + 123.5, y - 42.0) for v, (x, y) in positions.items()}
    assert internal_fit(net, shifted, k) == pytest.approx(
        internal_fit(net, positions, k), rel=1e-9
    )
    assert external_fit(net, shifted, k) == pytest.approx(
        external_fit(net, positions, k), rel=1e-9
    )


def test_fits_are_rotation_invariant():
    net = generate_synthetic_two_layer(seed=1)
    positions = layout(net, LayoutConfig(iterations=15, seed=5))
    k = ideal_distance(net, LayoutConfig().frame)
    c, s = math.cos(0.7), math.sin(0.7)
    rotated = {v: (c * x - s * y, s * x + c * y) for v, (x, y) in positions.items()}
    assert internal_fit(net, rotated, k) == pytest.approx(
        internal_fit(net, positions, k), rel=1e-9
    )
    assert external_fit(net, rotated, k) == pytest.approx(
        external_fit(net, positions, k), rel=1e-9
    )


def test_normalize_divides_by_vertex_count():
    net = connected_pair()
    positions = {Vertex(0, 0): (0.0, 0.0), Vertex(1, 0): (2.0 * K, 0.0)}
    plain = fit_report(net, positions, K)
    scaled = fit_report(net, positions, K, normalize=True)
    assert scaled.internal_fit == pytest.approx(plain.internal_fit / 2.0, rel=1e-12)


def test_coincident_same_layer_pair_is_deterministic():
    net = connected_pair()
    positions = {Vertex(0, 0): (1.0, 1.0), Vertex(1, 0): (1.0, 1.0)}
    first = fit_report(net, positions, K)
    second = fit_report(net, positions, K)
    assert first == second
    assert math.isfinite(first.internal_fit)
    assert first.internal_fit > 0.0


def test_missing_position_raises():
    net = connected_pair()
    with pytest.raises(ValueError, match="no position"):
        internal_fit(net, {Vertex(0, 0): (0.0, 0.0)}, K)


def test_metrics_do_not_mutate_positions():
    net = connected_pair()
    positions = {Vertex(0, 0): (0.0, 0.0), Vertex(1, 0): (7.0, 0.0)}
    snapshot = dict(positions)
    fit_report(net, positions, K)
    assert positions == snapshot


def test_empty_network_reports_zero():
    report = fit_report(MultiplexNetwork(), {}, K)
    assert report.internal_fit == 0.0
    assert report.external_fit == 0.0
    assert report.per_layer_internal == ()
    assert report.per_actor_external == ()
