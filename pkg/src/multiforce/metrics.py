"""Residual-force quality measures for finished layouts.

A layout is good inside a layer when the forces its own structure exerts
have cancelled out, and aligned across layers when replicas of each actor
no longer pull on each other. Both measures sum, over vertices, the
Euclidean magnitude of the net residual force vector:

* internal fit: same-layer repulsion plus edge attraction,
* external fit: replica attraction over all layer pairs.

Both are always evaluated with every weight at 1, whatever weights the
run that produced the positions used, so results from different settings
stay comparable. Lower is better. Absolute values depend on network size
and the frame; compare runs, not networks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .engine import (
    COINCIDENCE_FLOOR_FACTOR,
    NetworkIndex,
    _edge_attraction,
    _pair_repulsion,
    index_network,
)
from .model import MultiplexNetwork, Vertex


@dataclass(frozen=True)
class FitReport:
    """Fit totals plus per-layer and per-actor breakdowns.

    ``internal_fit`` always equals the sum of ``per_layer_internal`` and
    ``external_fit`` the sum of ``per_actor_external``.
    """

    internal_fit: float
    external_fit: float
    per_layer_internal: tuple[float, ...]
    per_actor_external: tuple[float, ...]


def _position_array(
    index: NetworkIndex,
    positions: Mapping[Vertex, tuple[float, float]],
    network: MultiplexNetwork,
) -> np.ndarray:
    array = np.zeros((len(index.vertices), 2))
    for row, vertex in enumerate(index.vertices):
        if vertex not in positions:
            raise ValueError(
                f"no position for vertex {network.describe_vertex(vertex)}"
            )
        x, y = positions[vertex]
        array[row, 0] = x
        array[row, 1] = y
    return array


def _in_layer_residual(index: NetworkIndex, pos: np.ndarray, k: float) -> np.ndarray:
    """Net unit-weight in-layer force vector per vertex."""
    floor = COINCIDENCE_FLOOR_FACTOR * k
    residual = np.zeros_like(pos)
    for rows in index.layer_slices:
        block, coincident = _pair_repulsion(pos[rows], k, floor)
        push = (k * k) / floor
        for a, b in coincident:
            # No randomness here: split exactly coincident pairs along a
            # fixed axis so the metric stays a pure function of its input.
            block[b, 0] += push
            block[a, 0] -= push
        residual[rows] += block
    if index.edge_u.size:
        contrib = _edge_attraction(pos[index.edge_u], pos[index.edge_v], k)
        np.add.at(residual, index.edge_v, -contrib)
        np.add.at(residual, index.edge_u, contrib)
    return residual


def _inter_layer_residual(index: NetworkIndex, pos: np.ndarray, k: float) -> np.ndarray:
    """Net unit-weight replica attraction vector per vertex."""
    residual = np.zeros_like(pos)
    for _, _, rows_a, rows_b in index.inter_pairs:
        if rows_a.size == 0:
            continue
        contrib = _edge_attraction(pos[rows_a], pos[rows_b], k)
        residual[rows_b] -= contrib
        residual[rows_a] += contrib
    return residual


def fit_report(
    network: MultiplexNetwork,
    positions: Mapping[Vertex, tuple[float, float]],
    k: float,
    *,
    normalize: bool = False,
) -> FitReport:
    """Compute both fits with breakdowns; pure, positions are not touched.

    ``k`` is the ideal edge length the forces are evaluated against
    (normally the one the layout ran with). With ``normalize`` every
    value is divided by the vertex count, which makes differently sized
    networks loosely comparable.
    """
    index = index_network(network)
    pos = _position_array(index, positions, network)

    in_residual = _in_layer_residual(index, pos, k)
    in_magnitudes = np.sqrt(np.sum(in_residual * in_residual, axis=1))
    per_layer = [float(np.sum(in_magnitudes[rows])) for rows in index.layer_slices]

    ex_residual = _inter_layer_residual(index, pos, k)
    ex_magnitudes = np.sqrt(np.sum(ex_residual * ex_residual, axis=1))
    per_actor_acc = np.zeros(index.actor_count)
    np.add.at(per_actor_acc, index.actor_of, ex_magnitudes)
    per_actor = [float(value) for value in per_actor_acc]

    if normalize:
        count = max(len(index.vertices), 1)
        per_layer = [value / count for value in per_layer]
        per_actor = [value / count for value in per_actor]

    return FitReport(
        internal_fit=float(sum(per_layer)),
        external_fit=float(sum(per_actor)),
        per_layer_internal=tuple(per_layer),
        per_actor_external=tuple(per_actor),
    )


def internal_fit(
    network: MultiplexNetwork,
    positions: Mapping[Vertex, tuple[float, float]],
    k: float,
) -> float:
    """Sum over vertices of the net in-layer force magnitude, unit weights."""
    return fit_report(network, positions, k).internal_fit


def external_fit(
    network: MultiplexNetwork,
    positions: Mapping[Vertex, tuple[float, float]],
    k: float,
) -> float:
    """Sum over vertices of the net replica attraction magnitude, unit weights."""
    return fit_report(network, positions, k).external_fit
