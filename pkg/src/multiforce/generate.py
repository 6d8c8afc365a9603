"""Seeded generators for synthetic multiplex networks."""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .model import MultiplexNetwork, Vertex


def generate_synthetic_two_layer(seed: int = 1) -> MultiplexNetwork:
    """Two layers, 13 actors present on both, exactly 53 in-layer edges.

    Each layer splits its actors into a 6-strong and a 7-strong community,
    wired densely inside and joined by exactly two bridge edges. Two
    actors swap community between the layers, so most of the community
    structure agrees across layers while part of it does not. Edge
    placement inside communities is random but fully determined by the
    seed.
    """
    rng = np.random.default_rng(seed)
    net = MultiplexNetwork()
    actors = [net.add_actor(f"a{i:02d}") for i in range(13)]
    layers = [net.add_layer("alpha"), net.add_layer("beta")]
    for actor in actors:
        for layer in layers:
            net.add_vertex(actor, layer)

    # Layer 0 splits 6/7; layer 1 swaps actors 5 and 6 between communities.
    communities = {
        layers[0]: (actors[:6], actors[6:]),
        layers[1]: (
            sorted([*actors[:5], actors[6]]),
            sorted([actors[5], *actors[7:]]),
        ),
    }
    # Per layer: 11 spanning-tree edges + extras + 2 bridges. 27 + 26 = 53.
    extras = {layers[0]: 14, layers[1]: 13}

    for layer in layers:
        first, second = communities[layer]
        chosen: set[tuple[int, int]] = set()
        for group in (first, second):
            chosen.update(_spanning_tree(group, rng))
        pool = sorted(
            pair
            for group in (first, second)
            for pair in itertools.combinations(sorted(group), 2)
            if pair not in chosen
        )
        picks = rng.choice(len(pool), size=extras[layer], replace=False)
        chosen.update(pool[i] for i in sorted(picks))
        bridge_pool = sorted(tuple(sorted((a, b))) for a in first for b in second)
        picks = rng.choice(len(bridge_pool), size=2, replace=False)
        chosen.update(bridge_pool[i] for i in sorted(picks))
        for a, b in sorted(chosen):
            net.add_edge(Vertex(a, layer), Vertex(b, layer))
    return net


def _spanning_tree(group: Sequence[int], rng: np.random.Generator) -> set[tuple[int, int]]:
    """Random recursive tree over the group; keeps the community connected."""
    nodes = sorted(group)
    order = [nodes[i] for i in rng.permutation(len(nodes))]
    edges: set[tuple[int, int]] = set()
    for pos in range(1, len(order)):
        parent = order[int(rng.integers(pos))]
        a, b = sorted((order[pos], parent))
        edges.add((a, b))
    return edges


def random_multiplex(
    actors: int,
    layers: int,
    edges_per_layer: int | Sequence[int],
    seed: int,
) -> MultiplexNetwork:
    """Uniform random in-layer edges; every actor appears on every layer.

    ``edges_per_layer`` is either one count applied to all layers or one
    count per layer. Each layer samples that many distinct actor pairs
    without replacement, deterministically for a given seed.
    """
    if actors < 1 or layers < 1:
        raise ValueError("need at least one actor and one layer")
    counts = (
        [int(edges_per_layer)] * layers
        if isinstance(edges_per_layer, int)
        else [int(c) for c in edges_per_layer]
    )
    if len(counts) != layers:
        raise ValueError(f"got {len(counts)} edge counts for {layers} layers")
    pairs = list(itertools.combinations(range(actors), 2))
    for count in counts:
        if count < 0 or count > len(pairs):
            raise ValueError(
                f"cannot place {count} distinct edges among {actors} actors"
            )
    rng = np.random.default_rng(seed)
    net = MultiplexNetwork()
    for i in range(actors):
        net.add_actor(f"n{i}")
    for j in range(layers):
        net.add_layer(f"l{j}")
    for actor in range(actors):
        for layer in range(layers):
            net.add_vertex(actor, layer)
    for layer, count in enumerate(counts):
        if count == 0:
            continue
        picks = rng.choice(len(pairs), size=count, replace=False)
        for idx in sorted(picks):
            a, b = pairs[idx]
            net.add_edge(Vertex(a, layer), Vertex(b, layer))
    return net


def mean_degree_edge_count(actors: int, mean_degree: float) -> int:
    """Edges per layer that give the requested mean in-layer degree."""
    return max(0, round(actors * mean_degree / 2.0))
