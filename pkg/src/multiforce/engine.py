"""Force-directed multiplex layout.

Vertices repel other vertices of their own layer, edges pull their
endpoints together, and the replicas of one actor pull each other into
alignment across layers. The two attraction kinds carry independent
weights (``inla`` per layer, ``interla`` per unordered layer pair), so a
run can favour faithful per-layer structure, tight cross-layer alignment,
or any trade-off in between. With a single layer, or with all inter-layer
weights at zero, the iteration reduces to a classic spring layout run
independently inside each layer.

Every source of randomness (initial placement, tie-breaking for
coincident vertices) comes from the config seed, and all accumulation
runs in a fixed order, so a given (network, config) pair always produces
byte-identical coordinates. The engine is single-threaded.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .model import MultiplexNetwork, Vertex

PositionMap = dict[Vertex, tuple[float, float]]

# Repulsion distance floor for (near-)coincident vertices, as a fraction
# of the ideal edge length k. Keeps k^2/z finite without touching any
# realistically separated pair.
COINCIDENCE_FLOOR_FACTOR = 1e-4


def repulsive_force_magnitude(z: float, k: float) -> float:
    """Repulsion strength k^2 / z between same-layer vertices at distance z."""
    return (k * k) / z


def attractive_force_magnitude(z: float, k: float) -> float:
    """Attraction strength z^2 / k across an edge (or replica pair) at distance z."""
    return (z * z) / k


@dataclass(frozen=True)
class Frame:
    """Drawing area centered on the origin.

    Coordinates live in [-width/2, width/2] x [-height/2, height/2].
    """

    width: float = 1000.0
    height: float = 1000.0

    def __post_init__(self) -> None:
        if not (self.width > 0 and self.height > 0):
            raise ValueError("frame dimensions must be positive")

    @property
    def area(self) -> float:
        return self.width * self.height


@dataclass(frozen=True)
class CoolingSchedule:
    """Temperature decay: ``linear`` (default) or ``geometric``.

    Linear decay runs the start temperature down to a floor of one
    thousandth of its value over the configured iterations. Geometric
    decay multiplies by ``ratio`` each iteration.
    """

    kind: str = "linear"
    ratio: float = 0.9

    def __post_init__(self) -> None:
        if self.kind not in ("linear", "geometric"):
            raise ValueError(f"unknown cooling kind {self.kind!r}")
        if self.kind == "geometric" and not (0.0 < self.ratio < 1.0):
            raise ValueError("geometric cooling ratio must be in (0, 1)")


def _check_weight(value: float, name: str) -> float:
    value = float(value)
    if not (0.0 <= value <= 1.0):
        raise ValueError(f"{name} weight {value} outside [0, 1]")
    return value


@dataclass(frozen=True)
class LayoutConfig:
    """Everything a layout run depends on besides the network itself.

    ``inla`` weights the in-layer edge attraction: a scalar applies to
    every layer, a sequence gives one weight per layer id. ``interla``
    weights the replica attraction per unordered layer pair: a scalar
    applies to every pair, a mapping keys weights by (layerId, layerId).
    All weights live in [0, 1].

    ``shared_init`` starts all replicas of an actor at one shared random
    point instead of independent draws. ``weight_repulsion`` additionally
    scales each layer's repulsion by that layer's ``inla`` weight; it is
    off by default. ``clamp_to_frame`` keeps coordinates inside the frame
    at every step, while ``rescale_to_frame`` fits the finished drawing
    into the frame with one global transform afterwards.
    """

    frame: Frame = field(default_factory=Frame)
    iterations: int = 100
    seed: int = 0
    inla: float | tuple[float, ...] = 1.0
    interla: float | Mapping[tuple[int, int], float] = 1.0
    shared_init: bool = False
    weight_repulsion: bool = False
    clamp_to_frame: bool = True
    rescale_to_frame: bool = False
    cooling: CoolingSchedule = field(default_factory=CoolingSchedule)

    def __post_init__(self) -> None:
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")
        if isinstance(self.inla, (int, float)):
            object.__setattr__(self, "inla", _check_weight(self.inla, "inla"))
        else:
            object.__setattr__(
                self,
                "inla",
                tuple(_check_weight(w, "inla") for w in self.inla),
            )
        if isinstance(self.interla, (int, float)):
            object.__setattr__(self, "interla", _check_weight(self.interla, "interla"))
        else:
            normalized: dict[tuple[int, int], float] = {}
            for key, value in self.interla.items():
                a, b = key
                if a == b:
                    raise ValueError(f"interla key {key} must pair two distinct layers")
                pair = (min(a, b), max(a, b))
                value = _check_weight(value, "interla")
                if pair in normalized and normalized[pair] != value:
                    raise ValueError(f"conflicting interla weights for pair {pair}")
                normalized[pair] = value
            object.__setattr__(self, "interla", normalized)
        if not self.clamp_to_frame and not self.rescale_to_frame:
            warnings.warn(
                "neither clamp_to_frame nor rescale_to_frame is set; "
                "final coordinates may fall outside the frame",
                stacklevel=2,
            )


def resolve_weights(
    config: LayoutConfig, layer_count: int
) -> tuple[np.ndarray, np.ndarray]:
    """Expand config weights into dense per-layer / per-pair arrays."""
    if isinstance(config.inla, float):
        inla = np.full(layer_count, config.inla)
    else:
        if len(config.inla) != layer_count:
            raise ValueError(
                f"inla has {len(config.inla)} entries for {layer_count} layers"
            )
        inla = np.asarray(config.inla, dtype=float)
    inter = np.zeros((layer_count, layer_count))
    if isinstance(config.interla, float):
        inter[:, :] = config.interla
        np.fill_diagonal(inter, 0.0)
    else:
        for a in range(layer_count):
            for b in range(a + 1, layer_count):
                if (a, b) not in config.interla:
                    raise ValueError(
                        f"missing inter-layer weight for layer pair ({a}, {b})"
                    )
                inter[a, b] = inter[b, a] = config.interla[(a, b)]
    return inla, inter


@dataclass(frozen=True)
class NetworkIndex:
    """Array-oriented view of a network, fixed for the whole run.

    Vertices are ordered by (layer, actor), so each layer occupies one
    contiguous row range of the position array.
    """

    vertices: tuple[Vertex, ...]
    row_of: dict[Vertex, int]
    layer_slices: tuple[slice, ...]
    actor_of: np.ndarray  # (n,) actor id per row
    edge_u: np.ndarray  # (|E|,) row of the canonical first endpoint
    edge_v: np.ndarray  # (|E|,) row of the canonical second endpoint
    edge_layer: np.ndarray  # (|E|,) layer id per edge
    # one entry per unordered layer pair with shared actors:
    # (layer_a, layer_b, rows on layer_a, rows on layer_b), actor-aligned
    inter_pairs: tuple[tuple[int, int, np.ndarray, np.ndarray], ...]
    actor_count: int
    layer_count: int


def index_network(network: MultiplexNetwork) -> NetworkIndex:
    """Build the flat-array index the force passes iterate over."""
    vertices = network.vertices_sorted()
    row_of = {vertex: row for row, vertex in enumerate(vertices)}
    layer_count = network.layer_count
    bounds = [0] * (layer_count + 1)
    for vertex in vertices:
        bounds[vertex.layer + 1] += 1
    for layer in range(layer_count):
        bounds[layer + 1] += bounds[layer]
    layer_slices = tuple(
        slice(bounds[layer], bounds[layer + 1]) for layer in range(layer_count)
    )
    actor_of = np.asarray([v.actor for v in vertices], dtype=np.intp)

    edges = network.edges_sorted()
    edge_u = np.asarray([row_of[e.u] for e in edges], dtype=np.intp)
    edge_v = np.asarray([row_of[e.v] for e in edges], dtype=np.intp)
    edge_layer = np.asarray([e.u.layer for e in edges], dtype=np.intp)

    on_layer: list[dict[int, int]] = [{} for _ in range(layer_count)]
    for vertex in vertices:
        on_layer[vertex.layer][vertex.actor] = row_of[vertex]
    inter_pairs = []
    for a in range(layer_count):
        for b in range(a + 1, layer_count):
            shared = sorted(on_layer[a].keys() & on_layer[b].keys())
            rows_a = np.asarray([on_layer[a][actor] for actor in shared], dtype=np.intp)
            rows_b = np.asarray([on_layer[b][actor] for actor in shared], dtype=np.intp)
            inter_pairs.append((a, b, rows_a, rows_b))
    return NetworkIndex(
        vertices=vertices,
        row_of=row_of,
        layer_slices=layer_slices,
        actor_of=actor_of,
        edge_u=edge_u,
        edge_v=edge_v,
        edge_layer=edge_layer,
        inter_pairs=tuple(inter_pairs),
        actor_count=network.actor_count,
        layer_count=layer_count,
    )


@dataclass
class LayoutState:
    """Mutable run state: coordinates, pending displacements, temperature."""

    positions: np.ndarray  # (n, 2) float64, rows follow index.vertices
    displacement: np.ndarray  # (n, 2) float64
    temperature: float
    start_temperature: float
    k: float  # ideal in-layer edge length
    iteration: int
    rng: np.random.Generator
    index: NetworkIndex
    inla_weights: np.ndarray  # (L,)
    interla_weights: np.ndarray  # (L, L) symmetric, zero diagonal


def ideal_distance(network: MultiplexNetwork, frame: Frame) -> float:
    """Edge length at which attraction and repulsion balance: sqrt(area / actors)."""
    return math.sqrt(frame.area / max(network.actor_count, 1))


def _draw_initial(
    index: NetworkIndex, config: LayoutConfig, rng: np.random.Generator
) -> np.ndarray:
    """Uniform draws over the frame, consumed in (actor, layer) order.

    With ``shared_init`` one (x, y) pair is drawn per actor id and reused
    by all of the actor's replicas; otherwise each vertex draws its own.
    """
    half_w = config.frame.width / 2.0
    half_h = config.frame.height / 2.0
    low = (-half_w, -half_h)
    high = (half_w, half_h)
    positions = np.zeros((len(index.vertices), 2))
    if config.shared_init:
        draws = rng.uniform(low=low, high=high, size=(index.actor_count, 2))
        for row, vertex in enumerate(index.vertices):
            positions[row] = draws[vertex.actor]
    else:
        order = sorted(index.vertices)  # Vertex sorts by (actor, layer)
        draws = rng.uniform(low=low, high=high, size=(len(order), 2))
        for draw_row, vertex in enumerate(order):
            positions[index.row_of[vertex]] = draws[draw_row]
    return positions


def initialize_positions(network: MultiplexNetwork, config: LayoutConfig) -> PositionMap:
    """Seed-deterministic starting coordinates for every vertex."""
    index = index_network(network)
    rng = np.random.default_rng(config.seed)
    positions = _draw_initial(index, config, rng)
    return _as_map(index, positions)


def make_state(network: MultiplexNetwork, config: LayoutConfig) -> LayoutState:
    """Initialize a run: index the network, resolve weights, place vertices."""
    index = index_network(network)
    inla, interla = resolve_weights(config, network.layer_count)
    rng = np.random.default_rng(config.seed)
    positions = _draw_initial(index, config, rng)
    actors = max(network.actor_count, 1)
    k = math.sqrt(config.frame.area / actors)
    t0 = math.sqrt(actors)
    return LayoutState(
        positions=positions,
        displacement=np.zeros_like(positions),
        temperature=t0,
        start_temperature=t0,
        k=k,
        iteration=0,
        rng=rng,
        index=index,
        inla_weights=inla,
        interla_weights=interla,
    )


def _pair_repulsion(
    points: np.ndarray, k: float, floor: float
) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Summed pairwise repulsion for one layer's points.

    Exactly coincident pairs cannot supply a direction; they are excluded
    from the matrix pass and returned (ascending index order) for the
    caller to resolve.
    """
    m = points.shape[0]
    block = np.zeros_like(points)
    if m < 2:
        return block, []
    delta = points[:, None, :] - points[None, :, :]
    dist = np.sqrt(np.sum(delta * delta, axis=2))
    np.fill_diagonal(dist, np.inf)
    zero_mask = dist == 0.0
    if zero_mask.any():
        coincident = [(int(a), int(b)) for a, b in np.argwhere(np.triu(zero_mask, k=1))]
        dist[zero_mask] = np.inf
    else:
        coincident = []
    effective = np.maximum(dist, floor)
    unit = delta / dist[:, :, None]
    magnitude = (k * k) / effective
    block += np.sum(unit * magnitude[:, :, None], axis=1)
    return block, coincident


def accumulate_repulsion(
    state: LayoutState, network: MultiplexNetwork, config: LayoutConfig
) -> None:
    """Add same-layer pairwise repulsion to the pending displacements.

    Vertices never repel across layers. A coincident pair is pushed apart
    along a seed-deterministic random direction with the force evaluated
    at the floor distance.
    """
    k = state.k
    floor = COINCIDENCE_FLOOR_FACTOR * k
    for layer, rows in enumerate(state.index.layer_slices):
        block, coincident = _pair_repulsion(state.positions[rows], k, floor)
        if coincident:
            push_magnitude = (k * k) / floor
            for a, b in coincident:
                angle = state.rng.uniform(0.0, 2.0 * math.pi)
                push = np.array([math.cos(angle), math.sin(angle)]) * push_magnitude
                block[b] += push
                block[a] -= push
        if config.weight_repulsion:
            block *= state.inla_weights[layer]
        state.displacement[rows] += block


def _edge_attraction(pu: np.ndarray, pv: np.ndarray, k: float) -> np.ndarray:
    """Per-pair attraction term, directed from v toward u.

    Returns c with: displacement[v] -= c, displacement[u] += c. Pairs at
    distance zero contribute an exact zero.
    """
    delta = pv - pu
    dist = np.sqrt(np.sum(delta * delta, axis=1))
    safe = np.where(dist == 0.0, 1.0, dist)
    return (delta / safe[:, None]) * ((dist * dist) / k)[:, None]


def accumulate_in_layer_attraction(
    state: LayoutState, network: MultiplexNetwork, config: LayoutConfig
) -> None:
    """Add weighted edge attraction to the pending displacements.

    Each endpoint's pull is scaled by the ``inla`` weight of its layer
    (for an in-layer edge both endpoints share that weight).
    """
    index = state.index
    if index.edge_u.size == 0:
        return
    contrib = _edge_attraction(
        state.positions[index.edge_u], state.positions[index.edge_v], state.k
    )
    weight = state.inla_weights[index.edge_layer][:, None]
    np.add.at(state.displacement, index.edge_v, -(contrib * weight))
    np.add.at(state.displacement, index.edge_u, contrib * weight)


def accumulate_inter_layer_attraction(
    state: LayoutState, network: MultiplexNetwork, config: LayoutConfig
) -> None:
    """Pull each actor's replicas together across every layer pair.

    Replica pairs attract in the shared (x, y) plane with the same force
    law as edges, scaled by the layer pair's ``interla`` weight. Pairs
    with weight zero are skipped outright.
    """
    for layer_a, layer_b, rows_a, rows_b in state.index.inter_pairs:
        weight = float(state.interla_weights[layer_a, layer_b])
        if weight == 0.0 or rows_a.size == 0:
            continue
        contrib = _edge_attraction(
            state.positions[rows_a], state.positions[rows_b], state.k
        )
        state.displacement[rows_b] -= contrib * weight
        state.displacement[rows_a] += contrib * weight


def apply_displacements(state: LayoutState, config: LayoutConfig) -> None:
    """Move each vertex along its displacement, at most the temperature.

    Vertices with a zero net displacement stay put. With
    ``clamp_to_frame`` coordinates are clipped to the frame afterwards.
    """
    disp = state.displacement
    length = np.sqrt(np.sum(disp * disp, axis=1))
    moving = length > 0.0
    if np.any(moving):
        step = np.minimum(length[moving], state.temperature)
        state.positions[moving] += disp[moving] / length[moving, None] * step[:, None]
    if config.clamp_to_frame:
        half_w = config.frame.width / 2.0
        half_h = config.frame.height / 2.0
        np.clip(state.positions[:, 0], -half_w, half_w, out=state.positions[:, 0])
        np.clip(state.positions[:, 1], -half_h, half_h, out=state.positions[:, 1])


def cool(t: float, iteration: int, config: LayoutConfig, t0: float) -> float:
    """Temperature after ``iteration`` completed iterations.

    Linear decay depends on the start temperature and the iteration
    number; geometric decay scales the current temperature.
    """
    if config.cooling.kind == "linear":
        return max(t0 * (1.0 - iteration / config.iterations), t0 / 1000.0)
    return t * config.cooling.ratio


def _as_map(index: NetworkIndex, positions: np.ndarray) -> PositionMap:
    return {
        vertex: (float(positions[row, 0]), float(positions[row, 1]))
        for row, vertex in enumerate(index.vertices)
    }


def _rescale_to_frame(positions: np.ndarray, frame: Frame) -> None:
    """Fit the whole drawing into the frame with one uniform transform.

    All layers share the transform, so inter-layer alignment is
    preserved. The scale is the smaller of the two per-dimension fits,
    centered on the drawing's bounding-box center.
    """
    if positions.shape[0] == 0:
        return
    lows = positions.min(axis=0)
    highs = positions.max(axis=0)
    center = (lows + highs) / 2.0
    extent = highs - lows
    scales = [
        frame.width / extent[0] if extent[0] > 0 else math.inf,
        frame.height / extent[1] if extent[1] > 0 else math.inf,
    ]
    scale = min(scales)
    if not math.isfinite(scale):
        scale = 1.0
    positions -= center
    positions *= scale


def layout(
    network: MultiplexNetwork,
    config: LayoutConfig | None = None,
    *,
    on_iteration: Callable[[int, PositionMap], None] | None = None,
) -> PositionMap:
    """Run the multiplex layout and return final vertex coordinates.

    The run is deterministic: a fixed (network, config) pair yields a
    byte-identical position map regardless of how often or where it is
    repeated. ``on_iteration`` receives (iteration, positions snapshot)
    after each iteration, before any final rescale.
    """
    if config is None:
        config = LayoutConfig()
    if network.vertex_count == 0:
        resolve_weights(config, network.layer_count)  # still validate
        return {}
    state = make_state(network, config)
    for i in range(1, config.iterations + 1):
        state.iteration = i
        state.displacement[:] = 0.0
        accumulate_repulsion(state, network, config)
        accumulate_in_layer_attraction(state, network, config)
        accumulate_inter_layer_attraction(state, network, config)
        apply_displacements(state, config)
        state.temperature = cool(
            state.temperature, i, config, state.start_temperature
        )
        if on_iteration is not None:
            on_iteration(i, _as_map(state.index, state.positions))
    if config.rescale_to_frame:
        _rescale_to_frame(state.positions, config.frame)
    return _as_map(state.index, state.positions)
