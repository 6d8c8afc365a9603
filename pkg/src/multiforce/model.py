"""Data model for multiplex networks.

A multiplex network couples an ordered set of layers over a shared set of
actors. A vertex is the appearance of one actor on one layer; edges are
undirected and stay inside a single layer. Replicas of an actor on
different layers are related implicitly through the actor id, never
through explicit cross-layer edges.

Construction is single-writer: populate a network through the ``add_*``
methods, then treat it as read-only. Query methods never mutate, so a
finished network can be shared freely between concurrent readers.
"""

from __future__ import annotations

from typing import NamedTuple

ActorId = int
LayerId = int


class MultiplexError(ValueError):
    """An operation would violate the multiplex network invariants."""


class Vertex(NamedTuple):
    """One appearance of an actor on a layer."""

    actor: ActorId
    layer: LayerId


class Edge(NamedTuple):
    """Undirected in-layer edge with endpoints in canonical order."""

    u: Vertex
    v: Vertex


def canonical_edge(u: Vertex, v: Vertex) -> Edge:
    """Order endpoints so (u, v) and (v, u) map to the same Edge."""
    return Edge(u, v) if u <= v else Edge(v, u)


class MultiplexNetwork:
    """Actors, ordered layers, vertices, and in-layer edges.

    Actor and layer ids are dense integers assigned in insertion order,
    which keeps positions and forces addressable through flat arrays; the
    original labels are preserved for input and output fidelity. An actor
    does not have to appear on every layer.
    """

    def __init__(self) -> None:
        self._actor_labels: list[str] = []
        self._actor_id_of: dict[str, int] = {}
        self._layer_labels: list[str] = []
        self._layer_id_of: dict[str, int] = {}
        self._vertices: set[Vertex] = set()
        self._edges: set[Edge] = set()
        # actor id -> set of layer ids the actor appears on
        self._presence: dict[int, set[int]] = {}

    # -- construction ---------------------------------------------------

    def add_actor(self, label: str) -> ActorId:
        """Register a new actor and return its dense id."""
        if not label:
            raise MultiplexError("actor label must be non-empty")
        if label in self._actor_id_of:
            raise MultiplexError(f"duplicate actor label {label!r}")
        actor = len(self._actor_labels)
        self._actor_labels.append(label)
        self._actor_id_of[label] = actor
        return actor

    def add_layer(self, label: str) -> LayerId:
        """Register a new layer and return its dense id."""
        if not label:
            raise MultiplexError("layer label must be non-empty")
        if label in self._layer_id_of:
            raise MultiplexError(f"duplicate layer label {label!r}")
        layer = len(self._layer_labels)
        self._layer_labels.append(label)
        self._layer_id_of[label] = layer
        return layer

    def add_vertex(self, actor: ActorId, layer: LayerId) -> Vertex:
        """Place an actor on a layer. Re-adding an existing vertex is a no-op."""
        self._check_actor(actor)
        self._check_layer(layer)
        vertex = Vertex(actor, layer)
        if vertex not in self._vertices:
            self._vertices.add(vertex)
            self._presence.setdefault(actor, set()).add(layer)
        return vertex

    def add_edge(self, u: Vertex, v: Vertex) -> Edge:
        """Connect two existing vertices of the same layer."""
        u = Vertex(*u)
        v = Vertex(*v)
        if u == v:
            raise MultiplexError(f"self-loop on vertex {self.describe_vertex(u)}")
        if u.layer != v.layer:
            raise MultiplexError(
                f"cross-layer edge {self.describe_vertex(u)} -- "
                f"{self.describe_vertex(v)}: edges must stay inside one layer"
            )
        for end in (u, v):
            if end not in self._vertices:
                raise MultiplexError(f"unknown vertex {self.describe_vertex(end)}")
        edge = canonical_edge(u, v)
        self._edges.add(edge)
        return edge

    # -- counts and lookups ---------------------------------------------

    @property
    def actor_count(self) -> int:
        return len(self._actor_labels)

    @property
    def layer_count(self) -> int:
        return len(self._layer_labels)

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def actor_labels(self) -> tuple[str, ...]:
        return tuple(self._actor_labels)

    def layer_labels(self) -> tuple[str, ...]:
        return tuple(self._layer_labels)

    def actor_label(self, actor: ActorId) -> str:
        self._check_actor(actor)
        return self._actor_labels[actor]

    def layer_label(self, layer: LayerId) -> str:
        self._check_layer(layer)
        return self._layer_labels[layer]

    def actor_id(self, label: str) -> ActorId:
        try:
            return self._actor_id_of[label]
        except KeyError:
            raise MultiplexError(f"unknown actor label {label!r}") from None

    def layer_id(self, label: str) -> LayerId:
        try:
            return self._layer_id_of[label]
        except KeyError:
            raise MultiplexError(f"unknown layer label {label!r}") from None

    def has_actor_label(self, label: str) -> bool:
        return label in self._actor_id_of

    def has_layer_label(self, label: str) -> bool:
        return label in self._layer_id_of

    def has_vertex(self, vertex: Vertex) -> bool:
        return Vertex(*vertex) in self._vertices

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return canonical_edge(Vertex(*u), Vertex(*v)) in self._edges

    def describe_vertex(self, vertex: Vertex) -> str:
        """Human-readable (actorLabel, layerLabel) form, safe for bad ids."""
        actor = (
            self._actor_labels[vertex.actor]
            if 0 <= vertex.actor < len(self._actor_labels)
            else f"#{vertex.actor}"
        )
        layer = (
            self._layer_labels[vertex.layer]
            if 0 <= vertex.layer < len(self._layer_labels)
            else f"#{vertex.layer}"
        )
        return f"({actor}, {layer})"

    # -- structure queries ----------------------------------------------

    def vertices_sorted(self) -> tuple[Vertex, ...]:
        """All vertices ordered by (layer, actor)."""
        return tuple(sorted(self._vertices, key=lambda v: (v.layer, v.actor)))

    def edges_sorted(self) -> tuple[Edge, ...]:
        """All edges ordered by (layer, first actor, second actor)."""
        return tuple(
            sorted(self._edges, key=lambda e: (e.u.layer, e.u.actor, e.v.actor))
        )

    def replicas(self, actor: ActorId) -> tuple[Vertex, ...]:
        """The actor's vertices across layers, in layer order."""
        self._check_actor(actor)
        layers = sorted(self._presence.get(actor, ()))
        return tuple(Vertex(actor, layer) for layer in layers)

    def layer_subgraph(
        self, layer: LayerId
    ) -> tuple[tuple[Vertex, ...], tuple[Edge, ...]]:
        """Vertices and edges of one layer, both in canonical order."""
        self._check_layer(layer)
        vertices = tuple(v for v in self.vertices_sorted() if v.layer == layer)
        edges = tuple(e for e in self.edges_sorted() if e.u.layer == layer)
        return vertices, edges

    def label_structure(self):
        """Label-level view of the network, for isomorphism comparisons.

        Two networks describe the same structure when their layer label
        order, actor label set, vertex set, and edge set all agree after
        mapping ids back to labels.
        """
        a = self._actor_labels
        l = self._layer_labels
        vertices = frozenset((a[v.actor], l[v.layer]) for v in self._vertices)
        edges = frozenset(
            (tuple(sorted((a[e.u.actor], a[e.v.actor]))), l[e.u.layer])
            for e in self._edges
        )
        return (tuple(l), frozenset(a), vertices, edges)

    def __repr__(self) -> str:
        return (
            f"MultiplexNetwork(actors={self.actor_count}, "
            f"layers={self.layer_count}, vertices={self.vertex_count}, "
            f"edges={self.edge_count})"
        )

    # -- internal -------------------------------------------------------

    def _check_actor(self, actor: ActorId) -> None:
        if not 0 <= actor < len(self._actor_labels):
            raise MultiplexError(f"unknown actor id {actor}")

    def _check_layer(self, layer: LayerId) -> None:
        if not 0 <= layer < len(self._layer_labels):
            raise MultiplexError(f"unknown layer id {layer}")
