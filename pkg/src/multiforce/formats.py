"""Reading and writing networks and run artifacts.

Edge lists are plain UTF-8 text: ``#`` starts a comment, blank lines are
ignored, and records are whitespace-separated. A document may carry
optional ``[layers]`` and ``[vertices]`` sections before the edge records;
a document without section headers is read as a bare list of edges. One
edge record is ``actorLabel actorLabel layerLabel``. Labels cannot contain
whitespace.

Run artifacts go out as JSON (vertex positions) and CSV (fit metrics),
both serialized deterministically so repeated runs produce identical
bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .model import MultiplexNetwork, Vertex, canonical_edge

_SECTION_NAMES = ("layers", "vertices", "edges")


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DatasetValidationError(ValueError):
    """A parsed dataset does not match the counts its manifest promises."""


@dataclass(frozen=True)
class ParsedEdgeList:
    """Parse result: the network plus how many duplicate records collapsed."""

    network: MultiplexNetwork
    duplicate_edges: int


def parse_edge_list(text: str) -> MultiplexNetwork:
    """Parse an edge-list document; duplicate edge records are collapsed."""
    return parse_edge_list_document(text).network


def parse_edge_list_document(text: str) -> ParsedEdgeList:
    """Parse an edge-list document, reporting collapsed duplicates.

    Actors appear in first-encounter order. Layers follow the ``[layers]``
    section when present; otherwise they are declared automatically in
    encounter order. When a ``[layers]`` section exists, referencing an
    undeclared layer is an error.
    """
    net = MultiplexNetwork()
    section = "edges"
    layers_declared = False
    duplicates = 0

    def resolve_layer(label: str, line_no: int) -> int:
        if net.has_layer_label(label):
            return net.layer_id(label)
        if layers_declared:
            raise EdgeListParseError(
                line_no, f"layer {label!r} not declared in [layers]"
            )
        return net.add_layer(label)

    def resolve_actor(label: str) -> int:
        if net.has_actor_label(label):
            return net.actor_id(label)
        return net.add_actor(label)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise EdgeListParseError(line_no, f"malformed section header {line!r}")
            name = line[1:-1].strip().lower()
            if name not in _SECTION_NAMES:
                raise EdgeListParseError(line_no, f"unknown section {line!r}")
            if name == "layers":
                layers_declared = True
            section = name
            continue
        tokens = line.split()
        if section == "layers":
            if len(tokens) != 1:
                raise EdgeListParseError(
                    line_no, "layer declaration must be a single label"
                )
            if net.has_layer_label(tokens[0]):
                raise EdgeListParseError(line_no, f"duplicate layer {tokens[0]!r}")
            net.add_layer(tokens[0])
        elif section == "vertices":
            if len(tokens) != 2:
                raise EdgeListParseError(
                    line_no, "vertex record must be 'actorLabel layerLabel'"
                )
            layer = resolve_layer(tokens[1], line_no)
            net.add_vertex(resolve_actor(tokens[0]), layer)
        else:
            if len(tokens) != 3:
                raise EdgeListParseError(
                    line_no, "edge record must be 'actorLabel actorLabel layerLabel'"
                )
            a_label, b_label, layer_label = tokens
            if a_label == b_label:
                raise EdgeListParseError(line_no, f"self-loop edge on {a_label!r}")
            layer = resolve_layer(layer_label, line_no)
            a = net.add_vertex(resolve_actor(a_label), layer)
            b = net.add_vertex(resolve_actor(b_label), layer)
            if net.has_edge(a, b):
                duplicates += 1
            else:
                net.add_edge(a, b)
    return ParsedEdgeList(network=net, duplicate_edges=duplicates)


def serialize_edge_list(network: MultiplexNetwork) -> str:
    """Canonical text form; parsing it back yields an isomorphic network.

    Layers keep their declaration order; within a layer, records are
    ordered by actor label, with each edge's endpoints label-sorted. Two
    networks describing the same labeled structure therefore serialize to
    identical bytes, and serializing a round-tripped network reproduces
    the document exactly.
    """
    for label in (*network.actor_labels(), *network.layer_labels()):
        if any(ch.isspace() for ch in label):
            raise ValueError(f"label {label!r} contains whitespace; not serializable")
        if label.startswith(("#", "[")):
            raise ValueError(
                f"label {label!r} would be read back as a comment or section header"
            )
    lines: list[str] = ["[layers]"]
    lines.extend(network.layer_labels())
    edges = network.edges_sorted()
    covered: set[Vertex] = set()
    for edge in edges:
        covered.add(edge.u)
        covered.add(edge.v)
    lines.append("[vertices]")
    isolated = [
        (vertex.layer, network.actor_label(vertex.actor))
        for vertex in network.vertices_sorted()
        if vertex not in covered
    ]
    for layer, actor in sorted(isolated):
        lines.append(f"{actor} {network.layer_label(layer)}")
    lines.append("[edges]")
    records = sorted(
        (
            edge.u.layer,
            *sorted(
                (network.actor_label(edge.u.actor), network.actor_label(edge.v.actor))
            ),
        )
        for edge in edges
    )
    for layer, first, second in records:
        lines.append(f"{first} {second} {network.layer_label(layer)}")
    return "\n".join(lines) + "\n"


def write_positions_json(
    positions: Mapping[Vertex, tuple[float, float]], network: MultiplexNetwork
) -> str:
    """Serialize final coordinates, one record per vertex.

    Records are ordered by (layer, actor); ``z`` is the layer index. The
    floats keep full precision, so equal position maps serialize to
    identical bytes.
    """
    records = []
    for vertex in network.vertices_sorted():
        if vertex not in positions:
            raise ValueError(f"no position for vertex {network.describe_vertex(vertex)}")
        x, y = positions[vertex]
        records.append(
            {
                "actor": network.actor_label(vertex.actor),
                "layer": network.layer_label(vertex.layer),
                "x": float(x),
                "y": float(y),
                "z": vertex.layer,
            }
        )
    return json.dumps(records, indent=2) + "\n"


def write_metrics_csv(rows: Iterable[tuple[str, str, float, float]]) -> str:
    """CSV with one row per run: dataset, setting, internal fit, external fit."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["dataset", "setting", "internal_fit", "external_fit"])
    for dataset, setting, internal, external in rows:
        writer.writerow([dataset, setting, float(internal), float(external)])
    return buf.getvalue()


@dataclass(frozen=True)
class DatasetManifestEntry:
    """Expected shape of one dataset file; any count may be omitted.

    ``directed_counted`` marks files whose published edge count refers to
    directed pairs, so the undirected parse is allowed to hold half as
    many edges.
    """

    name: str
    path: str
    layers: int | None = None
    actors: int | None = None
    edges: int | None = None
    directed_counted: bool = False


def read_manifest(path: str | Path) -> list[DatasetManifestEntry]:
    """Read a JSON array of dataset manifest entries."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, list):
        raise ValueError("manifest must be a JSON array of entries")
    entries = []
    for item in raw:
        entries.append(
            DatasetManifestEntry(
                name=item["name"],
                path=item["path"],
                layers=item.get("layers"),
                actors=item.get("actors"),
                edges=item.get("edges"),
                directed_counted=bool(item.get("directed_counted", False)),
            )
        )
    return entries


def load_dataset(
    entry: DatasetManifestEntry, base_dir: str | Path | None = None
) -> MultiplexNetwork:
    """Parse the entry's edge-list file and validate the parsed counts."""
    path = Path(entry.path)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    network = parse_edge_list(path.read_text(encoding="utf-8"))

    def check(kind: str, expected: int | None, actual: int, doubled_ok: bool = False):
        if expected is None or actual == expected:
            return
        if doubled_ok and expected == 2 * actual:
            return
        raise DatasetValidationError(
            f"{entry.name}: expected {expected} {kind}, file has {actual}"
        )

    check("layers", entry.layers, network.layer_count)
    check("actors", entry.actors, network.actor_count)
    check("edges", entry.edges, network.edge_count, doubled_ok=entry.directed_counted)
    return network
