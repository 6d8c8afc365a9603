"""Static SVG output for multiplex layouts.

Two arrangements: ``side-by-side`` puts each layer in its own panel along
a row; ``stacked-oblique`` shears every panel into a parallelogram and
offsets the layers vertically, approximating the usual 2.5D stack. In the
stacked arrangement a polyline per actor can trace its replicas through
consecutive layers; those lines sit beneath the node glyphs.

Output is plain SVG 1.1 with no scripting, styled through a fixed
qualitative palette cycled by layer id, and byte-stable for a given
(network, positions, spec) triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping
from xml.sax.saxutils import escape, quoteattr

from .engine import Frame
from .model import MultiplexNetwork, Vertex

PALETTE = (
    "#4e79a7",
    "#f28e2b",
    "#59a14f",
    "#e15759",
    "#b07aa1",
    "#76b7b2",
    "#edc948",
    "#9c755f",
)

_ARRANGEMENTS = ("side-by-side", "stacked-oblique")


@dataclass(frozen=True)
class Affine:
    """2D affine map: x' = a*x + b*y + e, y' = c*x + d*y + f."""

    a: float
    b: float
    c: float
    d: float
    e: float
    f: float

    def apply(self, x: float, y: float) -> tuple[float, float]:
        return (
            self.a * x + self.b * y + self.e,
            self.c * x + self.d * y + self.f,
        )


@dataclass(frozen=True)
class RenderSpec:
    """Visual parameters of the SVG export."""

    arrangement: str = "side-by-side"
    panel_width: float = 320.0
    panel_height: float = 320.0
    gutter: float = 20.0  # horizontal space between side-by-side panels
    margin: float = 24.0
    node_radius: float = 4.0
    show_replica_lines: bool = True  # stacked arrangement only
    label_placement: str = "top"  # "top" | "none"
    layer_colors: tuple[str, ...] = PALETTE
    replica_line_color: str = "#b0b0b0"
    oblique_shear: float = 0.45  # x shift per unit of panel depth (stacked)
    layer_offset: float = 150.0  # vertical offset per layer index (stacked)
    label_height: float = 18.0

    def __post_init__(self) -> None:
        if self.arrangement not in _ARRANGEMENTS:
            raise ValueError(
                f"unknown arrangement {self.arrangement!r}; "
                f"expected one of {_ARRANGEMENTS}"
            )
        if not (self.panel_width > 0 and self.panel_height > 0):
            raise ValueError("panel dimensions must be positive")
        if self.label_placement not in ("top", "none"):
            raise ValueError(f"unknown label placement {self.label_placement!r}")
        if not self.layer_colors:
            raise ValueError("layer_colors must not be empty")

    @property
    def label_space(self) -> float:
        return self.label_height if self.label_placement == "top" else 0.0


def panel_transform(layer_index: int, spec: RenderSpec, frame: Frame) -> Affine:
    """Affine map from frame coordinates into layer ``layer_index``'s panel.

    Frame y grows upward, SVG y grows downward, so the map flips y. In the
    side-by-side arrangement panels advance along x by panel width plus
    gutter; in the stacked arrangement panels shear horizontally and drop
    by ``layer_offset`` per layer index.
    """
    sx = spec.panel_width / frame.width
    sy = spec.panel_height / frame.height
    top = spec.margin + spec.label_space
    if spec.arrangement == "side-by-side":
        return Affine(
            a=sx,
            b=0.0,
            c=0.0,
            d=-sy,
            e=spec.margin
            + layer_index * (spec.panel_width + spec.gutter)
            + spec.panel_width / 2.0,
            f=top + spec.panel_height / 2.0,
        )
    # stacked-oblique: x' also depends on the panel-local depth
    # (panel_height - local_y), which is linear in the frame y.
    return Affine(
        a=sx,
        b=spec.oblique_shear * sy,
        c=0.0,
        d=-sy,
        e=spec.margin
        + spec.panel_width / 2.0
        + spec.oblique_shear * spec.panel_height / 2.0,
        f=top + layer_index * spec.layer_offset + spec.panel_height / 2.0,
    )


def canvas_size(spec: RenderSpec, layer_count: int) -> tuple[float, float]:
    """Total SVG canvas size for the given layer count."""
    n = max(layer_count, 1)
    if spec.arrangement == "side-by-side":
        width = 2 * spec.margin + n * spec.panel_width + (n - 1) * spec.gutter
        height = 2 * spec.margin + spec.label_space + spec.panel_height
    else:
        width = 2 * spec.margin + spec.panel_width + spec.oblique_shear * spec.panel_height
        height = (
            2 * spec.margin
            + spec.label_space
            + (n - 1) * spec.layer_offset
            + spec.panel_height
        )
    return width, height


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_svg(
    network: MultiplexNetwork,
    positions: Mapping[Vertex, tuple[float, float]],
    spec: RenderSpec | None = None,
    frame: Frame | None = None,
) -> str:
    """Render the layout as an SVG document string.

    Every layer becomes a group with id ``layer-<label>`` containing its
    edges and node circles; replica polylines (stacked arrangement with
    ``show_replica_lines``) live in a group with id ``interlayer`` placed
    before the layer groups so they paint beneath the nodes. An empty
    network produces a minimal document with an explanatory comment.
    """
    if spec is None:
        spec = RenderSpec()
    if frame is None:
        frame = Frame()
    if network.vertex_count == 0:
        width, height = canvas_size(spec, 0)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(width)}" height="{_fmt(height)}" '
            f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n'
            "  <!-- empty network: nothing to draw -->\n"
            "</svg>\n"
        )

    transforms = [
        panel_transform(layer, spec, frame) for layer in range(network.layer_count)
    ]
    placed: dict[Vertex, tuple[float, float]] = {}
    for vertex in network.vertices_sorted():
        if vertex not in positions:
            raise ValueError(
                f"no position for vertex {network.describe_vertex(vertex)}"
            )
        x, y = positions[vertex]
        placed[vertex] = transforms[vertex.layer].apply(float(x), float(y))

    width, height = canvas_size(spec, network.layer_count)
    lines: list[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    ]

    draw_replicas = (
        spec.arrangement == "stacked-oblique"
        and spec.show_replica_lines
        and network.layer_count > 1
    )
    if draw_replicas:
        lines.append('  <g id="interlayer">')
        for actor in range(network.actor_count):
            replicas = network.replicas(actor)
            if len(replicas) < 2:
                continue
            points = " ".join(
                f"{_fmt(px)},{_fmt(py)}"
                for px, py in (placed[vertex] for vertex in replicas)
            )
            lines.append(
                f'    <polyline points="{points}" fill="none" '
                f'stroke="{spec.replica_line_color}" stroke-width="1"/>'
            )
        lines.append("  </g>")

    for layer in range(network.layer_count):
        label = network.layer_label(layer)
        color = spec.layer_colors[layer % len(spec.layer_colors)]
        group_id = quoteattr(f"layer-{label}")
        lines.append(f"  <g id={group_id}>")
        if spec.label_placement == "top":
            if spec.arrangement == "side-by-side":
                lx = spec.margin + layer * (spec.panel_width + spec.gutter) + 2.0
                ly = spec.margin + spec.label_height - 5.0
            else:
                lx = spec.margin + 2.0
                ly = (
                    spec.margin
                    + spec.label_height
                    - 5.0
                    + layer * spec.layer_offset
                )
            lines.append(
                f'    <text x="{_fmt(lx)}" y="{_fmt(ly)}" '
                f'font-family="sans-serif" font-size="12" '
                f'fill="{color}">{escape(label)}</text>'
            )
        vertices, edges = network.layer_subgraph(layer)
        for edge in edges:
            x1, y1 = placed[edge.u]
            x2, y2 = placed[edge.v]
            lines.append(
                f'    <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="{color}" stroke-width="1" stroke-opacity="0.55"/>'
            )
        for vertex in vertices:
            cx, cy = placed[vertex]
            lines.append(
                f'    <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                f'r="{_fmt(spec.node_radius)}" fill="{color}"/>'
            )
        lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
