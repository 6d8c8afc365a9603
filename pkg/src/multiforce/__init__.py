"""Force-directed layout for multiplex networks.

The layout balances two pulls: edges attract inside each layer, and the
replicas of an actor attract each other across layers, with independent
weights for both sides. Residual-force metrics (internal and external
fit) quantify the trade-off, and the I/O helpers read edge lists and
write positions, metrics, and SVG renderings deterministically.
"""

from .engine import (
    COINCIDENCE_FLOOR_FACTOR,
    CoolingSchedule,
    Frame,
    LayoutConfig,
    LayoutState,
    NetworkIndex,
    PositionMap,
    accumulate_in_layer_attraction,
    accumulate_inter_layer_attraction,
    accumulate_repulsion,
    apply_displacements,
    attractive_force_magnitude,
    cool,
    ideal_distance,
    index_network,
    initialize_positions,
    layout,
    make_state,
    repulsive_force_magnitude,
    resolve_weights,
)
from .formats import (
    DatasetManifestEntry,
    DatasetValidationError,
    EdgeListParseError,
    ParsedEdgeList,
    load_dataset,
    parse_edge_list,
    parse_edge_list_document,
    read_manifest,
    serialize_edge_list,
    write_metrics_csv,
    write_positions_json,
)
from .generate import (
    generate_synthetic_two_layer,
    mean_degree_edge_count,
    random_multiplex,
)
from .metrics import FitReport, external_fit, fit_report, internal_fit
from .model import (
    ActorId,
    Edge,
    LayerId,
    MultiplexError,
    MultiplexNetwork,
    Vertex,
    canonical_edge,
)
from .render import PALETTE, Affine, RenderSpec, canvas_size, panel_transform, render_svg

__version__ = "0.1.0"

__all__ = [
    "ActorId",
    "Affine",
    "COINCIDENCE_FLOOR_FACTOR",
    "CoolingSchedule",
    "DatasetManifestEntry",
    "DatasetValidationError",
    "Edge",
    "EdgeListParseError",
    "FitReport",
    "Frame",
    "LayerId",
    "LayoutConfig",
    "LayoutState",
    "MultiplexError",
    "MultiplexNetwork",
    "NetworkIndex",
    "PALETTE",
    "ParsedEdgeList",
    "PositionMap",
    "RenderSpec",
    "Vertex",
    "accumulate_in_layer_attraction",
    "accumulate_inter_layer_attraction",
    "accumulate_repulsion",
    "apply_displacements",
    "attractive_force_magnitude",
    "canonical_edge",
    "canvas_size",
    "cool",
    "external_fit",
    "fit_report",
    "generate_synthetic_two_layer",
    "ideal_distance",
    "index_network",
    "initialize_positions",
    "internal_fit",
    "layout",
    "load_dataset",
    "make_state",
    "mean_degree_edge_count",
    "panel_transform",
    "parse_edge_list",
    "parse_edge_list_document",
    "random_multiplex",
    "read_manifest",
    "render_svg",
    "repulsive_force_magnitude",
    "resolve_weights",
    "serialize_edge_list",
    "write_metrics_csv",
    "write_positions_json",
]
