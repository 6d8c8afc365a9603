"""Command line front end.

Four subcommands: ``layout`` runs one configuration and writes positions
(plus an optional SVG), ``grid`` sweeps uniform weight combinations,
``compare`` runs the built-in settings side by side over several seeds,
and ``scaling`` times layout runs over growing actor counts. Identical
invocations produce byte-identical positions, SVG, and metrics files;
only the timing output of ``scaling`` varies, since it records wall time.

Built-in settings: ``balanced`` (all weights 1), ``independent``
(inter-layer weights 0), and ``anchored:<layerLabel>`` (edge attraction
only on the anchor layer, full replica attraction, shared starting
points, which makes the other layers adopt the anchor's arrangement).
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

from .engine import Frame, LayoutConfig, PositionMap, ideal_distance, layout
from .formats import (
    parse_edge_list,
    write_metrics_csv,
    write_positions_json,
)
from .generate import (
    generate_synthetic_two_layer,
    mean_degree_edge_count,
    random_multiplex,
)
from .metrics import fit_report
from .model import MultiplexNetwork
from .render import RenderSpec, render_svg

BUILTIN_SETTINGS = ("balanced", "independent", "anchored:<layerLabel>")


@dataclass(frozen=True)
class RunSetting:
    """A named weight configuration resolved against a concrete network."""

    name: str
    config: LayoutConfig


@dataclass(frozen=True)
class SweepRow:
    """One layout run inside a sweep."""

    dataset: str
    setting: str
    seed: int
    internal_fit: float
    external_fit: float
    wall_time: float


def resolve_setting(
    name: str, network: MultiplexNetwork, base: LayoutConfig
) -> RunSetting:
    """Turn a setting name into a concrete config for this network."""
    if name == "balanced":
        return RunSetting(name, replace(base, inla=1.0, interla=1.0))
    if name == "independent":
        return RunSetting(name, replace(base, inla=1.0, interla=0.0))
    if name.startswith("anchored:"):
        label = name.split(":", 1)[1]
        anchor = network.layer_id(label)  # raises on unknown label
        inla = tuple(
            1.0 if layer == anchor else 0.0 for layer in range(network.layer_count)
        )
        return RunSetting(
            name, replace(base, inla=inla, interla=1.0, shared_init=True)
        )
    raise ValueError(
        f"unknown setting {name!r}; expected one of {', '.join(BUILTIN_SETTINGS)}"
    )


def execute_run(
    network: MultiplexNetwork,
    dataset: str,
    label: str,
    config: LayoutConfig,
) -> tuple[SweepRow, PositionMap]:
    """Run one layout, measure it, and return the row plus the positions."""
    start = time.perf_counter()
    positions = layout(network, config)
    elapsed = time.perf_counter() - start
    report = fit_report(network, positions, ideal_distance(network, config.frame))
    row = SweepRow(
        dataset=dataset,
        setting=label,
        seed=config.seed,
        internal_fit=report.internal_fit,
        external_fit=report.external_fit,
        wall_time=elapsed,
    )
    return row, positions


def grid_sweep(
    network: MultiplexNetwork,
    dataset: str,
    base: LayoutConfig,
    inla_values: Sequence[float],
    interla_values: Sequence[float],
    seed: int,
    seed_count: int,
) -> list[tuple[SweepRow, PositionMap]]:
    """Run every (inla, interla, seed) combination with uniform weights."""
    runs = []
    for inla in inla_values:
        for interla in interla_values:
            label = f"inla={inla:g} interla={interla:g}"
            for s in range(seed, seed + seed_count):
                config = replace(
                    base, inla=float(inla), interla=float(interla), seed=s
                )
                runs.append(execute_run(network, dataset, label, config))
    return runs


def compare_sweep(
    network: MultiplexNetwork,
    dataset: str,
    base: LayoutConfig,
    seed: int,
    seed_count: int,
    max_anchors: int | None = None,
) -> list[tuple[SweepRow, PositionMap]]:
    """Run balanced, independent, and one anchored setting per layer.

    Requires at least two layers; a single-layer network has no
    inter-layer structure to compare. ``max_anchors`` caps how many
    anchored settings run (in layer order) for networks with many layers.
    """
    if network.layer_count < 2:
        raise ValueError(
            "baseline comparison needs at least two layers; "
            f"dataset {dataset!r} has {network.layer_count}"
        )
    anchors = list(network.layer_labels())
    if max_anchors is not None and max_anchors > 0:
        anchors = anchors[:max_anchors]
    names = ["balanced", "independent"] + [f"anchored:{label}" for label in anchors]
    runs = []
    for name in names:
        setting = resolve_setting(name, network, base)
        for s in range(seed, seed + seed_count):
            config = replace(setting.config, seed=s)
            runs.append(execute_run(network, dataset, setting.name, config))
    return runs


def scaling_sweep(
    layer_count: int,
    actor_counts: Sequence[int],
    mean_degree: float,
    iterations: int,
    seed: int,
    seed_count: int,
) -> list[tuple[int, int, float]]:
    """Time layout runs on random networks of growing size.

    Returns (actors, layers, seconds) rows, one per size and seed. The
    timed region covers only the layout itself, not network generation.
    """
    rows = []
    for s in range(seed, seed + seed_count):
        for actors in actor_counts:
            net = random_multiplex(
                actors,
                layer_count,
                mean_degree_edge_count(actors, mean_degree),
                seed=s,
            )
            config = LayoutConfig(iterations=iterations, seed=s)
            start = time.perf_counter()
            layout(net, config)
            rows.append((actors, layer_count, time.perf_counter() - start))
    return rows


# -- argument plumbing ----------------------------------------------------


def _add_network_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", type=Path, help="edge-list file to lay out")
    group.add_argument(
        "--generate",
        choices=["synthetic2"],
        help="use a built-in generated network instead of a file",
    )


def _add_run_args(parser: argparse.ArgumentParser, iterations: int = 100) -> None:
    parser.add_argument("--seed", type=int, default=1, help="base random seed")
    parser.add_argument(
        "--iterations", type=int, default=iterations, help="layout iterations"
    )
    parser.add_argument("--width", type=float, default=1000.0, help="frame width")
    parser.add_argument("--height", type=float, default=1000.0, help="frame height")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument(
        "--rescale",
        action="store_true",
        help="rescale the finished drawing into the frame instead of clamping",
    )
    mode.add_argument(
        "--clamp",
        action="store_true",
        help="clamp coordinates to the frame every iteration (default)",
    )


def _add_out_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--out", type=Path, default=Path("."), help="output directory"
    )


def _base_config(args: argparse.Namespace) -> LayoutConfig:
    rescale = bool(getattr(args, "rescale", False))
    return LayoutConfig(
        frame=Frame(args.width, args.height),
        iterations=args.iterations,
        seed=args.seed,
        clamp_to_frame=not rescale,
        rescale_to_frame=rescale,
    )


def _load_network(args: argparse.Namespace) -> tuple[MultiplexNetwork, str]:
    if args.generate:
        return generate_synthetic_two_layer(), args.generate
    text = args.input.read_text(encoding="utf-8")
    return parse_edge_list(text), args.input.stem


def _render_spec(kind: str) -> RenderSpec:
    arrangement = "side-by-side" if kind == "side" else "stacked-oblique"
    return RenderSpec(arrangement=arrangement)


def _parse_weight_list(text: str, name: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"--{name} must be a comma-separated list of reals") from None
    if not values:
        raise ValueError(f"--{name} must contain at least one value")
    for value in values:
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"--{name} value {value:g} outside [0, 1]")
    return values


def _write(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")


# -- subcommands ----------------------------------------------------------


def cmd_layout(args: argparse.Namespace) -> int:
    network, dataset = _load_network(args)
    base = _base_config(args)
    setting = resolve_setting(args.setting, network, base)
    config = replace(setting.config, seed=args.seed)
    positions = layout(network, config)
    out = Path(args.out)
    _write(out / "positions.json", write_positions_json(positions, network))
    if args.svg:
        _write(
            out / "layout.svg",
            render_svg(network, positions, _render_spec(args.svg), config.frame),
        )
    report = fit_report(
        network, positions, ideal_distance(network, config.frame)
    )
    print(f"dataset={dataset} setting={setting.name} seed={args.seed}")
    print(f"internal_fit={report.internal_fit!r}")
    print(f"external_fit={report.external_fit!r}")
    return 0


def cmd_grid(args: argparse.Namespace) -> int:
    network, dataset = _load_network(args)
    base = _base_config(args)
    inla_values = _parse_weight_list(args.inla, "inla")
    interla_values = _parse_weight_list(args.interla, "interla")
    runs = grid_sweep(
        network, dataset, base, inla_values, interla_values, args.seed, args.seeds
    )
    out = Path(args.out)
    spec = _render_spec(args.svg)
    for row, positions in runs:
        inla_part, interla_part = (
            part.split("=")[1] for part in row.setting.split(" ")
        )
        name = f"cell_inla{inla_part}_interla{interla_part}_seed{row.seed}.svg"
        _write(out / name, render_svg(network, positions, spec, base.frame))
    _write(
        out / "metrics.csv",
        write_metrics_csv(
            (r.dataset, r.setting, r.internal_fit, r.external_fit)
            for r, _ in runs
        ),
    )
    print(f"grid: {len(runs)} runs written to {out}")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    network, dataset = _load_network(args)
    base = _base_config(args)
    runs = compare_sweep(
        network, dataset, base, args.seed, args.seeds, args.max_anchors
    )
    out = Path(args.out)
    _write(
        out / "metrics.csv",
        write_metrics_csv(
            (r.dataset, r.setting, r.internal_fit, r.external_fit)
            for r, _ in runs
        ),
    )
    rows = [row for row, _ in runs]
    for name in dict.fromkeys(row.setting for row in rows):
        internal = statistics.median(
            row.internal_fit for row in rows if row.setting == name
        )
        external = statistics.median(
            row.external_fit for row in rows if row.setting == name
        )
        print(
            f"{name}: median internal_fit={internal!r} "
            f"median external_fit={external!r}"
        )
    return 0


def cmd_scaling(args: argparse.Namespace) -> int:
    actor_counts = [int(tok) for tok in args.actors.split(",") if tok.strip() != ""]
    if not actor_counts:
        raise ValueError("--actors must contain at least one count")
    if actor_counts != sorted(actor_counts):
        raise ValueError("--actors counts must be ascending")
    if args.layers < 1:
        raise ValueError("--layers must be at least 1")
    rows = scaling_sweep(
        args.layers,
        actor_counts,
        args.mean_degree,
        args.iterations,
        args.seed,
        args.seeds,
    )
    lines = ["actors,layers,seconds"]
    lines.extend(f"{a},{l},{t!r}" for a, l, t in rows)
    _write(Path(args.out) / "timing.csv", "\n".join(lines) + "\n")
    for actors, layers, seconds in rows:
        print(f"actors={actors} layers={layers} seconds={seconds:.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiforce",
        description="Multiplex network layout and reproduction harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_layout = sub.add_parser("layout", help="run one layout and write artifacts")
    _add_network_args(p_layout)
    _add_run_args(p_layout)
    _add_out_arg(p_layout)
    p_layout.add_argument(
        "--setting",
        default="balanced",
        help="balanced, independent, or anchored:<layerLabel>",
    )
    p_layout.add_argument(
        "--svg", choices=["side", "stacked"], help="also write an SVG rendering"
    )
    p_layout.set_defaults(func=cmd_layout)

    p_grid = sub.add_parser(
        "grid", help="sweep uniform weight combinations, write SVG cells and metrics"
    )
    _add_network_args(p_grid)
    _add_run_args(p_grid)
    _add_out_arg(p_grid)
    p_grid.add_argument(
        "--inla", default="0,0.5,1", help="comma-separated in-layer weights"
    )
    p_grid.add_argument(
        "--interla", default="0,0.5,1", help="comma-separated inter-layer weights"
    )
    p_grid.add_argument(
        "--seeds", type=int, default=1, help="number of seeds (seed..seed+count-1)"
    )
    p_grid.add_argument(
        "--svg", choices=["side", "stacked"], default="side", help="cell SVG style"
    )
    p_grid.set_defaults(func=cmd_grid)

    p_compare = sub.add_parser(
        "compare", help="run built-in settings over seeds, write metrics"
    )
    _add_network_args(p_compare)
    _add_run_args(p_compare)
    _add_out_arg(p_compare)
    p_compare.add_argument(
        "--seeds", type=int, default=10, help="number of seeds (seed..seed+count-1)"
    )
    p_compare.add_argument(
        "--max-anchors",
        type=int,
        default=None,
        help="cap the number of anchored settings (default: one per layer)",
    )
    p_compare.set_defaults(func=cmd_compare)

    p_scaling = sub.add_parser(
        "scaling", help="time layouts on growing random networks, write timing CSV"
    )
    _add_out_arg(p_scaling)
    p_scaling.add_argument("--layers", type=int, default=2, help="layer count")
    p_scaling.add_argument(
        "--actors",
        default="100,200,400,800",
        help="comma-separated ascending actor counts",
    )
    p_scaling.add_argument(
        "--mean-degree", type=float, default=6.0, help="mean in-layer degree"
    )
    p_scaling.add_argument("--iterations", type=int, default=50)
    p_scaling.add_argument("--seed", type=int, default=1)
    p_scaling.add_argument("--seeds", type=int, default=1)
    p_scaling.set_defaults(func=cmd_scaling)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # domain errors: bad settings, weights, files
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
