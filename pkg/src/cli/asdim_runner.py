"""Runner de `coarse-kit asdim`: descomposiciones exactas, ladrillos y reporte de Hurewicz.

Modos:
  exact     busqueda exhaustiva sobre la metrica del workspace (con tope de puntos)
  brick     ladrillos sobre una ventana Z o Z^2
  hurewicz  desigualdad n_X <= n_f + n_Y para un mapa del workspace o la demo de proyeccion
"""

from typing import List, Optional, Tuple

from coarse_kit.asdim.components import max_component_diameter, multiplicity
from coarse_kit.asdim.decompositions import (
    Decomposition,
    brick_decomposition,
    components_to_cover,
    decomposition_check,
    star_disjointness_check,
)
from coarse_kit.asdim.finders import SearchContext, find_decomposition_bruteforce, parts_are_bounded
from coarse_kit.asdim.hurewicz import hurewicz_report
from coarse_kit.core.families import refines
from coarse_kit.core.sets import PointMap
from coarse_kit.metrics.ext_metric import BoxWindow, ExtMetric, ball_family, scale_pair_family

from cli.bridge_utils import EXIT_FAILED, EXIT_OK, SchemaError, write_output
from cli.ui_theme import render_scale_table, render_status, render_verdict, stderr_console
from cli.workspace import Workspace, load_workspace

# decomposition_check contra las D-bolas solo en ventanas chicas; si no, diametros directos
BALL_CHECK_LIMIT = 1200


def _scales(text: str) -> List[float]:
    try:
        scales = [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValueError(f"--scales invalido: {text!r}") from exc
    if not scales or any(r <= 0 for r in scales):
        raise ValueError("--scales necesita escalas positivas")
    return scales


def verify_decomposition(decomposition: Decomposition, metric: ExtMetric, radius: float, bound: float) -> dict:
    """Cada r-componente de cada parte tiene diametro <= D."""
    parts = decomposition.parts
    if metric.size <= BALL_CHECK_LIMIT:
        # las B-componentes de los pares a distancia <= r son las r-componentes
        verified = decomposition_check(
            decomposition, scale_pair_family(metric, radius), ball_family(metric, bound),
        ) and parts_are_bounded(metric, parts, radius, bound)
        method = "decomposition_check"
    else:
        verified = parts_are_bounded(metric, parts, radius, bound)
        method = "component_diameters"
    return {
        "verified": verified,
        "method": method,
        "component_diameters": [max_component_diameter(metric, part, radius) for part in parts],
    }


def _exact(workspace: Workspace, args, config: dict) -> Tuple[dict, bool]:
    name, metric = workspace.metric(args.metric)
    radius = args.scale or 1.0
    n = args.n if args.n is not None else 1
    bound = args.bound if args.bound is not None else config.get("bound_factor", 8) * radius
    decomposition = find_decomposition_bruteforce(
        metric, radius, n, bound, exact_cap=config.get("exact_search_cap", 16),
    )
    report = {"mode": "exact", "metric": f"metrics.{name}", "scale": radius, "n": n, "D_bound": bound}
    if decomposition is None:
        report.update(found=False, verified=False, parts=None)
        return report, False
    report["found"] = True
    report["parts"] = decomposition.to_lists()
    report.update(verify_decomposition(decomposition, metric, radius, bound))
    if workspace.model.ground_set is not None and workspace.model.ground_set.size == metric.size:
        workspace.add("decompositions", f"exact_{name}", decomposition.to_lists())
    return report, report["verified"]


def _brick_window(workspace: Workspace, args) -> Tuple[str, BoxWindow]:
    if args.input and workspace.model.metrics:
        name = args.metric or next(iter(workspace.model.metrics))
        window = workspace.window(name)
        if window is None:
            raise SchemaError(f"metrics.{name} no es una ventana Z^k")
        return f"metrics.{name}", window
    dim = args.dim or 2
    size = args.size or 32 * int(max(1, args.scale or 1))
    return f"Z^{dim}[{size}]", BoxWindow((size,) * dim)


def _brick(workspace: Workspace, args, config: dict) -> Tuple[dict, bool]:
    label, window = _brick_window(workspace, args)
    radius = args.scale or 1.0
    bound = args.bound if args.bound is not None else config.get("bound_factor", 8) * radius
    decomposition = brick_decomposition(window.dim, window, radius)
    metric = window.grid_metric()
    report = {
        "mode": "brick", "window": label, "extents": list(window.extents), "scale": radius,
        "n": decomposition.n, "D_bound": bound, "parts": decomposition.to_lists(),
    }
    report.update(verify_decomposition(decomposition, metric, radius, bound))
    if metric.size <= BALL_CHECK_LIMIT:
        balls = ball_family(metric, radius)
        cover = components_to_cover(decomposition, balls)
        report["cover"] = {
            "members": len(cover),
            "multiplicity": multiplicity(cover),
            "refined_by_balls": refines(balls, cover),
            "star_disjointness": star_disjointness_check(decomposition, balls).to_dict(),
        }
    return report, report["verified"]


def _projection_demo(size: int) -> Tuple[PointMap, ExtMetric, ExtMetric, BoxWindow, BoxWindow]:
    plane = BoxWindow((size, size))
    line = BoxWindow((size,))
    return plane.projection(0, line), plane.grid_metric(), line.grid_metric(), plane, line


def _hurewicz(workspace: Workspace, args, config: dict) -> Tuple[dict, bool]:
    source_window: Optional[BoxWindow] = None
    target_window: Optional[BoxWindow] = None
    if args.demo == "projection":
        size = args.size or 64
        mapping, source, target, source_window, target_window = _projection_demo(size)
        label = f"proyeccion Z^2[{size}] -> Z[{size}]"
    else:
        name, mapping, source, target = workspace.point_map(args.map)
        spec = workspace.model.maps[name]
        source_window = workspace.window(spec.source)
        target_window = workspace.window(spec.target)
        label = f"maps.{name}"

    cap = config.get("exact_search_cap", 16)
    report = hurewicz_report(
        mapping, source, target, _scales(args.scales),
        bound_factor=config.get("bound_factor", 8),
        source_context=SearchContext(exact_cap=cap, window=source_window),
        target_context=SearchContext(exact_cap=cap, window=target_window),
    )
    data = {"mode": "hurewicz", "map": label, **report.to_dict()}
    if not args.json:
        render_scale_table(stderr_console, data["scales"])
    return data, report.holds


MODES = {"exact": _exact, "brick": _brick, "hurewicz": _hurewicz}


def run_asdim(args, config: dict) -> int:
    needs_input = args.mode == "exact" or (args.mode == "hurewicz" and args.demo is None)
    workspace = load_workspace(args.input, required=needs_input)
    report, ok = MODES[args.mode](workspace, args, config)
    if not args.json:
        render_status(stderr_console, f"asdim {args.mode}")
        render_verdict(stderr_console, ok, "verificacion")

    if args.input:
        workspace.add("reports", "asdim", report)
        write_output(workspace.to_dict(), args.output)
    else:
        write_output({"command": "asdim", "success": ok, **report}, args.output)
    return EXIT_OK if ok else EXIT_FAILED
