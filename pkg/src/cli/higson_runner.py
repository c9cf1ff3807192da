"""Runner de `coarse-kit higson`: defecto, truncacion minima, propiedad y leyes de estrellas.

--check elige la operacion; las familias se toman con --family (una o dos veces)
o se generan con --block SIZE.
"""

from typing import List, Tuple

from coarse_kit.core.families import Family
from coarse_kit.core.sets import PointSet
from coarse_kit.higson.bounded import (
    delta_image_bridge_check,
    proper_equivalence_check,
    proper_family_check,
    star_proper_inclusion_check,
    two_term_star_inclusion,
)
from coarse_kit.higson.defect import (
    block_family,
    defect_profile,
    higson_defect,
    minimal_truncation,
    prefix_exhaustion,
    star_defect_check,
)
from coarse_kit.metrics.ext_metric import finite_components

from cli.bridge_utils import EXIT_FAILED, EXIT_OK, SchemaError, write_output
from cli.ui_theme import render_status, render_verdict, render_warning, stderr_console
from cli.workspace import Workspace, load_workspace

CHECKS = ("defect", "truncation", "proper", "bridge", "inclusion", "star-defect")


def _families(workspace: Workspace, args, count: int) -> List[Tuple[str, Family]]:
    chosen = []
    if args.block:
        chosen.append((f"block_{args.block}", block_family(workspace.universe(), args.block)))
    names = list(args.family or []) or list(workspace.model.families)
    for name in names[:count - len(chosen)]:
        chosen.append(workspace.family(name))
    if len(chosen) < count:
        raise SchemaError(f"Se necesitan {count} familias (--family o --block)")
    return chosen


def _subsets(workspace: Workspace) -> List[Tuple[str, PointSet]]:
    return [workspace.subset(name) for name in workspace.model.subsets]


def _truncation(workspace: Workspace, args) -> Tuple[str, PointSet]:
    if args.subset:
        return workspace.subset(args.subset)
    return "vacio", workspace.universe().empty()


def _require_eps(args) -> float:
    if args.eps is None or args.eps <= 0:
        raise ValueError("--eps debe ser positivo")
    return args.eps


def _exhaustion(workspace: Workspace, args):
    if args.prefix_step:
        exhaustion = prefix_exhaustion(workspace.universe(), args.prefix_step, include_full=not args.no_full)
        return f"prefix_{args.prefix_step}", exhaustion
    return workspace.exhaustion(args.exhaustion)


def _defect(workspace: Workspace, args) -> dict:
    fname, function = workspace.function(args.function)
    (bname, family), = _families(workspace, args, 1)
    tname, truncation = _truncation(workspace, args)
    report = {
        "function": fname, "family": bname, "truncation": tname,
        "defect": higson_defect(function, family, truncation),
    }
    if args.exhaustion or args.prefix_step or workspace.model.exhaustions:
        ename, exhaustion = _exhaustion(workspace, args)
        report["exhaustion"] = ename
        report["profile"] = defect_profile(function, family, exhaustion)
    report["passed"] = True
    return report


def _minimal_truncation(workspace: Workspace, args) -> dict:
    eps = _require_eps(args)
    fname, function = workspace.function(args.function)
    (bname, family), = _families(workspace, args, 1)
    ename, exhaustion = _exhaustion(workspace, args)
    index = minimal_truncation(function, family, eps, exhaustion)
    return {
        "function": fname, "family": bname, "exhaustion": ename, "eps": eps,
        "stages": len(exhaustion),
        "stage_index": index,
        "stage_size": len(exhaustion.stages[index]) if index is not None else None,
        "conclusive": index is not None,
        # None es "no concluyente en la ventana", no es una falla
        "passed": True,
    }


def _proper(workspace: Workspace, args) -> dict:
    (bname, family), = _families(workspace, args, 1)
    mname, metric = workspace.metric(args.metric)
    named = _subsets(workspace)
    subsets = [s for _, s in named] or finite_components(metric)
    result = proper_family_check(family, subsets, metric, args.bound)
    equivalence = proper_equivalence_check(family, subsets, metric, args.bound)
    return {
        "family": bname, "metric": mname, "bound": args.bound,
        "subsets": [n for n, _ in named] or "finite_components",
        "proper": result.to_dict(),
        "equivalence": equivalence.to_dict(),
        "passed": result.passed and equivalence.agree,
    }


def _bridge(workspace: Workspace, args) -> dict:
    (bname, family), = _families(workspace, args, 1)
    results = {name: delta_image_bridge_check(family, subset) for name, subset in _subsets(workspace)}
    return {"family": bname, "subsets": results, "passed": all(results.values())}


def _inclusion(workspace: Workspace, args) -> dict:
    (first_name, first), (second_name, second) = _families(workspace, args, 2)
    sound, two_term = {}, {}
    for name, subset in _subsets(workspace):
        sound[name] = star_proper_inclusion_check(first, second, subset)
        two_term[name] = two_term_star_inclusion(first, second, subset)
    return {
        "B1": first_name, "B2": second_name,
        "inclusion": sound,
        # diagnostico: la forma de dos terminos no vale en general
        "two_term_inclusion": two_term,
        "passed": all(sound.values()),
    }


def _star_defect(workspace: Workspace, args) -> dict:
    eps = _require_eps(args)
    fname, function = workspace.function(args.function)
    (first_name, first), (second_name, second) = _families(workspace, args, 2)
    tname, subset = _truncation(workspace, args)
    report = star_defect_check(function, first, second, subset, eps)
    return {"function": fname, "B1": first_name, "B2": second_name, "K": tname,
            **report.to_dict(), "passed": report.holds}


HANDLERS = {
    "defect": _defect,
    "truncation": _minimal_truncation,
    "proper": _proper,
    "bridge": _bridge,
    "inclusion": _inclusion,
    "star-defect": _star_defect,
}


def run_higson(args, config: dict) -> int:
    workspace = load_workspace(args.input)
    report = {"check": args.check, **HANDLERS[args.check](workspace, args)}

    if not args.json:
        render_status(stderr_console, f"higson {args.check}")
        if report.get("conclusive") is False:
            render_warning(stderr_console, "ninguna etapa de la exhaustion baja de eps: no concluyente en la ventana")
        render_verdict(stderr_console, report["passed"], args.check)

    workspace.add("reports", f"higson_{args.check}", report)
    write_output(workspace.to_dict(), args.output)
    return EXIT_OK if report["passed"] else EXIT_FAILED
