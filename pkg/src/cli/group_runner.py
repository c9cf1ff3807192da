"""Runner de `coarse-kit group`: testigos de traslaciones, divergencia izquierda/derecha y Svarc-Milnor.

Los elementos viajan como texto canonico del oraculo (p.ej. "1,0" en Z^2,
"xY" en el grupo libre, "1/2^0|1" en BS(1,2)).
"""

from typing import List

from coarse_kit.groups.actions import (
    orbit_radius_check,
    svarc_milnor_cover_check,
    svarc_milnor_finiteness_check,
    translation_action,
)
from coarse_kit.groups.oracles import (
    BS12Oracle,
    FiniteSubset,
    GroupElement,
    GroupOracle,
    ZnOracle,
    oracle_from_descriptor,
    word_ball,
)
from coarse_kit.groups.shifts import cover_candidates, divergence_search, left_witness
from coarse_kit.metrics.ext_metric import BoxWindow

from cli.bridge_utils import EXIT_FAILED, EXIT_OK, SchemaError, write_output
from cli.ui_theme import render_status, render_verdict, stderr_console
from cli.workspace import GroupTaskModel, load_workspace

DEFAULT_BS12_BOUNDS = {"max_numerator": 64, "max_exponent": 2, "max_height": 2}


def _witness(oracle: GroupOracle, task: GroupTaskModel) -> dict:
    members = [oracle.decode_all(m) for m in task.members]
    witness = left_witness(oracle, members)
    covered = []
    for member in members:
        basepoint = oracle.least(member)
        covered.append(member <= oracle.left_translate(basepoint, witness))
    return {
        "action": "witness",
        "F": oracle.encode_all(witness),
        "members": len(members),
        "all_covered": all(covered),
        "passed": all(covered),
    }


def search_space(oracle: GroupOracle, task: GroupTaskModel) -> List[GroupElement]:
    if isinstance(oracle, BS12Oracle):
        bounds = {**DEFAULT_BS12_BOUNDS, **(task.search_bounds or {})}
        if min(bounds.values()) < 0:
            raise SchemaError("Las cotas de busqueda deben ser >= 0")
        return oracle.search_space(bounds["max_numerator"], bounds["max_exponent"], bounds["max_height"])
    return oracle.sorted(word_ball(oracle, task.search_radius))


def _subset_f(oracle: GroupOracle, task: GroupTaskModel) -> FiniteSubset:
    if task.F is not None:
        return oracle.decode_all(task.F)
    if task.F_radius is not None:
        return word_ball(oracle, task.F_radius)
    raise SchemaError("divergence necesita F o F_radius")


def _divergence(oracle: GroupOracle, task: GroupTaskModel) -> dict:
    shifts = oracle.decode_all(task.E)
    subset = _subset_f(oracle, task)
    space = search_space(oracle, task)
    if not space:
        raise SchemaError("El espacio de busqueda es vacio")
    witness = divergence_search(oracle, shifts, subset, space)
    report = {
        "action": "divergence",
        "E": oracle.encode_all(shifts),
        "F_size": len(subset),
        "search_space": len(space),
        "witness": None,
        "certificate": None,
        "passed": True,
    }
    if witness is not None:
        report["witness"] = oracle.encode(witness)
        # interseccion vacia de los y posibles: ningun F*y cubre x*E
        report["certificate"] = [
            {"e": oracle.encode(e), "y_options": oracle.encode_all(options)}
            for e, options in zip(oracle.sorted(shifts), cover_candidates(oracle, witness, shifts, subset))
        ]
    return report


def _svarc_milnor(oracle: GroupOracle, task: GroupTaskModel) -> dict:
    if not isinstance(oracle, ZnOracle) or task.window is None:
        raise SchemaError("svarc-milnor necesita un descriptor Zn y una ventana")
    window = BoxWindow(tuple(task.window))
    if window.dim != oracle.n:
        raise SchemaError(f"La ventana tiene dimension {window.dim}, el grupo Z^{oracle.n}")
    action = translation_action(window)
    coords = task.basepoint or [extent // 2 for extent in window.extents]
    basepoint = window.index(coords)
    if basepoint is None:
        raise SchemaError(f"El punto base {coords} esta fuera de la ventana")

    candidates = action.group.sorted(word_ball(action.group, task.candidate_radius))
    finiteness = svarc_milnor_finiteness_check(action, basepoint, task.radius, candidates)
    cover = svarc_milnor_cover_check(action, basepoint, task.radius, candidates)
    orbit = orbit_radius_check(action, basepoint, word_ball(action.group, 1), candidates)
    return {
        "action": "svarc-milnor",
        "basepoint": list(coords),
        "radius": task.radius,
        "candidates": len(candidates),
        "finiteness": finiteness.to_dict(action.group),
        "cover": cover.to_dict(action.group),
        "orbit_radius": orbit.to_dict(),
        "passed": cover.passed and orbit.passed,
    }


ACTIONS = {"witness": _witness, "divergence": _divergence, "svarc-milnor": _svarc_milnor}


def run_group(args, config: dict) -> int:
    workspace = load_workspace(args.input)
    name, task = workspace.group_task(args.group)
    oracle = oracle_from_descriptor(task.descriptor)
    report = {"group": f"groups.{name}", "descriptor": oracle.describe(), **ACTIONS[args.action](oracle, task)}

    if not args.json:
        render_status(stderr_console, f"{args.action} sobre groups.{name} ({oracle.kind})")
        if args.action == "divergence":
            render_status(stderr_console, f"testigo: {report['witness']}")
        render_verdict(stderr_console, report["passed"], args.action)

    workspace.add("reports", f"group_{args.action}", report)
    write_output(workspace.to_dict(), args.output)
    return EXIT_OK if report["passed"] else EXIT_FAILED
