"""Runner de `coarse-kit convert`: familia -> Delta(B) o entourage -> B(E) maximal.

El workspace de salida es el de entrada mas el objeto convertido y un
reporte de ida y vuelta en reports.convert.
"""

from coarse_kit.core.families import refines
from coarse_kit.entourages.conversion import (
    coarse_axiom_report,
    delta_of_family,
    maximal_family_of_entourage,
)
from coarse_kit.entourages.relation import reflexive_symmetric_interior

from cli.bridge_utils import EXIT_OK, write_output
from cli.ui_theme import render_status, render_verdict, stderr_console
from cli.workspace import Workspace, load_workspace

DIRECTIONS = ("family-to-entourage", "entourage-to-family")


def family_to_entourage(workspace: Workspace, name: str = None, target: str = None) -> dict:
    name, family = workspace.family(name)
    delta = delta_of_family(family)
    maximal = maximal_family_of_entourage(delta)
    target = target or f"delta_{name}"
    workspace.add("entourages", target, delta.to_lists())
    return {
        "direction": "family-to-entourage",
        "source": f"families.{name}",
        "target": f"entourages.{target}",
        "pairs": len(delta),
        # B refina B(Delta(B)) y Delta(B(Delta(B))) = Delta(B)
        "family_refines_maximal": refines(family, maximal),
        "roundtrip_identity": delta_of_family(maximal) == delta,
    }


def entourage_to_family(workspace: Workspace, name: str = None, target: str = None) -> dict:
    name, relation = workspace.entourage(name)
    maximal = maximal_family_of_entourage(relation)
    interior = reflexive_symmetric_interior(relation)
    target = target or f"maximal_{name}"
    workspace.add("families", target, maximal.to_lists())
    return {
        "direction": "entourage-to-family",
        "source": f"entourages.{name}",
        "target": f"families.{target}",
        "members": len(maximal),
        "reflexive": relation.is_reflexive(),
        "symmetric": relation.is_symmetric(),
        "interior_pairs": len(interior),
        "roundtrip_identity": delta_of_family(maximal) == interior,
        "axioms": coarse_axiom_report([relation]).to_dict(),
    }


def run_convert(args, config: dict) -> int:
    workspace = load_workspace(args.input)
    if args.direction == "family-to-entourage":
        report = family_to_entourage(workspace, args.name, args.target)
    else:
        report = entourage_to_family(workspace, args.name, args.target)

    if not args.json:
        render_status(stderr_console, f"{report['source']} -> {report['target']}")
        render_verdict(stderr_console, report["roundtrip_identity"], "ida y vuelta")

    workspace.add("reports", "convert", report)
    write_output(workspace.to_dict(), args.output)
    return EXIT_OK
