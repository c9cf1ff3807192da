"""Runner de `coarse-kit metrize`: semilla -> cadena de escalas -> infinito-metrica."""

from coarse_kit.metrics.chains import (
    chain_metric_equivalence,
    generate_chain,
    metrize,
    sharpened_triangle_violations,
)
from coarse_kit.metrics.ext_metric import triangle_violations

from cli.bridge_utils import EXIT_FAILED, EXIT_OK, write_output
from cli.ui_theme import render_status, render_verdict, stderr_console
from cli.workspace import load_workspace, metric_rows


def run_metrize(args, config: dict) -> int:
    depth = args.depth if args.depth is not None else config.get("default_depth", 6)
    if depth < 1:
        raise ValueError(f"--depth debe ser >= 1, llego {depth}")

    workspace = load_workspace(args.input)
    name, seed = workspace.family(args.family)
    chain = generate_chain(seed, depth)
    metric = metrize(chain)
    equivalence = chain_metric_equivalence(chain, metric)

    report = equivalence.to_dict()
    report["seed"] = f"families.{name}"
    report["triangle_violations"] = [list(t) for t in triangle_violations(metric)]
    report["sharpened_violations"] = [list(t) for t in sharpened_triangle_violations(metric, depth)]
    # sin saturacion la desigualdad triangular solo puede fallar en el borde de truncacion
    triangle_ok = equivalence.triangle_ok or not equivalence.saturated
    ok = equivalence.passed and equivalence.sharpened_ok and triangle_ok

    workspace.add("chains", f"chain_{name}", chain.to_lists())
    workspace.add("metrics", f"metric_{name}", {"matrix": metric_rows(metric), "truncated_depth": depth})
    workspace.add("reports", "metrize", report)

    if not args.json:
        render_status(stderr_console, f"cadena de profundidad {depth} desde families.{name}")
        render_verdict(stderr_console, ok, "equivalencia cadena/metrica")

    write_output(workspace.to_dict(), args.output)
    return EXIT_OK if ok else EXIT_FAILED
