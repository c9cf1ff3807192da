"""Runner de `coarse-kit verify`: ejecuta la bateria de leyes.

Precedencia: --preset (o la seccion lawsuite del workspace, o el preset
"default") y despues los flags --laws, --mutation, --seed, --mode, --trials.
Exit 0 solo si todas las leyes pasan.
"""

from dataclasses import replace
from typing import List, Optional, Tuple

from coarse_kit.lawsuite.generators import CaseSpec
from coarse_kit.lawsuite.laws import LAWS
from coarse_kit.lawsuite.presets import PresetLoader
from coarse_kit.lawsuite.runner import run_laws

from cli.bridge_utils import EXIT_FAILED, EXIT_OK, SchemaError, write_output
from cli.ui_theme import render_law_table, render_status, render_verdict, stderr_console
from cli.workspace import load_workspace


def _split(value: Optional[str]) -> List[str]:
    return [item.strip() for item in (value or "").split(",") if item.strip()]


def resolve_suite(args, config: dict, suite: Optional[dict] = None) -> Tuple[str, CaseSpec, List[str], List[str]]:
    """(origen, CaseSpec, leyes, mutaciones) tras aplicar preset, workspace y flags."""
    preset_name = args.preset
    if preset_name is None and not suite:
        preset_name = "default"

    if preset_name:
        preset = PresetLoader(config.get("presets_dir")).load_one(preset_name)
        if preset is None:
            raise SchemaError(f"Preset '{preset_name}' no encontrado")
        origin = f"preset:{preset.name}"
        spec, laws, mutations = preset.spec, list(preset.laws), list(preset.mutations)
    else:
        origin = "workspace"
        case = dict(suite.get("case") or {})
        case.setdefault("seed", config.get("default_seed", 1))
        spec = CaseSpec.from_dict(case)
        laws = suite.get("laws", "all")
        laws = list(LAWS) if laws == "all" else list(laws)
        mutations = list(suite.get("mutations") or [])

    if args.laws is not None:
        laws = _split(args.laws)
    if args.mutation is not None:
        mutations = _split(args.mutation)

    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.mode is not None:
        overrides["mode"] = args.mode
    if args.trials is not None:
        overrides["trials"] = args.trials
    if overrides:
        spec = replace(spec, **overrides)
    return origin, spec, laws, mutations


def run_verify(args, config: dict) -> int:
    workspace = load_workspace(args.input, required=False)
    origin, spec, laws, mutations = resolve_suite(args, config, workspace.model.lawsuite)

    if not args.json:
        render_status(stderr_console, f"{origin}: {len(laws)} leyes, modo {spec.mode}, semilla {spec.seed}")

    report = run_laws(spec, laws, mutations)
    data = {"command": "verify", "origin": origin, "success": report.passed, **report.to_dict()}

    if not args.json:
        render_law_table(stderr_console, data)
        render_verdict(stderr_console, report.passed, "leyes")

    write_output(data, args.output)
    return EXIT_OK if report.passed else EXIT_FAILED
