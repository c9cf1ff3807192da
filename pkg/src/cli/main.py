#!/usr/bin/env python3
"""CLI principal de coarse-kit.

Subcomandos: convert, verify, metrize, asdim, group, higson. El reporte JSON
sale por stdout (o --output); los diagnosticos por stderr.
Exit codes: 0 exito, 1 falla de ley o de verificacion, 2 uso o schema invalido.
"""

import argparse
import importlib
import sys

import structlog
from pydantic import ValidationError

from cli.bridge_utils import EXIT_USAGE, SchemaError, emit_error
from cli.config_loader import VERSION, configure_logging, load_config
from cli.ui_theme import render_banner, stderr_console
from coarse_kit.errors import CoarseKitError

logger = structlog.get_logger(__name__)

RUNNERS = {
    "convert": ("cli.convert_runner", "run_convert"),
    "verify": ("cli.verify_runner", "run_verify"),
    "metrize": ("cli.metrize_runner", "run_metrize"),
    "asdim": ("cli.asdim_runner", "run_asdim"),
    "group": ("cli.group_runner", "run_group"),
    "higson": ("cli.higson_runner", "run_higson"),
}


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="Workspace JSON de entrada")
    common.add_argument("--output", "-o", help="Archivo de salida (default: stdout)")
    common.add_argument("--config", help="Ruta al archivo de configuracion")
    common.add_argument("--json", action="store_true",
                        help="Errores como JSON y sin resumen en stderr")
    common.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING, ...")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="coarse-kit",
        description="coarse-kit: estructuras de gran escala sobre ventanas finitas",
    )
    parser.add_argument("--version", action="version", version=f"coarse-kit {VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    convert = commands.add_parser("convert", parents=[common], help="Familia <-> conjunto controlado")
    convert.add_argument("--direction", required=True,
                         choices=("family-to-entourage", "entourage-to-family"))
    convert.add_argument("--name", help="Objeto origen (default: el primero)")
    convert.add_argument("--target", help="Nombre del objeto resultante")

    verify = commands.add_parser("verify", parents=[common], help="Bateria de leyes")
    verify.add_argument("--preset", help="Preset YAML (default: default)")
    verify.add_argument("--laws", help="Lista separada por comas; vacia = ninguna")
    verify.add_argument("--mutation", help="Mutaciones separadas por comas")
    verify.add_argument("--seed", type=int)
    verify.add_argument("--mode", choices=("random", "exhaustive"))
    verify.add_argument("--trials", type=int)

    metrize = commands.add_parser("metrize", parents=[common], help="Cadena de escalas y metrica")
    metrize.add_argument("--family", help="Familia semilla (default: la primera)")
    metrize.add_argument("--depth", type=int)

    asdim = commands.add_parser("asdim", parents=[common], help="Descomposiciones y Hurewicz")
    asdim.add_argument("--mode", required=True, choices=("exact", "brick", "hurewicz"))
    asdim.add_argument("--metric", help="Metrica del workspace")
    asdim.add_argument("--map", help="Mapa del workspace (modo hurewicz)")
    asdim.add_argument("--scale", type=float, help="Escala r (default: 1)")
    asdim.add_argument("--scales", default="1,2,4", help="Escalas del modo hurewicz")
    asdim.add_argument("--n", type=int, help="Partes - 1 (modo exact)")
    asdim.add_argument("--bound", type=float, help="Cota D de diametros (default: bound_factor*r)")
    asdim.add_argument("--demo", choices=("projection",), help="Demo Z^2 -> Z en memoria")
    asdim.add_argument("--size", type=int, help="Lado de la ventana de demo/ladrillos")
    asdim.add_argument("--dim", type=int, choices=(1, 2), help="Dimension de la ventana de ladrillos")

    group = commands.add_parser("group", parents=[common], help="Traslaciones y Svarc-Milnor")
    group.add_argument("--action", required=True, choices=("witness", "divergence", "svarc-milnor"))
    group.add_argument("--group", help="Tarea de grupo del workspace (default: la primera)")

    higson = commands.add_parser("higson", parents=[common], help="Calculo de Higson")
    higson.add_argument("--check", required=True,
                        choices=("defect", "truncation", "proper", "bridge", "inclusion", "star-defect"))
    higson.add_argument("--function")
    higson.add_argument("--family", action="append", help="Repetible: B1 y luego B2")
    higson.add_argument("--block", type=int, help="Usar bloques consecutivos de este tamano como familia")
    higson.add_argument("--subset", help="K (o truncacion) del workspace")
    higson.add_argument("--metric")
    higson.add_argument("--exhaustion")
    higson.add_argument("--prefix-step", dest="prefix_step", type=int)
    higson.add_argument("--no-full", dest="no_full", action="store_true",
                        help="Exhaustion de prefijos sin la ventana completa")
    higson.add_argument("--eps", type=float)
    higson.add_argument("--bound", type=float, help="Cota de diametro para proper")
    return parser


def _message(error: Exception) -> str:
    # KeyError agrega comillas en str()
    if isinstance(error, KeyError) and error.args:
        return str(error.args[0])
    return str(error)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config = load_config(args.config)
    try:
        configure_logging(args.log_level or config.get("log_level", "WARNING"))
    except ValueError as e:
        return emit_error(str(e), args.json, args.command)

    module_name, function_name = RUNNERS[args.command]
    runner = getattr(importlib.import_module(module_name), function_name)
    logger.debug("cli.dispatch", command=args.command)
    if not args.json:
        render_banner(stderr_console, args.command)
    try:
        return runner(args, config)
    except ValidationError as e:
        return emit_error(f"Workspace invalido: {e}", args.json, args.command, EXIT_USAGE)
    except (SchemaError, CoarseKitError, ValueError, FileNotFoundError) as e:
        logger.debug("cli.usage_error", command=args.command, error=_message(e))
        return emit_error(_message(e), args.json, args.command, EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
