"""Utilidades de I/O compartidas por los runners de coarse-kit.

stdout queda reservado para el JSON final; los diagnosticos van a stderr.
"""

import json
import math
import os
import sys

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class SchemaError(Exception):
    """Workspace invalido o con referencias que no resuelven."""


def jsonable(value):
    """Convierte inf en "inf" y tuplas/sets en listas, recursivamente."""
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(v) for v in value)
    return value


def dump_json(data: dict) -> str:
    return json.dumps(jsonable(data), ensure_ascii=False, indent=2, sort_keys=True)


def output_json(data: dict):
    """Escribe JSON al stdout de forma limpia."""
    sys.stdout.write(dump_json(data) + "\n")
    sys.stdout.flush()


def write_output(data: dict, output_path: str = None):
    """Escribe al archivo si se indico; si no, al stdout.

    El archivo se escribe completo en un temporal y luego se renombra.
    """
    if not output_path:
        output_json(data)
        return
    text = dump_json(data) + "\n"
    tmp_path = output_path + ".tmp"
    with open(tmp_path, "w", encoding="utf-8") as f:
        f.write(text)
    os.replace(tmp_path, output_path)
    print(f"  [coarse-kit] Reporte escrito en {output_path}", file=sys.stderr)


def load_file_safe(path: str, label: str = "Archivo") -> str:
    """Lee un archivo con validacion de existencia.

    Raises:
        FileNotFoundError: Si el archivo no existe
    """
    if not os.path.exists(path):
        raise FileNotFoundError(f"{label} no encontrado: {path}")
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def emit_error(message: str, json_mode: bool, command: str = "", code: int = EXIT_USAGE) -> int:
    """Reporta un error (JSON en stdout o texto en stderr) y retorna el exit code."""
    if json_mode:
        error_data = {"success": False, "error": message}
        if command:
            error_data["command"] = command
        output_json(error_data)
    else:
        from cli.ui_theme import render_error, stderr_console
        render_error(stderr_console, message)
    return code
