"""Carga de configuracion y de logging para coarse-kit."""

import json
import logging
import os
import sys

import structlog

# --- Rutas globales ---
APPDATA_DIR = os.environ.get(
    "COARSE_KIT_HOME", os.path.join(os.path.expanduser("~"), ".coarse-kit")
)

if getattr(sys, "frozen", False):
    BASE_DIR = sys._MEIPASS
else:
    BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

PRESETS_DIR = os.path.join(BASE_DIR, "presets")

VERSION = "1.0.0"


def load_config(config_path: str = None) -> dict:
    """Carga configuracion desde un JSON de usuario, mezclada sobre los defaults.

    Las claves con valor null en el archivo no pisan los defaults.
    """
    if config_path is None:
        config_path = os.path.join(APPDATA_DIR, "config.json")

    default_config = {
        "exact_search_cap": 16,
        "closure_max_depth": 6,
        "bound_factor": 8,
        "default_seed": 1,
        "default_depth": 6,
        "log_level": "WARNING",
        "presets_dir": PRESETS_DIR,
        "_config_path": config_path,
    }

    if os.path.exists(config_path):
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                user_config = json.load(f)
            if not isinstance(user_config, dict):
                raise ValueError("se esperaba un objeto JSON")
            for k, v in user_config.items():
                if v is not None or k not in default_config:
                    default_config[k] = v
        except (OSError, ValueError) as e:
            print(f"[config] Advertencia: No se pudo cargar ({e}). Usando defaults.", file=sys.stderr)

    return default_config


def configure_logging(level: str = "WARNING"):
    """Configura structlog una vez por proceso; todo va a stderr, stdout queda para JSON."""
    numeric = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric, int):
        raise ValueError(f"Nivel de log invalido: {level}")
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
