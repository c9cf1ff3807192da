"""Fixtures compartidas para los tests de coarse-kit."""
import json
import os
import sys

import pytest

SRC_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
if SRC_DIR not in sys.path:
    sys.path.insert(0, SRC_DIR)

from coarse_kit.core.sets import GroundSet  # noqa: E402
from coarse_kit.metrics.ext_metric import BoxWindow  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: ventanas grandes o muchas instancias aleatorias")


@pytest.fixture
def line8():
    """Ventana {0..7} de Z con la metrica de caminos."""
    return BoxWindow((8,)).grid_metric()


@pytest.fixture
def line6():
    return BoxWindow((6,)).grid_metric()


@pytest.fixture
def x4():
    return GroundSet(4)


@pytest.fixture
def write_workspace(tmp_path):
    """Escribe un workspace JSON y retorna su ruta."""
    def _write(data: dict, name: str = "workspace.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def no_config(tmp_path):
    """Ruta de config inexistente: el CLI usa solo los defaults."""
    return str(tmp_path / "missing-config.json")


@pytest.fixture(autouse=True)
def _reset_structlog():
    """Evita que un test del CLI deje structlog apuntando a un stream capturado ya cerrado."""
    import structlog
    yield
    structlog.reset_defaults()
