"""Carga y valida presets de la bateria de leyes desde archivos YAML."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

import structlog
import yaml

from coarse_kit.lawsuite.generators import CaseSpec
from coarse_kit.lawsuite.laws import LAWS, MUTATIONS

logger = structlog.get_logger(__name__)

DEFAULT_PRESETS_DIR = Path(__file__).resolve().parents[3] / "presets"


@dataclass
class Preset:
    """Un CaseSpec con la lista de leyes (y mutaciones) a ejecutar."""
    name: str
    description: str
    spec: CaseSpec
    laws: List[str]
    mutations: List[str] = field(default_factory=list)


class PresetLoader:
    """Carga presets *.yaml / *.yml de un directorio, con cache por nombre."""

    def __init__(self, presets_dir: Optional[str] = None):
        self.presets_dir = Path(presets_dir) if presets_dir else DEFAULT_PRESETS_DIR
        self._cache: Dict[str, Preset] = {}

    def load_all(self) -> Dict[str, Preset]:
        presets: Dict[str, Preset] = {}
        if not self.presets_dir.exists():
            return presets
        for pattern in ("*.yaml", "*.yml"):
            for path in sorted(self.presets_dir.glob(pattern)):
                try:
                    preset = self._load_file(path)
                except (ValueError, yaml.YAMLError) as e:
                    logger.warning("presets.load_failed", file=path.name, error=str(e))
                    continue
                presets.setdefault(preset.name, preset)
        return presets

    def load_one(self, name: str) -> Optional[Preset]:
        if name in self._cache:
            return self._cache[name]
        for ext in (".yaml", ".yml"):
            path = self.presets_dir / f"{name}{ext}"
            if path.exists():
                preset = self._load_file(path)
                self._cache[name] = preset
                return preset
        return None

    def _load_file(self, path: Path) -> Preset:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)

        if not isinstance(data, dict):
            raise ValueError(f"El archivo {path.name} no tiene formato YAML valido")

        name = data.get("name") or path.stem
        laws = data.get("laws", "all")
        if laws == "all":
            laws = list(LAWS)
        if not isinstance(laws, list):
            raise ValueError(f"El preset '{name}' debe listar sus leyes")
        unknown = [law for law in laws if law not in LAWS]
        if unknown:
            raise ValueError(f"Leyes desconocidas en '{name}': {', '.join(unknown)}")
        mutations = data.get("mutations", []) or []
        unknown = [m for m in mutations if m not in MUTATIONS]
        if unknown:
            raise ValueError(f"Mutaciones desconocidas en '{name}': {', '.join(unknown)}")

        try:
            spec = CaseSpec.from_dict(data.get("case", {}) or {})
        except TypeError as e:
            raise ValueError(f"Campo 'case' invalido en '{name}': {e}") from e

        return Preset(
            name=name,
            description=data.get("description", ""),
            spec=spec,
            laws=list(laws),
            mutations=list(mutations),
        )
