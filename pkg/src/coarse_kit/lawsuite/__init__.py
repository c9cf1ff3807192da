# Lawsuite Package - Leyes ejecutables con semillas reproducibles
#
# Modulos:
#   generators.py  - CaseSpec, Case, generadores aleatorios y exhaustivos
#   closure.py     - Estructura generada a profundidad acotada y pertenencia
#   laws.py        - Registro de leyes y mutaciones
#   runner.py      - run_laws y minimizacion de contraejemplos
#   presets.py     - PresetLoader (YAML)

from coarse_kit.lawsuite.generators import CaseSpec, Case, cases_for, restrict_case
from coarse_kit.lawsuite.closure import (
    ClosureMembership,
    generated_closure,
    closure_membership,
    layers_are_monotone,
)
from coarse_kit.lawsuite.laws import LAWS, MUTATIONS, Law
from coarse_kit.lawsuite.runner import (
    LawResult,
    LawSuiteReport,
    minimize_counterexample,
    run_laws,
)
from coarse_kit.lawsuite.presets import Preset, PresetLoader

__all__ = [
    "CaseSpec", "Case", "cases_for", "restrict_case", "ClosureMembership",
    "generated_closure", "closure_membership", "layers_are_monotone",
    "LAWS", "MUTATIONS", "Law", "LawResult", "LawSuiteReport",
    "minimize_counterexample", "run_laws", "Preset", "PresetLoader",
]
