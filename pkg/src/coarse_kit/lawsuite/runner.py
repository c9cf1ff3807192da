"""Ejecucion de leyes y minimizacion voraz de contraejemplos."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Dict, Iterator, List, Optional, Sequence

import structlog

from coarse_kit.core.families import Family
from coarse_kit.entourages.relation import Entourage
from coarse_kit.errors import UnknownLawError
from coarse_kit.lawsuite.generators import Case, CaseSpec, cases_for, restrict_case
from coarse_kit.lawsuite.laws import LAWS, MUTATIONS, Check

logger = structlog.get_logger(__name__)


@dataclass
class LawResult:
    law_id: str
    statement: str
    trials: int = 0
    failures: int = 0
    counterexample: Optional[Case] = None
    observations: Dict[str, int] = field(default_factory=dict)
    mutation: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        data = {
            "law_id": self.law_id,
            "statement": self.statement,
            "trials": self.trials,
            "failures": self.failures,
        }
        if self.mutation:
            data["mutation"] = self.mutation
        if self.observations:
            data["observations"] = dict(sorted(self.observations.items()))
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample.to_dict()
        return data


@dataclass
class LawSuiteReport:
    spec: CaseSpec
    results: List[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def result(self, law_id: str) -> LawResult:
        for result in self.results:
            if result.law_id == law_id:
                return result
        raise KeyError(law_id)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "passed": self.passed,
            "laws": [result.to_dict() for result in self.results],
        }


def _fails(check: Check, case: Case) -> bool:
    try:
        return not check(case)
    except (ValueError, KeyError):
        # un candidato de reduccion invalido no cuenta como contraejemplo
        return False


def _drop_member(family: Family, index: int) -> Family:
    return Family(family.universe, family.sets[:index] + family.sets[index + 1:])


def _shrink_member(family: Family, index: int, point: int) -> Family:
    member = family.sets[index]
    smaller = member.universe.subset(member.members - {point})
    return Family(family.universe, family.sets[:index] + (smaller,) + family.sets[index + 1:])


def _drop_pair(relation: Entourage, pair) -> Entourage:
    return Entourage(relation.universe, relation.pairs - {pair})


def _candidates(case: Case) -> Iterator[Case]:
    points = list(case.universe.points())
    for x in points:
        yield restrict_case(case, [p for p in points if p != x])
    for i in range(len(case.subsets)):
        if len(case.subsets) > 1:
            yield replace(case, subsets=case.subsets[:i] + case.subsets[i + 1:])
    for name in ("first", "second"):
        family = getattr(case, name)
        for i in range(len(family)):
            yield replace(case, **{name: _drop_member(family, i)})
        for i, member in enumerate(family):
            for point in member.sorted():
                yield replace(case, **{name: _shrink_member(family, i, point)})
    for i, subset in enumerate(case.subsets):
        for point in subset.sorted():
            smaller = subset.universe.subset(subset.members - {point})
            yield replace(case, subsets=case.subsets[:i] + (smaller,) + case.subsets[i + 1:])
    for pair in sorted(case.relation.pairs):
        yield replace(case, relation=_drop_pair(case.relation, pair))
    for slot in ("upper", "lower"):
        first, second = getattr(case, slot)
        for pair in sorted(first.pairs):
            yield replace(case, **{slot: (_drop_pair(first, pair), second)})
        for pair in sorted(second.pairs):
            yield replace(case, **{slot: (first, _drop_pair(second, pair))})


def minimize_counterexample(check: Check, case: Case) -> Case:
    """Aplica la primera reduccion que sigue fallando hasta que ninguna lo hace."""
    current = case
    improved = True
    while improved:
        improved = False
        for candidate in _candidates(current):
            if _fails(check, candidate):
                current = candidate
                improved = True
                break
    return current


def resolve_laws(law_ids: Sequence[str], mutations: Sequence[str] = ()) -> Dict[str, Check]:
    unknown = [law_id for law_id in law_ids if law_id not in LAWS]
    if unknown:
        raise UnknownLawError(f"Leyes desconocidas: {', '.join(unknown)}")
    missing = [name for name in mutations if name not in MUTATIONS]
    if missing:
        raise UnknownLawError(f"Mutaciones desconocidas: {', '.join(missing)}")
    checks = {law_id: LAWS[law_id].check for law_id in law_ids}
    for name in mutations:
        target, mutant = MUTATIONS[name]
        if target in checks:
            checks[target] = mutant
    return checks


def run_laws(spec: CaseSpec, law_ids: Sequence[str], mutations: Sequence[str] = ()) -> LawSuiteReport:
    """Cuenta exitos y fallas por ley; la primera falla se reporta minimizada."""
    checks = resolve_laws(law_ids, mutations)
    mutated = {MUTATIONS[name][0]: name for name in mutations}
    report = LawSuiteReport(spec)
    for law_id in law_ids:
        law = LAWS[law_id]
        check = checks[law_id]
        result = LawResult(law_id, law.statement, mutation=mutated.get(law_id))
        tallies: Counter = Counter()
        for case in cases_for(spec, law_id, law.arity):
            result.trials += 1
            if law.tally is not None:
                tag = law.tally(case)
                if tag:
                    tallies[tag] += 1
            if check(case):
                continue
            result.failures += 1
            if result.counterexample is None:
                result.counterexample = minimize_counterexample(check, case)
        result.observations = dict(tallies)
        logger.info(
            "lawsuite.law_done", law=law_id, trials=result.trials,
            failures=result.failures, mutation=result.mutation,
        )
        report.results.append(result)
    return report
