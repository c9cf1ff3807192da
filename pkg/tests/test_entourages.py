"""Tests para entourages: algebra de relaciones y conversion familia <-> conjunto controlado."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coarse_kit.core.families import Family, refines, star, star_family, union_families
from coarse_kit.core.sets import GroundSet
from coarse_kit.entourages.conversion import (
    coarse_axiom_report,
    coarse_to_lss_witness,
    delta_of_family,
    lss_to_coarse_witness,
    maximal_family_of_entourage,
)
from coarse_kit.entourages.relation import (
    Entourage,
    compose,
    diagonal,
    image_of_set,
    inverse,
    reflexive_symmetric_interior,
)
from coarse_kit.errors import UniverseMismatchError

X3 = GroundSet(3)
X4 = GroundSet(4)


def rel(universe, *pairs):
    return Entourage.of(universe, pairs)


class TestRelationAlgebra:
    def test_diagonal(self):
        assert diagonal(GroundSet(2)).to_lists() == [[0, 0], [1, 1]]
        assert len(diagonal(GroundSet(0))) == 0

    def test_inverse(self):
        assert inverse(rel(X3, (0, 1))).to_lists() == [[1, 0]]
        symmetric = rel(X3, (0, 1), (1, 0))
        assert inverse(symmetric) == symmetric

    def test_compose_single_witness(self):
        assert compose(rel(X3, (0, 1)), rel(X3, (1, 2))).to_lists() == [[0, 2]]

    def test_compose_empty(self):
        assert len(compose(rel(X3), rel(X3, (0, 1)))) == 0

    def test_compose_with_diagonal(self):
        swap = rel(X3, (0, 1), (1, 0))
        result = compose(swap, rel(X3, (0, 0), (1, 1)))
        assert result.to_lists() == [[0, 1], [1, 0]]

    def test_compose_order_matters(self):
        first, second = rel(X3, (0, 1)), rel(X3, (1, 2))
        assert compose(second, first).pairs == frozenset()

    def test_pair_out_of_range(self):
        with pytest.raises(ValueError):
            rel(X3, (0, 3))

    def test_universe_mismatch(self):
        with pytest.raises(UniverseMismatchError):
            compose(rel(X3, (0, 1)), rel(X4, (1, 2)))

    def test_reflexive_and_symmetric(self):
        relation = diagonal(X3) | rel(X3, (0, 1), (1, 0))
        assert relation.is_reflexive()
        assert relation.is_symmetric()
        assert not rel(X3, (0, 1)).is_symmetric()

    def test_interior(self):
        relation = rel(X3, (0, 0), (1, 1), (0, 1), (1, 0), (1, 2), (2, 1))
        assert reflexive_symmetric_interior(relation).to_lists() == [[0, 0], [0, 1], [1, 0], [1, 1]]


class TestImageOfSet:
    def test_delta_image_is_star(self):
        family = Family.of(X3, [[1, 2]])
        assert image_of_set(delta_of_family(family), X3.subset([1])).sorted() == [1, 2]

    def test_empty_subset(self):
        assert image_of_set(Entourage.full(X3), X3.empty()).sorted() == []

    def test_diagonal_fixes_subset(self):
        subset = X3.subset([0, 2])
        assert image_of_set(diagonal(X3), subset) == subset

    def test_uses_first_coordinate(self):
        # E[K] = {x' : (x', x) en E, x en K}
        assert image_of_set(rel(X3, (0, 2)), X3.subset([2])).sorted() == [0]
        assert image_of_set(rel(X3, (0, 2)), X3.subset([0])).sorted() == []


class TestDeltaOfFamily:
    def test_one_square(self):
        assert delta_of_family(Family.of(X3, [[0, 1]])).to_lists() == [[0, 0], [0, 1], [1, 0], [1, 1]]

    def test_singletons_give_diagonal(self):
        assert delta_of_family(Family.singletons(X3)) == diagonal(X3)

    def test_two_overlapping_blocks(self):
        delta = delta_of_family(Family.of(X3, [[0, 1], [1, 2]]))
        assert len(delta) == 7
        assert (0, 2) not in delta


class TestMaximalFamily:
    def test_chain_of_two_cliques(self):
        relation = diagonal(X3) | rel(X3, (0, 1), (1, 0), (1, 2), (2, 1))
        assert maximal_family_of_entourage(relation).to_lists() == [[0, 1], [1, 2]]

    def test_diagonal_gives_singletons(self):
        assert maximal_family_of_entourage(diagonal(X3)).to_lists() == [[0], [1], [2]]

    def test_full_gives_whole_set(self):
        assert maximal_family_of_entourage(Entourage.full(X3)).to_lists() == [[0, 1, 2]]

    def test_no_loops_gives_empty_member(self):
        assert maximal_family_of_entourage(rel(X3, (0, 1), (1, 0))).to_lists() == [[]]

    def test_points_without_loop_are_excluded(self):
        relation = rel(X3, (0, 0), (0, 1), (1, 0))
        assert maximal_family_of_entourage(relation).to_lists() == [[0]]


class TestWitnesses:
    def test_lss_to_coarse(self):
        assert lss_to_coarse_witness([Family.of(X3, [[0, 1]])], rel(X3, (0, 1)))
        assert not lss_to_coarse_witness([Family.of(X3, [[0], [1]])], rel(X3, (0, 1)))

    def test_diagonal_controlled_by_singletons(self):
        assert lss_to_coarse_witness([Family.singletons(X3)], rel(X3, (2, 2)))

    def test_coarse_to_lss(self):
        assert coarse_to_lss_witness([Entourage.full(X4)], Family.of(X4, [[0, 1, 2]]))
        assert not coarse_to_lss_witness([diagonal(X4)], Family.of(X4, [[0, 1]]))
        blocks = delta_of_family(Family.of(X4, [[0, 1], [2, 3]]))
        assert coarse_to_lss_witness([blocks], Family.of(X4, [[0, 1]]))

    def test_empty_witness_list(self):
        assert not lss_to_coarse_witness([], rel(X3, (0, 0)))
        assert not coarse_to_lss_witness([], Family.of(X3, [[0]]))


class TestCoarseAxioms:
    def test_full_relation_is_closed(self):
        report = coarse_axiom_report([Entourage.full(X3)])
        assert report.closed
        assert report.to_dict()["closed"] is True

    def test_missing_diagonal(self):
        report = coarse_axiom_report([rel(X3, (0, 1), (1, 0))])
        assert not report.diagonal_controlled
        assert not report.closed

    def test_inverse_and_composition_failures(self):
        relation = diagonal(X3) | rel(X3, (0, 1), (1, 2))
        report = coarse_axiom_report([relation])
        assert report.inverse_failures == [0]
        assert report.composition_failures == [(0, 0)]

    def test_union_failure(self):
        first = delta_of_family(Family.of(X3, [[0, 1], [2]]))
        second = delta_of_family(Family.of(X3, [[0], [1, 2]]))
        report = coarse_axiom_report([first, second])
        assert report.union_failures == [(0, 1)]

    def test_empty_list(self):
        assert not coarse_axiom_report([]).closed


family_strategy = st.lists(
    st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=3),
    max_size=3,
)
relation_strategy = st.lists(
    st.tuples(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=4)),
    max_size=14,
)
X5 = GroundSet(5)


class TestConversionProperties:
    @settings(max_examples=60, deadline=None)
    @given(family_strategy)
    def test_family_refines_its_maximal_family(self, blocks):
        family = Family.of(X5, blocks)
        maximal = maximal_family_of_entourage(delta_of_family(family))
        assert refines(family, maximal)
        assert delta_of_family(maximal) == delta_of_family(family) or len(family) == 0

    @settings(max_examples=60, deadline=None)
    @given(relation_strategy)
    def test_delta_of_maximal_is_interior(self, pairs):
        relation = Entourage.of(X5, pairs)
        maximal = maximal_family_of_entourage(relation)
        assert delta_of_family(maximal) == reflexive_symmetric_interior(relation)

    @settings(max_examples=60, deadline=None)
    @given(family_strategy, st.lists(st.integers(min_value=0, max_value=4), max_size=5))
    def test_delta_image_bridge(self, blocks, points):
        family = Family.of(X5, blocks)
        subset = X5.subset(points)
        assert image_of_set(delta_of_family(family), subset) == star(subset, family)

    @settings(max_examples=60, deadline=None)
    @given(family_strategy, family_strategy)
    def test_star_delta_inside_double_composition(self, first, second):
        b1, b2 = Family.of(X5, first), Family.of(X5, second)
        e1, e2 = delta_of_family(b1), delta_of_family(b2)
        assert delta_of_family(star_family(b1, b2)) <= compose(compose(e2, e1), e2)

    @settings(max_examples=60, deadline=None)
    @given(family_strategy, family_strategy)
    def test_composition_inside_star_delta(self, first, second):
        b1, b2 = Family.of(X5, first), Family.of(X5, second)
        composed = compose(delta_of_family(b1), delta_of_family(b2))
        assert composed <= delta_of_family(star_family(b2, union_families(b1, b2)))
