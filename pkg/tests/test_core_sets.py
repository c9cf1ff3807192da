"""Tests para core: conjuntos base, familias, estrellas y refinamiento."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coarse_kit.core.families import (
    Family,
    canonical,
    discrete_generators,
    image_family,
    is_cover,
    lss_axiom_report,
    preimage_family,
    refines,
    refines_mod_singletons,
    same_members,
    star,
    star_family,
    trivial_extension,
    union_families,
)
from coarse_kit.core.sets import GroundSet, PointMap
from coarse_kit.errors import UniverseMismatchError

X6 = GroundSet(6)


def fam(*blocks, universe=X6):
    return Family.of(universe, blocks)


class TestGroundSetAndPointSet:
    def test_labels_must_match_size(self):
        with pytest.raises(ValueError):
            GroundSet(2, ("a",))

    def test_labels_must_be_distinct(self):
        with pytest.raises(ValueError):
            GroundSet(2, ("a", "a"))

    def test_index_of_label(self):
        universe = GroundSet(3, ("a", "b", "c"))
        assert universe.index_of("c") == 2
        assert GroundSet(3).index_of("1") == 1

    def test_member_out_of_range(self):
        with pytest.raises(ValueError):
            X6.subset([6])

    def test_set_algebra(self):
        a, b = X6.subset([0, 1, 2]), X6.subset([2, 3])
        assert (a | b).sorted() == [0, 1, 2, 3]
        assert (a & b).sorted() == [2]
        assert (a - b).sorted() == [0, 1]
        assert a.complement().sorted() == [3, 4, 5]
        assert X6.empty().complement() == X6.full()
        assert a.meets(b)
        assert X6.subset([2]) <= a
        assert repr(a) == "{0,1,2}"

    def test_mixed_universes_rejected(self):
        with pytest.raises(UniverseMismatchError):
            X6.subset([0]) | GroundSet(5).subset([0])


class TestPointMap:
    def test_image_and_preimage(self):
        target = GroundSet(2)
        mapping = PointMap(GroundSet(4), target, (0, 0, 1, 1))
        assert mapping.image(mapping.domain.subset([1, 2])).sorted() == [0, 1]
        assert mapping.preimage(target.subset([1])).sorted() == [2, 3]

    def test_fibers(self):
        mapping = PointMap(GroundSet(3), GroundSet(2), (1, 1, 0))
        fibers = mapping.fibers()
        assert fibers[1].sorted() == [0, 1]
        assert fibers[0].sorted() == [2]

    def test_wrong_image_count(self):
        with pytest.raises(ValueError):
            PointMap(GroundSet(3), GroundSet(2), (0, 1))

    def test_image_out_of_codomain(self):
        with pytest.raises(ValueError):
            PointMap(GroundSet(2), GroundSet(2), (0, 2))

    def test_identity_and_constant(self):
        universe = GroundSet(3)
        assert PointMap.identity(universe).images == (0, 1, 2)
        assert PointMap.constant(universe, GroundSet(1), 0).images == (0, 0, 0)


class TestStar:
    def test_star_collects_meeting_members(self):
        assert star(X6.subset([1, 2]), fam([2, 3], [4, 5])).sorted() == [2, 3]

    def test_star_does_not_add_b_itself(self):
        # solo los miembros que cortan a B aportan puntos
        result = star(X6.subset([1, 2]), fam([2, 3], [4, 5]))
        assert 1 not in result

    def test_star_with_b_covered(self):
        family = fam([1, 2, 3], [4, 5])
        assert star(X6.subset([1, 2]), family).sorted() == [1, 2, 3]

    def test_empty_subset(self):
        assert star(X6.empty(), fam([0, 1])).sorted() == []

    def test_no_member_meets(self):
        assert star(X6.subset([0]), fam([1, 2])).sorted() == []

    def test_universe_mismatch(self):
        with pytest.raises(UniverseMismatchError):
            star(GroundSet(3).subset([0]), fam([0]))


class TestStarFamily:
    def test_single_star(self):
        assert star_family(fam([0, 1]), fam([1, 2], [3])).to_lists() == [[1, 2]]

    def test_empty_first_family(self):
        assert len(star_family(Family.empty(X6), fam([0, 1]))) == 0

    def test_union_of_both_members(self):
        assert star_family(fam([0]), fam([0], [0, 1])).to_lists() == [[0, 1]]

    def test_preserves_order_of_first(self):
        result = star_family(fam([4], [0]), fam([0, 1], [4, 5]))
        assert result.to_lists() == [[4, 5], [0, 1]]


class TestTrivialExtension:
    def test_adds_all_singletons(self):
        universe = GroundSet(3)
        extended = trivial_extension(Family.of(universe, [[1, 2]]))
        assert extended.to_lists() == [[1, 2], [0], [1], [2]]

    def test_empty_family(self):
        universe = GroundSet(1)
        assert trivial_extension(Family.empty(universe)).to_lists() == [[0]]


class TestRefinement:
    def test_refines(self):
        universe = GroundSet(3)
        assert refines(Family.of(universe, [[0], [1, 2]]), Family.of(universe, [[0, 1, 2]]))

    def test_does_not_refine(self):
        universe = GroundSet(4)
        assert not refines(Family.of(universe, [[0, 3]]), Family.of(universe, [[0, 1], [2, 3]]))

    def test_empty_families(self):
        assert refines(Family.empty(X6), Family.empty(X6))

    def test_mod_singletons_ignores_singletons(self):
        assert refines_mod_singletons(fam([0], [5]), Family.empty(X6))

    def test_mod_singletons_contained(self):
        assert refines_mod_singletons(fam([0, 1]), fam([0, 1, 2]))

    def test_mod_singletons_fails(self):
        assert not refines_mod_singletons(fam([0, 1], [2, 3]), fam([0, 1]))


class TestUnionAndGenerators:
    def test_union(self):
        assert union_families(fam([0]), fam([1])).to_lists() == [[0], [1]]

    def test_union_with_empty(self):
        family = fam([0, 1], [3])
        assert same_members(union_families(family, Family.empty(X6)), family)

    def test_discrete_generators(self):
        assert discrete_generators(X6.subset([0, 1])).to_lists() == [[0, 1]]

    def test_discrete_generators_of_empty(self):
        generators = discrete_generators(X6.empty())
        assert generators.to_lists() == [[]]

    def test_canonical_dedupes_and_sorts(self):
        result = canonical(fam([2, 3], [0], [2, 3]))
        assert result.to_lists() == [[0], [2, 3]]

    def test_is_cover(self):
        assert is_cover(Family.singletons(X6))
        assert not is_cover(fam([0, 1]))

    def test_image_and_preimage_families(self):
        target = GroundSet(2)
        mapping = PointMap(GroundSet(4), target, (0, 0, 1, 1))
        images = image_family(mapping, Family.of(mapping.domain, [[0, 1], [1, 2]]))
        assert images.to_lists() == [[0], [0, 1]]
        preimages = preimage_family(mapping, Family.of(target, [[1]]))
        assert preimages.to_lists() == [[2, 3]]


family_strategy = st.lists(
    st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=3),
    max_size=3,
)


class TestUnionClosure:
    @settings(max_examples=60, deadline=None)
    @given(family_strategy, family_strategy)
    def test_union_refines_star_of_extensions(self, first, second):
        b1, b2 = Family.of(X6, first), Family.of(X6, second)
        joined = union_families(b1, b2)
        stars = star_family(trivial_extension(b1), trivial_extension(b2))
        assert refines(joined, stars)

    @settings(max_examples=60, deadline=None)
    @given(family_strategy)
    def test_family_refines_its_own_star(self, blocks):
        family = Family.of(X6, blocks)
        assert refines(family, star_family(family, family))


class TestAxiomReport:
    def test_single_block_is_closed(self):
        universe = GroundSet(3)
        report = lss_axiom_report([Family.of(universe, [[0, 1]])])
        assert report.closed
        assert report.checked_pairs == 1

    def test_overlapping_blocks_fail(self):
        universe = GroundSet(3)
        report = lss_axiom_report([Family.of(universe, [[0, 1]]), Family.of(universe, [[1, 2]])])
        assert not report.closed
        assert (0, 1) in report.failing_pairs
        assert report.to_dict()["closed"] is False

    def test_adding_the_merged_block_closes(self):
        universe = GroundSet(3)
        families = [
            Family.of(universe, [[0, 1]]),
            Family.of(universe, [[1, 2]]),
            Family.of(universe, [[0, 1, 2]]),
        ]
        assert lss_axiom_report(families).closed
