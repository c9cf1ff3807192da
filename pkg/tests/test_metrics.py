"""Tests para metrics: infinito-metricas, bolas, ventanas y metrizacion de cadenas."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coarse_kit.core.families import Family, refines, same_members
from coarse_kit.core.sets import GroundSet
from coarse_kit.errors import ChainInvariantError, MissingValueError
from coarse_kit.metrics.chains import (
    ScaleChain,
    chain_metric_equivalence,
    generate_chain,
    metrize,
    sharpened_triangle_violations,
)
from coarse_kit.metrics.ext_metric import (
    INF,
    BoxWindow,
    ExtMetric,
    RadiusFunction,
    ball,
    ball_family,
    diameter,
    disjoint_union,
    finite_components,
    is_uniformly_bounded,
    linear_radius,
    path_metric,
    scale_pair_family,
    sublinear_ball_family,
    triangle_violations,
    uniformity_bound,
)


class TestExtMetric:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            ExtMetric(GroundSet(2), [[0, 1], [2, 0]])

    def test_rejects_triangle_violation(self):
        with pytest.raises(ValueError, match="triangular"):
            ExtMetric(GroundSet(3), [[0, 1, 10], [1, 0, 1], [10, 1, 0]])

    def test_infinite_distances_are_absorbing(self):
        metric = ExtMetric(GroundSet(3), [[0, 1, INF], [1, 0, INF], [INF, INF, 0]])
        assert metric(0, 2) == INF
        with pytest.raises(ValueError):
            ExtMetric(GroundSet(3), [[0, 1, INF], [1, 0, 1], [INF, 1, 0]])

    def test_unchecked_construction_skips_triangle(self):
        metric = ExtMetric(GroundSet(3), [[0, 1, 10], [1, 0, 1], [10, 1, 0]], check_triangle=False)
        assert triangle_violations(metric) == [(0, 1, 2), (2, 1, 0)]

    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(ValueError):
            ExtMetric(GroundSet(2), [[1, 1], [1, 0]])

    def test_rejects_zero_between_distinct_points(self):
        with pytest.raises(ValueError):
            ExtMetric(GroundSet(2), [[0, 0], [0, 0]])

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError):
            ExtMetric(GroundSet(3), [[0, 1], [1, 0]])

    def test_accepts_infinite_distances(self):
        metric = ExtMetric(GroundSet(2), [[0, INF], [INF, 0]])
        assert math.isinf(metric(0, 1))

    def test_matrix_is_read_only(self, line6):
        with pytest.raises(ValueError):
            line6.dist[0, 1] = 7.0


class TestDiameter:
    def test_singleton(self, line6):
        assert diameter(line6.universe.subset([3]), line6) == 0.0

    def test_two_points(self):
        metric = path_metric(2, [(0, 1, 5.0)])
        assert diameter(metric.universe.full(), metric) == 5.0

    def test_across_components(self):
        metric = disjoint_union([path_metric(1, []), path_metric(1, [])])
        assert math.isinf(diameter(metric.universe.full(), metric))

    def test_uniformly_bounded(self, line8):
        universe = line8.universe
        assert is_uniformly_bounded(Family.singletons(universe), line8, 0.5)
        assert not is_uniformly_bounded(Family.of(universe, [[0, 7]]), line8, 6)


class TestBalls:
    def test_closed_balls_on_line(self, line6):
        family = ball_family(line6, 1)
        assert family.to_lists() == [[0, 1], [0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5], [4, 5]]

    def test_small_radius_gives_singletons(self, line6):
        assert ball_family(line6, 0.5).to_lists() == [[x] for x in range(6)]

    def test_large_radius_gives_component(self):
        metric = disjoint_union([path_metric(3, [(0, 1, 1), (1, 2, 1)]), path_metric(2, [(0, 1, 1)])])
        assert ball(metric, 0, 10).sorted() == [0, 1, 2]
        assert ball(metric, 4, 10).sorted() == [3, 4]

    def test_radius_must_be_positive(self, line6):
        with pytest.raises(ValueError):
            ball_family(line6, 0)

    def test_scale_pair_family(self, line6):
        pairs = scale_pair_family(line6, 1)
        assert pairs.to_lists() == [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5]]


class TestSublinear:
    def test_constant_radius_matches_balls(self, line8):
        radii = RadiusFunction({x: 2.0 for x in range(8)})
        assert same_members(sublinear_ball_family(line8, 0, radii), ball_family(line8, 2))

    def test_linear_radius_at_far_point(self):
        metric = BoxWindow((101,)).grid_metric()
        radii = linear_radius(metric, 0, 1.0, 0.1)
        assert radii(100) == pytest.approx(11.0)
        family = sublinear_ball_family(metric, 0, radii)
        assert family[100].sorted() == list(range(89, 101))

    def test_tiny_radius_gives_singletons(self, line8):
        radii = RadiusFunction({x: 0.1 for x in range(8)})
        assert sublinear_ball_family(line8, 0, radii).to_lists() == [[x] for x in range(8)]

    def test_missing_value(self, line8):
        radii = RadiusFunction({0: 1.0})
        with pytest.raises(MissingValueError):
            sublinear_ball_family(line8, 0, radii)

    def test_radius_must_be_positive(self):
        with pytest.raises(ValueError):
            RadiusFunction({0: 0.0})


class TestDisjointUnion:
    def test_single_input(self, line6):
        combined = disjoint_union([line6])
        assert np.array_equal(combined.dist, line6.dist)

    def test_two_points(self):
        combined = disjoint_union([path_metric(1, []), path_metric(1, [])])
        assert combined.size == 2
        assert math.isinf(combined(0, 1))

    def test_blocks_preserved(self, line6):
        combined = disjoint_union([line6, line6])
        assert combined(7, 9) == 2.0
        assert math.isinf(combined(0, 6))
        assert len(finite_components(combined)) == 2


class TestPathMetricAndWindows:
    def test_missing_edge_is_infinite(self):
        metric = path_metric(3, [(0, 1, 2.0)])
        assert metric(0, 1) == 2.0
        assert math.isinf(metric(0, 2))
        assert [c.sorted() for c in finite_components(metric)] == [[0, 1], [2]]

    def test_box_window_indexing(self):
        window = BoxWindow((3, 4))
        assert window.size == 12
        assert window.index((1, 2)) == 6
        assert window.index((3, 0)) is None
        assert window.coordinates()[6].tolist() == [1, 2]

    def test_grid_metric_is_l1(self):
        window = BoxWindow((3, 4))
        metric = window.grid_metric()
        assert metric(window.index((0, 0)), window.index((2, 3))) == 5.0

    def test_projection(self):
        plane, line = BoxWindow((3, 4)), BoxWindow((3,))
        mapping = plane.projection(0, line)
        assert mapping(plane.index((2, 1))) == 2
        with pytest.raises(ValueError):
            plane.projection(0, BoxWindow((4,)))

    def test_invalid_extents(self):
        with pytest.raises(ValueError):
            BoxWindow((0,))

    def test_triangle_holds_on_grid(self):
        assert triangle_violations(BoxWindow((3, 3)).grid_metric()) == []

    def test_uniformity_bound_of_projection(self):
        plane, line = BoxWindow((4, 4)), BoxWindow((4,))
        mapping = plane.projection(0, line)
        assert uniformity_bound(mapping, plane.grid_metric(), line.grid_metric(), 1) == 2.0


class TestGenerateChain:
    def test_separated_blocks_never_merge(self):
        chain = generate_chain(Family.of(GroundSet(4), [[0, 1], [2, 3]]), 3)
        for level in chain.levels:
            assert all(not ({0, 1} & m.members and {2, 3} & m.members) for m in level)
        assert chain.is_saturated()

    def test_overlapping_blocks_merge(self):
        chain = generate_chain(Family.of(GroundSet(3), [[0, 1], [1, 2]]), 2)
        assert [0, 1, 2] in chain.level(2).to_lists()

    def test_empty_seed_gives_singletons(self):
        universe = GroundSet(3)
        chain = generate_chain(Family.empty(universe), 3)
        for level in chain.levels:
            assert same_members(level, Family.singletons(universe))

    def test_depth_must_be_positive(self):
        with pytest.raises(ValueError):
            generate_chain(Family.empty(GroundSet(2)), 0)

    def test_level_is_one_based(self):
        chain = generate_chain(Family.of(GroundSet(3), [[0, 1]]), 2)
        assert chain.level(1).to_lists()[0] == [0, 1]
        with pytest.raises(IndexError):
            chain.level(0)


class TestScaleChainInvariants:
    def test_level_must_cover(self):
        universe = GroundSet(3)
        with pytest.raises(ChainInvariantError, match=r"\{2\}"):
            ScaleChain(universe, (Family.of(universe, [[0, 1]]),))

    def test_star_must_refine_next(self):
        universe = GroundSet(3)
        first = Family.of(universe, [[0, 1], [1, 2]])
        second = Family.of(universe, [[0, 1], [1, 2]])
        with pytest.raises(ChainInvariantError):
            ScaleChain(universe, (first, second))

    def test_needs_a_level(self):
        with pytest.raises(ChainInvariantError):
            ScaleChain(GroundSet(2), ())


class TestMetrize:
    def test_separated_blocks(self):
        metric = metrize(generate_chain(Family.of(GroundSet(4), [[0, 1], [2, 3]]), 4))
        assert metric(0, 1) == 1.0
        assert math.isinf(metric(0, 2))

    def test_overlapping_blocks(self):
        metric = metrize(generate_chain(Family.of(GroundSet(3), [[0, 1], [1, 2]]), 4))
        assert metric(0, 2) == 2.0

    def test_uncovered_pairs_within_depth_are_infinite(self):
        edges = [[x, x + 1] for x in range(7)]
        metric = metrize(generate_chain(Family.of(GroundSet(8), edges), 2))
        assert metric(0, 1) == 1.0
        assert metric(0, 3) == 2.0
        assert math.isinf(metric(0, 7))

    def test_equivalence_on_fixed_chain(self):
        chain = generate_chain(Family.of(GroundSet(5), [[0, 1], [1, 2], [3, 4]]), 4)
        report = chain_metric_equivalence(chain, metrize(chain))
        assert report.passed
        assert report.sharpened_ok
        assert report.to_dict()["depth"] == 4

    def test_depth_one_checks_only_first_level(self):
        chain = generate_chain(Family.of(GroundSet(3), [[0, 1]]), 1)
        report = chain_metric_equivalence(chain, metrize(chain))
        assert [(c.direction, c.level) for c in report.checks] == [("level_refines_balls", 1)]

    def test_levels_refine_balls(self):
        chain = generate_chain(Family.of(GroundSet(6), [[0, 1], [2, 3], [3, 4]]), 3)
        metric = metrize(chain)
        for i in range(1, 4):
            assert refines(chain.level(i), ball_family(metric, i))


chain_seed = st.lists(
    st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=3),
    max_size=4,
)


class TestMetrizationProperties:
    @settings(max_examples=40, deadline=None)
    @given(chain_seed)
    def test_chain_and_metric_are_equivalent(self, blocks):
        chain = generate_chain(Family.of(GroundSet(7), blocks), 4)
        metric = metrize(chain)
        report = chain_metric_equivalence(chain, metric)
        assert report.passed
        assert sharpened_triangle_violations(metric, chain.depth) == []

    @pytest.mark.slow
    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.lists(st.integers(min_value=0, max_value=11), min_size=1, max_size=4), max_size=6))
    def test_equivalence_at_depth_six(self, blocks):
        chain = generate_chain(Family.of(GroundSet(12), blocks), 6)
        metric = metrize(chain)
        report = chain_metric_equivalence(chain, metric)
        assert report.passed
        assert report.sharpened_ok
        assert len(report.checks) == 6 + 15
