import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyfedcoalition.exceptions import InvalidInputError
from pyfedcoalition.fcGraph import (FcBenefitGraph, FcCoalition, FcCompetingGraph, FcPartition,
    coalitionUtility, dataUsageGraph, inducedBenefitSubgraph, isCoalitionValid, memberUtilities,
    memberUtility, partitionUtility)

from strategies import instances, partitions

PROPERTY_SETTINGS = settings(max_examples=150, deadline=None)


class TestBenefitGraph:
    def test_edges_are_sorted_and_weighted(self):
        g = FcBenefitGraph(3, [(1, 2, 3), (0, 1, 2.5)])
        assert g.edges == ((0, 1, 2.5), (1, 2, 3.0))
        assert g.weight(0, 1) == 2.5
        assert g.weight(2, 0) == 0.0
        assert g.incoming(2) == {1: 3.0}
        assert g.outgoing(0) == {1: 2.5}

    @pytest.mark.parametrize("edges", [
        [(0, 0, 1.0)],
        [(0, 1, 1.0), (0, 1, 2.0)],
        [(0, 1, 0.0)],
        [(0, 1, -1.0)],
        [(0, 1, math.inf)],
        [(0, 1, math.nan)],
        [(0, 1, 10**400)],
        [(0, 1, "heavy")],
        [(0, 3, 1.0)],
    ])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(InvalidInputError):
            FcBenefitGraph(3, edges)

    def test_networkx_view_keeps_isolated_nodes(self):
        g = FcBenefitGraph(4, [(0, 1, 1.0)]).toNetworkx()
        assert sorted(g.nodes) == [0, 1, 2, 3]
        assert g[0][1]["weight"] == 1.0


class TestCompetingGraph:
    def test_pairs_are_normalized(self):
        c = FcCompetingGraph(4, [(3, 1), (0, 2)])
        assert c.pairs == ((0, 2), (1, 3))
        assert c.competes(1, 3) and c.competes(3, 1)
        assert c.rivals(2) == frozenset({0})

    @pytest.mark.parametrize("pairs", [[(1, 1)], [(0, 1), (1, 0)], [(0, 5)]])
    def test_rejects_bad_pairs(self, pairs):
        with pytest.raises(InvalidInputError):
            FcCompetingGraph(3, pairs)


class TestPartition:
    def test_blocks_ordered_by_smallest_member(self):
        p = FcPartition(5, [[4, 2], [3], [1, 0]])
        assert p.toLists() == [[0, 1], [2, 4], [3]]
        assert p.indexOf(4) == 1
        assert p.coalitionOf(3) == FcCoalition([3])

    def test_rejects_overlap_and_gaps(self):
        with pytest.raises(InvalidInputError):
            FcPartition(3, [[0, 1], [1, 2]])
        with pytest.raises(InvalidInputError):
            FcPartition(3, [[0, 1]])
        with pytest.raises(InvalidInputError):
            FcPartition(2, [[0, 1, 2]])

    def test_empty_coalition_rejected(self):
        with pytest.raises(InvalidInputError):
            FcCoalition([])

    def test_coarsening(self):
        fine = FcPartition(4, [[0], [1], [2, 3]])
        assert FcPartition(4, [[0, 1], [2, 3]]).isCoarseningOf(fine)
        assert FcPartition.grand(4).isCoarseningOf(fine)
        assert not FcPartition(4, [[0, 2], [1, 3]]).isCoarseningOf(fine)

    def test_describe_with_labels(self):
        p = FcPartition(3, [[2, 0], [1]])
        assert str(p) == "{0, 2} {1}"
        names = ("north", "south", "east")
        assert p.describe(names.__getitem__) == "{north, east} {south}"


class TestUtilities:
    def test_induced_subgraph(self):
        g = FcBenefitGraph(3, [(0, 1, 2), (1, 2, 3)])
        assert inducedBenefitSubgraph(g, {0, 1}).edges == ((0, 1, 2.0),)
        assert inducedBenefitSubgraph(g, {0}).edges == ()
        full = FcBenefitGraph(3, [(0, 1, 1), (1, 0, 1), (0, 2, 1)])
        assert inducedBenefitSubgraph(full, {0, 1, 2}) == full

    def test_induced_subgraph_rejects_out_of_range(self):
        with pytest.raises(InvalidInputError):
            inducedBenefitSubgraph(FcBenefitGraph(2), {0, 5})

    def test_coalition_utility(self):
        assert coalitionUtility(FcBenefitGraph(2, [(0, 1, 2.5), (1, 0, 1.5)]), {0, 1}) == 4.0
        assert coalitionUtility(FcBenefitGraph(2, [(0, 1, 2.5)]), {1}) == 0.0
        triangle = FcBenefitGraph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
        assert coalitionUtility(triangle, {0, 2}) == 1.0

    def test_member_utility(self):
        g = FcBenefitGraph(3, [(0, 1, 2.0), (2, 1, 3.0)])
        assert memberUtility(g, {0, 1, 2}, 1) == 5.0
        assert memberUtility(g, {0, 1, 2}, 0) == 0.0
        single = FcBenefitGraph(2, [(0, 1, 2.0)])
        assert memberUtility(single, {1}, 1) == 0.0
        assert memberUtility(single, {0, 1}, 1) == 2.0

    def test_member_utility_requires_membership(self):
        with pytest.raises(InvalidInputError):
            memberUtility(FcBenefitGraph(3), {0, 1}, 2)

    def test_coalition_validity(self):
        assert isCoalitionValid(FcBenefitGraph(2), {0})
        assert not isCoalitionValid(FcBenefitGraph(2, [(0, 1, 1)]), {0, 1})
        assert isCoalitionValid(FcBenefitGraph(2, [(0, 1, 1), (1, 0, 1)]), {0, 1})

    def test_data_usage_graph(self):
        g = FcBenefitGraph(3, [(0, 1, 1), (1, 2, 1)])
        assert dataUsageGraph(g, FcPartition.singletons(3)).edges == ()
        assert dataUsageGraph(g, FcPartition.grand(3)).edges == ((0, 1), (1, 2))
        assert dataUsageGraph(g, FcPartition(3, [[0, 1], [2]])).edges == ((0, 1),)

    def test_partition_must_match_graph(self):
        with pytest.raises(InvalidInputError):
            dataUsageGraph(FcBenefitGraph(3), FcPartition.singletons(2))


class TestUtilityProperties:
    @PROPERTY_SETTINGS
    @given(data=st.data())
    def test_coalition_utility_is_sum_of_member_utilities(self, data):
        instance = data.draw(instances())
        members = data.draw(st.sets(st.integers(0, instance.n - 1), min_size=1))
        total = sum(memberUtility(instance.benefit, members, i) for i in members)
        assert abs(coalitionUtility(instance.benefit, members) - total) <= 1e-9

    @PROPERTY_SETTINGS
    @given(data=st.data())
    def test_member_utility_grows_with_coalition(self, data):
        instance = data.draw(instances())
        outer = data.draw(st.sets(st.integers(0, instance.n - 1), min_size=1))
        inner = data.draw(st.sets(st.sampled_from(sorted(outer)), min_size=1))
        for i in inner:
            assert memberUtility(instance.benefit, inner, i) <= memberUtility(instance.benefit, outer, i) + 1e-9

    @PROPERTY_SETTINGS
    @given(data=st.data())
    def test_data_usage_stays_inside_coalitions(self, data):
        instance = data.draw(instances())
        p = FcPartition(instance.n, data.draw(partitions(instance.n)))
        usage = dataUsageGraph(instance.benefit, p)
        for src, dst in usage.edges:
            assert p.indexOf(src) == p.indexOf(dst)
            assert instance.benefit.weight(src, dst) > 0
        expected = sum(1 for src, dst in instance.benefit.edgePairs if p.indexOf(src) == p.indexOf(dst))
        assert len(usage.edges) == expected
        assert abs(partitionUtility(instance.benefit, p) - sum(memberUtilities(instance.benefit, p).values())) <= 1e-9
