import pytest

from cayleysrg import (
    AutomorphismError,
    Permutation,
    PermutationGroup,
    ZnPair,
    classify,
    classify_action,
    coordinate_swap,
    is_arc_transitive,
    is_distance_transitive,
    is_edge_transitive,
    is_two_arc_transitive,
    is_vertex_transitive,
    translation,
)


def v(i, j, n):
    return ZnPair(i, j, n).index


PRIMES = {5, 7, 11, 13}


class TestClassification:
    @pytest.mark.parametrize("n", range(4, 9))
    def test_booleans_match_the_theory(self, claimed_group, graph, n):
        rep = classify_action(claimed_group(n), graph(n))
        assert rep.vertex_transitive
        assert rep.edge_transitive == (n in PRIMES)
        assert rep.arc_transitive == (n in PRIMES)
        assert rep.distance_transitive == (n == 5)
        assert not rep.two_arc_transitive

    def test_classify_builds_the_same_report(self, claimed_group, graph):
        assert classify(5) == classify_action(claimed_group(5), graph(5))

    @pytest.mark.parametrize("n", range(4, 9))
    def test_orbit_sizes_account_for_every_object(self, claimed_group, graph, n):
        rep = classify_action(claimed_group(n), graph(n))
        k = 3 * n - 3
        assert sum(rep.orbit_counts["edges"]) == n * n * k // 2
        assert sum(rep.orbit_counts["arcs"]) == n * n * k
        assert sum(rep.orbit_counts["distance2_pairs"]) == n * n * (n * n - k - 1)
        assert sum(rep.orbit_counts["two_arcs"]) == n * n * k * (k - 1)

    def test_edge_orbits_at_four(self, claimed_group, graph):
        res = is_edge_transitive(claimed_group(4), graph(4))
        assert not res.transitive
        # unit-difference edges on one side, the halving class on the other
        assert res.orbit_sizes == (48, 24)
        assert res.witness == ((0, 1), (0, 2))

    def test_arc_count_at_seven_is_one_orbit(self, claimed_group, graph):
        res = is_arc_transitive(claimed_group(7), graph(7))
        assert res.transitive
        assert res.orbit_sizes == (882,)

    def test_distance_layers_at_five(self, claimed_group, graph):
        res = is_distance_transitive(claimed_group(5), graph(5))
        assert res.transitive
        assert res.orbit_sizes_by_distance == ((25,), (300,), (300,))
        assert res.witness is None and res.witness_distance is None

    def test_distance_witness_at_seven(self, claimed_group, graph):
        res = is_distance_transitive(claimed_group(7), graph(7))
        assert not res.transitive
        assert res.witness_distance == 2
        first, second = res.witness
        dist = graph(7).bfs_distances(first[0])
        assert dist[first[1]] == 2


class TestWitnessPairs:
    def test_composite_edge_witness_has_no_mapping_either_way(self, claimed_group):
        # the arc from (0,0) along (2,0) cannot be carried onto the arc
        # along (1,1), in either orientation, when n = 4
        grp = claimed_group(4)
        orbit = grp.orbit_of_tuple((0, v(2, 0, 4)))
        assert (0, v(1, 1, 4)) not in orbit
        assert (v(1, 1, 4), 0) not in orbit

    def test_distance_two_split_at_seven(self, claimed_group):
        grp = claimed_group(7)
        orbit = grp.orbit_of_tuple((0, v(2, 3, 7)))
        assert (0, v(4, 2, 7)) not in orbit

    def test_two_arc_split_at_five(self, claimed_group, graph):
        g = graph(5)
        first = (0, v(0, 1, 5), v(2, 3, 5))
        second = (0, v(2, 2, 5), v(4, 2, 5))
        for a, b, c in (first, second):
            assert g.is_adjacent(a, b) and g.is_adjacent(b, c) and a != c
        orbit = claimed_group(5).orbit_of_tuple(first)
        assert second not in orbit


class TestImplicationChain:
    @pytest.mark.parametrize("n", range(4, 11))
    def test_chain_holds(self, claimed_group, graph, n):
        rep = classify_action(claimed_group(n), graph(n))
        if rep.arc_transitive:
            assert rep.edge_transitive
        if rep.two_arc_transitive:
            assert rep.arc_transitive
        if rep.distance_transitive:
            assert rep.arc_transitive


class TestGenericActions:
    def test_trivial_group_is_transitive_on_nothing(self, graph):
        g = graph(4)
        grp = PermutationGroup.from_generators([Permutation.identity(16)])
        res = is_vertex_transitive(grp, g)
        assert not res.transitive
        assert res.orbit_sizes == tuple([1] * 16)
        edge = is_edge_transitive(grp, g)
        assert edge.orbit_sizes == tuple([1] * 72)
        assert edge.witness == ((0, 1), (0, 2))

    def test_translations_alone_are_vertex_but_not_edge_transitive(self, graph):
        g = graph(5)
        grp = PermutationGroup.from_generators(
            [translation(5, 1, 0).perm, translation(5, 0, 1).perm]
        )
        assert is_vertex_transitive(grp, g).transitive
        res = is_edge_transitive(grp, g)
        assert not res.transitive
        # one orbit per connection-set difference, folded by negation
        assert len(res.orbit_sizes) == 6

    def test_non_automorphism_generator_rejected(self, graph):
        g = graph(4)
        imgs = list(range(16))
        imgs[1], imgs[2] = imgs[2], imgs[1]
        grp = PermutationGroup.from_generators([Permutation(imgs)])
        with pytest.raises(AutomorphismError):
            is_edge_transitive(grp, g)

    def test_degree_mismatch_rejected(self, graph):
        grp = PermutationGroup.from_generators([coordinate_swap(5).perm])
        with pytest.raises(ValueError, match="does not match"):
            is_arc_transitive(grp, graph(4))

    def test_two_arc_orbits_on_the_smallest_graph(self, claimed_group, graph):
        res = is_two_arc_transitive(claimed_group(4), graph(4))
        assert not res.transitive
        assert res.witness[0] == (0, 1, 2)
