import pytest

from cayleysrg import (
    IntersectionArray,
    RegularityRefusal,
    SrgParams,
    check_strongly_regular,
    diameter,
    intersection_array,
)


class FakeGraph:
    """Minimal stand-in: vertex_count plus adjacency bitmasks."""

    def __init__(self, vertex_count, edges):
        self.vertex_count = vertex_count
        self.adjacency = [0] * vertex_count
        for u, v in edges:
            self.adjacency[u] |= 1 << v
            self.adjacency[v] |= 1 << u


def cycle(k):
    return FakeGraph(k, [(v, (v + 1) % k) for v in range(k)])


def complete(k):
    return FakeGraph(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def prism():
    # two triangles joined by a perfect matching; 3-regular, diameter 2,
    # but the counts at distance 1 depend on the pair, so not
    # distance-regular
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
             (0, 3), (1, 4), (2, 5)]
    return FakeGraph(6, edges)


def drop_edge(g, u, v):
    out = FakeGraph(g.vertex_count, [])
    out.adjacency = list(g.adjacency)
    out.adjacency[u] &= ~(1 << v)
    out.adjacency[v] &= ~(1 << u)
    return out


class TestSrgParams:
    def test_feasibility_identity_enforced(self):
        SrgParams(v=16, k=9, lam=4, mu=6)
        with pytest.raises(ValueError, match="infeasible"):
            SrgParams(v=16, k=9, lam=4, mu=5)

    @pytest.mark.parametrize("n", range(4, 13))
    def test_family_parameters(self, graph, n):
        srg = check_strongly_regular(graph(n))
        assert (srg.v, srg.k, srg.lam, srg.mu) == (n * n, 3 * n - 3, n, 6)


class TestCheckStronglyRegular:
    def test_irregular_degree_refused_with_witness(self, graph):
        broken = drop_edge(graph(4), 0, 1)
        with pytest.raises(RegularityRefusal, match="degrees differ") as exc:
            check_strongly_regular(broken)
        assert exc.value.witness is not None

    def test_mu_disagreement_refused(self):
        # the 8-cycle is 2-regular but distance-2 and distance-3 pairs
        # have different common-neighbour counts
        with pytest.raises(RegularityRefusal, match="non-adjacent") as exc:
            check_strongly_regular(cycle(8))
        u, v = exc.value.witness
        assert 0 <= u < v < 8

    def test_lambda_disagreement_refused(self):
        # prism: triangle edges have one common neighbour, matching edges none
        with pytest.raises(RegularityRefusal, match="adjacent pairs disagree"):
            check_strongly_regular(prism())

    def test_disconnected_refused(self):
        two_triangles = FakeGraph(6, [(0, 1), (1, 2), (0, 2),
                                      (3, 4), (4, 5), (3, 5)])
        with pytest.raises(RegularityRefusal, match="disconnected"):
            check_strongly_regular(two_triangles)

    def test_complete_graph_refused(self):
        with pytest.raises(RegularityRefusal, match="complete or empty"):
            check_strongly_regular(complete(5))

    def test_pentagon_is_strongly_regular(self):
        srg = check_strongly_regular(cycle(5))
        assert (srg.v, srg.k, srg.lam, srg.mu) == (5, 2, 0, 1)


class TestIntersectionArray:
    @pytest.mark.parametrize("n", range(4, 11))
    def test_family_array(self, graph, n):
        arr = intersection_array(graph(n))
        assert arr == IntersectionArray(
            b=(3 * n - 3, 2 * n - 4), c=(1, 6), diameter=2
        )

    def test_array_head_matches_degree(self, graph):
        g = graph(7)
        arr = intersection_array(g)
        assert arr.b[0] == g.degree_of(0)
        assert arr.c[0] == 1

    def test_cycle_array(self):
        arr = intersection_array(cycle(8))
        assert arr == IntersectionArray(b=(2, 1, 1, 1), c=(1, 1, 1, 2), diameter=4)

    def test_prism_is_not_distance_regular(self):
        with pytest.raises(RegularityRefusal) as exc:
            intersection_array(prism())
        assert exc.value.witness is not None

    def test_irregular_graph_refused(self, graph):
        with pytest.raises(RegularityRefusal, match="degrees differ"):
            intersection_array(drop_edge(graph(4), 2, 3))

    def test_validation_of_hand_built_arrays(self):
        with pytest.raises(ValueError, match="c_1"):
            IntersectionArray(b=(4, 2), c=(2, 4), diameter=2)
        with pytest.raises(ValueError, match="entry per distance"):
            IntersectionArray(b=(4,), c=(1, 2), diameter=2)
        with pytest.raises(ValueError, match="positive"):
            IntersectionArray(b=(4, 0), c=(1, 2), diameter=2)


class TestDiameter:
    @pytest.mark.parametrize("n", range(4, 11))
    def test_family_diameter_is_two(self, graph, n):
        assert diameter(graph(n)) == 2

    def test_cycle_diameter(self):
        assert diameter(cycle(8)) == 4

    def test_single_vertex(self):
        assert diameter(FakeGraph(1, [])) == 0

    def test_disconnected_refused(self):
        with pytest.raises(RegularityRefusal, match="disconnected"):
            diameter(FakeGraph(3, [(0, 1)]))
