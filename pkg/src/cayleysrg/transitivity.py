"""Orbit computations answering the transitivity questions for the family.

Every question reduces to one pattern: enumerate the combinatorial objects
of one kind (edges, arcs, ordered pairs at a fixed distance, 2-arcs),
partition them into orbits by closing under the group generators, and read
transitivity off the number of orbits.  The group itself is never listed
element by element.  Objects are enumerated in ascending lexicographic
order, so the first member of each orbit is its smallest and witnesses come
out canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import iter_bits
from .bsgs import PermutationGroup
from .graph import CayleyGraph, build_graph
from .regularity import _bfs_layers
from .symmetries import check_graph_automorphism, claimed_aut_group

__all__ = [
    "TransitivityResult",
    "DistanceTransitivityResult",
    "TransitivityReport",
    "is_vertex_transitive",
    "is_edge_transitive",
    "is_arc_transitive",
    "is_distance_transitive",
    "is_two_arc_transitive",
    "classify_action",
    "classify",
]


@dataclass(frozen=True)
class TransitivityResult:
    """Outcome of one orbit computation.

    orbit_sizes lists every orbit in order of discovery; their sum is the
    number of objects.  On a negative answer the witness holds the smallest
    object overall and the smallest object lying in a different orbit.
    """

    transitive: bool
    orbit_sizes: tuple[int, ...]
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None


@dataclass(frozen=True)
class DistanceTransitivityResult:
    """Distance transitivity, one orbit computation per distance 0..D."""

    transitive: bool
    orbit_sizes_by_distance: tuple[tuple[int, ...], ...]
    witness_distance: int | None
    witness: tuple[tuple[int, int], tuple[int, int]] | None


@dataclass(frozen=True)
class TransitivityReport:
    """The five transitivity answers for one modulus, with orbit evidence."""

    n: int
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    distance_transitive: bool
    two_arc_transitive: bool
    witnesses: dict
    orbit_counts: dict


def _gen_images(grp: PermutationGroup) -> list[list[int]]:
    return [g.images.tolist() for g in grp.generators if not g.is_identity()]


def _check_action(grp: PermutationGroup, g: CayleyGraph) -> None:
    if grp.degree != g.vertex_count:
        raise ValueError(
            f"group degree {grp.degree} does not match {g.vertex_count} vertices"
        )
    for p in grp.generators:
        check_graph_automorphism(g, p)


def _partition_pairs(gens: list[list[int]], pairs, fold: bool):
    """Orbit partition of ordered pairs; fold=True identifies (a,b) with (b,a).

    pairs must arrive in ascending lexicographic order so that each orbit's
    seed is its smallest member.
    """
    seen: set[tuple[int, int]] = set()
    sizes: list[int] = []
    seeds: list[tuple[int, int]] = []
    for pair in pairs:
        if pair in seen:
            continue
        orbit = {pair}
        queue = [pair]
        while queue:
            a, b = queue.pop()
            for img in gens:
                x, y = img[a], img[b]
                if fold and y < x:
                    x, y = y, x
                nxt = (x, y)
                if nxt not in orbit:
                    orbit.add(nxt)
                    queue.append(nxt)
        seen |= orbit
        sizes.append(len(orbit))
        seeds.append(pair)
    return sizes, seeds


def _partition_triples(gens: list[list[int]], triples):
    seen: set[tuple[int, int, int]] = set()
    sizes: list[int] = []
    seeds: list[tuple[int, int, int]] = []
    for triple in triples:
        if triple in seen:
            continue
        orbit = {triple}
        queue = [triple]
        while queue:
            a, b, c = queue.pop()
            for img in gens:
                nxt = (img[a], img[b], img[c])
                if nxt not in orbit:
                    orbit.add(nxt)
                    queue.append(nxt)
        seen |= orbit
        sizes.append(len(orbit))
        seeds.append(triple)
    return sizes, seeds


def _edges(g: CayleyGraph):
    for u in range(g.vertex_count):
        for v in iter_bits(g.adjacency[u]):
            if v > u:
                yield (u, v)


def _arcs(g: CayleyGraph):
    for u in range(g.vertex_count):
        for v in iter_bits(g.adjacency[u]):
            yield (u, v)


def _two_arcs(g: CayleyGraph):
    for u in range(g.vertex_count):
        for v in iter_bits(g.adjacency[u]):
            rest = g.adjacency[v] & ~(1 << u)
            for w in iter_bits(rest):
                yield (u, v, w)


def _result(sizes, seeds) -> TransitivityResult:
    if len(sizes) <= 1:
        return TransitivityResult(True, tuple(sizes), None)
    return TransitivityResult(False, tuple(sizes), (seeds[0], seeds[1]))


def is_vertex_transitive(grp: PermutationGroup, g: CayleyGraph) -> TransitivityResult:
    _check_action(grp, g)
    gens = _gen_images(grp)
    seen: set[int] = set()
    sizes = []
    seeds = []
    for v in range(g.vertex_count):
        if v in seen:
            continue
        orbit = {v}
        queue = [v]
        while queue:
            x = queue.pop()
            for img in gens:
                y = img[x]
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        seen |= orbit
        sizes.append(len(orbit))
        seeds.append(v)
    if len(sizes) <= 1:
        return TransitivityResult(True, tuple(sizes), None)
    return TransitivityResult(False, tuple(sizes), ((seeds[0],), (seeds[1],)))


def is_edge_transitive(grp: PermutationGroup, g: CayleyGraph) -> TransitivityResult:
    """One orbit on unordered edges or not, with a two-edge witness."""
    _check_action(grp, g)
    sizes, seeds = _partition_pairs(_gen_images(grp), _edges(g), fold=True)
    return _result(sizes, seeds)


def is_arc_transitive(grp: PermutationGroup, g: CayleyGraph) -> TransitivityResult:
    """One orbit on ordered adjacent pairs or not."""
    _check_action(grp, g)
    sizes, seeds = _partition_pairs(_gen_images(grp), _arcs(g), fold=False)
    return _result(sizes, seeds)


def is_two_arc_transitive(grp: PermutationGroup, g: CayleyGraph) -> TransitivityResult:
    """One orbit on paths u ~ v ~ w with w != u or not."""
    _check_action(grp, g)
    sizes, seeds = _partition_triples(_gen_images(grp), _two_arcs(g))
    return _result(sizes, seeds)


def is_distance_transitive(grp: PermutationGroup, g: CayleyGraph) -> DistanceTransitivityResult:
    """One orbit on ordered pairs at each distance 0..D or not.

    Distances are recomputed by BFS; the graph must be connected, which
    holds for every graph this package builds.
    """
    _check_action(grp, g)
    gens = _gen_images(grp)
    vc = g.vertex_count
    all_dist = [_bfs_layers(vc, g.adjacency, v) for v in range(vc)]
    diam = max(max(row) for row in all_dist)
    if any(min(row) < 0 for row in all_dist):
        raise ValueError("distance transitivity needs a connected graph")

    per_distance: list[tuple[int, ...]] = []
    witness = None
    witness_distance = None
    for d in range(diam + 1):
        pairs = [
            (u, v)
            for u in range(vc)
            for v, dv in enumerate(all_dist[u])
            if dv == d
        ]
        sizes, seeds = _partition_pairs(gens, pairs, fold=False)
        per_distance.append(tuple(sizes))
        if len(sizes) > 1 and witness is None:
            witness = (seeds[0], seeds[1])
            witness_distance = d
    return DistanceTransitivityResult(
        transitive=witness is None,
        orbit_sizes_by_distance=tuple(per_distance),
        witness_distance=witness_distance,
        witness=witness,
    )


def classify_action(grp: PermutationGroup, g: CayleyGraph) -> TransitivityReport:
    """Answer all five transitivity questions for one group action.

    Ends with a consistency check of the implication chain (arc implies
    edge, 2-arc implies arc, distance implies arc); a violation cannot come
    from the mathematics, only from a broken orbit engine.
    """
    vertex = is_vertex_transitive(grp, g)
    edge = is_edge_transitive(grp, g)
    arc = is_arc_transitive(grp, g)
    distance = is_distance_transitive(grp, g)
    two_arc = is_two_arc_transitive(grp, g)

    if arc.transitive and not edge.transitive:
        raise RuntimeError("orbit engine inconsistency: arc without edge transitivity")
    if two_arc.transitive and not arc.transitive:
        raise RuntimeError("orbit engine inconsistency: 2-arc without arc transitivity")
    if distance.transitive and len(distance.orbit_sizes_by_distance) > 1 and not arc.transitive:
        raise RuntimeError("orbit engine inconsistency: distance without arc transitivity")

    return TransitivityReport(
        n=g.n,
        vertex_transitive=vertex.transitive,
        edge_transitive=edge.transitive,
        arc_transitive=arc.transitive,
        distance_transitive=distance.transitive,
        two_arc_transitive=two_arc.transitive,
        witnesses={
            "vertex": vertex.witness,
            "edge": edge.witness,
            "arc": arc.witness,
            "distance": distance.witness,
            "two_arc": two_arc.witness,
        },
        orbit_counts={
            "edges": edge.orbit_sizes,
            "arcs": arc.orbit_sizes,
            "distance2_pairs": (
                distance.orbit_sizes_by_distance[2]
                if len(distance.orbit_sizes_by_distance) > 2
                else ()
            ),
            "two_arcs": two_arc.orbit_sizes,
        },
    )


def classify(n: int) -> TransitivityReport:
    """Build the graph and the claimed group for modulus n and classify."""
    g = build_graph(n)
    return classify_action(claimed_aut_group(n), g)
