"""Strong regularity and distance regularity checks.

Everything here is exhaustive counting over adjacency bitmasks, no formulas
are trusted.  The functions take any object with vertex_count and adjacency
attributes (the CayleyGraph from this package or a stripped-down stand-in
in tests), so deliberately broken graphs can be fed in to exercise the
refusal paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import iter_bits

__all__ = [
    "RegularityRefusal",
    "SrgParams",
    "IntersectionArray",
    "check_strongly_regular",
    "intersection_array",
    "diameter",
]


class RegularityRefusal(ValueError):
    """The graph fails a regularity requirement; witness pins the spot."""

    def __init__(self, message: str, witness=None) -> None:
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class SrgParams:
    """Parameters (v, k, lam, mu) of a strongly regular graph.

    lam counts common neighbours of adjacent pairs, mu of distinct
    non-adjacent pairs.  The standard counting identity ties the four
    together and is enforced on construction.
    """

    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self) -> None:
        lhs = self.k * (self.k - self.lam - 1)
        rhs = (self.v - self.k - 1) * self.mu
        if lhs != rhs:
            raise ValueError(
                f"infeasible parameters ({self.v}, {self.k}, {self.lam}, {self.mu}): "
                f"k(k - lam - 1) = {lhs} but (v - k - 1) mu = {rhs}"
            )


@dataclass(frozen=True)
class IntersectionArray:
    """Distance-regular intersection numbers {b_0..b_{D-1}; c_1..c_D}."""

    b: tuple[int, ...]
    c: tuple[int, ...]
    diameter: int

    def __post_init__(self) -> None:
        if len(self.b) != self.diameter or len(self.c) != self.diameter:
            raise ValueError("b and c must each have one entry per distance 1..D")
        if any(x <= 0 for x in self.b) or any(x <= 0 for x in self.c):
            raise ValueError("intersection numbers must be positive")
        if self.diameter > 0 and self.c[0] != 1:
            raise ValueError(f"c_1 must be 1, got {self.c[0]}")


def _reach_all(vertex_count: int, adjacency) -> int:
    visited = frontier = 1
    while frontier:
        layer = 0
        for u in iter_bits(frontier):
            layer |= adjacency[u]
        frontier = layer & ~visited
        visited |= frontier
    return visited


def _require_connected(vertex_count: int, adjacency) -> None:
    visited = _reach_all(vertex_count, adjacency)
    full = (1 << vertex_count) - 1
    if visited != full:
        missing = next(iter_bits(full & ~visited))
        raise RegularityRefusal(
            f"graph is disconnected: vertex {missing} unreachable from 0",
            witness=(0, missing),
        )


def _require_regular(vertex_count: int, adjacency) -> int:
    k = adjacency[0].bit_count()
    for v in range(1, vertex_count):
        d = adjacency[v].bit_count()
        if d != k:
            raise RegularityRefusal(
                f"degrees differ: vertex 0 has {k}, vertex {v} has {d}",
                witness=(0, v),
            )
    return k


def check_strongly_regular(g) -> SrgParams:
    """Certify strong regularity by checking every vertex pair.

    Raises RegularityRefusal with a witnessing pair on the first violation:
    irregular degrees, a disconnected graph, or two pairs of the same kind
    with different common-neighbour counts.
    """
    vc = g.vertex_count
    adjacency = g.adjacency
    if vc < 2:
        raise RegularityRefusal("need at least two vertices", witness=None)
    k = _require_regular(vc, adjacency)
    _require_connected(vc, adjacency)

    lam = mu = None
    lam_at = mu_at = None
    for u in range(vc):
        row = adjacency[u]
        for v in range(u + 1, vc):
            common = (row & adjacency[v]).bit_count()
            if row >> v & 1:
                if lam is None:
                    lam, lam_at = common, (u, v)
                elif common != lam:
                    raise RegularityRefusal(
                        f"adjacent pairs disagree: {lam_at} has {lam} common "
                        f"neighbours, ({u}, {v}) has {common}",
                        witness=(u, v),
                    )
            else:
                if mu is None:
                    mu, mu_at = common, (u, v)
                elif common != mu:
                    raise RegularityRefusal(
                        f"non-adjacent pairs disagree: {mu_at} has {mu} common "
                        f"neighbours, ({u}, {v}) has {common}",
                        witness=(u, v),
                    )
    if lam is None or mu is None:
        raise RegularityRefusal(
            "graph is complete or empty, not in the strongly regular range",
            witness=None,
        )
    return SrgParams(v=vc, k=k, lam=lam, mu=mu)


def _bfs_layers(vertex_count: int, adjacency, source: int) -> list[int]:
    dist = [-1] * vertex_count
    dist[source] = 0
    visited = frontier = 1 << source
    d = 0
    while frontier:
        layer = 0
        for u in iter_bits(frontier):
            layer |= adjacency[u]
        layer &= ~visited
        d += 1
        for u in iter_bits(layer):
            dist[u] = d
        visited |= layer
        frontier = layer
    return dist


def diameter(g) -> int:
    """Largest eccentricity, by BFS from every vertex.  Refuses disconnected
    input since the diameter would be infinite."""
    vc = g.vertex_count
    adjacency = g.adjacency
    if vc == 1:
        return 0
    best = 0
    for v in range(vc):
        dist = _bfs_layers(vc, adjacency, v)
        far = max(dist)
        if min(dist) < 0:
            missing = dist.index(-1)
            raise RegularityRefusal(
                f"graph is disconnected: vertex {missing} unreachable from {v}",
                witness=(v, missing),
            )
        best = max(best, far)
    return best


def intersection_array(g) -> IntersectionArray:
    """Certify distance regularity and return the intersection numbers.

    For every vertex pair at distance i the counts of neighbours one layer
    closer (c_i) and one layer further (b_i) must depend on i alone; the
    first disagreement is refused with the offending pair.
    """
    vc = g.vertex_count
    adjacency = g.adjacency
    if vc == 1:
        return IntersectionArray(b=(), c=(), diameter=0)
    _require_regular(vc, adjacency)
    _require_connected(vc, adjacency)

    all_dist = [_bfs_layers(vc, adjacency, v) for v in range(vc)]
    diam = max(max(row) for row in all_dist)

    b: list[int | None] = [None] * (diam + 1)
    c: list[int | None] = [None] * (diam + 1)
    for v in range(vc):
        dist = all_dist[v]
        layers = [0] * (diam + 1)
        for u, d in enumerate(dist):
            layers[d] |= 1 << u
        for u, d in enumerate(dist):
            row = adjacency[u]
            if d < diam:
                up = (row & layers[d + 1]).bit_count()
                if b[d] is None:
                    b[d] = up
                elif b[d] != up:
                    raise RegularityRefusal(
                        f"b_{d} is not constant: pair ({v}, {u}) sees {up}, "
                        f"established {b[d]}",
                        witness=(v, u),
                    )
            if d > 0:
                down = (row & layers[d - 1]).bit_count()
                if c[d] is None:
                    c[d] = down
                elif c[d] != down:
                    raise RegularityRefusal(
                        f"c_{d} is not constant: pair ({v}, {u}) sees {down}, "
                        f"established {c[d]}",
                        witness=(v, u),
                    )
    return IntersectionArray(
        b=tuple(b[:diam]), c=tuple(c[1:]), diameter=diam
    )
