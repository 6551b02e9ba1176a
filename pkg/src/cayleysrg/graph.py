"""The Cayley graph family on Z_n x Z_n with axis and diagonal connection set.

For modulus n the connection set is

    S = {(i, 0), (0, i), (i, i) : 1 <= i <= n - 1},

so |S| = 3n - 3, S is closed under negation and omits the identity, and the
graph Cay(Z_n x Z_n, S) is simple, undirected, (3n-3)-regular and connected.
The neighbourhood of the origin splits into three cliques, one per family
of S, which is what the symmetry analysis elsewhere in the package leans on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import iter_bits
from .core import ZnPair, _check_modulus

__all__ = [
    "GRAPH_MAX_MODULUS",
    "ConnectionSet",
    "connection_set",
    "CayleyGraph",
    "build_graph",
    "CliqueTriple",
    "zero_neighborhood_cliques",
]

# Construction is quadratic in n**2; past this the desk-scale intent of the
# package is exceeded and callers should not expect interactive runtimes.
GRAPH_MAX_MODULUS = 1000


@dataclass(frozen=True)
class ConnectionSet:
    """The symmetric generating set S for modulus n."""

    n: int
    members: frozenset[ZnPair]

    def __len__(self) -> int:
        return len(self.members)


def connection_set(n: int) -> ConnectionSet:
    """Build S = {(i,0), (0,i), (i,i) : 1 <= i < n}.

    The three families are pairwise disjoint, so |S| = 3(n-1) exactly.
    """
    _check_modulus(n)
    members = set()
    for i in range(1, n):
        members.add(ZnPair(i, 0, n))
        members.add(ZnPair(0, i, n))
        members.add(ZnPair(i, i, n))
    if len(members) != 3 * (n - 1):
        raise RuntimeError(f"connection set size {len(members)} != {3 * (n - 1)}")
    return ConnectionSet(n=n, members=frozenset(members))


class CayleyGraph:
    """Cay(Z_n x Z_n, S) with adjacency rows stored as int bitmasks.

    Row v has bit w set when v ~ w.  Rows are rebuilt and validated on every
    construction; there is no caching at this level.
    """

    __slots__ = ("n", "vertex_count", "connection", "adjacency")

    def __init__(self, n: int, connection: ConnectionSet, adjacency: tuple[int, ...]):
        self.n = n
        self.vertex_count = n * n
        self.connection = connection
        self.adjacency = adjacency

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise ValueError(f"vertex {v} out of range for {self.vertex_count} vertices")

    def is_adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(iter_bits(self.adjacency[v]))

    def degree_of(self, v: int) -> int:
        self._check_vertex(v)
        return self.adjacency[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def pair_of(self, v: int) -> ZnPair:
        self._check_vertex(v)
        return ZnPair.from_index(v, self.n)

    def bfs_distances(self, source: int) -> list[int]:
        """Exact distances from source; unreachable vertices get -1."""
        self._check_vertex(source)
        dist = [-1] * self.vertex_count
        dist[source] = 0
        visited = frontier = 1 << source
        d = 0
        while frontier:
            layer = 0
            for u in iter_bits(frontier):
                layer |= self.adjacency[u]
            layer &= ~visited
            d += 1
            for u in iter_bits(layer):
                dist[u] = d
            visited |= layer
            frontier = layer
        return dist


def build_graph(n: int) -> CayleyGraph:
    """Construct and validate the graph for modulus n.

    Degree regularity and adjacency symmetry are recomputed on every call;
    a bad row is an internal error, not a recoverable condition.
    """
    _check_modulus(n)
    if n > GRAPH_MAX_MODULUS:
        raise ValueError(f"modulus {n} exceeds the supported cap {GRAPH_MAX_MODULUS}")
    conn = connection_set(n)
    offsets = sorted((s.i, s.j) for s in conn.members)
    rows = []
    for v in range(n * n):
        i, j = divmod(v, n)
        bits = 0
        for si, sj in offsets:
            bits |= 1 << (((i + si) % n) * n + (j + sj) % n)
        rows.append(bits)

    k = 3 * n - 3
    for v, row in enumerate(rows):
        if row >> v & 1:
            raise RuntimeError(f"vertex {v} adjacent to itself")
        if row.bit_count() != k:
            raise RuntimeError(f"vertex {v} has degree {row.bit_count()}, expected {k}")
        for w in iter_bits(row):
            if not rows[w] >> v & 1:
                raise RuntimeError(f"adjacency not symmetric on ({v}, {w})")
    return CayleyGraph(n=n, connection=conn, adjacency=tuple(rows))


@dataclass(frozen=True)
class CliqueTriple:
    """The three cliques partitioning the origin's neighbourhood.

    axis_row holds the vertices (i, 0), axis_col the (0, i), diagonal the
    (i, i), each as a frozenset of vertex indices of size n - 1.
    """

    n: int
    axis_row: frozenset[int]
    axis_col: frozenset[int]
    diagonal: frozenset[int]

    def as_tuple(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return (self.axis_row, self.axis_col, self.diagonal)


def zero_neighborhood_cliques(g: CayleyGraph) -> CliqueTriple:
    """Split the neighbourhood of vertex (0, 0) into its three cliques.

    Verifies that each part is a clique, that the parts partition the
    neighbourhood, and that each part is maximal among cliques inside it.
    All three hold for every valid graph of the family; a violation means
    the graph handed in was not built by build_graph.
    """
    n = g.n
    row = frozenset(ZnPair(i, 0, n).index for i in range(1, n))
    col = frozenset(ZnPair(0, i, n).index for i in range(1, n))
    diag = frozenset(ZnPair(i, i, n).index for i in range(1, n))
    hood = set(g.neighbors(0))

    if row | col | diag != hood or len(row) + len(col) + len(diag) != len(hood):
        raise ValueError("clique families do not partition the origin neighbourhood")
    for part in (row, col, diag):
        members = sorted(part)
        for a in members:
            for b in members:
                if a < b and not g.is_adjacent(a, b):
                    raise ValueError(f"clique family broken: {a} !~ {b}")
        # Maximality inside the neighbourhood: every outside vertex of the
        # neighbourhood misses at least one member of the part.
        for w in sorted(hood - part):
            if all(g.is_adjacent(w, a) for a in members):
                raise ValueError(f"vertex {w} extends a supposed maximal clique")
    return CliqueTriple(n=n, axis_row=row, axis_col=col, diagonal=diag)
