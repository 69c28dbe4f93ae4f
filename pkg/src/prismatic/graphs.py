"""Dense simple graphs with per-vertex adjacency bitsets.

Vertices are always 0..n-1.  The adjacency row of vertex v is a Python int
used as a bitset: bit u is set iff u ~ v.  All constructors validate symmetry
and loop-freeness, so any Graph in circulation is a legal simple graph.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def _popcount(x: int) -> int:
    return x.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "adj", "name")

    def __init__(self, n: int, adj: Sequence[int], name: str = ""):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(adj) != n:
            raise ValueError("adjacency has %d rows for %d vertices" % (len(adj), n))
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row >> n:
                raise ValueError("row %d references vertices >= %d" % (v, n))
            if (row >> v) & 1:
                raise ValueError("self-loop at vertex %d" % v)
        for v in range(n):
            for u in bits(adj[v]):
                if not (adj[u] >> v) & 1:
                    raise ValueError("asymmetric adjacency at (%d, %d)" % (v, u))
        self.n = n
        self.adj = tuple(adj)
        self.name = name
        del full

    # -- basic queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [_popcount(row) for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1)):
                yield (v, u + v + 1)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_regular(self) -> bool:
        degs = self.degrees()
        return len(set(degs)) <= 1

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        label = self.name or "graph"
        return "<%s n=%d m=%d>" % (label, self.n, self.edge_count())

    # -- derived graphs -----------------------------------------------------

    def complement(self, name: str = "") -> "Graph":
        full = (1 << self.n) - 1
        adj = [full & ~row & ~(1 << v) for v, row in enumerate(self.adj)]
        return Graph(self.n, adj, name or (self.name + "~" if self.name else ""))

    def induced(self, vertices: Iterable[int], name: str = "") -> "Graph":
        """Induced subgraph; vertex i of the result is sorted(vertices)[i]."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            for u in bits(self.adj[v]):
                if u in index:
                    adj[i] |= 1 << index[u]
        return Graph(len(keep), adj, name)

    def relabel(self, perm: Sequence[int], name: str = "") -> "Graph":
        """Image graph under the bijection v -> perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, adj, name)

    def adjacency_rows(self) -> list[list[int]]:
        """Dense 0/1 matrix as nested lists (for numeric code and fixtures)."""
        return [[(row >> u) & 1 for u in range(self.n)] for row in self.adj]

    # -- traversal ----------------------------------------------------------

    def component_mask(self, start: int) -> int:
        seen = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.component_mask(0) == (1 << self.n) - 1

    def bfs_distances(self, start: int) -> list[int]:
        dist = [-1] * self.n
        dist[start] = 0
        frontier = 1 << start
        seen = frontier
        d = 0
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
            for v in bits(frontier):
                dist[v] = d
        return dist

    def diameter(self) -> int:
        """Longest shortest path; raises on disconnected input."""
        if self.n == 0:
            raise ValueError("diameter of the null graph is undefined")
        if not self.is_connected():
            raise ValueError("graph is disconnected")
        best = 0
        for v in range(self.n):
            best = max(best, max(self.bfs_distances(v)))
        return best

    def triangles(self) -> Iterator[tuple[int, int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1)):
                u += v + 1
                common = self.adj[v] & self.adj[u]
                for w in bits(common >> (u + 1)):
                    yield (v, u, w + u + 1)

    def four_cycles(self) -> Iterator[tuple[int, int, int, int]]:
        """Vertex sets of (not necessarily induced) 4-cycles a-b-c-d-a, a<b,c,d and b<d."""
        for a in range(self.n):
            for c in range(a + 1, self.n):
                common = self.adj[a] & self.adj[c] & ~((1 << (a + 1)) - 1)
                mids = [m for m in bits(common) if m != c]
                for i in range(len(mids)):
                    for j in range(i + 1, len(mids)):
                        yield (a, mids[i], c, mids[j])


# -- constructors ------------------------------------------------------------


def build_graph(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    """Graph from an edge list; rejects loops and out-of-range endpoints."""
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if u == v:
            raise ValueError("self-loop %r rejected" % (pair,))
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError("edge %r out of range for n=%d" % (pair, n))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, name)


def from_adjacency(rows: Sequence[Sequence[int]], name: str = "") -> Graph:
    n = len(rows)
    adj = []
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
        mask = 0
        for u, bit in enumerate(row):
            if bit not in (0, 1):
                raise ValueError("matrix entries must be 0/1")
            mask |= bit << u
        adj.append(mask)
    return Graph(n, adj, name)


def empty_graph(n: int, name: str = "") -> Graph:
    return Graph(n, [0] * n, name or ("K~%d" % n))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)], "K%d" % n)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], "P%d" % n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], "C%d" % n)


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: hub 0 joined to 1..n-1."""
    if n < 1:
        raise ValueError("star needs at least 1 vertex")
    return build_graph(n, [(0, i) for i in range(1, n)], "K1,%d" % (n - 1))


def disjoint_union(g1: Graph, g2: Graph, name: str = "") -> Graph:
    adj = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(g1.n + g2.n, adj, name)


def complementary_prism(g: Graph, name: str = "") -> Graph:
    """Disjoint union of g and its complement plus the perfect matching.

    Vertex (v,1) keeps index v; vertex (v,2) gets index n+v.  The matching
    edges {v, n+v} are the only edges between the two sides.
    """
    n = g.n
    if n < 1:
        raise ValueError("prism of the null graph is undefined")
    comp = g.complement()
    adj = [0] * (2 * n)
    for v in range(n):
        adj[v] = g.adj[v] | (1 << (n + v))
        adj[n + v] = (comp.adj[v] << n) | (1 << v)
    return Graph(2 * n, adj, name or ((g.name + "-prism") if g.name else "prism"))


def prism_index(v: int, side: int, n: int) -> int:
    """Index of prism vertex (v, side) for a base graph on n vertices."""
    if side not in (1, 2):
        raise ValueError("side must be 1 or 2")
    return v if side == 1 else n + v


def prism_vertex(i: int, n: int) -> tuple[int, int]:
    """Inverse of prism_index: prism index -> (base vertex, side)."""
    return (i, 1) if i < n else (i - n, 2)


def lexicographic_product(g1: Graph, g2: Graph, name: str = "") -> Graph:
    """g1[g2]: (a,b) ~ (c,d) iff a~c, or a=c and b~d.  Index (a,b) = a*|V2|+b."""
    n1, n2 = g1.n, g2.n
    n = n1 * n2
    adj = [0] * n
    block = (1 << n2) - 1
    for a in range(n1):
        row_blocks = 0
        for c in bits(g1.adj[a]):
            row_blocks |= block << (c * n2)
        for b in range(n2):
            adj[a * n2 + b] = row_blocks | (g2.adj[b] << (a * n2))
    return Graph(n, adj, name)
