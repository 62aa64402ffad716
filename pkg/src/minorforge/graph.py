"""Immutable simple graphs over dense 0-based vertex indices.

Adjacency is one Python int bitmask per vertex, so complement, contraction
and triangle scans are word-parallel.  Vertex sets everywhere in this
package are plain int bitmasks over the host graph's indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidDecomposition, ParseError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph; immutable after construction."""

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._m = sum(a.bit_count() for a in adj) // 2

    @classmethod
    def from_adj(cls, adj: Iterable[int]) -> "Graph":
        """Build from per-vertex neighbour masks (must be symmetric, loop-free)."""
        adj = tuple(adj)
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = adj
        g._m = sum(a.bit_count() for a in adj) // 2
        full = (1 << g.n) - 1
        for v, a in enumerate(adj):
            if a & (1 << v):
                raise ValueError(f"loop at vertex {v}")
            if a & ~full:
                raise ValueError(f"adjacency of {v} out of range")
        for v in range(g.n):
            for u in bits(adj[v]):
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency {v}->{u}")
        return g

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


def complement(g: Graph) -> Graph:
    """Graph with edge uv exactly when uv is a non-edge of g (u != v)."""
    full = g.vertex_mask
    return Graph.from_adj(full & ~(g.adj[v] | (1 << v)) for v in range(g.n))


def induced_subgraph(g: Graph, subset: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on a vertex mask, relabelled to 0..|s|-1.

    Returns (subgraph, index_map) where index_map[new] = old vertex.
    """
    if subset & ~g.vertex_mask:
        raise ValueError("subset not within the vertex range")
    old = tuple(bits(subset))
    pos = {v: i for i, v in enumerate(old)}
    adj = [0] * len(old)
    for i, v in enumerate(old):
        for w in bits(g.adj[v] & subset):
            adj[i] |= 1 << pos[w]
    return Graph.from_adj(adj), old


def is_connected_subset(g: Graph, subset: int) -> bool:
    """True when the subgraph induced on a nonempty vertex mask is connected."""
    if not subset:
        return False
    start = subset & -subset
    reached = start
    frontier = start
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        frontier = grow & subset & ~reached
        reached |= frontier
    return reached == subset


@dataclass(frozen=True)
class BranchDecomposition:
    """Pairwise-disjoint vertex masks of a host graph, one per minor vertex.

    Construction checks disjointness, nonemptiness and range; connectivity of
    each part is checked by contract() and verify_minor().
    """

    host: Graph
    parts: tuple[int, ...]

    def __post_init__(self):
        seen = 0
        for i, p in enumerate(self.parts):
            if p == 0:
                raise InvalidDecomposition(f"part {i} is empty")
            if p & ~self.host.vertex_mask:
                raise InvalidDecomposition(f"part {i} is out of range")
            if p & seen:
                raise InvalidDecomposition(f"part {i} overlaps an earlier part")
            seen |= p

    def __len__(self) -> int:
        return len(self.parts)


def contract(g: Graph, d: BranchDecomposition) -> Graph:
    """Contract each branch set to one vertex; edge between parts when a
    g-edge joins them.  Every surviving vertex must be covered by a part
    (singletons included); uncovered vertices are simply deleted."""
    if d.host is not g and d.host != g:
        raise InvalidDecomposition("decomposition built for a different host")
    for i, p in enumerate(d.parts):
        if not is_connected_subset(g, p):
            raise InvalidDecomposition(f"part {i} induces a disconnected subgraph")
    reach = [0] * len(d.parts)
    for i, p in enumerate(d.parts):
        r = 0
        for v in bits(p):
            r |= g.adj[v]
        reach[i] = r
    k = len(d.parts)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if reach[i] & d.parts[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph.from_adj(adj)


def minor_violation(g: Graph, h: Graph, d: BranchDecomposition) -> str | None:
    """Reason the decomposition fails to witness h as a minor of g, or None.

    Re-checks everything from scratch; trusts no invariant of the inputs.
    """
    if len(d.parts) != h.n:
        return f"part_count: {len(d.parts)} parts for {h.n} minor vertices"
    seen = 0
    for i, p in enumerate(d.parts):
        if p == 0:
            return f"empty_part: {i}"
        if p & ~g.vertex_mask:
            return f"out_of_range: part {i}"
        if p & seen:
            return f"overlap: part {i}"
        seen |= p
    for i, p in enumerate(d.parts):
        if not is_connected_subset(g, p):
            return f"disconnected_part: {i}"
    reach = [0] * len(d.parts)
    for i, p in enumerate(d.parts):
        r = 0
        for v in bits(p):
            r |= g.adj[v]
        reach[i] = r
    for i, j in h.edges():
        if not reach[i] & d.parts[j]:
            return f"missing_cross_edge: ({i},{j})"
    return None


def verify_minor(g: Graph, h: Graph, d: BranchDecomposition) -> bool:
    """True when d witnesses h as a minor of g."""
    return minor_violation(g, h, d) is None


# --- text format ------------------------------------------------------------
#
# Line `p <n> <m>`, then m lines `e <u> <v>` with 1-based endpoints, u < v,
# sorted, no duplicates.  Lines starting with `c` are comments.  Writing is
# bit-exact: equal graphs produce equal bytes.


def to_text(g: Graph) -> str:
    lines = [f"p {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate p line")
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer p fields") from None
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative count")
        elif fields[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: e line before p line")
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer endpoints") from None
            if not (1 <= u < v <= n):
                raise ParseError(f"line {lineno}: endpoints must satisfy 1 <= u < v <= n")
            if (u, v) in seen:
                raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add((u, v))
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unknown line type {fields[0]!r}")
    if n is None:
        raise ParseError("missing p line")
    if m != len(edges):
        raise ParseError(f"p line announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(to_text(g))


def read_graph(path) -> Graph:
    with open(path) as fh:
        return from_text(fh.read())
