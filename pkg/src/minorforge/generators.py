"""Generators for graphs with independence number at most two.

Every construction is the complement of a triangle-free graph, so the
alpha <= 2 guarantee is by construction; tests re-verify it anyway.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnknownName
from .graph import Graph, complement
from .rng import trial_rng


def triangle_free_process_complement(num_vertices: int, rng: np.random.Generator) -> Graph:
    """Complement of a maximal triangle-free graph grown by the random
    process: visit all vertex pairs in uniform order, insert each edge
    unless it closes a triangle."""
    if num_vertices < 0:
        raise ValueError("num_vertices must be nonnegative")
    n = num_vertices
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    order = rng.permutation(len(pairs))
    adj = [0] * n
    for idx in order:
        u, v = pairs[int(idx)]
        if adj[u] & adj[v]:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return complement(Graph.from_adj(adj))


def c5_blowup_complement(t: int) -> Graph:
    """Complement of the five-cycle blow-up with parts of size t: 5t
    vertices, clique number 2t."""
    if t < 1:
        raise ValueError("t must be at least 1")
    n = 5 * t
    part = [v // t for v in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if (part[u] - part[v]) % 5 in (1, 4):
                edges.append((u, v))
    return complement(Graph(n, edges))


def two_clique_complement(s: int, t: int) -> Graph:
    """Two disjoint cliques of sizes s and t (the complement of a complete
    bipartite graph).  Pipeline-ineligible; an edge-case supplier."""
    if s < 0 or t < 0:
        raise ValueError("sizes must be nonnegative")
    edges = []
    for u in range(s):
        for v in range(u + 1, s):
            edges.append((u, v))
    for u in range(s, s + t):
        for v in range(u + 1, s + t):
            edges.append((u, v))
    return Graph(s + t, edges)


def _petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))            # outer cycle
        edges.append((5 + i, 5 + (i + 2) % 5))    # inner pentagram
        edges.append((i, 5 + i))                  # spokes
    return Graph(10, edges)


def _five_wheel() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)]
    return Graph(6, edges)


def _circulant13_minus_one_complement() -> Graph:
    # circulant on 13 vertices with connection set {1, 5}: triangle-free with
    # independence number 4; dropping one vertex leaves 12 = 3*4 vertices
    edges = []
    for u in range(13):
        for d in (1, 5):
            v = (u + d) % 13
            edges.append((min(u, v), max(u, v)))
    c13 = Graph(13, sorted(set(edges)))
    kept = [(u, v) for u, v in c13.edges() if u != 12 and v != 12]
    return complement(Graph(12, kept))


def named_graph(name: str, order: int | None = None) -> Graph:
    """Fixed-labelling named graphs; k_n additionally takes the order."""
    if name == "five_wheel":
        return _five_wheel()
    if name == "c5":
        return Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    if name == "p3":
        return Graph(3, [(0, 1), (1, 2)])
    if name == "petersen":
        return _petersen()
    if name == "petersen_complement":
        return complement(_petersen())
    if name == "k_n":
        if order is None or order < 0:
            raise UnknownName("k_n needs a nonnegative order")
        return Graph(order, [(u, v) for u in range(order) for v in range(u + 1, order)])
    if name == "circulant13_minus_one_complement":
        return _circulant13_minus_one_complement()
    raise UnknownName(f"unknown named graph {name!r}")

NAMED_GRAPHS = (
    "five_wheel",
    "c5",
    "p3",
    "petersen",
    "petersen_complement",
    "k_n",
    "circulant13_minus_one_complement",
)


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative description of a generated instance."""

    family: str                  # tfp | c5blowup | two_clique | named
    n: int | None = None
    t: int | None = None
    sizes: tuple[int, int] | None = None
    name: str | None = None
    order: int | None = None
    seed: int = 0


def generate(spec: GeneratorSpec) -> Graph:
    if spec.family == "tfp":
        if spec.n is None:
            raise ValueError("tfp needs n")
        return triangle_free_process_complement(spec.n, trial_rng(spec.seed))
    if spec.family == "c5blowup":
        if spec.t is None:
            raise ValueError("c5blowup needs t")
        return c5_blowup_complement(spec.t)
    if spec.family == "two_clique":
        if spec.sizes is None:
            raise ValueError("two_clique needs sizes")
        return two_clique_complement(*spec.sizes)
    if spec.family == "named":
        if spec.name is None:
            raise ValueError("named needs a name")
        return named_graph(spec.name, spec.order)
    raise ValueError(f"unknown family {spec.family!r}")
