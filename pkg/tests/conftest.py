"""Shared oracles and instance samplers for the test suite.

Oracles here are deliberately independent of the library code paths they
check: subset enumeration, mask dynamic programs and BFS cut search.
"""

from __future__ import annotations

from itertools import combinations

import pytest

from minorforge.graph import Graph, bits, mask_of


def brute_max_clique_size(g: Graph) -> int:
    """Largest clique by subset enumeration (use only for small graphs)."""
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for sub in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = size
                break
    return best


def brute_max_independent_size(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for sub in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = size
                break
    return best


def brute_matching_size(g: Graph) -> int:
    """Maximum matching by dynamic programming over vertex masks."""
    memo = {0: 0}

    def rec(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        best = rec(mask & (mask - 1))
        for u in bits(g.adj[v] & mask):
            best = max(best, 1 + rec(mask & ~((1 << v) | (1 << u))))
        memo[mask] = best
        return best

    return rec(g.vertex_mask)


def brute_is_k_connected(g: Graph, k: int) -> bool:
    """Definition check: |V| > k and no cut of size below k (enumerated)."""
    from minorforge.graph import is_connected_subset

    if g.n <= k:
        return False
    if k <= 0:
        return True
    for size in range(0, k):
        for cut in combinations(range(g.n), size):
            rest = g.vertex_mask & ~mask_of(cut)
            if rest and not is_connected_subset(g, rest):
                return False
    return True


def small_alpha2_graphs(count: int, seed: int = 0, min_n: int = 6, max_n: int = 12):
    """Deterministic mix of alpha<=2 instances of order min_n..max_n."""
    from minorforge.generators import (
        c5_blowup_complement,
        named_graph,
        triangle_free_process_complement,
        two_clique_complement,
    )
    from minorforge.rng import trial_rng

    out = [named_graph("five_wheel"), c5_blowup_complement(2), two_clique_complement(3, 3)]
    rng = trial_rng(seed, 999)
    i = 0
    while len(out) < count:
        n = int(rng.integers(min_n, max_n + 1))
        out.append(triangle_free_process_complement(n, trial_rng(seed, i)))
        i += 1
    return out[:count]


@pytest.fixture(scope="session")
def petersen():
    from minorforge.generators import named_graph

    return named_graph("petersen")
