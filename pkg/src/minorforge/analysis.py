"""Structural analysis of graphs with independence number at most two.

A graph has no independent triple exactly when its complement is
triangle-free, so every check here leans on the sparse complement:
clique search is independent-set search there, capacity and the packing
conditions come from the clique/non-neighbour structure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import AlphaTooLarge, BudgetExhausted, NotAClique
from .graph import Graph, bits, complement, mask_of

# Exact clique search is exponential in the worst case; above this order the
# pipeline switches to the verified local-search path (see working_clique).
EXACT_CLIQUE_LIMIT = 150


def find_independent_triple(g: Graph) -> tuple[int, int, int] | None:
    """Some independent 3-set of g, or None.  Triangle scan in the complement."""
    full = g.vertex_mask
    cadj = [full & ~(g.adj[v] | (1 << v)) for v in range(g.n)]
    for u in range(g.n):
        for v in bits(cadj[u] >> (u + 1)):
            v += u + 1
            common = cadj[u] & cadj[v] & ~((1 << (v + 1)) - 1)
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def is_alpha_le_2(g: Graph) -> bool:
    """True when g has no independent set of size three."""
    return find_independent_triple(g) is None


def is_clique(g: Graph, c: int) -> bool:
    for v in bits(c):
        if (g.adj[v] & c) != c ^ (1 << v):
            return False
    return True


# --- exact independent-set search (drives max_clique) ------------------------


def _greedy_matching_bound(adj, alive: int) -> int:
    """Upper bound for the independence number of adj[alive]: vertices minus
    a greedily built matching (every matched edge kills one candidate)."""
    nv = alive.bit_count()
    used = 0
    msize = 0
    rem = alive
    while rem:
        v = (rem & -rem).bit_length() - 1
        rem &= rem - 1
        if (used >> v) & 1:
            continue
        cand = adj[v] & alive & ~used
        if cand:
            used |= (1 << v) | (cand & -cand)
            msize += 1
    return nv - msize


def _components(adj, alive: int) -> list[int]:
    comps = []
    rem = alive
    while rem:
        start = rem & -rem
        reached = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            frontier = grow & alive & ~reached
            reached |= frontier
        comps.append(reached)
        rem &= ~reached
    return comps


def _mis_size(adj, alive: int, target: int | None = None) -> int:
    """Exact independence number of the subgraph on `alive`.

    With `target` set, stops early once an independent set of that size is
    known to exist (returned value is then >= target but maybe not alpha).
    """

    def rec(alive: int, cur: int, best: int) -> int:
        # take isolated and degree-1 vertices outright
        changed = True
        while changed:
            changed = False
            rem = alive
            while rem:
                v = (rem & -rem).bit_length() - 1
                rem &= rem - 1
                nb = adj[v] & alive
                d = nb.bit_count()
                if d == 0:
                    alive ^= 1 << v
                    cur += 1
                    changed = True
                elif d == 1:
                    alive &= ~(nb | (1 << v))
                    cur += 1
                    changed = True
                    break
        if not alive:
            return max(best, cur)
        if cur + _greedy_matching_bound(adj, alive) <= best:
            return best
        if target is not None and best >= target:
            return best
        comps = _components(adj, alive)
        if len(comps) > 1:
            for comp in comps:
                cur += rec(comp, 0, 0)
            return max(best, cur)
        # branch on a maximum-degree vertex (lowest index among ties)
        bestd = -1
        bv = -1
        rem = alive
        while rem:
            v = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            d = (adj[v] & alive).bit_count()
            if d > bestd:
                bestd, bv = d, v
        best = rec(alive & ~(adj[bv] | (1 << bv)), cur + 1, best)
        if target is not None and best >= target:
            return best
        return rec(alive & ~(1 << bv), cur, best)

    return rec(alive, 0, 0)


def max_clique(g: Graph) -> int:
    """Mask of a maximum clique; ties broken by lexicographically smallest
    vertex set.  Exact (independent-set search in the complement)."""
    if g.n == 0:
        return 0
    full = g.vertex_mask
    cadj = [full & ~(g.adj[v] | (1 << v)) for v in range(g.n)]
    omega = _mis_size(cadj, full)
    chosen = 0
    size = 0
    cand = full
    v = 0
    while size < omega:
        # smallest candidate whose inclusion still completes to omega
        b = 1 << v
        if cand & b:
            rest = cand & ~((b << 1) - 1) & ~cadj[v]
            need = omega - size - 1
            if need == 0 or _mis_size(cadj, rest, target=need) >= need:
                chosen |= b
                size += 1
                cand = rest
        v += 1
    return chosen


def clique_number(g: Graph) -> int:
    """Exact clique number."""
    if g.n == 0:
        return 0
    full = g.vertex_mask
    cadj = [full & ~(g.adj[v] | (1 << v)) for v in range(g.n)]
    return _mis_size(cadj, full)


# --- heuristic clique for instances beyond the exact wall --------------------


def large_clique(g: Graph, restarts: int = 12, iters: int = 60000) -> int:
    """Deterministic multi-restart local search for a large clique.

    Independent-set (1,2)-swap search in the complement.  Returns the best
    clique mask found; no maximality certificate.  Fixed seeds make the
    result a pure function of the graph.
    """
    full = g.vertex_mask
    cadj = [full & ~(g.adj[v] | (1 << v)) for v in range(g.n)]
    n = g.n
    best_mask = 1 if n else 0
    best_size = 1 if n else 0
    for seed in range(restarts):
        rnd = random.Random((0x5EA9 << 16) | seed)
        cur = 0
        forb = 0
        order = list(range(n))
        rnd.shuffle(order)
        for v in order:
            if not (forb >> v) & 1:
                cur |= 1 << v
                forb |= (1 << v) | cadj[v]
        cursize = cur.bit_count()
        if cursize > best_size:
            best_size, best_mask = cursize, cur
        for _ in range(iters):
            v = rnd.randrange(n)
            if (cur >> v) & 1:
                continue
            nb = cadj[v] & cur
            c = nb.bit_count()
            if c == 0:
                cur |= 1 << v
                cursize += 1
            elif c == 1:
                u = nb.bit_length() - 1
                cur = (cur ^ nb) | (1 << v)
                for x in bits(cadj[u] & ~cur):
                    if x != u and not (cadj[x] & cur) and not ((cur >> x) & 1):
                        cur |= 1 << x
                cursize = cur.bit_count()
            if cursize > best_size:
                best_size, best_mask = cursize, cur
    return best_mask


def working_clique(g: Graph, exact_limit: int = EXACT_CLIQUE_LIMIT) -> tuple[int, str]:
    """Clique the pipeline builds around: exact search up to exact_limit
    vertices, verified local search beyond.  Returns (mask, method)."""
    if g.n <= exact_limit:
        return max_clique(g), "exact"
    return large_clique(g), "local_search"


# --- clique statistics & capacity --------------------------------------------


@dataclass(frozen=True)
class CliqueStats:
    """Non-adjacency statistics around a clique Z.

    a counts non-neighbour incidences summed over Z; b counts non-adjacent
    pairs outside Z.  For a maximum clique of an alpha<=2 graph these obey
    a <= k*k and a + 2b <= k*(|V|-k).
    """

    clique: int
    k: int
    a: int
    b: int


def clique_stats(g: Graph, z: int) -> CliqueStats:
    if not is_clique(g, z):
        raise NotAClique(f"vertex set {sorted(bits(z))} is not a clique")
    full = g.vertex_mask
    k = z.bit_count()
    a = sum(g.n - 1 - g.degree(v) for v in bits(z))
    b = 0
    outside = full & ~z
    for v in bits(outside):
        nonnb = outside & ~(g.adj[v] | (1 << v))
        b += (nonnb & ~((1 << (v + 1)) - 1)).bit_count()
    return CliqueStats(clique=z, k=k, a=a, b=b)


def capacity(g: Graph, c: int) -> Fraction:
    """(|V - C| + |X|)/2 where X holds the outside vertices with both a
    neighbour and a non-neighbour in the clique c.  Exact half-integer."""
    if not is_clique(g, c):
        raise NotAClique(f"vertex set {sorted(bits(c))} is not a clique")
    outside = g.vertex_mask & ~c
    x = 0
    for v in bits(outside):
        hits = g.adj[v] & c
        if hits and hits != c:
            x += 1
    return Fraction(outside.bit_count() + x, 2)


def enumerate_cliques(g: Graph, budget: int = 1_000_000):
    """Yield every nonempty clique mask (lexicographic order of vertex sets).

    Raises BudgetExhausted when more than `budget` cliques would be emitted.
    """
    count = 0

    def rec(base: int, cand: int):
        nonlocal count
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            new = base | (1 << v)
            count += 1
            if count > budget:
                raise BudgetExhausted(f"more than {budget} cliques")
            yield new
            yield from rec(new, cand & g.adj[v] & ~((1 << (v + 1)) - 1))

    yield from rec(0, g.vertex_mask)


def min_capacity(g: Graph, budget: int = 1_000_000) -> tuple[Fraction, int]:
    """Exact minimum capacity over all nonempty cliques, with a witness."""
    best = None
    witness = 0
    for c in enumerate_cliques(g, budget=budget):
        cap = capacity(g, c)
        if best is None or cap < best:
            best, witness = cap, c
    if best is None:
        return Fraction(g.n, 2), 0
    return best, witness


def _greedy_coloring_size(g: Graph) -> int:
    """Number of colours used by smallest-index-first greedy colouring;
    an upper bound for the clique number."""
    color = [-1] * g.n
    used_count = 0
    for v in range(g.n):
        taken = 0
        for u in bits(g.adj[v]):
            if color[u] >= 0:
                taken |= 1 << color[u]
        c = 0
        while (taken >> c) & 1:
            c += 1
        color[v] = c
        used_count = max(used_count, c + 1)
    return used_count


# --- connectivity (max-flow with unit vertex capacities) ----------------------


def _st_vertex_connectivity(g: Graph, s: int, t: int, cap: int) -> tuple[int, int]:
    """(min(cap, local connectivity), vertex cut mask when value < cap).

    Dinic on the split digraph: v_in -> v_out with capacity one, edges with
    infinite capacity both ways.  s and t must be distinct non-adjacent.
    """
    n = g.n
    INF = 1 << 30
    # nodes: 2v = v_in, 2v+1 = v_out
    head: list[list[int]] = [[] for _ in range(2 * n)]
    to: list[int] = []
    capa: list[int] = []

    def add(u, v, c):
        head[u].append(len(to))
        to.append(v)
        capa.append(c)
        head[v].append(len(to))
        to.append(u)
        capa.append(0)

    for v in range(n):
        add(2 * v, 2 * v + 1, 1 if v not in (s, t) else INF)
    for u in range(n):
        for v in bits(g.adj[u]):
            add(2 * u + 1, 2 * v, INF)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        # BFS levels
        level = [-1] * (2 * n)
        level[src] = 0
        queue = [src]
        for u in queue:
            for e in head[u]:
                if capa[e] > 0 and level[to[e]] < 0:
                    level[to[e]] = level[u] + 1
                    queue.append(to[e])
        if level[snk] < 0:
            break
        it = [0] * (2 * n)

        def dfs(u, pushed):
            if u == snk:
                return pushed
            while it[u] < len(head[u]):
                e = head[u][it[u]]
                v = to[e]
                if capa[e] > 0 and level[v] == level[u] + 1:
                    got = dfs(v, min(pushed, capa[e]))
                    if got:
                        capa[e] -= got
                        capa[e ^ 1] += got
                        return got
                it[u] += 1
            return 0

        while flow < cap:
            pushed = dfs(src, INF)
            if not pushed:
                break
            flow += pushed
    if flow >= cap:
        return cap, 0
    # residual reachability gives the cut
    seen = [False] * (2 * n)
    seen[src] = True
    queue = [src]
    for u in queue:
        for e in head[u]:
            if capa[e] > 0 and not seen[to[e]]:
                seen[to[e]] = True
                queue.append(to[e])
    cut = 0
    for v in range(n):
        if seen[2 * v] and not seen[2 * v + 1]:
            cut |= 1 << v
    return flow, cut


def is_k_connected_with_cut(g: Graph, k: int) -> tuple[bool, int | None]:
    """k-connectivity check plus a violating cut mask when it fails.

    |V| > k is required; a sub-k cut is searched exactly via max-flow once
    the cheap degree shortcuts cannot decide.
    """
    n = g.n
    if n <= k:
        return False, None
    if k <= 0:
        return True, None
    if g.edge_count == n * (n - 1) // 2:
        return True, None
    degs = [g.degree(v) for v in range(n)]
    mind = min(degs)
    v0 = degs.index(mind)
    if mind < k:
        # the neighbourhood of a minimum-degree vertex is a cut (graph not complete)
        return False, g.adj[v0]
    if 2 * mind + 2 - n >= k:
        # every cut has at least 2*mindeg+2-|V| vertices
        return True, None
    nonnb = g.vertex_mask & ~(g.adj[v0] | (1 << v0))
    for u in bits(nonnb):
        val, cut = _st_vertex_connectivity(g, v0, u, k)
        if val < k:
            return False, cut
    nb = list(bits(g.adj[v0]))
    for i, x in enumerate(nb):
        for y in nb[i + 1 :]:
            if not g.has_edge(x, y):
                val, cut = _st_vertex_connectivity(g, x, y, k)
                if val < k:
                    return False, cut
    return True, None


def is_k_connected(g: Graph, k: int) -> bool:
    """True when |V| > k and no vertex cut of size below k exists."""
    ok, _ = is_k_connected_with_cut(g, k)
    return ok


# --- maximum matching (general graphs, blossom contraction) -------------------


def _maximum_matching_size(adj, n: int) -> int:
    """Maximum matching in the graph given by neighbour masks; augmenting
    BFS with blossom contraction, O(V^3)."""
    match = [-1] * n
    p = [-1] * n
    base = list(range(n))

    def lca(a, b):
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = p[match[b]]

    def find_path(root) -> bool:
        nonlocal p, base
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for u in bits(adj[v]):
                if base[v] == base[u] or match[v] == u:
                    continue
                if u == root or (match[u] != -1 and p[match[u]] != -1):
                    # odd cycle: contract the blossom
                    cur = lca(v, u)
                    blossom = [False] * n

                    def mark(x, child):
                        while base[x] != cur:
                            blossom[base[x]] = True
                            blossom[base[match[x]]] = True
                            p[x] = child
                            child = match[x]
                            x = p[match[x]]

                    mark(v, u)
                    mark(u, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[u] == -1:
                    p[u] = v
                    if match[u] == -1:
                        # augment along parents
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[u]] = True
                    queue.append(match[u])
        return False

    size = 0
    for v in range(n):
        if match[v] == -1 and find_path(v):
            size += 1
    return size


def maximum_matching_size(g: Graph) -> int:
    return _maximum_matching_size(g.adj, g.n)


def complement_matching_size(g: Graph) -> int:
    """Size of a maximum matching in the complement of g."""
    full = g.vertex_mask
    cadj = [full & ~(g.adj[v] | (1 << v)) for v in range(g.n)]
    return _maximum_matching_size(cadj, g.n)


# --- five-wheel recognition ---------------------------------------------------


def is_five_wheel(g: Graph) -> bool:
    """Six vertices: a five-cycle plus a hub adjacent to all of it."""
    if g.n != 6 or g.edge_count != 10:
        return False
    degs = sorted(g.degree(v) for v in range(6))
    if degs != [3, 3, 3, 3, 3, 5]:
        return False
    hub = next(v for v in range(6) if g.degree(v) == 5)
    rim = g.vertex_mask & ~(1 << hub)
    # rim must induce a 2-regular connected graph on 5 vertices, i.e. C5
    for v in bits(rim):
        if (g.adj[v] & rim).bit_count() != 2:
            return False
    from .graph import is_connected_subset

    return is_connected_subset(g, rim)


# --- the disjoint-seagull condition report ------------------------------------


@dataclass(frozen=True)
class SeagullConditionReport:
    """The five conditions characterising k pairwise disjoint seagulls in an
    alpha<=2 graph, each with a witness for failures.

    cond_capacity may be certified by the bound (|V|-omega)/2 >= k without
    enumerating cliques; min_cap/capacity_witness are then None.
    """

    k: int
    cond_size: bool
    cond_connectivity: bool
    cond_capacity: bool
    cond_matching: bool
    cond_five_wheel: bool
    order: int
    connectivity_cut: int | None
    min_cap: Fraction | None
    capacity_witness: int | None
    matching_size: int
    five_wheel: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.cond_size
            and self.cond_connectivity
            and self.cond_capacity
            and self.cond_matching
            and self.cond_five_wheel
        )


def seagull_conditions(g: Graph, k: int, clique_budget: int = 1_000_000) -> SeagullConditionReport:
    """Evaluate all five packing conditions for parameter k; no silent
    short-circuits.  Requires alpha(g) <= 2."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    triple = find_independent_triple(g)
    if triple is not None:
        raise AlphaTooLarge(f"independent triple {triple}")
    cond_size = g.n >= 3 * k
    conn, cut = is_k_connected_with_cut(g, k)
    # capacity: every clique C satisfies cap(C) >= (|V|-|C|)/2, so an upper
    # bound on the clique number can certify the condition without enumeration
    omega_ub = _greedy_coloring_size(g)
    min_cap = None
    cap_witness = None
    if Fraction(g.n - omega_ub, 2) >= k:
        cond_capacity = True
    else:
        min_cap, cap_witness = min_capacity(g, budget=clique_budget)
        cond_capacity = min_cap >= k
        if cond_capacity:
            cap_witness = None
    msize = complement_matching_size(g)
    fw = is_five_wheel(g)
    return SeagullConditionReport(
        k=k,
        cond_size=cond_size,
        cond_connectivity=conn,
        cond_capacity=cond_capacity,
        cond_matching=msize >= k,
        cond_five_wheel=not (k == 2 and fw),
        order=g.n,
        connectivity_cut=cut,
        min_cap=min_cap,
        capacity_witness=cap_witness,
        matching_size=msize,
        five_wheel=fw,
    )
