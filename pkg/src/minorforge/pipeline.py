"""End-to-end minor construction for alpha<=2 graphs of even order.

Given G with clique number below |V|/4: fix a clique Z, delete it (plus at
most one vertex for parity), draw a uniform pairing of the rest conditioned
on the concentration event, keep n-2k of its edges as a matching, partition
the 3k leftover vertices into seagulls, and contract.  Every missing edge
of the contracted graph is accounted for exactly: it is either a clique
vertex against a matching pair with no edge between them (a realized bad
triple) or two matching pairs spanning no edge (a realized bad quadruple).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .analysis import (
    EXACT_CLIQUE_LIMIT,
    clique_stats,
    find_independent_triple,
    working_clique,
)
from .bounds import BoundReport, compute_bound_report
from .errors import (
    AlphaTooLarge,
    Ineligible,
    MinorforgeError,
    NotCertifiable,
    RejectionExhausted,
    SeagullFailure,
)
from .graph import (
    BranchDecomposition,
    Graph,
    bits,
    contract,
    induced_subgraph,
    mask_of,
    minor_violation,
)
from .pairings import (
    Pairing,
    SubMatching,
    in_concentration_event,
    pairing_edge_count,
    sample_conditioned,
    sample_uniform_pairing,
    subsample_matching,
)
from .rng import trial_rng
from .seagulls import SeagullPartition, seagull_partition


@dataclass(frozen=True)
class PipelineConfig:
    """Knobs of one pipeline run.

    lambda_policy: "n23" (lambda = n^(2/3)), "clamped"
    (min(n^(2/3), (k-1)/2)), or an explicit positive number.
    strict mode keeps the expectation certificate; advisory mode only
    requires that a conditioned pairing with enough edges is found.
    """

    lambda_policy: object = "n23"
    seed: int = 0
    mode: str = "strict"
    max_rejection_tries: int = 200
    exact_clique_limit: int = EXACT_CLIQUE_LIMIT
    seagull_budget: int = 5_000_000

    def __post_init__(self):
        if self.mode not in ("strict", "advisory"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if isinstance(self.lambda_policy, str):
            if self.lambda_policy not in ("n23", "clamped"):
                raise ValueError(f"unknown lambda policy {self.lambda_policy!r}")
        elif Fraction(self.lambda_policy) <= 0:
            raise ValueError("explicit lambda must be positive")


@dataclass(frozen=True)
class PreconditionReport:
    """Hypothesis flags plus the derived scalars of one instance.

    q = 1 - 2n/lambda^2 is recorded even when nonpositive (then flagged
    invalid via lambda_sq_gt_2n).  complement_degree_le_k checks that no
    vertex has more than k non-neighbours, which is what the expectation
    bound actually consumes; it holds automatically when the clique is
    maximum.
    """

    order_even_ge6: bool
    alpha_le_2: bool
    clique_below_quarter: bool
    lambda_le_half_k_minus_1: bool
    lambda_sq_gt_2n: bool
    matching_count_nonneg: bool
    complement_degree_le_k: bool
    n: int
    k: int
    x: int
    lam: float
    q: float
    mode: str
    clique_method: str

    @property
    def strict_ok(self) -> bool:
        return (
            self.order_even_ge6
            and self.alpha_le_2
            and self.clique_below_quarter
            and self.lambda_le_half_k_minus_1
            and self.lambda_sq_gt_2n
            and self.matching_count_nonneg
            and self.complement_degree_le_k
        )


@dataclass(frozen=True)
class PipelineResult:
    """One construction run: the minor, its witness, and exact accounting."""

    h: Graph
    decomposition: BranchDecomposition
    clique: int
    deleted_vertex: int | None
    m_star: SubMatching
    seagulls: SeagullPartition
    missing_edges: int
    realized_bad_triples: int
    realized_bad_quadruples: int
    bound: BoundReport
    preconditions: PreconditionReport
    trial: int
    seed: int


@dataclass(frozen=True)
class Certificate:
    """Comparison of observed missing edges against the expectation bound."""

    status: str          # "sample" | "PASS" | "FAIL"
    bound: float
    observed: float
    trials: int
    stderr: float


def strip_clique(g: Graph, z: int) -> tuple[Graph, tuple[int, ...], int | None]:
    """Delete the clique, plus the lowest-index leftover vertex when the
    remainder has odd order.  Returns (subgraph, index_map, deleted)."""
    rest = g.vertex_mask & ~z
    deleted = None
    if rest.bit_count() % 2:
        deleted = (rest & -rest).bit_length() - 1
        rest &= ~(1 << deleted)
    sub, idx_map = induced_subgraph(g, rest)
    return sub, idx_map, deleted


def resolve_lambda(policy, n: int, k: int) -> Fraction:
    """Evaluate the lambda policy; floats convert exactly to rationals."""
    if isinstance(policy, str):
        n23 = Fraction(float(n) ** (2.0 / 3.0))
        if policy == "n23":
            return n23
        if policy == "clamped":
            return min(n23, Fraction(k - 1, 2))
        raise ValueError(f"unknown lambda policy {policy!r}")
    return Fraction(policy)


def enumerate_bad_triples(g: Graph, z: int) -> list[tuple[int, int, int]]:
    """All 3-sets with exactly one clique vertex, non-adjacent to the other
    two.  At most a(k-1)/2 of them exist."""
    out = []
    outside = g.vertex_mask & ~z
    for zv in bits(z):
        nonnb = outside & ~g.adj[zv]
        for u in bits(nonnb):
            for voff in bits(nonnb >> (u + 1)):
                out.append((zv, u, u + 1 + voff))
    return out


def enumerate_bad_quadruples(g_prime: Graph) -> list[tuple[int, int, int, int]]:
    """All 4-sets inducing exactly a perfect matching of size two.

    Quadratic in the edge count; meant for desk-scale verification.
    """
    edges = list(g_prime.edges())
    out = []
    for i, (u1, v1) in enumerate(edges):
        e1 = (1 << u1) | (1 << v1)
        for u2, v2 in edges[i + 1 :]:
            if e1 & ((1 << u2) | (1 << v2)):
                continue
            if (
                not g_prime.has_edge(u1, u2)
                and not g_prime.has_edge(u1, v2)
                and not g_prime.has_edge(v1, u2)
                and not g_prime.has_edge(v1, v2)
            ):
                out.append(tuple(sorted((u1, v1, u2, v2))))
    return out


class PreparedPipeline:
    """Instance-level state shared by all trials on one graph: the clique,
    its statistics, the ground graph for pairings and the lambda value."""

    def __init__(self, g: Graph, cfg: PipelineConfig):
        self.g = g
        self.cfg = cfg
        self.clique, self.clique_method = working_clique(g, cfg.exact_clique_limit)
        self.stats = clique_stats(g, self.clique)
        self.k = self.stats.k
        self.n = g.n // 2
        self.g_prime, self.idx_map, self.deleted_vertex = strip_clique(g, self.clique)
        self.x = self.g_prime.n
        try:
            self.lam = resolve_lambda(cfg.lambda_policy, self.n, self.k)
        except ZeroDivisionError:  # k <= 1 cannot happen for eligible inputs
            self.lam = Fraction(0)
        self.alpha_ok = find_independent_triple(g) is None
        max_nonnb = max((g.n - 1 - g.degree(v) for v in range(g.n)), default=0)
        lamf = float(self.lam)
        self.report = PreconditionReport(
            order_even_ge6=(g.n % 2 == 0 and g.n >= 6),
            alpha_le_2=self.alpha_ok,
            clique_below_quarter=(4 * self.k < g.n),
            lambda_le_half_k_minus_1=(0 < self.lam <= Fraction(self.k - 1, 2)),
            lambda_sq_gt_2n=(self.lam * self.lam > 2 * self.n),
            matching_count_nonneg=(self.n - 2 * self.k >= 0),
            complement_degree_le_k=(max_nonnb <= self.k),
            n=self.n,
            k=self.k,
            x=self.x,
            lam=lamf,
            q=1.0 - 2.0 * self.n / (lamf * lamf) if lamf > 0 else float("-inf"),
            mode=cfg.mode,
            clique_method=self.clique_method,
        )
        self.bound = compute_bound_report(self.n, self.k, self.stats.a, self.stats.b, lamf)

    def check_eligibility(self) -> None:
        r = self.report
        if not r.order_even_ge6:
            raise Ineligible(f"|V| = {self.g.n} must be even and at least 6")
        if not r.alpha_le_2:
            raise AlphaTooLarge(f"independent triple {find_independent_triple(self.g)}")
        if not r.clique_below_quarter:
            raise Ineligible(
                f"clique number {self.k} >= |V|/4 = {self.g.n / 4}: a complete "
                "minor on |V|/2 vertices exists by the packing characterisation; "
                "constructing it is out of scope here"
            )
        if not r.matching_count_nonneg:
            raise Ineligible(f"n - 2k = {self.n - 2 * self.k} negative")

    def _sample_matching(self, trial: int) -> tuple[Pairing, SubMatching]:
        rng = trial_rng(self.cfg.seed, trial)
        want = self.n - 2 * self.k
        if self.cfg.mode == "advisory":
            # condition on the event AND on having enough edges to subsample
            tries = self.cfg.max_rejection_tries
            m = None
            for _ in range(tries):
                cand = sample_uniform_pairing(self.g_prime.n, rng)
                if in_concentration_event(cand, self.g_prime, self.lam) and (
                    pairing_edge_count(cand, self.g_prime) >= want
                ):
                    m = cand
                    break
            if m is None:
                raise RejectionExhausted(
                    f"no pairing with >= {want} edges hit the event in {tries} tries"
                )
        else:
            m = sample_conditioned(self.g_prime, self.lam, self.cfg.max_rejection_tries, rng)
        m_star_local = subsample_matching(m, self.g_prime, want, rng)
        edges = tuple(
            (self.idx_map[u], self.idx_map[v]) for u, v in m_star_local.edges
        )
        edges = tuple(sorted((min(e), max(e)) for e in edges))
        return m, SubMatching(edges=edges)

    def run(self, trial: int = 0) -> PipelineResult:
        self.check_eligibility()
        g = self.g
        n, k = self.n, self.k
        _, m_star = self._sample_matching(trial)

        covered = 0
        for u, v in m_star.edges:
            covered |= (1 << u) | (1 << v)
        s_mask = g.vertex_mask & ~self.clique & ~covered
        if s_mask.bit_count() != 3 * k:
            raise MinorforgeError(
                f"leftover set has {s_mask.bit_count()} vertices, expected {3 * k}"
            )
        g_s, s_map = induced_subgraph(g, s_mask)
        part = seagull_partition(g_s, budget=self.cfg.seagull_budget)
        if part is None:
            raise SeagullFailure(
                "no seagull partition of the leftover vertices; this cannot "
                "happen when the clique has maximum size"
            )
        triples = tuple(
            (s_map[a], s_map[mid], s_map[b]) for a, mid, b in part.triples
        )

        parts = [1 << zv for zv in bits(self.clique)]
        parts += [(1 << u) | (1 << v) for u, v in m_star.edges]
        parts += [mask_of(t) for t in sorted(triples)]
        decomposition = BranchDecomposition(host=g, parts=tuple(parts))
        h = contract(g, decomposition)
        violation = minor_violation(g, h, decomposition)
        if violation is not None:
            raise MinorforgeError(f"constructed witness rejected: {violation}")
        if h.n != n:
            raise MinorforgeError(f"minor has {h.n} vertices, expected {n}")

        # exact accounting of every missing edge of h
        n_pairs = len(m_star.edges)
        bad_triples = 0
        bad_quads = 0
        full_h = h.vertex_mask
        for i in range(h.n):
            others = full_h & ~(h.adj[i] | ((1 << (i + 1)) - 1))
            for j in bits(others):
                i_kind = 0 if i < k else (1 if i < k + n_pairs else 2)
                j_kind = 0 if j < k else (1 if j < k + n_pairs else 2)
                kinds = (i_kind, j_kind)
                if kinds == (0, 1):
                    zv = parts[i].bit_length() - 1
                    u, v = m_star.edges[j - k]
                    if g.has_edge(zv, u) or g.has_edge(zv, v):
                        raise MinorforgeError("missing edge not a bad triple")
                    bad_triples += 1
                elif kinds == (1, 1):
                    u1, v1 = m_star.edges[i - k]
                    u2, v2 = m_star.edges[j - k]
                    if any(
                        g.has_edge(x, y) for x in (u1, v1) for y in (u2, v2)
                    ):
                        raise MinorforgeError("missing edge not a bad quadruple")
                    bad_quads += 1
                else:
                    raise MinorforgeError(
                        f"missing edge between part kinds {kinds}; seagull and "
                        "clique parts must be complete to the rest"
                    )
        missing = comb(n, 2) - h.edge_count
        if missing != bad_triples + bad_quads:
            raise MinorforgeError(
                f"accounting mismatch: {missing} missing vs "
                f"{bad_triples}+{bad_quads} classified"
            )

        return PipelineResult(
            h=h,
            decomposition=decomposition,
            clique=self.clique,
            deleted_vertex=self.deleted_vertex,
            m_star=m_star,
            seagulls=SeagullPartition(triples=tuple(sorted(triples))),
            missing_edges=missing,
            realized_bad_triples=bad_triples,
            realized_bad_quadruples=bad_quads,
            bound=self.bound,
            preconditions=self.report,
            trial=trial,
            seed=self.cfg.seed,
        )


def prepare(g: Graph, cfg: PipelineConfig) -> PreparedPipeline:
    return PreparedPipeline(g, cfg)


def preconditions(g: Graph, cfg: PipelineConfig) -> PreconditionReport:
    """All hypothesis flags for this (graph, config); never raises."""
    return PreparedPipeline(g, cfg).report


def run_pipeline(g: Graph, cfg: PipelineConfig, trial: int = 0) -> PipelineResult:
    return PreparedPipeline(g, cfg).run(trial)


def run_batch(g: Graph, cfg: PipelineConfig, trials: int) -> list[PipelineResult]:
    prep = PreparedPipeline(g, cfg)
    return [prep.run(t) for t in range(trials)]


def _gate_certification(pre: PreconditionReport) -> None:
    if pre.mode != "strict":
        raise NotCertifiable("advisory mode carries no expectation certificate")
    if not pre.lambda_sq_gt_2n:
        raise NotCertifiable("lambda^2 <= 2n")
    if not pre.strict_ok:
        failed = [
            name
            for name in (
                "order_even_ge6",
                "alpha_le_2",
                "clique_below_quarter",
                "lambda_le_half_k_minus_1",
                "matching_count_nonneg",
                "complement_degree_le_k",
            )
            if not getattr(pre, name)
        ]
        raise NotCertifiable(f"hypothesis flags failed: {', '.join(failed)}")


def certify(result: PipelineResult) -> Certificate:
    """Single-run certificate: the bound applies to an expectation, so one
    run is only a sample, never PASS/FAIL."""
    _gate_certification(result.preconditions)
    if result.bound.missing_bound is None:
        raise NotCertifiable("bound undefined for these parameters")
    return Certificate(
        status="sample",
        bound=result.bound.missing_bound,
        observed=float(result.missing_edges),
        trials=1,
        stderr=float("nan"),
    )


def certify_batch(results: list[PipelineResult]) -> Certificate:
    """PASS when the mean missing-edge count respects the expectation bound
    within three standard errors."""
    if not results:
        raise NotCertifiable("empty batch")
    pre = results[0].preconditions
    _gate_certification(pre)
    bound = results[0].bound.missing_bound
    if bound is None:
        raise NotCertifiable("bound undefined for these parameters")
    vals = [r.missing_edges for r in results]
    t = len(vals)
    mean = sum(vals) / t
    var = sum((v - mean) ** 2 for v in vals) / (t - 1) if t > 1 else 0.0
    sem = (var / t) ** 0.5
    status = "PASS" if mean <= bound + 3 * sem else "FAIL"
    return Certificate(status=status, bound=bound, observed=mean, trials=t, stderr=sem)
