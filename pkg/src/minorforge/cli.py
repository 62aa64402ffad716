"""Command-line front end: generation, analysis, pipeline runs, Monte Carlo
suites and the density-constant optimiser.

Machine-readable output is line-delimited JSON with sorted keys; identical
(command line, seed, input bytes) reproduce identical record bytes.  Wall
times appear only in text mode to keep records deterministic.

Exit codes: 0 success, 2 input/parse error, 3 ineligible or precondition
failure, 4 sampler exhaustion.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction
from multiprocessing import get_context

import numpy as np

from . import analysis, bounds, generators, pipeline
from .errors import (
    AlphaTooLarge,
    BudgetExhausted,
    Ineligible,
    MinorforgeError,
    NotCertifiable,
    NotEnoughEdges,
    ParseError,
    RejectionExhausted,
    TooLarge,
    UnknownName,
    UnknownSuite,
    WrongOrder,
)
from .graph import Graph, bits, from_text, read_graph, to_text
from .pairings import chebyshev_bound
from .rng import trial_rng

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INELIGIBLE = 3
EXIT_EXHAUSTED = 4

_INPUT_ERRORS = (ParseError, UnknownName, UnknownSuite, FileNotFoundError, ValueError)
_INELIGIBLE_ERRORS = (Ineligible, AlphaTooLarge, WrongOrder, TooLarge, NotCertifiable)
_EXHAUSTED_ERRORS = (RejectionExhausted, NotEnoughEdges, BudgetExhausted)


def _default_seed() -> int:
    return int(os.environ.get("MINORFORGE_SEED", "0"))


def _emit(records: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "records":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    else:
        for rec in records:
            for key in sorted(rec):
                out.write(f"{key}: {rec[key]}\n")
            out.write("\n")


def _sha256_file(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _parse_lambda(text: str):
    if text in ("n23", "clamped"):
        return text
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad lambda {text!r}: use n23, clamped, or a rational") from None


# --- gen ----------------------------------------------------------------------


def _cmd_gen(args) -> int:
    if args.named:
        g = generators.named_graph(args.named, args.order)
    elif args.family == "tfp":
        if args.n is None:
            raise ValueError("--family tfp needs --n")
        g = generators.triangle_free_process_complement(args.n, trial_rng(args.seed))
    elif args.family == "c5blowup":
        if args.t is None:
            raise ValueError("--family c5blowup needs --t")
        g = generators.c5_blowup_complement(args.t)
    elif args.family == "two_clique":
        if args.sizes is None:
            raise ValueError("--family two_clique needs --sizes S,T")
        s, t = (int(x) for x in args.sizes.split(","))
        g = generators.two_clique_complement(s, t)
    else:
        raise ValueError("gen needs --family or --named")
    text = to_text(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- analyze --------------------------------------------------------------------


def _cmd_analyze(args) -> int:
    g = read_graph(args.graph)
    triple = analysis.find_independent_triple(g)
    if triple is not None:
        raise AlphaTooLarge(f"independent triple {triple}: analysis targets alpha <= 2")
    clique, method = analysis.working_clique(g, args.exact_clique_limit)
    stats = analysis.clique_stats(g, clique)
    k = stats.k
    connected = analysis.is_k_connected(g, k)
    matching = analysis.complement_matching_size(g)
    fw = analysis.is_five_wheel(g)
    cap_lb = (g.n - analysis._greedy_coloring_size(g)) / 2.0
    cap_exact = None
    if g.n <= 30:
        cap, _ = analysis.min_capacity(g)
        cap_exact = float(cap)
    verdict = "pipeline" if 4 * k < g.n else "large-clique-route"
    rec = {
        "record": "analysis",
        "input": args.graph,
        "input_sha256": _sha256_file(args.graph),
        "n": g.n,
        "m": g.edge_count,
        "alpha_le_2": True,
        "k": k,
        "clique": sorted(bits(clique)),
        "clique_method": method,
        "a": stats.a,
        "b": stats.b,
        "min_capacity": cap_exact,
        "min_capacity_lower_bound": cap_lb,
        "k_connected": connected,
        "complement_matching": matching,
        "five_wheel": fw,
        "verdict": verdict,
    }
    _emit([rec], args.format)
    return EXIT_OK


# --- build-minor ----------------------------------------------------------------


def _cmd_build_minor(args) -> int:
    g = read_graph(args.graph)
    cfg = pipeline.PipelineConfig(
        lambda_policy=_parse_lambda(args.lam),
        seed=args.seed,
        mode=args.mode,
        max_rejection_tries=args.max_tries,
        exact_clique_limit=args.exact_clique_limit,
    )
    t0 = time.monotonic()
    result = pipeline.run_pipeline(g, cfg, trial=args.trial)
    elapsed = time.monotonic() - t0
    try:
        cert = pipeline.certify(result)
        cert_status, cert_bound = cert.status, cert.bound
    except NotCertifiable as exc:
        cert_status, cert_bound = f"NotCertifiable: {exc}", None
    if args.out_h:
        with open(args.out_h, "w") as fh:
            fh.write(to_text(result.h))
    if args.out_branches:
        with open(args.out_branches, "w") as fh:
            for i, part in enumerate(result.decomposition.parts, start=1):
                verts = " ".join(str(v + 1) for v in bits(part))
                fh.write(f"part {i}: {verts}\n")
            fh.write(result.seagulls.serialize())
    pre = result.preconditions
    rec = {
        "record": "build-minor",
        "input": args.graph,
        "input_sha256": _sha256_file(args.graph),
        "seed": args.seed,
        "trial": args.trial,
        "mode": args.mode,
        "lambda": pre.lam,
        "n": pre.n,
        "k": pre.k,
        "x": pre.x,
        "q": pre.q,
        "clique_method": pre.clique_method,
        "strict_ok": pre.strict_ok,
        "h_vertices": result.h.n,
        "h_edges": result.h.edge_count,
        "missing_edges": result.missing_edges,
        "realized_bad_triples": result.realized_bad_triples,
        "realized_bad_quadruples": result.realized_bad_quadruples,
        "deleted_vertex": None
        if result.deleted_vertex is None
        else result.deleted_vertex + 1,
        "a": result.bound.a,
        "b": result.bound.b,
        "missing_bound": result.bound.missing_bound,
        "certificate": cert_status,
        "certificate_bound": cert_bound,
    }
    if args.format == "text":
        rec["wall_time_s"] = round(elapsed, 3)
    _emit([rec], args.format)
    return EXIT_OK


# --- mc suites -------------------------------------------------------------------


def _pair_partners(perms: np.ndarray) -> np.ndarray:
    """partner[i] for each row of permutations paired consecutively."""
    t, x = perms.shape
    partner = np.empty_like(perms)
    rows = np.arange(t)[:, None]
    partner[rows, perms[:, 0::2]] = perms[:, 1::2]
    partner[rows, perms[:, 1::2]] = perms[:, 0::2]
    return partner


def _sample_partners(x: int, trials: int, rng) -> np.ndarray:
    perms = np.tile(np.arange(x), (trials, 1))
    perms = rng.permuted(perms, axis=1)
    return _pair_partners(perms)


def _mc_pairing_marginals(args) -> list[dict]:
    x = args.x
    rng = trial_rng(args.seed, 0)
    partner = _sample_partners(x, args.trials, rng)
    est = float(np.mean(partner[:, 0] == 1))
    target = 1.0 / (x - 1)
    se = (est * (1 - est) / args.trials) ** 0.5
    return [
        {
            "record": "mc",
            "suite": "pairing-marginals",
            "quantity": f"Pr[pair (1,2) in pairing], |X|={x}",
            "trials": args.trials,
            "estimate": est,
            "stderr": se,
            "bound": target,
            "pass": bool(abs(est - target) <= 4 * max(se, 1e-12)),
        }
    ]


def _mc_pairing_joint(args) -> list[dict]:
    x = args.x
    rng = trial_rng(args.seed, 0)
    partner = _sample_partners(x, args.trials, rng)
    hits = (partner[:, 0] == 1) & (partner[:, 2] == 3)
    est = float(np.mean(hits))
    target = 1.0 / ((x - 1) * (x - 3))
    se = (est * (1 - est) / args.trials) ** 0.5
    return [
        {
            "record": "mc",
            "suite": "pairing-joint",
            "quantity": f"Pr[two disjoint pairs in pairing], |X|={x}",
            "trials": args.trials,
            "estimate": est,
            "stderr": se,
            "bound": target,
            "pass": bool(abs(est - target) <= 4 * max(se, 1e-12)),
        }
    ]


def _mc_chebyshev(args) -> list[dict]:
    records = []
    stream = 0
    for x in (20, 50):
        all_pairs = [(u, v) for u in range(x) for v in range(u + 1, x)]
        for density in (0.1, 0.25):
            f_size = max(1, round(density * len(all_pairs)))
            rng = trial_rng(args.seed, stream)
            stream += 1
            chosen = rng.choice(len(all_pairs), size=f_size, replace=False)
            fmat = np.zeros((x, x), dtype=bool)
            for idx in chosen:
                u, v = all_pairs[int(idx)]
                fmat[u, v] = fmat[v, u] = True
            perms = np.tile(np.arange(x), (args.trials, 1))
            perms = rng.permuted(perms, axis=1)
            counts = fmat[perms[:, 0::2], perms[:, 1::2]].sum(axis=1)
            mean = f_size / (x - 1)
            for lam in (2, 5, 10):
                tail = float(np.mean(np.abs(counts - mean) >= lam))
                bound = chebyshev_bound(x, lam)
                records.append(
                    {
                        "record": "mc",
                        "suite": "chebyshev",
                        "quantity": f"Pr[|count - {mean:.3f}| >= {lam}], |X|={x}, |F|={f_size}",
                        "trials": args.trials,
                        "estimate": tail,
                        "stderr": (tail * (1 - tail) / args.trials) ** 0.5,
                        "bound": bound,
                        "pass": bool(tail <= bound),
                    }
                )
    return records


def _expectation_instance(task) -> dict:
    size, seed, trials, policy, max_tries = task
    g = generators.triangle_free_process_complement(size, trial_rng(seed))
    cfg = pipeline.PipelineConfig(
        lambda_policy=policy, seed=seed, mode="strict", max_rejection_tries=max_tries
    )
    prep = pipeline.PreparedPipeline(g, cfg)
    rec = {
        "record": "mc",
        "suite": "expectation-bound",
        "size": size,
        "instance_seed": seed,
        "k": prep.k,
        "strict_ok": prep.report.strict_ok,
    }
    if not prep.report.strict_ok:
        rec["quantity"] = "strict-ineligible instance"
        rec["pass"] = None
        return rec
    results = [prep.run(t) for t in range(trials)]
    cert = pipeline.certify_batch(results)
    rec.update(
        {
            "quantity": "mean missing edges vs expectation bound",
            "trials": trials,
            "estimate": cert.observed,
            "stderr": cert.stderr,
            "bound": cert.bound,
            "pass": cert.status == "PASS",
            "max_bad_triples": max(r.realized_bad_triples for r in results),
            "max_bad_quadruples": max(r.realized_bad_quadruples for r in results),
        }
    )
    return rec


def _mc_expectation_bound(args) -> list[dict]:
    sizes = [int(s) for s in args.sizes.split(",")]
    wanted = args.instances
    trials_per = max(1, args.trials // wanted)
    tasks = []
    seed = args.seed
    found = 0
    sweep = 0
    # sweep instance seeds until enough strict-eligible instances are found
    while found < wanted and sweep < args.sweep_limit:
        size = sizes[sweep % len(sizes)]
        inst_seed = seed + sweep
        g = generators.triangle_free_process_complement(size, trial_rng(inst_seed))
        cfg = pipeline.PipelineConfig(lambda_policy="clamped", seed=inst_seed, mode="strict")
        pre = pipeline.preconditions(g, cfg)
        if pre.strict_ok:
            tasks.append((size, inst_seed, trials_per, "clamped", 200))
            found += 1
        sweep += 1
    if not tasks:
        # explicit fallback: report the absence, then run advisory structural checks
        records = [
            {
                "record": "mc",
                "suite": "expectation-bound",
                "quantity": "strict-eligible instance search",
                "estimate": 0.0,
                "stderr": 0.0,
                "bound": float(wanted),
                "pass": False,
                "note": "no strict-eligible instance found; advisory structural fallback",
            }
        ]
        g = generators.triangle_free_process_complement(sizes[0], trial_rng(seed))
        cfg = pipeline.PipelineConfig(lambda_policy="clamped", seed=seed, mode="advisory")
        res = pipeline.run_pipeline(g, cfg)
        records.append(
            {
                "record": "mc",
                "suite": "expectation-bound",
                "quantity": "advisory structural run",
                "estimate": float(res.missing_edges),
                "stderr": 0.0,
                "bound": float("nan"),
                "pass": res.missing_edges
                == res.realized_bad_triples + res.realized_bad_quadruples,
            }
        )
        return records
    if args.jobs > 1:
        with get_context("fork").Pool(args.jobs) as pool:
            records = pool.map(_expectation_instance, tasks)
    else:
        records = [_expectation_instance(t) for t in tasks]
    return records


_SUITES = {
    "pairing-marginals": _mc_pairing_marginals,
    "pairing-joint": _mc_pairing_joint,
    "chebyshev": _mc_chebyshev,
    "expectation-bound": _mc_expectation_bound,
}


def _cmd_mc(args) -> int:
    if args.suite not in _SUITES:
        raise UnknownSuite(f"unknown suite {args.suite!r}; choose from {sorted(_SUITES)}")
    records = _SUITES[args.suite](args)
    _emit(records, args.format)
    failed = [r for r in records if r.get("pass") is False]
    return EXIT_OK if not failed else EXIT_INELIGIBLE


def _cmd_gamma(args) -> int:
    z_star, gamma = bounds.gamma_optimize(args.tolerance)
    if args.format == "records":
        _emit(
            [
                {
                    "record": "gamma",
                    "z_star": round(z_star, 6),
                    "gamma": round(gamma, 6),
                    "tolerance": args.tolerance,
                }
            ],
            "records",
        )
    else:
        sys.stdout.write(f"z_star {z_star:.6f}\ngamma {gamma:.6f}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minorforge",
        description="Half-order dense minors of graphs with independence number at most two.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=_default_seed())
        p.add_argument("--format", choices=("text", "records"), default="text")

    p_gen = sub.add_parser("gen", help="generate an alpha<=2 instance")
    common(p_gen)
    p_gen.add_argument("--family", choices=("tfp", "c5blowup", "two_clique"))
    p_gen.add_argument("--named", choices=generators.NAMED_GRAPHS)
    p_gen.add_argument("--n", type=int, help="vertices (tfp)")
    p_gen.add_argument("--t", type=int, help="part size (c5blowup)")
    p_gen.add_argument("--sizes", help="S,T clique sizes (two_clique)")
    p_gen.add_argument("--order", type=int, help="order for --named k_n")
    p_gen.add_argument("--out", help="output path (stdout when omitted)")

    p_an = sub.add_parser("analyze", help="structural report for a graph file")
    common(p_an)
    p_an.add_argument("graph")
    p_an.add_argument("--exact-clique-limit", type=int, default=analysis.EXACT_CLIQUE_LIMIT)

    p_bm = sub.add_parser("build-minor", help="run the construction once")
    common(p_bm)
    p_bm.add_argument("graph")
    p_bm.add_argument("--lambda", dest="lam", default="n23",
                      help="n23, clamped, or an explicit rational")
    p_bm.add_argument("--mode", choices=("strict", "advisory"), default="strict")
    p_bm.add_argument("--trial", type=int, default=0)
    p_bm.add_argument("--max-tries", type=int, default=200)
    p_bm.add_argument("--exact-clique-limit", type=int, default=analysis.EXACT_CLIQUE_LIMIT)
    p_bm.add_argument("--out-h", help="write the minor graph file here")
    p_bm.add_argument("--out-branches", help="write the branch map here")

    p_mc = sub.add_parser("mc", help="Monte Carlo verification suites")
    common(p_mc)
    p_mc.add_argument("--suite", required=True)
    p_mc.add_argument("--trials", type=int, default=100000)
    p_mc.add_argument("--x", type=int, default=10, help="ground-set size for pairing suites")
    p_mc.add_argument("--sizes", default="400", help="instance sizes for expectation-bound")
    p_mc.add_argument("--instances", type=int, default=5)
    p_mc.add_argument("--sweep-limit", type=int, default=50)
    p_mc.add_argument("--jobs", type=int, default=1)

    p_g = sub.add_parser("gamma", help="optimise the density constant")
    common(p_g)
    p_g.add_argument("--tolerance", type=float, default=1e-7)

    return parser


_COMMANDS = {
    "gen": _cmd_gen,
    "analyze": _cmd_analyze,
    "build-minor": _cmd_build_minor,
    "mc": _cmd_mc,
    "gamma": _cmd_gamma,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _EXHAUSTED_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except _INELIGIBLE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INELIGIBLE
    except MinorforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INELIGIBLE


if __name__ == "__main__":
    sys.exit(main())
