"""Command-line entry point: counts, enumeration, sampling, search, sweeps, verification."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Optional, Sequence

from statsmodels.stats.proportion import proportion_confint

from . import complex_core, enumerator, exact_counts, moments, planar_maps
from .moments import sample_complex
from .sphere_search import DEFAULT_NODE_LIMIT, Outcome, SearchBudget, find_spanning_sphere
from .verdict import FAIL, PASS, Check

CSV_HEADER = ["n", "p", "trials", "successes", "timeouts", "phat", "ci_low", "ci_high", "mean_nodes"]
SUITES = ("counts", "appendix", "planar", "moments", "search")


# --- sweeps -------------------------------------------------------------------------------

@dataclass
class SweepConfig:
    n: int
    p_values: list
    trials: int
    seed: int = 0
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: Optional[float] = None

    def validate(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        for p in self.p_values:
            if not 0 <= p <= 1:
                raise ValueError(f"p={p} outside [0, 1]")
        return self

    @classmethod
    def from_multiples(cls, n: int, multiples: Sequence[float], trials: int, **kw) -> "SweepConfig":
        pc = exact_counts.critical_probability(n)
        return cls(n, [min(1.0, f * pc) for f in multiples], trials, **kw)


@dataclass(frozen=True)
class SweepRecord:
    n: int
    p: float
    trials: int
    successes: int
    timeouts: int
    phat: float
    ci_low: float
    ci_high: float
    mean_nodes: float


def _trial(args) -> tuple[str, int]:
    n, p, seed, trial, node_limit, time_limit = args
    c = sample_complex(n, p, seed, trial)
    res = find_spanning_sphere(c, SearchBudget(node_limit, time_limit))
    return res.outcome.value, res.stats.nodes


def _record(n: int, p: float, results: list) -> SweepRecord:
    trials = len(results)
    successes = sum(o == Outcome.FOUND.value for o, _ in results)
    timeouts = sum(o == Outcome.TIMEOUT.value for o, _ in results)
    decided = trials - timeouts
    if decided:
        phat = successes / decided
        lo, hi = proportion_confint(successes, decided, alpha=0.05, method="wilson")
    else:
        phat, lo, hi = float("nan"), 0.0, 1.0
    mean_nodes = sum(nodes for _, nodes in results) / trials
    return SweepRecord(n, p, trials, successes, timeouts, phat, float(lo), float(hi), mean_nodes)


def run_sweep(cfg: SweepConfig, threads: int = 1) -> list[SweepRecord]:
    """One record per p; trial t at every p uses the stream of (seed, t)."""
    cfg.validate()
    jobs = [(cfg.n, p, cfg.seed, t, cfg.node_limit, cfg.time_limit)
            for p in cfg.p_values for t in range(cfg.trials)]
    if threads > 1:
        with Pool(threads) as pool:
            results = pool.map(_trial, jobs, chunksize=max(1, len(jobs) // (4 * threads)))
    else:
        results = [_trial(j) for j in jobs]
    out = []
    for i, p in enumerate(cfg.p_values):
        out.append(_record(cfg.n, p, results[i * cfg.trials:(i + 1) * cfg.trials]))
    return out


def monotonicity_flags(records: Sequence[SweepRecord]) -> list[str]:
    """Adjacent p values where phat drops; notes whether the CIs overlap."""
    flags = []
    for a, b in zip(records, records[1:]):
        if b.p >= a.p and b.phat < a.phat:
            overlap = b.ci_high >= a.ci_low
            flags.append(f"phat drops from p={a.p:.6g} to p={b.p:.6g}"
                         + (" (within CI overlap)" if overlap else " (CIs disjoint)"))
    return flags


def _fmt(x) -> str:
    return format(x, ".10g")


def emit_csv(records: Sequence[SweepRecord], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.n, _fmt(r.p), r.trials, r.successes, r.timeouts,
                         _fmt(r.phat), _fmt(r.ci_low), _fmt(r.ci_high), _fmt(r.mean_nodes)])


def read_csv(text: str) -> list[SweepRecord]:
    rows = list(csv.DictReader(io.StringIO(text)))
    return [SweepRecord(int(r["n"]), float(r["p"]), int(r["trials"]), int(r["successes"]),
                        int(r["timeouts"]), float(r["phat"]), float(r["ci_low"]),
                        float(r["ci_high"]), float(r["mean_nodes"])) for r in rows]


# --- verification suites -------------------------------------------------------------

def suite_counts() -> list[Check]:
    out = []
    for m in (3, 4, 5):
        for k in (0, 1, 2):
            inst = enumerator.PolygonInstance.standard(m, k)
            got = len(enumerator.enumerate_polygon_triangulations(inst))
            want = exact_counts.polygon_triangulation_count(k, m)
            out.append(Check(f"polygon_count[m={m},k={k}]", PASS if got == want else FAIL,
                             f"enumerated={got} formula={want}"))
    for n in (4, 5, 6):
        got = len(enumerator.enumerate_labeled_spheres(n))
        want = exact_counts.labeled_sphere_count(n)
        out.append(Check(f"sphere_count[n={n}]", PASS if got == want else FAIL,
                         f"enumerated={got} formula={want}"))
    bad = [k for k in range(101) if exact_counts.triangle_disc_count(k)
           != exact_counts.polygon_triangulation_count(k, 3)]
    out.append(Check("triangle_formula[k<=100]", PASS if not bad else FAIL,
                     f"mismatches={bad[:3]}"))
    for m1, m2, k in ((3, 3, 0), (3, 4, 0), (4, 3, 0), (3, 3, 1)):
        out.append(enumerator.injection_inequality_check(m1, m2, k))
    return out


def suite_appendix() -> list[Check]:
    out = [exact_counts.banana_convolution_check(200, 2),
           exact_counts.quad_ratio_check(10, 200, 1.0, 1.05),
           exact_counts.tail_sum_check(20)]
    literal, _, _ = exact_counts.composition_bound_check(3, (3, 6), 5, 50, 0)
    positive, _, _ = exact_counts.composition_bound_check(3, (3, 6), 5, 50, 1)
    return out + [literal, positive]


def suite_moments() -> list[Check]:
    out = []
    for n in (4, 5):
        for p in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
            out.append(moments.intersection_identity_check(n, p))
    fm = moments.first_moment(5, Fraction(1, 2))
    out.append(Check("first_moment[n=5,p=1/2]", PASS if fm == Fraction(5, 32) else FAIL, f"value={fm}"))
    poly = moments.exact_containment_polynomial(5)
    alt = moments.exact_containment_polynomial(5, method="complexes")
    out.append(Check("containment_polynomial[n=5]", PASS if poly == alt else FAIL,
                     f"coeffs={poly}"))
    return out


def suite_search(samples: int = 200, seed: int = 0) -> list[Check]:
    out = []
    for n in (4, 5):
        masks = moments.sphere_masks(n)
        tris = moments.lex_triangles(n)
        for p in (0.2, 0.5, 0.8):
            bad = 0
            for t in range(samples):
                c = sample_complex(n, p, seed, t)
                m = sum(1 << i for i, x in enumerate(tris) if x in c.triangles)
                truth = any(s & m == s for s in masks)
                if find_spanning_sphere(c).found != truth:
                    bad += 1
            out.append(Check(f"search_vs_oracle[n={n},p={p}]", PASS if not bad else FAIL,
                             f"samples={samples} disagreements={bad}"))
    return out


def suite_planar() -> list[Check]:
    return planar_maps.run_planar_suite()


SUITE_FUNCS = {"counts": suite_counts, "appendix": suite_appendix, "planar": suite_planar,
               "moments": suite_moments, "search": suite_search}


def run_verify(suites: Sequence[str], out=sys.stdout) -> int:
    for s in suites:
        if s not in SUITE_FUNCS:
            raise ValueError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    ok = True
    for s in suites:
        for check in SUITE_FUNCS[s]():
            print(check.line(), file=out)
            ok = ok and check.passed
    return 0 if ok else 1


# --- argument handling ----------------------------------------------------------------

def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _rational(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if not 0 <= q <= 1:
        raise argparse.ArgumentTypeError("p must lie in [0, 1]")
    return q


def _read_complex(path: str) -> complex_core.Complex2:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return complex_core.parse_complex(text)


def cmd_count(args) -> int:
    if args.what == "polygon":
        print(exact_counts.polygon_triangulation_count(args.k, args.m))
    elif args.what == "spheres":
        print(exact_counts.labeled_sphere_count(args.n))
    else:
        print(exact_counts.normalized_quad_count(args.k))
    return 0


def cmd_enumerate(args) -> int:
    spheres = enumerator.enumerate_labeled_spheres(args.n, allow_large=args.allow_large)
    if args.count_only:
        print(len(spheres))
    else:
        sys.stdout.write("\n".join(complex_core.format_complex(c) for c in spheres))
    return 0


def cmd_sample(args) -> int:
    c = sample_complex(args.n, args.p, args.seed, args.trial)
    sys.stdout.write(complex_core.format_complex(c))
    return 0


def cmd_search(args) -> int:
    c = _read_complex(args.file)
    res = find_spanning_sphere(c, SearchBudget(args.node_limit, args.time_limit))
    print(res.outcome.value)
    if res.found:
        for t in sorted(res.witness):
            print(*t)
    if res.rejected_by:
        print(f"rejected: {res.rejected_by}")
    print(f"nodes={res.stats.nodes} max_depth={res.stats.max_depth} "
          f"wall_time={res.stats.wall_time:.6f}")
    return {Outcome.FOUND: 0, Outcome.NOT_FOUND: 1, Outcome.TIMEOUT: 2}[res.outcome]


def cmd_moments(args) -> int:
    n, p = args.n, args.p
    count = moments.sphere_count(n)
    print(f"n={n}")
    print(f"p={p}")
    print(f"sphere_count_used={count}")
    print(f"expected_count={moments.first_moment(n, p)}")
    if n <= moments.MAX_PAIR_N and p > 0:
        print(f"second_moment_ratio={moments.second_moment_ratio(n, p)}")
    return 0


def cmd_sweep(args) -> int:
    if args.p:
        cfg = SweepConfig(args.n, [float(x) for x in args.p], args.trials, args.seed,
                          args.node_limit, args.time_limit)
    else:
        cfg = SweepConfig.from_multiples(args.n, args.multiples, args.trials, seed=args.seed,
                                         node_limit=args.node_limit, time_limit=args.time_limit)
    records = run_sweep(cfg, args.threads)
    out = open(args.output, "w", encoding="utf-8", newline="") if args.output else sys.stdout
    try:
        if args.format == "csv":
            emit_csv(records, out)
        else:
            for r in records:
                print(f"n={r.n} p={r.p:.6g} trials={r.trials} found={r.successes} "
                      f"timeouts={r.timeouts} phat={r.phat:.4f} "
                      f"ci=[{r.ci_low:.4f},{r.ci_high:.4f}] mean_nodes={r.mean_nodes:.1f}", file=out)
    finally:
        if args.output:
            out.close()
    for flag in monotonicity_flags(records):
        print(f"warning: {flag}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    return run_verify(args.suite or [])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hamsphere",
                                 description="Spanning 2-spheres in random 2-complexes.")
    ap.add_argument("--seed", type=_seed, default=0, help="64-bit master seed (default 0)")
    ap.add_argument("--threads", type=int, default=1, help="worker processes for sweeps")
    ap.add_argument("--format", choices=("csv", "text"), default="csv")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts")
    p.add_argument("what", choices=("polygon", "spheres", "quad"))
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="all labeled sphere triangulations on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--allow-large", action="store_true", help="permit n=8")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="draw one complex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trial", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("search", help="look for a spanning sphere in a complex file")
    p.add_argument("file", help="complex file, or - for stdin")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--time-limit", type=float, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("moments", help="exact first and second moments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_rational, required=True, help="rational such as 1/2")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("sweep", help="Monte Carlo containment frequency")
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--p", nargs="*", type=float, help="explicit probabilities")
    p.add_argument("--multiples", nargs="*", type=float, default=[0.5, 1.0, 2.0],
                   help="multiples of the critical probability (used when --p is absent)")
    p.add_argument("--trials", type=int, default=60)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", choices=SUITES)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, complex_core.ComplexFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
