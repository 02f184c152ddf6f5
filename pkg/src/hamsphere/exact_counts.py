"""Exact triangulation counts and certified checks of the numeric inequalities.

All counting is done with Python integers and :class:`fractions.Fraction`.
Comparisons that involve transcendental constants or half-integer powers go
through outward-rounded interval arithmetic (``mpmath.iv``); a check passes
only when the whole enclosure satisfies the inequality.
"""

from __future__ import annotations

import contextlib
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import mpmath
import numpy as np
from scipy.special import gammaln

from .verdict import FAIL, INCONCLUSIVE, PASS, Check

GAMMA = Fraction(4**4, 3**3)
# exponent constant in the quadrangle asymptotics: 7/2 + 13/144
QUAD_EXP_CONST = Fraction(7, 2) + Fraction(13, 144)
START_PREC = 128
MAX_PREC = 1024


@contextlib.contextmanager
def iv_precision(bits: int):
    old = mpmath.iv.prec
    mpmath.iv.prec = bits
    try:
        yield mpmath.iv
    finally:
        mpmath.iv.prec = old


def _iv_rational(iv, q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


# --- Tutte counts --------------------------------------------------------------

@lru_cache(maxsize=None)
def polygon_triangulation_count(k: int, m: int) -> int:
    """Triangulations of an m-gon with k labeled interior vertices.

    ``2 (2m-3)! (2m+4k-5)! / ((m-1)! (m-3)! (2m+3k-3)!)``
    """
    if m < 3:
        raise ValueError(f"boundary length must be >= 3, got {m}")
    if k < 0:
        raise ValueError(f"interior count must be >= 0, got {k}")
    f = math.factorial
    num = 2 * f(2 * m - 3) * f(2 * m + 4 * k - 5)
    den = f(m - 1) * f(m - 3) * f(2 * m + 3 * k - 3)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral count at k={k}, m={m}")
    return q


def triangle_disc_count(k: int) -> int:
    """Specialisation to m=3: ``6 (4k+1)! / (3k+3)!``."""
    q, r = divmod(6 * math.factorial(4 * k + 1), math.factorial(3 * k + 3))
    assert r == 0
    return q


def normalized_quad_count(k: int) -> Fraction:
    """``T_{k,4} / k!`` as an exact rational."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Fraction(polygon_triangulation_count(k, 4), math.factorial(k))


def labeled_sphere_count(n: int) -> int:
    """Number of 2-spheres on the labeled vertex set ``range(n)``.

    Removing one of the ``2n-4`` triangles of a sphere leaves a triangulated
    triangle with ``n-3`` labeled interior points, and every such disc closes
    up in exactly one way, so ``(2n-4) |S_n| = C(n,3) T_{n-3,3}``. The brute
    force enumerator confirms this for n = 4..7.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    q, r = divmod(math.comb(n, 3) * triangle_disc_count(n - 3), 2 * n - 4)
    assert r == 0
    return q


def critical_probability(n: int) -> float:
    """``sqrt(e / (gamma n))``."""
    return math.sqrt(math.e / (float(GAMMA) * n))


def threshold_probability(n: int, epsilon: float) -> tuple[float, float]:
    """The window ``((1-eps) p_c, (1+eps) p_c)`` around the critical probability."""
    if n < 4:
        raise ValueError("need n >= 4")
    if not 0 <= epsilon < 1:
        raise ValueError("need 0 <= epsilon < 1")
    pc = critical_probability(n)
    return (1 - epsilon) * pc, (1 + epsilon) * pc


def asymptotic_normalizer(n: int, prec: int = 128):
    """``n! gamma^n n^(-7/2)`` as an mpmath float."""
    if n < 4:
        raise ValueError("need n >= 4")
    with mpmath.workprec(prec):
        g = mpmath.mpf(GAMMA.numerator) / GAMMA.denominator
        return mpmath.factorial(n) * g**n * mpmath.mpf(n) ** mpmath.mpf(-3.5)


def sphere_count_ratios(n_values, prec: int = 128) -> list[tuple[int, int, object]]:
    """``(n, |S_n|, |S_n| / normalizer(n))`` for each n."""
    out = []
    for n in n_values:
        count = labeled_sphere_count(n)
        with mpmath.workprec(prec):
            out.append((n, count, mpmath.mpf(count) / asymptotic_normalizer(n, prec)))
    return out


# --- quadrangle convolution bound ------------------------------------------------

def _convolve_fractions(a: list[Fraction], b: list[Fraction], length: int) -> list[Fraction]:
    return [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(length)]


def banana_convolution_lhs(k_max: int, r: int) -> list[Fraction]:
    """``sum over k_1+..+k_r = k of prod T'_{k_i,4}`` for k = 0..k_max."""
    base = [normalized_quad_count(k) for k in range(k_max + 1)]
    acc = base
    for _ in range(r - 1):
        acc = _convolve_fractions(acc, base, k_max + 1)
    return acc


def banana_convolution_check(k_max: int, r: int = 2) -> Check:
    """Exact check of ``LHS_r(k) <= 8^(r-1) T'_{k,4}`` for every k <= k_max."""
    if r < 2 or k_max < 0:
        raise ValueError("need r >= 2 and k_max >= 0")
    lhs = banana_convolution_lhs(k_max, r)
    factor = 8 ** (r - 1)
    worst = Fraction(0)
    worst_k = 0
    for k, value in enumerate(lhs):
        bound = factor * normalized_quad_count(k)
        if value > bound:
            return Check(f"banana_convolution[r={r}]", FAIL, f"k={k} lhs={value} bound={bound}")
        ratio = value / normalized_quad_count(k)
        if ratio > worst:
            worst, worst_k = ratio, k
    return Check(f"banana_convolution[r={r},k<={k_max}]", PASS,
                 f"max lhs/T'={float(worst):.6f} at k={worst_k} (bound {factor})")


# --- quadrangle asymptotics ------------------------------------------------------

def quad_asymptotic_constant(iv):
    """``Z = 5120 / (243 sqrt(6 pi))`` in the given interval context."""
    return iv.mpf(5120) / (iv.mpf(243) * iv.sqrt(6 * iv.pi))


def quad_asymptotic_ratio(k: int, prec: int = START_PREC):
    """Enclosure of ``T'_{k,4} / (Z gamma^k k^(-5/2) exp(-(7/2+13/144)/k))``."""
    if k < 1:
        raise ValueError("need k >= 1")
    with iv_precision(prec) as iv:
        tq = _iv_rational(iv, normalized_quad_count(k))
        g = _iv_rational(iv, GAMMA)
        c = _iv_rational(iv, QUAD_EXP_CONST)
        kk = iv.mpf(k)
        approx = quad_asymptotic_constant(iv) * g**k / (kk**2 * iv.sqrt(kk)) * iv.exp(-c / kk)
        return tq / approx


def _interval_verdict(compute, lower, upper) -> tuple[str, object]:
    """Decide ``lower < x < upper`` with precision doubling up to MAX_PREC."""
    prec = START_PREC
    while True:
        x = compute(prec)
        if x.a > lower and x.b < upper:
            return PASS, x
        if x.b <= lower or x.a >= upper:
            return FAIL, x
        if prec >= MAX_PREC:
            return INCONCLUSIVE, x
        prec *= 2


def quad_ratio_check(k_min: int = 10, k_max: int = 200,
                     lower: float = 1.0, upper: float = 1.05) -> Check:
    worst_lo, worst_hi = None, None
    for k in range(k_min, k_max + 1):
        status, x = _interval_verdict(lambda p, k=k: quad_asymptotic_ratio(k, p), lower, upper)
        if status != PASS:
            return Check("quad_asymptotic_ratio", status, f"k={k} ratio={x}")
        lo, hi = float(x.a), float(x.b)
        worst_lo = lo if worst_lo is None else min(worst_lo, lo)
        worst_hi = hi if worst_hi is None else max(worst_hi, hi)
    return Check(f"quad_asymptotic_ratio[{k_min}..{k_max}]", PASS,
                 f"ratio in [{worst_lo:.6f}, {worst_hi:.6f}]")


# --- tail sum -------------------------------------------------------------------

def tail_sum(a_max: int = 20) -> Fraction:
    """``sum_{a=1}^{a_max} T'_{a,4} / gamma^a`` exactly."""
    return sum((normalized_quad_count(a) / GAMMA**a for a in range(1, a_max + 1)), Fraction(0))


def tail_sum_check(a_max: int = 20, bound: Fraction = Fraction(5, 4)) -> Check:
    s = tail_sum(a_max)
    status = PASS if s < bound else FAIL
    return Check(f"tail_sum[a<={a_max}]", status, f"sum={float(s):.12f} < {float(bound)}")


# --- inequality sweeps ------------------------------------------------------------

@dataclass
class SweepConfig:
    grid: int = 500
    deltas: tuple = (0.1, 0.5, 1.0)
    epsilons: tuple = (0.1, 0.5)
    # composition-sum grids
    w_max: int = 3
    m_range: tuple = (3, 6)
    l_max: int = 5
    k_max: int = 50
    k_min: int = 0


@dataclass
class SweepReport:
    binom_constants: dict = field(default_factory=dict)       # delta -> (C at grid/2, C at grid)
    composition_check: Optional[Check] = None
    composition_failures: list = field(default_factory=list)
    composition_cases: int = 0
    no_division_constants: dict = field(default_factory=dict)  # delta -> C, plus "c6"
    one_minus_eps_constants: dict = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = []
        for d, (half, full) in sorted(self.binom_constants.items()):
            out.append(f"binomial_estimate delta={d} C_min(grid/2)={half:.6f} C_min(grid)={full:.6f}")
        if self.composition_check:
            out.append(self.composition_check.line())
        for key, v in sorted(self.no_division_constants.items(), key=lambda kv: str(kv[0])):
            out.append(f"no_division {key} empirical_constant={v:.6f}")
        for e, v in sorted(self.one_minus_eps_constants.items()):
            out.append(f"one_minus_eps eps={e} empirical_constant={v:.6f}")
        return out


def binomial_estimate_constant(delta: float, grid: int) -> float:
    """Smallest C with ``C(r+m, m) <= C^m (1+delta)^r`` for 0<=r<=grid, 1<=m<=grid."""
    r = np.arange(0, grid + 1, dtype=float)[:, None]
    m = np.arange(1, grid + 1, dtype=float)[None, :]
    log_binom = gammaln(r + m + 1) - gammaln(r + 1) - gammaln(m + 1)
    log_c = (log_binom - r * math.log1p(delta)) / m
    return float(np.exp(log_c.max()))


@dataclass(frozen=True)
class CompositionCase:
    """Parameters of one composition-sum inequality instance."""

    ms: tuple
    ls: tuple   # Fractions; only ls[0] may be a half-integer

    @property
    def w(self) -> int:
        return len(self.ms)

    @property
    def a(self) -> int:
        return sum(1 for x in self.ls if x >= 4)

    @property
    def b(self) -> int:
        return sum(1 for x in self.ls if x == 3)

    def rhs_base(self, k: int) -> int:
        return k + sum(self.ms[: self.a])

    def rhs_exponent(self) -> Fraction:
        return self.ls[0] - Fraction(7, 2) + sum(
            (x - Fraction(5, 2) for x in self.ls[1: self.a + self.b]), Fraction(0))

    def exponents(self) -> list[Fraction]:
        return [x - Fraction(7, 2) for x in self.ls]


def composition_cases(w_max: int = 3, m_range=(3, 6), l_max: int = 5):
    """All parameter tuples satisfying the hypotheses of the composition bound."""
    ms_values = range(m_range[0], m_range[1] + 1)
    first_ls = [Fraction(x) for x in range(1, l_max + 1)]
    first_ls += [Fraction(2 * x + 1, 2) for x in range(3, l_max) if Fraction(2 * x + 1, 2) <= l_max]
    for w in range(1, w_max + 1):
        for l1 in sorted(set(first_ls)):
            rest_options = [Fraction(x) for x in range(1, l_max + 1) if x <= l1]
            for rest in itertools.combinations_with_replacement(sorted(rest_options, reverse=True), w - 1):
                ls = (l1,) + tuple(rest)
                for ms in itertools.product(ms_values, repeat=w):
                    same = [i for i in range(w) if ls[i] == l1]
                    if l1 >= 4 and len(same) > 1 and any(ms[0] < ms[i] for i in same):
                        continue
                    if l1 < 4 and any(ms[0] > ms[i] for i in same):
                        continue
                    yield CompositionCase(ms, ls)


def _pow_exact_zero(base: int, exponent: Fraction) -> Optional[float]:
    if base != 0:
        return None
    if exponent > 0:
        return 0.0
    if exponent == 0:
        return 1.0
    return math.inf


def _composition_lhs_float(case: CompositionCase, k_max: int) -> np.ndarray:
    ks = np.arange(k_max + 1, dtype=float)
    acc = None
    for m_i, e_i in zip(case.ms, case.exponents()):
        seq = (ks + m_i) ** float(e_i)
        acc = seq if acc is None else np.convolve(acc, seq)[: k_max + 1]
    return acc


def _composition_interval(case: CompositionCase, k: int, prec: int):
    with iv_precision(prec) as iv:
        seqs = []
        for m_i, e_i in zip(case.ms, case.exponents()):
            seqs.append([iv.mpf(j + m_i) ** _iv_rational(iv, e_i) for j in range(k + 1)])
        acc = seqs[0]
        for seq in seqs[1:]:
            acc = [sum((acc[i] * seq[j - i] for i in range(j + 1)), iv.mpf(0)) for j in range(k + 1)]
        lhs = acc[k]
        base = case.rhs_base(k)
        rhs = iv.mpf(16) ** (case.w - 1) * iv.mpf(base) ** _iv_rational(iv, case.rhs_exponent())
        return lhs, rhs


# float filter: every term is a product/sum of positive doubles with O(w + k)
# roundings, so a relative gap of 1e-9 is far outside accumulated error
_FILTER_REL = 1e-9


def composition_bound_holds(case: CompositionCase, k: int, lhs_float: float) -> str:
    """PASS / FAIL / INCONCLUSIVE for one instance of the composition bound."""
    exponent = case.rhs_exponent()
    base = case.rhs_base(k)
    if case.w == 1 and (case.a == 1 or exponent == 0):
        # the single summand is the bound itself
        return PASS
    zero = _pow_exact_zero(base, exponent)
    factor = 16.0 ** (case.w - 1)
    if zero is not None:
        if zero == math.inf:
            return PASS
        # lhs is a finite positive sum
        return PASS if lhs_float * (1 + _FILTER_REL) <= factor * zero else FAIL
    rhs_float = factor * float(base) ** float(exponent)
    if lhs_float * (1 + _FILTER_REL) < rhs_float * (1 - _FILTER_REL):
        return PASS
    if lhs_float * (1 - _FILTER_REL) > rhs_float * (1 + _FILTER_REL):
        return FAIL
    prec = START_PREC
    while prec <= MAX_PREC:
        lhs, rhs = _composition_interval(case, k, prec)
        if lhs.b <= rhs.a:
            return PASS
        if lhs.a > rhs.b:
            return FAIL
        prec *= 2
    return INCONCLUSIVE


def composition_bound_check(w_max: int = 3, m_range=(3, 6), l_max: int = 5,
                            k_max: int = 50, k_min: int = 0) -> tuple[Check, list, int]:
    """Sweep the composition bound with constant ``16^(w-1)`` over a grid.

    Returns the verdict, the list of failing ``(case, k, status)`` and the
    number of (case, k) instances examined.
    """
    failures = []
    count = 0
    for case in composition_cases(w_max, m_range, l_max):
        lhs = _composition_lhs_float(case, k_max)
        for k in range(k_min, k_max + 1):
            count += 1
            status = composition_bound_holds(case, k, float(lhs[k]))
            if status != PASS:
                failures.append((case, k, status))
    name = f"composition_bound[w<={w_max},m<={m_range[1]},l<={l_max},{k_min}<=k<={k_max}]"
    if not failures:
        return Check(name, PASS, f"{count} instances"), failures, count
    worst = FAIL if any(s == FAIL for _, _, s in failures) else INCONCLUSIVE
    case, k, _ = failures[0]
    ls = tuple(str(x) for x in case.ls)
    return (Check(name, worst, f"{len(failures)} of {count} fail; first m={case.ms} l={ls} k={k}"),
            failures, count)


def no_division_constants(deltas, w_max: int = 3, m_range=(3, 6), l_max: int = 3,
                          k_max: int = 50) -> dict:
    """Empirical constants for the two composition-sum estimates with l_i <= 3 for i >= 2.

    For each delta reports max over the grid of
    ``(L / ((1+delta)^k (k+m_1)^(l_1-7/2)))^(1/sum m)``, and under key "c6"
    the analogous constant for ``(k+m_1)^(l_1-7/2+a/2)`` (a = number of l_i = 3).
    """
    out = {f"delta={d}": 0.0 for d in deltas}
    out["c6"] = 0.0
    ks = np.arange(k_max + 1, dtype=float)
    ms_values = range(m_range[0], m_range[1] + 1)
    for w in range(1, w_max + 1):
        for l1 in range(1, l_max + 3):
            for rest in itertools.product(range(1, min(l_max, 3) + 1), repeat=w - 1):
                ls = (l1,) + rest
                a3 = sum(1 for x in ls if x == 3)
                for ms in itertools.product(ms_values, repeat=w):
                    acc = None
                    for m_i, l_i in zip(ms, ls):
                        seq = (ks + m_i) ** (l_i - 3.5)
                        acc = seq if acc is None else np.convolve(acc, seq)[: k_max + 1]
                    total_m = sum(ms)
                    log_l = np.log(acc)
                    base = np.log(ks + ms[0])
                    for d in deltas:
                        logc = (log_l - ks * math.log1p(d) - (l1 - 3.5) * base) / total_m
                        out[f"delta={d}"] = max(out[f"delta={d}"], float(np.exp(logc.max())))
                    logc6 = (log_l - (l1 - 3.5 + a3 / 2) * base) / total_m
                    out["c6"] = max(out["c6"], float(np.exp(logc6.max())))
    return out


def one_minus_eps_constant(epsilon: float, grid: int = 500, k_max: Optional[int] = None) -> float:
    """Smallest C with ``(1-e)^k (k+x)^l <= (1-e)^(k/2) C^m m^l`` on the grid.

    Grid: 3 <= m <= grid, -10 <= l <= m, 3 <= x <= m, 1 <= k <= k_max.
    For fixed (m, l, k) the worst x is m when l >= 0 and 3 when l < 0.
    """
    k_max = grid if k_max is None else k_max
    ks = np.arange(1, k_max + 1, dtype=float)[None, :]
    log1m = math.log1p(-epsilon)
    best = 0.0
    for m in range(3, grid + 1):
        ls = np.arange(-10, m + 1, dtype=float)[:, None]
        x = np.where(ls >= 0, m, 3).astype(float)
        log_lhs = (ks / 2) * log1m + ls * np.log(ks + x)
        logc = (log_lhs - ls * math.log(m)) / m
        best = max(best, float(np.exp(logc.max())))
    return best


def inequality_sweeps(config: Optional[SweepConfig] = None) -> SweepReport:
    cfg = config or SweepConfig()
    report = SweepReport()
    for d in cfg.deltas:
        report.binom_constants[d] = (binomial_estimate_constant(d, cfg.grid // 2),
                                     binomial_estimate_constant(d, cfg.grid))
    check, failures, count = composition_bound_check(
        cfg.w_max, cfg.m_range, cfg.l_max, cfg.k_max, cfg.k_min)
    report.composition_check = check
    report.composition_failures = failures
    report.composition_cases = count
    report.no_division_constants = no_division_constants(
        cfg.deltas, cfg.w_max, cfg.m_range, 3, cfg.k_max)
    for e in cfg.epsilons:
        report.one_minus_eps_constants[e] = one_minus_eps_constant(e, cfg.grid)
    return report
