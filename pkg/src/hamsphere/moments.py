"""Linial-Meshulam sampling and exact first/second moments at small n.

Randomness is counter based: trial ``i`` under master seed ``s`` uses the
64-bit stream seed ``mix64(s ^ mix64(i + GOLDEN))`` and triangle ``j`` (in
lexicographic order) draws ``mix64(stream + (j + 1) * GOLDEN)``. ``mix64`` is
the SplitMix64 finalizer, a bijection on 64-bit words. A triangle is present
iff its draw is below ``floor(p * 2**64)``.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional

import numpy as np

from .complex_core import Complex2
from .enumerator import enumerate_labeled_spheres
from .exact_counts import labeled_sphere_count
from .verdict import FAIL, PASS, Check

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
MAX_PAIR_N = 7


def mix64(x: int) -> int:
    x &= MASK64
    x = ((x ^ (x >> 30)) * _M1) & MASK64
    x = ((x ^ (x >> 27)) * _M2) & MASK64
    return x ^ (x >> 31)


def _mix64_np(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint64, copy=True)
    with np.errstate(over="ignore"):
        x ^= x >> np.uint64(30)
        x *= np.uint64(_M1)
        x ^= x >> np.uint64(27)
        x *= np.uint64(_M2)
        x ^= x >> np.uint64(31)
    return x


def trial_seed(master: int, trial: int) -> int:
    if not 0 <= master <= MASK64:
        raise ValueError("master seed must be a 64-bit unsigned integer")
    return mix64(master ^ mix64(trial + GOLDEN))


def probability_threshold(p) -> int:
    """``floor(p * 2**64)`` computed exactly from the binary value of p."""
    q = Fraction(p)
    if not 0 <= q <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return math.floor(q * (1 << 64))


def _draws(stream: int, count: int) -> np.ndarray:
    with np.errstate(over="ignore"):
        idx = np.arange(1, count + 1, dtype=np.uint64) * np.uint64(GOLDEN)
        return _mix64_np(idx + np.uint64(stream))


def _include_mask(draws: np.ndarray, threshold: int) -> np.ndarray:
    if threshold >= 1 << 64:
        return np.ones(draws.shape, dtype=bool)
    return draws < np.uint64(threshold)


@lru_cache(maxsize=None)
def lex_triangles(n: int) -> tuple:
    return tuple(combinations(range(n), 3))


def sample_complex(n: int, p, master: int = 0, trial: int = 0) -> Complex2:
    """Draw ``X_2(n, p)``: each triangle independently with probability p."""
    if n < 1:
        raise ValueError("need n >= 1")
    threshold = probability_threshold(p)
    tris = lex_triangles(n)
    keep = _include_mask(_draws(trial_seed(master, trial), len(tris)), threshold)
    return Complex2(n, frozenset(t for t, k in zip(tris, keep) if k))


def sample_masks(n: int, p, master: int, trials: int, first_trial: int = 0) -> np.ndarray:
    """Boolean matrix (trials x C(n,3)) of sampled complexes, same stream as sample_complex."""
    threshold = probability_threshold(p)
    count = math.comb(n, 3)
    streams = np.array([trial_seed(master, first_trial + i) for i in range(trials)], dtype=np.uint64)
    with np.errstate(over="ignore"):
        idx = np.arange(1, count + 1, dtype=np.uint64) * np.uint64(GOLDEN)
        draws = _mix64_np(streams[:, None] + idx[None, :])
    return _include_mask(draws, threshold)


# --- exact moments ------------------------------------------------------------------

def _as_fraction(p) -> Fraction:
    q = Fraction(p)
    if not 0 <= q <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return q


@lru_cache(maxsize=None)
def sphere_masks(n: int) -> tuple:
    """Spheres on n labeled vertices as bitmasks over ``lex_triangles(n)``."""
    index = {t: i for i, t in enumerate(lex_triangles(n))}
    out = []
    for c in enumerate_labeled_spheres(n):
        mask = 0
        for t in c.triangles:
            mask |= 1 << index[t]
        out.append(mask)
    return tuple(out)


def sphere_count(n: int) -> int:
    """|S_n| from the oracle where it runs, else from the closed formula."""
    if n <= MAX_PAIR_N:
        return len(sphere_masks(n))
    return labeled_sphere_count(n)


def first_moment(n: int, p) -> Fraction:
    """``E[T] = |S_n| p^(2n-4)`` exactly."""
    if n < 4:
        raise ValueError("need n >= 4")
    q = _as_fraction(p)
    return sphere_count(n) * q ** (2 * n - 4)


@lru_cache(maxsize=None)
def intersection_profile(n: int) -> dict:
    """Histogram ``{i: #ordered pairs (s, s') with |s & s'| = i}``."""
    if not 4 <= n <= MAX_PAIR_N:
        raise ValueError(f"pair enumeration supports 4 <= n <= {MAX_PAIR_N}")
    masks = np.array(sphere_masks(n), dtype=np.uint64)
    hist: Counter = Counter()
    for s in masks:
        common = np.bitwise_count(masks & s) if hasattr(np, "bitwise_count") else \
            np.array([bin(int(x)).count("1") for x in masks & s])
        values, counts = np.unique(common, return_counts=True)
        for v, c in zip(values.tolist(), counts.tolist()):
            hist[v] += c
    return dict(sorted(hist.items()))


def second_moment_ratio(n: int, p) -> Fraction:
    """``(1/|S_n|^2) sum over ordered pairs of p^(-|s & s'|)``."""
    q = _as_fraction(p)
    if q == 0:
        raise ValueError("p must be positive")
    profile = intersection_profile(n)
    total = sum(profile.values())
    return sum((Fraction(c) / q**i for i, c in profile.items()), Fraction(0)) / total


def intersection_identity_sides(n: int, p) -> tuple[Fraction, Fraction]:
    """Both sides of the exact-vs-containing intersection identity.

    Left: group ordered pairs by the exact intersection F and weight by
    ``p^-|F|``. Right: for every pair enumerate all subsets F of the
    intersection and weight by ``(1/p - 1)^|F|``.
    """
    if not 4 <= n <= 6:
        raise ValueError("identity check supports 4 <= n <= 6")
    q = _as_fraction(p)
    if q == 0:
        raise ValueError("p must be positive")
    masks = sphere_masks(n)
    by_exact: Counter = Counter()
    by_subset: Counter = Counter()
    for s in masks:
        for t in masks:
            inter = s & t
            by_exact[inter] += 1
            # every submask F of the intersection
            sub = inter
            while True:
                by_subset[sub] += 1
                if sub == 0:
                    break
                sub = (sub - 1) & inter
    left = sum((c / q ** bin(f).count("1") for f, c in by_exact.items()), Fraction(0))
    w = 1 / q - 1
    right = sum((c * w ** bin(f).count("1") for f, c in by_subset.items()), Fraction(0))
    return left, right


def intersection_identity_check(n: int, p) -> Check:
    left, right = intersection_identity_sides(n, p)
    status = PASS if left == right else FAIL
    return Check(f"intersection_identity[n={n},p={Fraction(p)}]", status, f"left={left} right={right}")


# --- containment polynomial -----------------------------------------------------------

def _poly_add(acc: dict, coeffs: dict, sign: int = 1):
    for d, c in coeffs.items():
        acc[d] = acc.get(d, 0) + sign * c


def exact_containment_polynomial(n: int, method: Optional[str] = None,
                                 allow_n6: bool = False) -> list[int]:
    """Integer coefficients (low degree first) of Pr[X_2(n,p) contains a sphere].

    ``method="inclusion_exclusion"`` sums over nonempty families of spheres;
    ``method="complexes"`` sums over all 2^C(n,3) complexes. For n <= 5 the
    default is inclusion-exclusion, for n = 6 the complex sum.
    """
    if n <= 3:
        return [0]
    cap = 6 if allow_n6 else 5
    if n > cap:
        raise ValueError(f"containment polynomial supports n <= {cap}")
    if method is None:
        method = "inclusion_exclusion" if n <= 5 else "complexes"
    masks = sphere_masks(n)
    coeffs: dict = {}
    if method == "inclusion_exclusion":
        if len(masks) > 20:
            raise ValueError("inclusion-exclusion is limited to 20 spheres")
        k = len(masks)
        # union sizes over all nonempty subfamilies, by bit-DP
        unions = [0] * (1 << k)
        for fam in range(1, 1 << k):
            low = fam & -fam
            unions[fam] = unions[fam ^ low] | masks[low.bit_length() - 1]
            sign = 1 if bin(fam).count("1") % 2 else -1
            d = bin(unions[fam]).count("1")
            coeffs[d] = coeffs.get(d, 0) + sign
    elif method == "complexes":
        total = math.comb(n, 3)
        full = np.arange(1 << total, dtype=np.uint64)
        hit = np.zeros(full.shape, dtype=bool)
        for s in masks:
            hit |= (full & np.uint64(s)) == np.uint64(s)
        sizes = np.array([bin(i).count("1") for i in range(1 << total)]) if total <= 16 else \
            np.bitwise_count(full).astype(int)
        by_size = np.bincount(sizes[hit], minlength=total + 1)
        # sum_j N_j p^j (1-p)^(total-j)
        for j, count in enumerate(by_size.tolist()):
            if not count:
                continue
            for i in range(total - j + 1):
                c = count * math.comb(total - j, i) * (-1) ** i
                coeffs[j + i] = coeffs.get(j + i, 0) + c
    else:
        raise ValueError(f"unknown method {method!r}")
    degree = max((d for d, c in coeffs.items() if c), default=0)
    return [coeffs.get(d, 0) for d in range(degree + 1)]


def eval_poly(coeffs: list[int], p) -> Fraction:
    q = Fraction(p)
    return sum((c * q**i for i, c in enumerate(coeffs)), Fraction(0))


def contained_sphere_counts(n: int, p, master: int, trials: int) -> np.ndarray:
    """Number of spanning spheres contained in each of ``trials`` samples."""
    masks = sample_masks(n, p, master, trials)
    sphere_rows = np.zeros((len(sphere_masks(n)), masks.shape[1]), dtype=bool)
    for r, s in enumerate(sphere_masks(n)):
        for j in range(masks.shape[1]):
            sphere_rows[r, j] = bool(s >> j & 1)
    need = sphere_rows.sum(axis=1)
    hits = masks.astype(np.int32) @ sphere_rows.T.astype(np.int32)
    return (hits == need[None, :]).sum(axis=1)
