"""Brute-force oracles for small triangulation counts.

Three independent generators live here:

* filtered subset search over all ``(2n-4)``-subsets of triangles (spheres, n <= 6);
* exhaustive completion of a fixed partial complex to a sphere, which serves
  spheres at n = 7 (and 8 on request), discs (one coned boundary) and annuli
  (two coned boundaries);
* the root-edge decomposition of polygon triangulations.

The last two are cross-checked against each other and against the closed
formula in :mod:`hamsphere.exact_counts`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .complex_core import Complex2, Triangle, edges_of, is_spanning_sphere, tri
from .exact_counts import polygon_triangulation_count
from .verdict import FAIL, PASS, Check

MAX_SPHERE_N = 7
MAX_SPHERE_N_LARGE = 8


@dataclass(frozen=True)
class PolygonInstance:
    """Boundary cycle ``boundary`` plus labeled interior vertices ``interior``."""

    boundary: tuple
    interior: tuple = ()

    def __post_init__(self):
        if len(self.boundary) < 3:
            raise ValueError("polygon needs at least 3 boundary vertices")
        if len(set(self.boundary) | set(self.interior)) != len(self.boundary) + len(self.interior):
            raise ValueError("polygon vertices must be distinct")

    @classmethod
    def standard(cls, m: int, k: int) -> "PolygonInstance":
        return cls(tuple(range(m)), tuple(range(m, m + k)))

    @property
    def n_vertices(self) -> int:
        return len(self.boundary) + len(self.interior)


@dataclass(frozen=True)
class HoledSphereInstance:
    hole_lengths: tuple
    k: int

    def __post_init__(self):
        if any(m < 3 for m in self.hole_lengths):
            raise ValueError("every hole needs length >= 3")


# --- sphere enumeration -----------------------------------------------------------

def _subset_spheres(n: int) -> list[frozenset]:
    all_tris = list(combinations(range(n), 3))
    need = 2 * n - 4
    out = []
    degree: dict = {}

    def rec(start: int, chosen: list):
        if len(chosen) == need:
            if all(d == 2 for d in degree.values()) and is_spanning_sphere(n, chosen):
                out.append(frozenset(chosen))
            return
        for i in range(start, len(all_tris) - (need - len(chosen)) + 1):
            t = all_tris[i]
            es = edges_of(t)
            if any(degree.get(e, 0) >= 2 for e in es):
                continue
            for e in es:
                degree[e] = degree.get(e, 0) + 1
            chosen.append(t)
            rec(i + 1, chosen)
            chosen.pop()
            for e in es:
                degree[e] -= 1
                if not degree[e]:
                    del degree[e]

    rec(0, [])
    return out


class _Completer:
    """Enumerate every sphere containing a seed triangle set.

    The search repeatedly picks an edge lying in exactly one chosen triangle
    and branches over the possible second triangle on it. In any target
    sphere that triangle is unique, so each completion is produced once.
    """

    def __init__(self, n: int, candidates: Iterable[Triangle], seed: Iterable[Triangle],
                 forbidden: Iterable[Triangle] = ()):
        self.n = n
        self.forbidden = set(forbidden)
        self.by_edge: dict = {}
        for t in candidates:
            if t in self.forbidden:
                continue
            for e in edges_of(t):
                self.by_edge.setdefault(e, []).append(t)
        self.seed = list(seed)
        self.target = 2 * n - 4

    def run(self) -> Iterator[frozenset]:
        chosen: set = set()
        degree: dict = {}
        for t in self.seed:
            if not self._add(t, chosen, degree):
                return
        yield from self._rec(chosen, degree)

    def _add(self, t, chosen, degree) -> bool:
        es = edges_of(t)
        if t in chosen or any(degree.get(e, 0) >= 2 for e in es):
            return False
        chosen.add(t)
        for e in es:
            degree[e] = degree.get(e, 0) + 1
        return True

    def _remove(self, t, chosen, degree):
        chosen.discard(t)
        for e in edges_of(t):
            degree[e] -= 1
            if not degree[e]:
                del degree[e]

    def _closed_vertex(self, v, degree) -> bool:
        incident = [d for e, d in degree.items() if v in e]
        return bool(incident) and all(d == 2 for d in incident)

    def _options(self, e, chosen, degree):
        out = []
        for t in self.by_edge.get(e, ()):
            if t in chosen:
                continue
            if any(degree.get(f, 0) >= 2 for f in edges_of(t)):
                continue
            (c,) = set(t) - set(e)
            if self._closed_vertex(c, degree):
                continue
            out.append(t)
        return out

    def _rec(self, chosen, degree):
        if len(chosen) > self.target:
            return
        open_edges = [e for e, d in degree.items() if d == 1]
        if not open_edges:
            if len(chosen) == self.target and is_spanning_sphere(self.n, chosen):
                yield frozenset(chosen)
            return
        best = None
        for e in sorted(open_edges):
            opts = self._options(e, chosen, degree)
            if best is None or len(opts) < len(best):
                best = opts
                if not opts:
                    return
        for t in best:
            self._add(t, chosen, degree)
            yield from self._rec(chosen, degree)
            self._remove(t, chosen, degree)


def _completion_spheres(n: int) -> list[frozenset]:
    all_tris = list(combinations(range(n), 3))
    roots = [t for t in all_tris if 0 in t]
    out = []
    for i, root in enumerate(roots):
        # root = smallest triangle at vertex 0 in the sphere
        comp = _Completer(n, all_tris, [root], forbidden=roots[:i])
        out.extend(comp.run())
    return out


def enumerate_labeled_spheres(n: int, allow_large: bool = False,
                              method: Optional[str] = None) -> list[Complex2]:
    """Every 2-sphere on the labeled vertex set ``range(n)``.

    ``method`` is ``"subset"`` (default for n <= 6) or ``"completion"``
    (default for n >= 7).
    """
    cap = MAX_SPHERE_N_LARGE if allow_large else MAX_SPHERE_N
    if not 4 <= n <= cap:
        raise ValueError(f"n must be in [4, {cap}], got {n}")
    if method is None:
        method = "subset" if n <= 6 else "completion"
    if method == "subset":
        if n > 6:
            raise ValueError("subset search is limited to n <= 6")
        sets = _subset_spheres(n)
    elif method == "completion":
        sets = _completion_spheres(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted((Complex2(n, s) for s in sets), key=lambda c: c.sorted_triangles())


# --- polygon triangulations ---------------------------------------------------------

def _root_decompositions(boundary: tuple, interior: frozenset) -> Iterator[list]:
    """Planar triangulations by the triangle on the root edge (may repeat edges)."""
    size = len(boundary)
    if size == 2:
        if not interior:
            yield []
        return
    if size == 3 and not interior:
        yield [boundary]
        return
    a, b = boundary[0], boundary[1]
    for j in range(2, size):
        c = boundary[j]
        left = boundary[1: j + 1]          # b .. c
        right = boundary[j:] + (a,)        # c .. a
        pool = sorted(interior)
        for r in range(len(pool) + 1):
            for sub in combinations(pool, r):
                sub = frozenset(sub)
                if len(left) == 2 and sub:
                    continue
                if len(right) == 2 and sub != interior:
                    continue
                for lt in _root_decompositions(left, sub):
                    for rt in _root_decompositions(right, interior - sub):
                        yield [(a, b, c)] + lt + rt
    for x in sorted(interior):
        grown = (a, x) + boundary[1:]
        for rest in _root_decompositions(grown, interior - {x}):
            yield [(a, b, x)] + rest


def _relabel_polygon(inst: PolygonInstance):
    order = list(inst.boundary) + list(inst.interior)
    return {v: i for i, v in enumerate(order)}, order


def is_polygon_triangulation(inst: PolygonInstance, triangles: Iterable[Triangle]) -> bool:
    """Simplicial disc with boundary cycle ``inst.boundary`` using every interior vertex."""
    fwd, _ = _relabel_polygon(inst)
    m = len(inst.boundary)
    apex = inst.n_vertices
    tris = {tri(fwd[a], fwd[b], fwd[c]) for a, b, c in triangles}
    cone = {tri(apex, i, (i + 1) % m) for i in range(m)}
    if tris & cone:
        return False
    return is_spanning_sphere(apex + 1, tris | cone)


def enumerate_polygon_triangulations(inst: PolygonInstance, max_m: int = 6,
                                     max_k: int = 3) -> list[frozenset]:
    """All simple triangulations of the polygon, by root-edge decomposition."""
    m, k = len(inst.boundary), len(inst.interior)
    if m > max_m or k > max_k:
        raise ValueError(f"polygon (m={m}, k={k}) exceeds caps m<={max_m}, k<={max_k}")
    expected = 2 * k + m - 2
    seen: set = set()
    for raw in _root_decompositions(tuple(inst.boundary), frozenset(inst.interior)):
        tris = frozenset(tri(*t) for t in raw)
        if len(tris) != expected or tris in seen:
            continue
        if is_polygon_triangulation(inst, tris):
            seen.add(tris)
    return sorted(seen, key=sorted)


def _cone(apex: int, cycle) -> list[Triangle]:
    return [tri(apex, cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def _holed_completions(hole_lengths, k: int) -> list[frozenset]:
    """Triangulated spheres with holes, via coning every hole and completing."""
    cycles = []
    start = 0
    for m in hole_lengths:
        cycles.append(tuple(range(start, start + m)))
        start += m
    n_core = start + k
    apexes = list(range(n_core, n_core + len(cycles)))
    seed = [t for apex, cyc in zip(apexes, cycles) for t in _cone(apex, cyc)]
    core = list(combinations(range(n_core), 3))
    comp = _Completer(n_core + len(cycles), core + seed, seed)
    seed_set = set(seed)
    return [frozenset(s - seed_set) for s in comp.run()]


def count_polygon_by_completion(m: int, k: int) -> int:
    return len(_holed_completions((m,), k))


def enumerate_annulus_triangulations(m1: int, m2: int, k: int, max_m: int = 4,
                                     max_k: int = 2) -> list[frozenset]:
    """Triangulated annuli with labeled boundary cycles and k interior vertices.

    Outer boundary is the cycle ``0..m1-1``, inner boundary the cycle
    ``m1..m1+m2-1``; interior vertices follow. Both boundaries are fixed as
    abstract cycles, so the two relative orientations of the inner boundary
    are both counted.
    """
    if not (3 <= m1 <= max_m and 3 <= m2 <= max_m and 0 <= k <= max_k):
        raise ValueError(f"annulus (m1={m1}, m2={m2}, k={k}) exceeds caps")
    return sorted(_holed_completions((m1, m2), k), key=sorted)


def injection_images(m1: int, m2: int, k: int) -> set[frozenset]:
    """Images of the annulus-to-polygon injection.

    A new point ``p`` is coned over a cyclically ordered choice of ``m2``
    neighbours among the ``k + m2`` non-boundary points; the inner hole of an
    annulus is glued to that cone. Results are polygon triangulations of the
    ``m1``-gon with ``K = k + m2 + 1`` interior points.
    """
    annuli = enumerate_annulus_triangulations(m1, m2, k)
    inner = list(range(m1, m1 + m2))
    interior = list(range(m1 + m2, m1 + m2 + k))
    p = m1 + m2 + k
    pool = inner + interior
    images = set()
    for chosen in combinations(pool, m2):
        rest = [v for v in pool if v not in chosen]
        first, others = chosen[0], chosen[1:]
        for perm in _cyclic_orders_up_to_reflection(others):
            cycle = (first,) + perm
            # inner[i] -> cycle[i], interior -> remaining points in order
            mapping = {v: v for v in range(m1)}
            mapping.update(zip(inner, cycle))
            mapping.update(zip(interior, rest))
            for ann in annuli:
                image = {tri(mapping[a], mapping[b], mapping[c]) for a, b, c in ann}
                image.update(_cone(p, cycle))
                images.add(frozenset(image))
    return images


def _cyclic_orders_up_to_reflection(items):
    from itertools import permutations
    items = tuple(items)
    for perm in permutations(items):
        if len(perm) >= 2 and perm[0] > perm[-1]:
            continue
        yield perm


def injection_inequality_check(m1: int, m2: int, k: int) -> Check:
    """Count the injection's images and compare with the polygon count.

    With ``A`` the abstract annulus count, the count with the inner
    orientation fixed is ``A/2`` and the inequality checked is
    ``(k+m2)!/(k! m2) * A/2 <= T_{K,m1}``.
    """
    annuli = enumerate_annulus_triangulations(m1, m2, k)
    a_count = len(annuli)
    big_k = k + m2 + 1
    t_big = polygon_triangulation_count(big_k, m1)
    lhs = Fraction(math.factorial(k + m2), math.factorial(k) * m2) * Fraction(a_count, 2)
    images = injection_images(m1, m2, k)
    inst = PolygonInstance.standard(m1, big_k)
    valid = all(is_polygon_triangulation(inst, im) for im in images)
    distinct_ok = len(images) == lhs
    status = PASS if (valid and distinct_ok and lhs <= t_big) else FAIL
    name = f"injection[m1={m1},m2={m2},k={k}]"
    return Check(name, status, f"annuli={a_count} images={len(images)} lhs={lhs} T_K={t_big}")
