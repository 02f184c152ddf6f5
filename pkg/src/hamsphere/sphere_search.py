"""Complete backtracking search for a spanning 2-sphere inside a 2-complex.

The search grows a surface from a root triangle. At every node it picks the
edge covered by exactly one chosen triangle that has the fewest admissible
second triangles and branches over them. Any sphere containing the current
triangles uses exactly one of those options, so no solution is skipped and
``found=False`` is a proof of absence. Running out of budget is reported as
a timeout, never as absence.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Optional

from .complex_core import Complex2, Triangle, is_spanning_sphere

DEFAULT_NODE_LIMIT = 10_000_000


class Outcome(enum.Enum):
    FOUND = "FOUND"
    NOT_FOUND = "NOT_FOUND"
    TIMEOUT = "TIMEOUT"


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: Optional[float] = None  # seconds


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True)
class SearchResult:
    outcome: Outcome
    witness: Optional[frozenset] = None
    stats: SearchStats = field(default_factory=SearchStats)
    rejected_by: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.FOUND

    @property
    def timed_out(self) -> bool:
        return self.outcome is Outcome.TIMEOUT


class _BudgetExceeded(Exception):
    pass


def quick_reject(c: Complex2) -> Optional[str]:
    """A reason no spanning sphere can exist, or None if none is evident."""
    n = c.n
    if n < 4:
        return f"n={n} < 4"
    if len(c.triangles) < 2 * n - 4:
        return f"only {len(c.triangles)} triangles, need {2 * n - 4}"
    count = [0] * n
    nbrs: list[set] = [set() for _ in range(n)]
    for a, b, d in c.triangles:
        for v, x, y in ((a, b, d), (b, a, d), (d, a, b)):
            count[v] += 1
            nbrs[v].update((x, y))
    for v in range(n):
        if count[v] < 3:
            return f"vertex {v} lies in {count[v]} triangles"
        if len(nbrs[v]) < 3:
            return f"vertex {v} has {len(nbrs[v])} neighbours"
    return None


class _Search:
    def __init__(self, c: Complex2, budget: SearchBudget):
        self.n = c.n
        self.budget = budget
        self.tris: list[Triangle] = sorted(c.triangles)
        edge_id: dict = {}
        self.edge_verts: list = []
        self.tri_edges: list = []
        self.edge_tris: list = []
        self.vert_tris: list = [[] for _ in range(self.n)]
        for ti, (a, b, d) in enumerate(self.tris):
            ids = []
            for e in ((a, b), (a, d), (b, d)):
                if e not in edge_id:
                    edge_id[e] = len(self.edge_verts)
                    self.edge_verts.append(e)
                    self.edge_tris.append([])
                ids.append(edge_id[e])
                self.edge_tris[edge_id[e]].append(ti)
            self.tri_edges.append(tuple(ids))
            for v in (a, b, d):
                self.vert_tris[v].append(ti)
        self.tri_third = []
        for ti, (a, b, d) in enumerate(self.tris):
            e0, e1, e2 = self.tri_edges[ti]
            self.tri_third.append({e0: d, e1: b, e2: a})
        ne = len(self.edge_verts)
        self.edge_deg = [0] * ne
        self.open: set = set()
        self.chosen: list = []
        self.in_s = [False] * len(self.tris)
        self.forbidden = [False] * len(self.tris)
        self.v_tris = [0] * self.n      # chosen triangles at v
        self.v_open = [0] * self.n      # degree-1 edges at v
        self.used = 0
        self.target = 2 * self.n - 4
        self.nodes = 0
        self.max_depth = 0
        self.start = time.perf_counter()

    # state updates -------------------------------------------------------------
    def _add(self, ti: int) -> list:
        self.in_s[ti] = True
        self.chosen.append(ti)
        touched = []
        for v in self.tris[ti]:
            if self.v_tris[v] == 0:
                self.used += 1
            self.v_tris[v] += 1
        for e in self.tri_edges[ti]:
            d = self.edge_deg[e] + 1
            self.edge_deg[e] = d
            a, b = self.edge_verts[e]
            if d == 1:
                self.open.add(e)
                self.v_open[a] += 1
                self.v_open[b] += 1
            else:
                self.open.discard(e)
                self.v_open[a] -= 1
                self.v_open[b] -= 1
                touched.extend((a, b))
        return touched

    def _remove(self, ti: int):
        self.in_s[ti] = False
        self.chosen.pop()
        for v in self.tris[ti]:
            self.v_tris[v] -= 1
            if self.v_tris[v] == 0:
                self.used -= 1
        for e in self.tri_edges[ti]:
            d = self.edge_deg[e] - 1
            self.edge_deg[e] = d
            a, b = self.edge_verts[e]
            if d == 1:
                self.open.add(e)
                self.v_open[a] += 1
                self.v_open[b] += 1
            else:
                self.open.discard(e)
                self.v_open[a] -= 1
                self.v_open[b] -= 1

    def _closed(self, v: int) -> bool:
        return self.v_tris[v] > 0 and self.v_open[v] == 0

    def _link_is_single_cycle(self, v: int) -> bool:
        adj: dict = {}
        for ti in self.vert_tris[v]:
            if self.in_s[ti]:
                x, y = (u for u in self.tris[ti] if u != v)
                adj.setdefault(x, []).append(y)
                adj.setdefault(y, []).append(x)
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(adj)

    def _options(self, e: int) -> list:
        out = []
        deg = self.edge_deg
        for ti in self.edge_tris[e]:
            if self.in_s[ti] or self.forbidden[ti]:
                continue
            e0, e1, e2 = self.tri_edges[ti]
            if deg[e0] >= 2 or deg[e1] >= 2 or deg[e2] >= 2:
                continue
            if self._closed(self.tri_third[ti][e]):
                continue
            out.append(ti)
        return out

    def _unused_vertices_feasible(self) -> bool:
        unused = self.n - self.used
        remaining = self.target - len(self.chosen)
        if remaining < unused or 3 * remaining < len(self.open):
            return False
        if unused == 0:
            return True
        deg = self.edge_deg
        for v in range(self.n):
            if self.v_tris[v]:
                continue
            avail = 0
            for ti in self.vert_tris[v]:
                if self.forbidden[ti]:
                    continue
                e0, e1, e2 = self.tri_edges[ti]
                if deg[e0] >= 2 or deg[e1] >= 2 or deg[e2] >= 2:
                    continue
                if any(self._closed(u) for u in self.tris[ti]):
                    continue
                avail += 1
                if avail >= 3:
                    break
            if avail < 3:
                return False
        return True

    # search -------------------------------------------------------------------
    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise _BudgetExceeded
        if self.budget.time_limit is not None and self.nodes % 1024 == 0:
            if time.perf_counter() - self.start > self.budget.time_limit:
                raise _BudgetExceeded

    def _rec(self, depth: int) -> bool:
        self._tick()
        if depth > self.max_depth:
            self.max_depth = depth
        if len(self.chosen) > self.target:
            return False
        if not self.open:
            return len(self.chosen) == self.target and self.used == self.n
        if not self._unused_vertices_feasible():
            return False
        best = None
        for e in sorted(self.open):
            opts = self._options(e)
            if best is None or len(opts) < len(best):
                best = opts
                if len(opts) <= 1:
                    break
        for ti in best:
            touched = self._add(ti)
            ok = all(not self._closed(v) or self._link_is_single_cycle(v) for v in touched)
            if ok and self._rec(depth + 1):
                return True
            self._remove(ti)
        return False

    def run(self) -> bool:
        # root: the smallest chosen triangle at a vertex with fewest triangles
        v0 = min(range(self.n), key=lambda v: (len(self.vert_tris[v]), v))
        roots = sorted(self.vert_tris[v0])
        for ti in roots:
            self._add(ti)
            if self._rec(1):
                return True
            self._remove(ti)
            self.forbidden[ti] = True
        return False

    def stats(self) -> SearchStats:
        return SearchStats(self.nodes, self.max_depth, time.perf_counter() - self.start)


def find_spanning_sphere(c: Complex2, budget: Optional[SearchBudget] = None) -> SearchResult:
    """Decide whether ``c`` contains a spanning 2-sphere, with a witness."""
    budget = budget or SearchBudget()
    start = time.perf_counter()
    reason = quick_reject(c)
    if reason is not None:
        return SearchResult(Outcome.NOT_FOUND, None,
                            SearchStats(0, 0, time.perf_counter() - start), rejected_by=reason)
    s = _Search(c, budget)
    try:
        found = s.run()
    except _BudgetExceeded:
        return SearchResult(Outcome.TIMEOUT, None, s.stats())
    if not found:
        return SearchResult(Outcome.NOT_FOUND, None, s.stats())
    witness = frozenset(s.tris[ti] for ti in s.chosen)
    if not is_spanning_sphere(c.n, witness):
        raise AssertionError("search produced an invalid witness")
    return SearchResult(Outcome.FOUND, witness, s.stats())
