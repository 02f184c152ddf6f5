"""Labeled pure 2-dimensional simplicial complexes and a sphere recognizer.

A complex is stored as its set of triangles; a triangle is the sorted triple
of its vertex indices. The recognizer decides whether a triangle set is a
closed connected 2-manifold with Euler characteristic 2, which for simplicial
2-complexes is the same as being homeomorphic to the 2-sphere.
"""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

import networkx as nx

Triangle = tuple[int, int, int]
Edge = tuple[int, int]


class ComplexFormatError(ValueError):
    """Raised when the text form of a complex cannot be parsed."""


def tri(a: int, b: int, c: int) -> Triangle:
    """Canonical (sorted) triangle on three distinct vertices."""
    if a == b or b == c or a == c:
        raise ValueError(f"triangle needs three distinct vertices, got {(a, b, c)}")
    return tuple(sorted((a, b, c)))  # type: ignore[return-value]


def edges_of(t: Triangle) -> tuple[Edge, Edge, Edge]:
    a, b, c = t
    return (a, b), (a, c), (b, c)


def edge_multiset(triangles: Iterable[Triangle]) -> Counter:
    """Map each edge to the number of triangles containing it."""
    counts: Counter = Counter()
    for t in triangles:
        counts.update(edges_of(t))
    return counts


def vertices_of(triangles: Iterable[Triangle]) -> set[int]:
    return {v for t in triangles for v in t}


@dataclass(frozen=True)
class Complex2:
    """A pure 2-complex on the vertex set ``range(n)``."""

    n: int
    triangles: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = frozenset(tri(*t) for t in self.triangles)
        if len(canon) != len(self.triangles):
            raise ValueError("duplicate triangles")
        for t in canon:
            if t[2] >= self.n or t[0] < 0:
                raise ValueError(f"triangle {t} out of range for n={self.n}")
        object.__setattr__(self, "triangles", canon)

    @classmethod
    def complete(cls, n: int) -> "Complex2":
        return cls(n, frozenset(combinations(range(n), 3)))

    def sorted_triangles(self) -> list[Triangle]:
        return sorted(self.triangles)

    def relabel(self, perm) -> "Complex2":
        """Apply the vertex permutation ``v -> perm[v]``."""
        return Complex2(self.n, frozenset(tri(perm[a], perm[b], perm[c]) for a, b, c in self.triangles))

    def __len__(self) -> int:
        return len(self.triangles)


class FailureReason(enum.Enum):
    NOT_PURE_DEGREE = "NOT_PURE_DEGREE"
    LINK_NOT_CYCLE = "LINK_NOT_CYCLE"
    DISCONNECTED = "DISCONNECTED"
    WRONG_EULER = "WRONG_EULER"
    NOT_SPANNING = "NOT_SPANNING"


@dataclass(frozen=True)
class SurfaceReport:
    is_sphere: bool
    vertices_used: int
    edges: int
    faces: int
    euler_characteristic: int
    failure_reason: Optional[FailureReason] = None
    # offending vertex for LINK_NOT_CYCLE, offending edge for NOT_PURE_DEGREE
    witness: object = None

    def describe(self) -> str:
        if self.is_sphere:
            return "SPHERE"
        if self.failure_reason is FailureReason.WRONG_EULER:
            return f"WRONG_EULER({self.euler_characteristic})"
        if self.witness is not None:
            return f"{self.failure_reason.value}({self.witness})"
        return self.failure_reason.value


def euler_characteristic(triangles: Iterable[Triangle]) -> int:
    """V - E + F of the subcomplex generated by ``triangles``."""
    triangles = set(triangles)
    edges = {e for t in triangles for e in edges_of(t)}
    return len(vertices_of(triangles)) - len(edges) + len(triangles)


def vertex_link(c: Complex2, v: int) -> nx.Graph:
    """The link of ``v``: one edge {a, b} per triangle {v, a, b}."""
    if not 0 <= v < c.n:
        raise ValueError(f"vertex {v} out of range for n={c.n}")
    link = nx.Graph()
    for t in c.triangles:
        if v in t:
            a, b = (u for u in t if u != v)
            link.add_edge(a, b)
    return link


def _link_is_cycle(link_edges: list[Edge]) -> bool:
    # every vertex of degree 2 and connected
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b in link_edges:
        adj[a].append(b)
        adj[b].append(a)
    if len(adj) < 3 or any(len(nb) != 2 for nb in adj.values()):
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def check_closed_surface(c: Complex2) -> SurfaceReport:
    """Test the supported subcomplex for being a 2-sphere (spanning ignored).

    Conditions are checked in a fixed order: edge degree, vertex links,
    connectivity, Euler characteristic. The first violation is reported.
    """
    triangles = c.triangles
    counts = edge_multiset(triangles)
    used = vertices_of(triangles)
    chi = len(used) - len(counts) + len(triangles)

    def fail(reason, witness=None):
        return SurfaceReport(False, len(used), len(counts), len(triangles), chi, reason, witness)

    if not triangles:
        return fail(FailureReason.NOT_PURE_DEGREE)
    for e in sorted(counts):
        if counts[e] != 2:
            return fail(FailureReason.NOT_PURE_DEGREE, e)

    links: dict[int, list[Edge]] = defaultdict(list)
    for a, b, d in triangles:
        links[a].append((b, d))
        links[b].append((a, d))
        links[d].append((a, b))
    for v in sorted(used):
        if not _link_is_cycle(links[v]):
            return fail(FailureReason.LINK_NOT_CYCLE, v)

    g = nx.Graph()
    g.add_nodes_from(used)
    g.add_edges_from(counts)
    if not nx.is_connected(g):
        return fail(FailureReason.DISCONNECTED)
    if chi != 2:
        return fail(FailureReason.WRONG_EULER, chi)
    return SurfaceReport(True, len(used), len(counts), len(triangles), chi)


def is_spanning_sphere(n: int, s: Iterable[Triangle]) -> bool:
    """True iff ``s`` is a 2-sphere using every vertex of ``range(n)``."""
    c = s if isinstance(s, Complex2) else Complex2(n, frozenset(s))
    if len(c.triangles) != 2 * n - 4:
        return False
    report = check_closed_surface(c)
    return report.is_sphere and report.vertices_used == n


def spanning_report(n: int, s: Iterable[Triangle]) -> SurfaceReport:
    """Like :func:`check_closed_surface` but also flags NOT_SPANNING."""
    c = Complex2(n, frozenset(s))
    report = check_closed_surface(c)
    if report.is_sphere and report.vertices_used != n:
        return SurfaceReport(False, report.vertices_used, report.edges, report.faces,
                             report.euler_characteristic, FailureReason.NOT_SPANNING)
    return report


# --- text format -----------------------------------------------------------

def parse_complex(text: str) -> Complex2:
    """Parse ``n <N>`` followed by ``t <i> <j> <k>`` lines; ``#`` starts a comment."""
    n = None
    triangles: list[Triangle] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ComplexFormatError(f"line {lineno}: expected 'n <N>'")
            n = int(parts[1])
            continue
        if parts[0] != "t" or len(parts) != 4:
            raise ComplexFormatError(f"line {lineno}: expected 't <i> <j> <k>'")
        i, j, k = map(int, parts[1:])
        if not 0 <= i < j < k < n:
            raise ComplexFormatError(f"line {lineno}: need 0 <= i < j < k < {n}")
        triangles.append((i, j, k))
    if n is None:
        raise ComplexFormatError("missing 'n <N>' header")
    if len(set(triangles)) != len(triangles):
        raise ComplexFormatError("duplicate triangle")
    return Complex2(n, frozenset(triangles))


def format_complex(c: Complex2) -> str:
    lines = [f"n {c.n}"]
    lines.extend(f"t {a} {b} {d}" for a, b, d in c.sorted_triangles())
    return "\n".join(lines) + "\n"


def iter_complexes(text: str) -> Iterator[Complex2]:
    """Parse a stream of complexes separated by blank lines."""
    block: list[str] = []
    for line in text.splitlines() + [""]:
        if line.split("#", 1)[0].strip():
            block.append(line)
        elif line.strip():
            continue
        elif block:
            yield parse_complex("\n".join(block))
            block = []


# --- standard examples -----------------------------------------------------

def tetrahedron() -> Complex2:
    return Complex2(4, frozenset(combinations(range(4), 3)))


def bipyramid(n: int = 5, apexes: tuple[int, int] = (3, 4)) -> Complex2:
    """Suspension of the cycle on the vertices other than ``apexes``."""
    ring = [v for v in range(n) if v not in apexes]
    tris = set()
    for i, a in enumerate(ring):
        b = ring[(i + 1) % len(ring)]
        for apex in apexes:
            tris.add(tri(apex, a, b))
    return Complex2(n, frozenset(tris))


def octahedron() -> Complex2:
    return bipyramid(6, (4, 5))


def icosahedron() -> Complex2:
    """12 vertices: two poles 0 and 11, upper ring 1..5, lower ring 6..10."""
    tris = set()
    for i in range(5):
        u, u2 = 1 + i, 1 + (i + 1) % 5
        w, w2 = 6 + i, 6 + (i + 1) % 5
        tris.add(tri(0, u, u2))
        tris.add(tri(11, w, w2))
        tris.add(tri(u, u2, w))
        tris.add(tri(u2, w, w2))
    return Complex2(12, frozenset(tris))


def csaszar_torus() -> Complex2:
    """The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    tris = set()
    for i in range(7):
        tris.add(tri(i, (i + 1) % 7, (i + 3) % 7))
        tris.add(tri(i, (i + 2) % 7, (i + 3) % 7))
    return Complex2(7, frozenset(tris))


def projective_plane6() -> Complex2:
    """The minimal 6-vertex triangulation of the real projective plane."""
    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
            (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)]
    return Complex2(6, frozenset(tri(*t) for t in tris))


def pinched_spheres() -> Complex2:
    """Two tetrahedron boundaries sharing only vertex 0 (7 vertices)."""
    first = [tri(*t) for t in combinations((0, 1, 2, 3), 3)]
    second = [tri(*t) for t in combinations((0, 4, 5, 6), 3)]
    return Complex2(7, frozenset(first + second))
