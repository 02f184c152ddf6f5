"""Embedded face-2-coloured planar graphs as rotation systems.

A map is a list of connected components, each a rotation system
``{v: (w1, w2, ...)}`` giving the cyclic order of neighbours around ``v``,
together with a containment forest saying which face of which component
surrounds each non-root component. Faces of a component are traced with the
rule: the dart after ``u -> v`` is ``v -> w`` where ``w`` precedes ``u`` in
the rotation at ``v``.

Global faces are numbered as follows. Face 0 is the region shared by the
outer faces of all root components. After it, for each component in order,
come its non-outer local faces in tracing order. Each such face also
contains the outer faces of the children placed in it.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

from .verdict import FAIL, PASS, Check

BLACK = "black"
WHITE = "white"
MAX_CAYLEY_N = 7
MAX_EXHAUSTIVE_M = 8


class MapError(ValueError):
    """Inconsistent rotation system, containment forest or colouring."""


Dart = tuple[int, int]


def trace_local_faces(rot: dict) -> list[tuple[Dart, ...]]:
    """Faces of one connected rotation system, as dart cycles in tracing order."""
    pos = {v: {w: i for i, w in enumerate(nb)} for v, nb in rot.items()}
    seen: set = set()
    faces = []
    for u in sorted(rot):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                walk.append(d)
                a, b = d
                nb = rot[b]
                d = (b, nb[(pos[b][a] - 1) % len(nb)])
            if d != (u, v):
                raise MapError(f"face walk from {(u, v)} does not close")
            faces.append(tuple(walk))
    return faces


@dataclass(frozen=True)
class FaceData:
    index: int
    color: str
    members: tuple          # (component, local face) pairs forming this face
    boundary_lengths: tuple  # m_i for each touching component
    interior_points: int = 0

    @property
    def l(self) -> int:
        return len(self.members)

    @property
    def m(self) -> int:
        return sum(self.boundary_lengths)


@dataclass
class EmbeddedColoredGraph:
    """Face-2-coloured spanning plane graph with nested components.

    Attributes:
        components: rotation systems, vertex sets pairwise disjoint.
        parent: per component, ``None`` for a root or ``(j, f)`` meaning it
            lies in local face ``f`` of component ``j``.
        outer: per component, its local face that faces the surrounding region.
        coloring: global face index to ``"black"`` or ``"white"``.
    """

    components: list
    parent: list
    outer: list
    coloring: dict = field(default_factory=dict)

    def __post_init__(self):
        self.components = [{v: tuple(nb) for v, nb in rot.items()} for rot in self.components]
        self._local = None
        self._faces = None

    # structure ------------------------------------------------------------------
    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def m(self) -> int:
        return sum(len(rot) for rot in self.components)

    def vertices(self) -> list:
        return sorted(v for rot in self.components for v in rot)

    def edges(self) -> list:
        out = set()
        for rot in self.components:
            for v, nb in rot.items():
                for w in nb:
                    out.add((min(v, w), max(v, w)))
        return sorted(out)

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices())
        g.add_edges_from(self.edges())
        return g

    def local_faces(self) -> list:
        if self._local is None:
            self._local = [trace_local_faces(rot) for rot in self.components]
        return self._local

    def global_faces(self) -> list:
        """Per global face, the sorted list of ``(component, local face)`` members."""
        if self._faces is None:
            local = self.local_faces()
            children: dict = {}
            for c, par in enumerate(self.parent):
                children.setdefault(par, []).append(c)
            faces = [[(c, self.outer[c]) for c in children.get(None, [])]]
            for c in range(self.r):
                for f in range(len(local[c])):
                    if f == self.outer[c]:
                        continue
                    faces.append([(c, f)] + [(ch, self.outer[ch]) for ch in children.get((c, f), [])])
            self._faces = faces
        return self._faces

    def face_of_dart(self) -> dict:
        out = {}
        index = {}
        for g, members in enumerate(self.global_faces()):
            for mem in members:
                index[mem] = g
        for c, faces in enumerate(self.local_faces()):
            for f, walk in enumerate(faces):
                for d in walk:
                    out[d] = index[(c, f)]
        return out

    # validation ---------------------------------------------------------------
    def validate(self) -> "EmbeddedColoredGraph":
        if not self.components:
            raise MapError("a map needs at least one component")
        if not (len(self.parent) == len(self.outer) == self.r):
            raise MapError("parent/outer lists must have one entry per component")
        owner = {}
        for c, rot in enumerate(self.components):
            for v, nb in rot.items():
                if v in owner:
                    raise MapError(f"vertex {v} appears in two components")
                owner[v] = c
                if len(nb) < 2 or len(nb) % 2:
                    raise MapError(f"vertex {v} has degree {len(nb)}; need even and >= 2")
                if len(set(nb)) != len(nb) or v in nb:
                    raise MapError(f"rotation at {v} has loops or repeated neighbours")
        for c, rot in enumerate(self.components):
            for v, nb in rot.items():
                for w in nb:
                    if w not in rot or v not in rot[w]:
                        raise MapError(f"edge {v}-{w} is not symmetric within component {c}")
            g = nx.Graph((v, w) for v, nb in rot.items() for w in nb)
            if not nx.is_connected(g):
                raise MapError(f"component {c} is not connected")
        local = self.local_faces()
        for c, faces in enumerate(local):
            rot = self.components[c]
            e = sum(len(nb) for nb in rot.values()) // 2
            if len(faces) != e - len(rot) + 2:
                raise MapError(f"component {c} rotation system is not planar")
            if not 0 <= self.outer[c] < len(faces):
                raise MapError(f"component {c} outer face {self.outer[c]} out of range")
        for c, par in enumerate(self.parent):
            if par is None:
                continue
            j, f = par
            if not 0 <= j < self.r or j == c or not 0 <= f < len(local[j]) or f == self.outer[j]:
                raise MapError(f"component {c} has invalid container {par}")
        for c in range(self.r):
            seen = {c}
            par = self.parent[c]
            while par is not None:
                if par[0] in seen:
                    raise MapError("containment forest has a cycle")
                seen.add(par[0])
                par = self.parent[par[0]]
        nf = len(self.global_faces())
        if sorted(self.coloring) != list(range(nf)):
            raise MapError(f"colouring must cover faces 0..{nf - 1}")
        if any(col not in (BLACK, WHITE) for col in self.coloring.values()):
            raise MapError("colours must be black or white")
        fod = self.face_of_dart()
        for u, v in self.edges():
            if {self.coloring[fod[(u, v)]], self.coloring[fod[(v, u)]]} != {BLACK, WHITE}:
                raise MapError(f"edge {u}-{v} does not separate a black and a white face")
        return self

    def recolored(self) -> "EmbeddedColoredGraph":
        swap = {BLACK: WHITE, WHITE: BLACK}
        return EmbeddedColoredGraph(self.components, list(self.parent), list(self.outer),
                                    {f: swap[c] for f, c in self.coloring.items()})


# --- serialization ---------------------------------------------------------------------

def format_map(g: EmbeddedColoredGraph) -> str:
    lines = []
    for c, rot in enumerate(g.components):
        lines.append(f"component {c}")
        for v in sorted(rot):
            lines.append(f"{v}: " + " ".join(map(str, rot[v])))
    for c, par in enumerate(g.parent):
        if par is None:
            lines.append(f"comp {c} outer {g.outer[c]}")
        else:
            lines.append(f"comp {c} in comp {par[0]} face {par[1]} outer {g.outer[c]}")
    for f in sorted(g.coloring):
        lines.append(f"color face {f} {g.coloring[f]}")
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> EmbeddedColoredGraph:
    """Inverse of :func:`format_map`; ``outer`` defaults to local face 0."""
    comps: list = []
    parent: dict = {}
    outer: dict = {}
    coloring = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "component":
                comps.append({})
            elif tok[0].endswith(":"):
                if not comps:
                    raise MapError("vertex line before any component header")
                comps[-1][int(tok[0][:-1])] = tuple(int(x) for x in tok[1:])
            elif tok[0] == "comp":
                c = int(tok[1])
                rest = tok[2:]
                if rest[:2] == ["in", "comp"]:
                    if rest[3] != "face":
                        raise MapError("expected 'face'")
                    parent[c] = (int(rest[2]), int(rest[4]))
                    rest = rest[5:]
                if rest:
                    if rest[0] != "outer" or len(rest) != 2:
                        raise MapError("expected 'outer <f>'")
                    outer[c] = int(rest[1])
            elif tok[0] == "color" and tok[1] == "face":
                coloring[int(tok[2])] = tok[3]
            else:
                raise MapError(f"unrecognized line {line!r}")
        except (IndexError, ValueError) as exc:
            raise MapError(f"line {lineno}: {exc}") from exc
    r = len(comps)
    return EmbeddedColoredGraph(comps, [parent.get(c) for c in range(r)],
                                [outer.get(c, 0) for c in range(r)], coloring)


# --- face tracing and planar estimates ---------------------------------------------------

def trace_faces(g: EmbeddedColoredGraph) -> list[FaceData]:
    """Global faces with colour, touching components and boundary lengths."""
    g.validate()
    local = g.local_faces()
    out = []
    for i, members in enumerate(g.global_faces()):
        lengths = tuple(len(local[c][f]) for c, f in members)
        out.append(FaceData(i, g.coloring[i], tuple(members), lengths))
    e = len(g.edges())
    if len(out) - e + g.m != g.r + 1:
        raise MapError(f"Euler identity fails: F={len(out)} E={e} V={g.m} r={g.r}")
    return out


def planar_estimates_check(g: EmbeddedColoredGraph) -> Check:
    """Face counts per colour, component count and the l_f excess against m."""
    faces = trace_faces(g)
    m = g.m
    white = sum(f.color == WHITE for f in faces)
    black = len(faces) - white
    excess = sum(f.l - 1 for f in faces)
    ok = white <= m - 2 and black <= m - 2 and g.r <= m // 3 and 3 * excess <= m
    return Check("planar_estimates", PASS if ok else FAIL,
                 f"m={m} W={white} B={black} r={g.r} sum(l_f-1)={excess}")


@dataclass(frozen=True)
class McKayResult:
    L: Fraction
    bound: Fraction
    refined_bound: Fraction
    check: Check


def mckay_check(g, z) -> McKayResult:
    """Sum over edges of min weight against the refined and the 3*sum bounds.

    ``g`` is an :class:`EmbeddedColoredGraph` (planarity certified by its
    faces) or a networkx graph (certified by a planarity test). ``z`` maps
    vertices to weights, or is a sequence indexed by vertex.
    """
    if isinstance(g, EmbeddedColoredGraph):
        trace_faces(g)
        graph = g.graph()
    else:
        graph = g
        planar, _ = nx.check_planarity(graph)
        if not planar:
            raise MapError("graph is not planar")
    weights = {v: Fraction(z[v]) for v in graph.nodes}
    if any(w < 0 for w in weights.values()):
        raise ValueError("weights must be nonnegative")
    L = sum((min(weights[u], weights[v]) for u, v in graph.edges), Fraction(0))
    ordered = sorted(weights.values(), reverse=True)
    refined = sum((min(i, 3) * w for i, w in enumerate(ordered)), Fraction(0))
    bound = 3 * sum(ordered, Fraction(0))
    ok = L <= refined <= bound
    return McKayResult(L, bound, refined,
                       Check("mckay", PASS if ok else FAIL, f"L={L} refined={refined} 3sum={bound}"))


@dataclass(frozen=True)
class DeficitResult:
    B: int
    W: int
    bound: int
    check: Check


def bw_deficit_check(g: EmbeddedColoredGraph, outer: int) -> DeficitResult:
    """Black minus white face count, outer face excluded, for a connected map."""
    faces = trace_faces(g)
    if g.r != 1:
        raise MapError("deficit bound is stated for connected maps")
    if not 0 <= outer < len(faces):
        raise IndexError(f"face {outer} out of range")
    rest = [f for f in faces if f.index != outer]
    black = sum(f.color == BLACK for f in rest)
    white = len(rest) - black
    m = g.m
    bound = (m - 1) // 2 if faces[outer].color == WHITE else (m - 5) // 2
    ok = black - white <= bound
    return DeficitResult(black, white, bound,
                         Check(f"bw_deficit[outer={faces[outer].color}]", PASS if ok else FAIL,
                               f"m={m} B={black} W={white} bound={bound}"))


def surrounded_counts(g: EmbeddedColoredGraph, root_face: int) -> dict:
    """Components surrounded by a face of each colour, with ``root_face`` outermost.

    Uses the bipartite face/component incidence tree rooted at ``root_face``:
    a component is surrounded by its parent face.
    """
    faces = trace_faces(g)
    tree = nx.Graph()
    for f in faces:
        for c, _ in f.members:
            tree.add_edge(("f", f.index), ("c", c))
    if not nx.is_tree(tree):
        raise MapError("face/component incidence graph is not a tree")
    counts = {BLACK: 0, WHITE: 0}
    for child, par in nx.bfs_predecessors(tree, ("f", root_face)):
        if child[0] == "c":
            counts[faces[par[1]].color] += 1
    return counts


@dataclass(frozen=True)
class TriangleCountResult:
    T: int
    lhs: Fraction
    rhs: Fraction
    c_b: int
    check: Check


def white_triangle_count(g: EmbeddedColoredGraph, allocation: dict) -> TriangleCountResult:
    """Triangles in a triangulation of the white faces, and the Euler-type identity.

    ``allocation`` maps white face index to its number of interior points.
    The identity compares ``m + k - T/2`` with ``(m + r + W - B + 3)/2 - |C_B|``,
    where ``|C_B|`` counts components surrounded by a white face once a white
    face is taken as the outer face.
    """
    faces = trace_faces(g)
    white = [f for f in faces if f.color == WHITE]
    if set(allocation) - {f.index for f in white}:
        raise ValueError("allocation keys must be white faces")
    if any(int(k) != k or k < 0 for k in allocation.values()):
        raise ValueError("allocations must be nonnegative integers")
    total = 0
    for f in white:
        kf = allocation.get(f.index, 0)
        t = 2 * kf + f.m + 2 * f.l - 4
        if t < 1:
            raise ValueError(f"white face {f.index} cannot be triangulated with {kf} points")
        total += t
    k = sum(allocation.values())
    W, B = len(white), len(faces) - len(white)
    c_b = surrounded_counts(g, white[0].index)[WHITE]
    lhs = g.m + k - Fraction(total, 2)
    rhs = Fraction(g.m + g.r + W - B + 3, 2) - c_b
    return TriangleCountResult(total, lhs, rhs, c_b,
                               Check("white_triangle_identity", PASS if lhs == rhs else FAIL,
                                     f"T={total} lhs={lhs} rhs={rhs} |C_B|={c_b}"))


def weighted_cayley_check(x: Sequence) -> Check:
    """Sum over labelled trees of prod x_v^deg(v) against prod x * (sum x)^(n-2)."""
    n = len(x)
    if not 2 <= n <= MAX_CAYLEY_N:
        raise ValueError(f"need 2 <= n <= {MAX_CAYLEY_N}")
    xs = [Fraction(v) for v in x]
    if any(v <= 0 for v in xs):
        raise ValueError("weights must be positive")
    if n == 2:
        trees = [nx.Graph([(0, 1)])]
    else:
        trees = (nx.from_prufer_sequence(list(seq)) for seq in product(range(n), repeat=n - 2))
    lhs = Fraction(0)
    count = 0
    for t in trees:
        term = Fraction(1)
        for v, d in t.degree:
            term *= xs[v] ** d
        lhs += term
        count += 1
    prod_x = Fraction(1)
    for v in xs:
        prod_x *= v
    rhs = prod_x * sum(xs) ** (n - 2)
    return Check(f"weighted_cayley[n={n}]", PASS if lhs == rhs else FAIL,
                 f"trees={count} lhs={lhs} rhs={rhs}")


# --- generators ----------------------------------------------------------------------------

# Sphere triangulations are lists of oriented faces (a, b, c); dart a->b lies in it.

def _stacked_triangulation(m: int, rng: random.Random) -> list:
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, m):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    return faces


def _dart_owner(faces: Sequence) -> dict:
    owner = {}
    for i, (a, b, c) in enumerate(faces):
        for d in ((a, b), (b, c), (c, a)):
            owner[d] = i
    return owner


def _flip(faces: list, owner: dict, u: int, v: int) -> bool:
    """Flip edge u-v in place if the result is still simple."""
    i, j = owner[(u, v)], owner[(v, u)]
    c = next(x for x in faces[i] if x not in (u, v))
    d = next(x for x in faces[j] if x not in (u, v))
    if c == d or (c, d) in owner:
        return False
    for f in (i, j):
        a0, b0, c0 = faces[f]
        for dd in ((a0, b0), (b0, c0), (c0, a0)):
            del owner[dd]
    # faces (u, v, c) and (v, u, d) become (c, u, d) and (d, v, c)
    faces[i] = (c, u, d)
    faces[j] = (d, v, c)
    for f in (i, j):
        a0, b0, c0 = faces[f]
        for dd in ((a0, b0), (b0, c0), (c0, a0)):
            owner[dd] = f
    return True


def random_triangulation(m: int, rng: random.Random, flips: Optional[int] = None) -> list:
    faces = _stacked_triangulation(m, rng)
    if m < 5:
        return faces
    owner = _dart_owner(faces)
    for _ in range(flips if flips is not None else 4 * m):
        u, v, _w = faces[rng.randrange(len(faces))]
        _flip(faces, owner, u, v)
    return faces


def _rotations(faces: Sequence) -> dict:
    succ: dict = {}
    for a, b, c in faces:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            succ.setdefault(x, {})[y] = z
    rot = {}
    for v, s in succ.items():
        start = min(s)
        order = [start]
        while s[order[-1]] != start:
            order.append(s[order[-1]])
        rot[v] = order
    return rot


def map_from_triangulation(faces: Sequence, black: Iterable[int]) -> EmbeddedColoredGraph:
    """The graph of edges separating black from white triangles, with nesting.

    Every vertex must be incident to at least one separating edge.
    """
    black = set(black)
    owner = _dart_owner(faces)
    sep = {(u, v) for (u, v), f in owner.items() if (f in black) != (owner[(v, u)] in black)}
    rot_full = _rotations(faces)
    rot_h = {v: tuple(w for w in nb if (v, w) in sep) for v, nb in rot_full.items()}
    if any(not nb for nb in rot_h.values()):
        raise MapError("separating edges do not span every vertex")
    # regions of the sphere minus the graph
    regions = nx.utils.UnionFind(range(len(faces)))
    for (u, v), f in owner.items():
        if (u, v) not in sep:
            regions.union(f, owner[(v, u)])
    hg = nx.Graph((v, w) for v, nb in rot_h.items() for w in nb)
    comps = sorted((sorted(c) for c in nx.connected_components(hg)), key=lambda c: c[0])
    rots = [{v: rot_h[v] for v in comp} for comp in comps]
    local = [trace_local_faces(rot) for rot in rots]
    region_of = {}
    tree = nx.Graph()
    for c, lfs in enumerate(local):
        for f, walk in enumerate(lfs):
            reg = regions[owner[walk[0]]]
            region_of[(c, f)] = reg
            tree.add_edge(("r", reg), ("c", c), face=f)
    root = ("r", regions[0])
    pred = dict(nx.bfs_predecessors(tree, root))
    parent: list = [None] * len(rots)
    outer = [0] * len(rots)
    for c in range(len(rots)):
        reg = pred[("c", c)]
        outer[c] = tree.edges[reg, ("c", c)]["face"]
        if reg != root:
            holder = pred[reg]
            parent[c] = (holder[1], tree.edges[reg, holder]["face"])
    g = EmbeddedColoredGraph(rots, parent, outer)
    color = {}
    for i, members in enumerate(g.global_faces()):
        reg = {regions[r] for r in (region_of[mem] for mem in members)}
        if len(reg) != 1:
            raise MapError("global face spans several regions")
        rep = next(iter(reg))
        color[i] = BLACK if rep in {regions[b] for b in black} else WHITE
    g.coloring = color
    return g.validate()


def generate_random_colored_map(m: int, seed: int, max_tries: int = 1000) -> EmbeddedColoredGraph:
    """Random member of P_m from a random triangulation and a random face subset."""
    if m < 3:
        raise ValueError("need m >= 3")
    rng = random.Random(seed)
    faces = random_triangulation(m, rng)
    at_vertex: dict = {}
    for i, f in enumerate(faces):
        for v in f:
            at_vertex.setdefault(v, []).append(i)
    black = {i for i in range(len(faces)) if rng.random() < 0.5}
    for _ in range(max_tries):
        bare = [v for v, fs in at_vertex.items()
                if all(f in black for f in fs) or not any(f in black for f in fs)]
        if not bare:
            g = map_from_triangulation(faces, black)
            return g.recolored() if rng.random() < 0.5 else g
        black ^= {rng.choice(at_vertex[rng.choice(bare)])}
    raise RuntimeError(f"no spanning colouring found after {max_tries} repairs")


def _canonical_key(faces: Sequence):
    g = nx.Graph()
    for a, b, c in faces:
        g.add_edges_from(((a, b), (b, c), (c, a)))
    return g, nx.weisfeiler_lehman_graph_hash(g, iterations=4)


def sphere_triangulations(m: int) -> list:
    """One oriented triangulation per isomorphism class of simple sphere triangulation.

    Flip-graph search from a stacked triangulation; classes are identified by
    graph isomorphism, which for m >= 4 determines the triangulation.
    """
    if m < 3:
        raise ValueError("need m >= 3")
    start = _stacked_triangulation(m, random.Random(0))
    if m < 5:
        return [start]
    found: dict = {}
    out = []

    def add(faces) -> bool:
        g, h = _canonical_key(faces)
        for other in found.get(h, []):
            if nx.is_isomorphic(g, other):
                return False
        found.setdefault(h, []).append(g)
        out.append(list(faces))
        return True

    add(start)
    queue = deque([start])
    while queue:
        faces = queue.popleft()
        edges = sorted({(min(a, b), max(a, b)) for f in faces for a, b in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0]))})
        for u, v in edges:
            new = list(faces)
            if _flip(new, _dart_owner(new), u, v) and add(new):
                queue.append(new)
    return out


def small_colored_maps(m: int) -> Iterator[EmbeddedColoredGraph]:
    """Every member of P_m (with repetitions) for small m.

    Any simple plane graph extends to a triangulation on the same vertices,
    and its black faces are then a set of triangles, so ranging over all
    triangulations and all triangle subsets covers P_m.
    """
    if not 3 <= m <= MAX_EXHAUSTIVE_M:
        raise ValueError(f"exhaustive generation supports 3 <= m <= {MAX_EXHAUSTIVE_M}")
    for faces in sphere_triangulations(m):
        nf = len(faces)
        at_vertex = [0] * m
        for i, f in enumerate(faces):
            for v in f:
                at_vertex[v] |= 1 << i
        for subset in range(1 << nf):
            if any(subset & mask in (0, mask) for mask in at_vertex):
                continue
            yield map_from_triangulation(faces, [i for i in range(nf) if subset >> i & 1])


# --- bundled fixtures ------------------------------------------------------------------

def single_triangle(inner: str = WHITE) -> EmbeddedColoredGraph:
    other = BLACK if inner == WHITE else WHITE
    rot = {0: (1, 2), 1: (2, 0), 2: (0, 1)}
    g = EmbeddedColoredGraph([rot], [None], [0])
    # face 0 is the outer face, face 1 the inner one
    g.coloring = {0: other, 1: inner}
    return g.validate()


def nested_triangles() -> EmbeddedColoredGraph:
    """Triangle 3-4-5 inside the inner (black) face of triangle 0-1-2."""
    rot_a = {0: (1, 2), 1: (2, 0), 2: (0, 1)}
    rot_b = {3: (4, 5), 4: (5, 3), 5: (3, 4)}
    g = EmbeddedColoredGraph([rot_a, rot_b], [None, (0, 1)], [0, 0])
    g.coloring = {0: WHITE, 1: BLACK, 2: WHITE}
    return g.validate()


def square() -> EmbeddedColoredGraph:
    rot = {0: (1, 3), 1: (2, 0), 2: (3, 1), 3: (0, 2)}
    g = EmbeddedColoredGraph([rot], [None], [0])
    g.coloring = {0: BLACK, 1: WHITE}
    return g.validate()


def run_planar_suite(random_maps: int = 1000, max_m: int = 40, exhaustive_m: int = 8,
                     seed: int = 0) -> list[Check]:
    """All planar checks on random maps and exhaustively for small m."""
    rng = random.Random(seed)
    counts = {"estimates": 0, "mckay": 0, "identity": 0, "deficit": 0}
    failures: list = []

    def run_all(g: EmbeddedColoredGraph, deficit: bool, tag: str):
        checks = [("estimates", planar_estimates_check(g))]
        z = {v: rng.randint(0, 20) for v in g.vertices()}
        checks.append(("mckay", mckay_check(g, z).check))
        faces = trace_faces(g)
        alloc = {f.index: rng.randint(0, 5) for f in faces if f.color == WHITE}
        checks.append(("identity", white_triangle_count(g, alloc).check))
        if deficit and g.r == 1:
            for f in faces:
                checks.append(("deficit", bw_deficit_check(g, f.index).check))
        for key, c in checks:
            counts[key] += 1
            if not c.passed:
                failures.append(f"{tag}: {c.line()}")

    for i in range(random_maps):
        m = rng.randint(3, max_m)
        run_all(generate_random_colored_map(m, rng.getrandbits(32)), True, f"random m={m}")
    for m in range(3, exhaustive_m + 1):
        for g in small_colored_maps(m):
            run_all(g, True, f"exhaustive m={m}")
    summary = " ".join(f"{k}={v}" for k, v in counts.items())
    status = PASS if not failures else FAIL
    out = [Check("planar_suite", status, summary + (f" first={failures[0]}" if failures else ""))]
    for n, x in ((3, (1, 1, 1)), (4, (1, 1, 1, 1)), (4, (2, 1, 1, 1)), (5, (1, 2, 3, 4, 5)),
                 (6, (Fraction(1, 2), 1, 2, 3, 1, 1))):
        out.append(weighted_cayley_check(x))
    return out
