import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamsphere.planar_maps import (
    BLACK,
    WHITE,
    EmbeddedColoredGraph,
    MapError,
    bw_deficit_check,
    format_map,
    generate_random_colored_map,
    map_from_triangulation,
    mckay_check,
    nested_triangles,
    parse_map,
    planar_estimates_check,
    random_triangulation,
    single_triangle,
    small_colored_maps,
    sphere_triangulations,
    square,
    surrounded_counts,
    trace_faces,
    weighted_cayley_check,
    white_triangle_count,
)


def k4_map() -> EmbeddedColoredGraph:
    # K4 is not Eulerian, so it is only used for face tracing
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    succ = {}
    for a, b, c in faces:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            succ.setdefault(x, {})[y] = z
    rot = {}
    for v, s in succ.items():
        order = [min(s)]
        while s[order[-1]] != order[0]:
            order.append(s[order[-1]])
        rot[v] = order
    return EmbeddedColoredGraph([rot], [None], [0])


def test_face_counts_by_euler():
    assert len(trace_faces(single_triangle())) == 2
    assert len(trace_faces(nested_triangles())) == 3
    g = k4_map()
    assert len(g.local_faces()[0]) == 4


def test_validation_errors():
    with pytest.raises(MapError):
        EmbeddedColoredGraph([{0: (1, 2), 1: (2, 0), 2: (0, 1)}], [None], [0], {0: WHITE, 1: WHITE}).validate()
    with pytest.raises(MapError):
        EmbeddedColoredGraph([{0: (1,), 1: (0,)}], [None], [0], {0: WHITE}).validate()
    with pytest.raises(MapError):
        EmbeddedColoredGraph([{0: (1, 2), 1: (2, 0), 2: (0, 1)}], [None], [0], {0: WHITE}).validate()
    with pytest.raises(MapError):
        EmbeddedColoredGraph([], [], []).validate()


def test_nonplanar_rotation_rejected():
    # K_{3,3}-free but a twisted rotation on the octahedron graph yields genus > 0
    base = map_from_triangulation(random_triangulation(6, random.Random(2)), [0, 2, 4, 6])
    rot = dict(base.components[0])
    v = next(v for v, nb in rot.items() if len(nb) >= 4)
    nb = list(rot[v])
    nb[0], nb[1] = nb[1], nb[0]
    rot[v] = tuple(nb)
    g = EmbeddedColoredGraph([rot], [None], [0], dict(base.coloring))
    with pytest.raises(MapError):
        g.validate()


def test_planar_estimates_examples():
    assert planar_estimates_check(single_triangle()).passed
    assert planar_estimates_check(nested_triangles()).passed


def test_mckay_examples():
    res = mckay_check(nx.cycle_graph(3), [3, 2, 1])
    assert (res.L, res.refined_bound, res.bound) == (4, 4, 18) and res.check.passed
    star = nx.star_graph(3)
    assert mckay_check(star, [1, 1, 1, 1]).L == 3
    assert mckay_check(nested_triangles(), {v: 0 for v in range(6)}).L == 0
    with pytest.raises(ValueError):
        mckay_check(star, [-1, 1, 1, 1])
    with pytest.raises(MapError):
        mckay_check(nx.complete_graph(5), [1] * 5)


def test_bw_deficit_single_triangle_is_tight():
    g = single_triangle()
    faces = trace_faces(g)
    white = next(f.index for f in faces if f.color == WHITE)
    black = next(f.index for f in faces if f.color == BLACK)
    w = bw_deficit_check(g, white)
    b = bw_deficit_check(g, black)
    assert (w.B - w.W, w.bound) == (1, 1) and w.check.passed
    assert (b.B - b.W, b.bound) == (-1, -1) and b.check.passed
    with pytest.raises(IndexError):
        bw_deficit_check(g, 5)
    with pytest.raises(MapError):
        bw_deficit_check(nested_triangles(), 0)


def test_white_triangle_identity_examples():
    res = white_triangle_count(single_triangle(), {1: 0})
    assert res.T == 1 and res.lhs == Fraction(5, 2) and res.c_b == 1 and res.check.passed
    assert white_triangle_count(square(), {1: 1}).T == 4
    with pytest.raises(ValueError):
        white_triangle_count(single_triangle(), {0: 1})


def test_surrounded_count_depends_on_outer_colour():
    g = nested_triangles()
    assert surrounded_counts(g, 0)[WHITE] == 1
    # rooted at the black face between the triangles, no component sits in a white face
    assert surrounded_counts(g, 1)[WHITE] == 0


def test_serialization_round_trip():
    for g in (single_triangle(), nested_triangles(), generate_random_colored_map(25, 3)):
        text = format_map(g)
        again = parse_map(text).validate()
        assert format_map(again) == text
    with pytest.raises(MapError):
        parse_map("0: 1 2\n")


def test_weighted_cayley_examples():
    assert weighted_cayley_check([1, 1, 1]).witness.endswith("lhs=3 rhs=3")
    assert "lhs=16 rhs=16" in weighted_cayley_check([1, 1, 1, 1]).witness
    assert "lhs=50 rhs=50" in weighted_cayley_check([2, 1, 1, 1]).witness
    assert weighted_cayley_check([1, 2, 3, 4, 5, 6, 7]).passed
    with pytest.raises(ValueError):
        weighted_cayley_check([1] * 8)


@given(st.lists(st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5), min_size=2, max_size=6))
def test_weighted_cayley_property(x):
    assert weighted_cayley_check(x).passed


def test_triangulation_counts_small():
    # numbers of simple sphere triangulations up to isomorphism
    assert [len(sphere_triangulations(m)) for m in range(4, 9)] == [1, 1, 2, 5, 14]


def test_generator_m3_is_single_triangle():
    g = generate_random_colored_map(3, 0)
    assert g.r == 1 and len(g.edges()) == 3


@given(st.integers(3, 40), st.integers(0, 2**32))
def test_random_maps_satisfy_all_checks(m, seed):
    g = generate_random_colored_map(m, seed)
    assert g.m == m
    faces = trace_faces(g)
    fod = g.face_of_dart()
    for u, v in g.edges():
        assert {g.coloring[fod[(u, v)]], g.coloring[fod[(v, u)]]} == {BLACK, WHITE}
    assert planar_estimates_check(g).passed
    rng = random.Random(seed)
    assert mckay_check(g, {v: rng.randint(0, 9) for v in g.vertices()}).check.passed
    alloc = {f.index: rng.randint(0, 4) for f in faces if f.color == WHITE}
    assert white_triangle_count(g, alloc).check.passed
    if g.r == 1:
        for f in faces:
            assert bw_deficit_check(g, f.index).check.passed


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_exhaustive_small(m):
    count = 0
    for g in small_colored_maps(m):
        count += 1
        faces = trace_faces(g)
        assert planar_estimates_check(g).passed
        assert white_triangle_count(g, {}).check.passed
        if g.r == 1:
            assert all(bw_deficit_check(g, f.index).check.passed for f in faces)
    assert count > 0


def test_mckay_on_triangulations_is_tight_pattern():
    rng = random.Random(1)
    for _ in range(50):
        faces = random_triangulation(rng.randint(4, 30), rng)
        g = nx.Graph()
        for a, b, c in faces:
            g.add_edges_from(((a, b), (b, c), (c, a)))
        z = {v: rng.random() for v in g}
        assert mckay_check(g, z).check.passed
        assert mckay_check(g, {v: 1 for v in g}).L == 3 * g.number_of_nodes() - 6
