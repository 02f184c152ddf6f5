import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamsphere.complex_core import (
    Complex2,
    ComplexFormatError,
    FailureReason,
    bipyramid,
    check_closed_surface,
    csaszar_torus,
    edges_of,
    euler_characteristic,
    format_complex,
    icosahedron,
    is_spanning_sphere,
    iter_complexes,
    octahedron,
    parse_complex,
    pinched_spheres,
    projective_plane6,
    spanning_report,
    tetrahedron,
    tri,
    vertex_link,
)

SPHERES = [tetrahedron(), bipyramid(), octahedron(), icosahedron()]


def test_triangle_canonical_form():
    assert tri(3, 1, 2) == (1, 2, 3)
    with pytest.raises(ValueError):
        tri(1, 1, 2)


def test_complex_rejects_out_of_range_and_duplicates():
    with pytest.raises(ValueError):
        Complex2(3, frozenset({(0, 1, 3)}))
    with pytest.raises(ValueError):
        Complex2(4, [(0, 1, 2), (2, 1, 0)])
    assert len(Complex2(4)) == 0


def test_euler_characteristic_examples():
    assert euler_characteristic(tetrahedron().triangles) == 2
    assert euler_characteristic({(0, 1, 2)}) == 1
    torus = csaszar_torus()
    assert len(torus) == 14
    assert len({e for t in torus.triangles for e in edges_of(t)}) == 21
    assert euler_characteristic(torus.triangles) == 0
    assert euler_characteristic(set()) == 0


def test_vertex_link_examples():
    link = vertex_link(tetrahedron(), 0)
    assert nx.is_isomorphic(link, nx.cycle_graph(3)) and set(link) == {1, 2, 3}
    single = vertex_link(Complex2(3, {(0, 1, 2)}), 0)
    assert sorted(single.edges) == [(1, 2)]
    octa = octahedron()
    for v in range(6):
        assert nx.is_isomorphic(vertex_link(octa, v), nx.cycle_graph(4))
    with pytest.raises(ValueError):
        vertex_link(tetrahedron(), 4)


@pytest.mark.parametrize("c", SPHERES, ids=["tetra", "bipyramid", "octa", "icosa"])
def test_recognizer_accepts_spheres(c):
    rep = check_closed_surface(c)
    assert rep.is_sphere and rep.failure_reason is None
    assert rep.euler_characteristic == 2
    assert rep.faces == 2 * rep.vertices_used - 4
    assert is_spanning_sphere(c.n, c.triangles)


def test_recognizer_rejections():
    torus = check_closed_surface(csaszar_torus())
    assert torus.failure_reason is FailureReason.WRONG_EULER and torus.describe() == "WRONG_EULER(0)"
    rp2 = check_closed_surface(projective_plane6())
    assert rp2.failure_reason is FailureReason.WRONG_EULER and rp2.euler_characteristic == 1
    pinched = check_closed_surface(pinched_spheres())
    assert pinched.failure_reason is FailureReason.LINK_NOT_CYCLE
    assert pinched.describe() == "LINK_NOT_CYCLE(0)"
    disc = check_closed_surface(Complex2(3, {(0, 1, 2)}))
    assert disc.failure_reason is FailureReason.NOT_PURE_DEGREE


def test_disconnected_union_of_spheres():
    two = Complex2(8, tetrahedron().triangles | {tri(a + 4, b + 4, c + 4) for a, b, c in tetrahedron().triangles})
    assert check_closed_surface(two).failure_reason is FailureReason.DISCONNECTED


def test_spanning_requires_every_vertex():
    assert is_spanning_sphere(4, tetrahedron().triangles)
    assert not is_spanning_sphere(5, tetrahedron().triangles)
    assert spanning_report(5, tetrahedron().triangles).failure_reason is FailureReason.NOT_SPANNING
    assert is_spanning_sphere(5, bipyramid().triangles)


def test_text_round_trip():
    text = format_complex(octahedron())
    assert parse_complex(text) == octahedron()
    both = format_complex(tetrahedron()) + "\n# comment\n\n" + format_complex(bipyramid())
    assert list(iter_complexes(both)) == [tetrahedron(), bipyramid()]
    with pytest.raises(ComplexFormatError):
        parse_complex("n 4\nt 0 1\n")
    with pytest.raises(ComplexFormatError):
        parse_complex("t 0 1 2\n")


@given(st.sampled_from(SPHERES), st.randoms(use_true_random=False))
def test_relabel_invariance(c, rnd):
    perm = list(range(c.n))
    rnd.shuffle(perm)
    a, b = check_closed_surface(c), check_closed_surface(c.relabel(perm))
    assert (a.is_sphere, a.euler_characteristic, a.faces) == (b.is_sphere, b.euler_characteristic, b.faces)


@given(st.sampled_from(SPHERES + [csaszar_torus(), projective_plane6()]), st.data())
def test_removing_a_triangle_breaks_surface(c, data):
    t = data.draw(st.sampled_from(sorted(c.triangles)))
    rep = check_closed_surface(Complex2(c.n, c.triangles - {t}))
    assert not rep.is_sphere and rep.failure_reason is FailureReason.NOT_PURE_DEGREE


@given(st.sampled_from(SPHERES + [csaszar_torus()]), st.sampled_from(SPHERES + [csaszar_torus()]))
def test_euler_additive_on_disjoint_union(a, b):
    shifted = {tri(x + a.n, y + a.n, z + a.n) for x, y, z in b.triangles}
    union = set(a.triangles) | shifted
    assert euler_characteristic(union) == euler_characteristic(a.triangles) + euler_characteristic(b.triangles)


def test_random_complexes_never_crash():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(0, 7)
        tris = {tri(*rng.sample(range(n), 3)) for _ in range(rng.randint(0, 12))} if n >= 3 else set()
        rep = check_closed_surface(Complex2(n, tris))
        assert rep.is_sphere == (rep.failure_reason is None)
