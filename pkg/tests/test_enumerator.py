import pytest

from hamsphere.complex_core import is_spanning_sphere
from hamsphere.enumerator import (
    PolygonInstance,
    count_polygon_by_completion,
    enumerate_annulus_triangulations,
    enumerate_labeled_spheres,
    enumerate_polygon_triangulations,
    injection_inequality_check,
    is_polygon_triangulation,
)
from hamsphere.exact_counts import labeled_sphere_count, polygon_triangulation_count


@pytest.mark.parametrize("m,k", [(m, k) for m in (3, 4, 5) for k in (0, 1, 2)] + [(6, 0), (3, 3), (4, 3)])
def test_polygon_enumeration_matches_formula(m, k):
    tris = enumerate_polygon_triangulations(PolygonInstance.standard(m, k))
    assert len(tris) == polygon_triangulation_count(k, m)
    assert all(len(t) == m + 2 * k - 2 for t in tris)


@pytest.mark.parametrize("m,k", [(3, 1), (4, 1), (3, 2), (5, 0)])
def test_two_polygon_oracles_agree(m, k):
    assert count_polygon_by_completion(m, k) == polygon_triangulation_count(k, m)


def test_polygon_caps_and_validation():
    with pytest.raises(ValueError):
        enumerate_polygon_triangulations(PolygonInstance.standard(7, 0))
    with pytest.raises(ValueError):
        PolygonInstance((0, 1))
    with pytest.raises(ValueError):
        PolygonInstance((0, 1, 2), (2,))


def test_is_polygon_triangulation():
    sq = PolygonInstance.standard(4, 0)
    assert is_polygon_triangulation(sq, {(0, 1, 2), (0, 2, 3)})
    assert not is_polygon_triangulation(sq, {(0, 1, 2)})
    # the diagonal 0-2 is fine but both triangles on 1-3 side use a boundary chord twice
    assert not is_polygon_triangulation(sq, {(0, 1, 2), (0, 2, 3), (1, 2, 3)})


@pytest.mark.parametrize("n,count", [(4, 1), (5, 10), (6, 195)])
def test_sphere_enumeration_small(n, count):
    spheres = enumerate_labeled_spheres(n)
    assert len(spheres) == count == labeled_sphere_count(n)
    assert len(set(spheres)) == count
    assert all(is_spanning_sphere(n, s.triangles) for s in spheres)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_sphere_methods_agree(n):
    assert enumerate_labeled_spheres(n, method="subset") == enumerate_labeled_spheres(n, method="completion")


def test_sphere_enumeration_range():
    with pytest.raises(ValueError):
        enumerate_labeled_spheres(3)
    with pytest.raises(ValueError):
        enumerate_labeled_spheres(8)
    with pytest.raises(ValueError):
        enumerate_labeled_spheres(5, method="magic")


def test_bipyramids_at_five():
    spheres = enumerate_labeled_spheres(5)
    for s in spheres:
        degrees = sorted(sum(v in t for t in s.triangles) for v in range(5))
        assert degrees == [3, 3, 4, 4, 4]


def test_annulus_counts_frozen():
    # abstract counts from the completion oracle (both inner orientations)
    assert len(enumerate_annulus_triangulations(3, 3, 0)) == 42
    assert len(enumerate_annulus_triangulations(3, 4, 0)) == 264
    assert len(enumerate_annulus_triangulations(4, 3, 0)) == 264
    assert len(enumerate_annulus_triangulations(3, 3, 1)) == 576


@pytest.mark.parametrize("m1,m2,k", [(3, 3, 0), (3, 4, 0), (4, 3, 0), (3, 3, 1)])
def test_injection_inequality(m1, m2, k):
    c = injection_inequality_check(m1, m2, k)
    assert c.passed, c.line()
