import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from bmhull.bm import PathConfig, sample_path, sample_points
from bmhull.geom import (
    AngleSet,
    ConvexPolygon,
    convex_hull,
    path_hull,
    perimeter,
    rotate_points,
    rotated_hull_perimeter,
    support_value,
    union_hull_perimeter,
)

coords = st.floats(-100, 100, allow_nan=False, allow_infinity=False)
point_sets = arrays(np.float64, st.tuples(st.integers(1, 60), st.just(2)), elements=coords)


def cauchy_perimeter(points, n=4096):
    # trapezoid rule on the periodic support function
    theta = np.arange(n) * (2 * math.pi / n)
    pts = np.asarray(points)
    h = (pts[:, :1] * np.cos(theta) + pts[:, 1:] * np.sin(theta)).max(axis=0)
    return float(h.sum() * 2 * math.pi / n)


def brute_force_extreme_points(points):
    # a point is extreme iff some direction makes it the unique maximiser
    pts = np.unique(np.asarray(points), axis=0)
    keep = set()
    theta = np.linspace(0, 2 * math.pi, 20000, endpoint=False)
    proj = pts @ np.stack([np.cos(theta), np.sin(theta)])
    for k in range(len(theta)):
        col = proj[:, k]
        best = np.flatnonzero(col >= col.max() - 1e-12)
        if len(best) == 1:
            keep.add(tuple(pts[best[0]]))
    return keep


def test_unit_square():
    pts = [(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5), (0.5, 0)]
    hull = convex_hull(pts)
    assert len(hull) == 4
    assert perimeter(hull) == 4.0
    assert hull.signed_area == 1.0


def test_hull_is_ccw_from_lexicographic_minimum():
    hull = convex_hull([(1, 1), (0, 1), (1, 0), (0, 0)])
    np.testing.assert_array_equal(hull.vertices, [[0, 0], [1, 0], [1, 1], [0, 1]])


def test_degenerate_conventions():
    assert perimeter(convex_hull([(2, 3)])) == 0.0
    assert perimeter(convex_hull([(2, 3), (2, 3)])) == 0.0
    seg = convex_hull([(0, 0), (3, 4), (1.5, 2)])
    assert len(seg) == 2
    assert perimeter(seg) == 10.0


def test_empty_rejected():
    with pytest.raises(ValueError, match="empty"):
        convex_hull(np.empty((0, 2)))
    with pytest.raises(ValueError, match="empty"):
        path_hull([])


@pytest.mark.parametrize("bad", [np.zeros((3, 3)), [(0, np.nan)], [(np.inf, 0)]])
def test_bad_points_rejected(bad):
    with pytest.raises(ValueError):
        convex_hull(bad)


def test_regular_polygon_perimeter():
    n = 12
    t = 2 * math.pi * np.arange(n) / n
    pts = np.column_stack([np.cos(t), np.sin(t)])
    assert perimeter(convex_hull(pts)) == pytest.approx(2 * n * math.sin(math.pi / n), rel=1e-14)


def test_support_value():
    pts = [(0, 0), (2, 1), (-1, 3)]
    assert support_value(pts, 0.0) == 2.0
    assert support_value(pts, math.pi / 2) == 3.0
    assert support_value(pts, math.pi) == pytest.approx(1.0)


@settings(max_examples=60, deadline=None)
@given(point_sets)
def test_cauchy_formula(pts):
    hull = convex_hull(pts)
    assert perimeter(hull) == pytest.approx(cauchy_perimeter(pts), abs=1e-6 * max(1.0, np.abs(pts).max()))


@settings(max_examples=100, deadline=None)
@given(point_sets, coords, coords)
def test_perimeter_monotone_under_inclusion(pts, x, y):
    more = np.vstack([pts, [x, y]])
    assert perimeter(convex_hull(more)) >= perimeter(convex_hull(pts)) * (1 - 1e-12)


@settings(max_examples=100, deadline=None)
@given(point_sets, st.floats(0, 2 * math.pi, exclude_max=True))
def test_perimeter_rotation_invariant(pts, w):
    a = perimeter(convex_hull(pts))
    b = perimeter(convex_hull(rotate_points(pts, w)))
    assert b == pytest.approx(a, rel=1e-9, abs=1e-9)


@settings(max_examples=100, deadline=None)
@given(point_sets)
def test_hull_idempotent(pts):
    hull = convex_hull(pts)
    assert convex_hull(hull.vertices) == hull


@settings(max_examples=40, deadline=None)
@given(arrays(np.float64, st.tuples(st.integers(3, 25), st.just(2)), elements=st.integers(-20, 20).map(float)))
def test_hull_matches_brute_force(pts):
    assume(len(np.unique(pts, axis=0)) >= 3)
    hull = convex_hull(pts)
    assume(len(hull) >= 3)
    assert {tuple(v) for v in hull.vertices} == brute_force_extreme_points(pts)


@settings(max_examples=50, deadline=None)
@given(point_sets)
def test_hull_convex_ccw(pts):
    v = convex_hull(pts).vertices
    if len(v) < 3:
        return
    d = np.roll(v, -1, axis=0) - v
    cross = d[:, 0] * np.roll(d[:, 1], -1) - d[:, 1] * np.roll(d[:, 0], -1)
    assert np.all(cross > 0)


@pytest.mark.parametrize("n_steps", [1, 5, 15, 16, 17, 100, 4096])
def test_path_hull_matches_plain_hull(n_steps):
    for i in range(5):
        pts = sample_points(PathConfig(n_steps, seed=3, path_index=i))
        assert path_hull(pts) == convex_hull(pts)


def test_path_hull_on_lattice_walk():
    # many exact ties and collinear runs
    rng = np.random.default_rng(0)
    steps = rng.integers(-1, 2, size=(5000, 2)).astype(float)
    pts = np.vstack([[0, 0], np.cumsum(steps, axis=0)])
    assert path_hull(pts) == convex_hull(pts)


def test_angle_set_validation():
    with pytest.raises(ValueError):
        AngleSet(())
    with pytest.raises(ValueError):
        AngleSet((1.0, 0.5))
    with pytest.raises(ValueError):
        AngleSet((2 * math.pi,))
    with pytest.raises(ValueError):
        AngleSet((0.0,), full_circle=True)
    assert AngleSet.finite([2 * math.pi + 1, 1.0]).angles == (pytest.approx(1.0),)
    assert AngleSet.from_degrees([90, 0]).angles == (0.0, math.pi / 2)
    assert AngleSet.circle().full_circle


def test_single_angle_is_plain_hull():
    pts = sample_points(PathConfig(200, seed=1))
    assert rotated_hull_perimeter(pts, AngleSet((0.0,))) == perimeter(convex_hull(pts))


def test_full_circle_is_disk():
    pts = [(3, 4), (-1, 0), (0, 2)]
    assert rotated_hull_perimeter(pts, AngleSet.circle()) == pytest.approx(10 * math.pi)


def test_two_opposite_angles_symmetrise():
    pts = np.array([(0, 0), (2, 0), (2, 1)])
    both = np.vstack([pts, -pts])
    assert rotated_hull_perimeter(pts, AngleSet((0.0, math.pi))) == pytest.approx(perimeter(convex_hull(both)))


def test_union_hull_matches_rotating_every_point():
    path = sample_path(PathConfig(2000, seed=11))
    omega = AngleSet.from_degrees([0, 90, 180, 270])
    every = np.vstack([rotate_points(path.points, w) for w in omega.angles])
    expected = perimeter(convex_hull(every))
    assert rotated_hull_perimeter(path, omega) == pytest.approx(expected, rel=1e-13)
    hull = path_hull(path.points).vertices
    assert union_hull_perimeter(hull, omega) == pytest.approx(expected, rel=1e-13)


@settings(max_examples=40, deadline=None)
@given(point_sets, st.lists(st.floats(0, 6.28), min_size=1, max_size=5), st.floats(0, 6.28))
def test_adding_angles_grows_perimeter(pts, angles, extra):
    small = AngleSet.finite(angles)
    big = AngleSet.finite(angles + [extra])
    a = rotated_hull_perimeter(pts, small)
    assert rotated_hull_perimeter(pts, big) >= a * (1 - 1e-12) - 1e-12
    assert rotated_hull_perimeter(pts, AngleSet.circle()) >= rotated_hull_perimeter(pts, big) * (1 - 1e-12) - 1e-12


def test_polygon_equality():
    a = ConvexPolygon(np.array([[0.0, 0.0], [1.0, 0.0]]))
    b = ConvexPolygon(np.array([[0.0, 0.0], [1.0, 0.0]]))
    assert a == b
    assert a != ConvexPolygon(np.array([[0.0, 0.0]]))


@pytest.mark.parametrize("n", [16, 40])
def test_path_hull_degenerate_long_inputs(n):
    same = np.full((n, 2), 1.5)
    assert path_hull(same) == convex_hull(same)
    line = np.column_stack([np.arange(n, dtype=float), 2.0 * np.arange(n)])
    assert path_hull(line) == convex_hull(line)
    assert len(path_hull(line)) == 2
