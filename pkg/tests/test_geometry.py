"""Geometry layer: predicates, hulls, containment, coverage decisions."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.spatial import ConvexHull as QhullHull

from sectornet.geometry import (
    ANGLE_TOL,
    DIST_SQ_TOL,
    QUARTER_TURN,
    TAU,
    HalfPlane,
    Point,
    Wedge,
    containment_matrix,
    convex_hull,
    coverage_sample_check,
    distance,
    dot_sign,
    halfplane_covered,
    normalize_angle,
    orientation_sign,
    plane_coverage_verify,
    squared_distance,
    weakly_separable,
    wedge_contains,
)
from sectornet.rng import SplitMix64


def test_point_rejects_non_finite():
    for bad in (math.nan, math.inf, -math.inf):
        with pytest.raises(ValueError):
            Point(bad, 0.0)
        with pytest.raises(ValueError):
            Point(0.0, bad)


def test_point_basics():
    p = Point(3.0, -4.0)
    assert p.as_tuple() == (3.0, -4.0)
    assert distance(Point(0.0, 0.0), p) == 5.0
    assert squared_distance(Point(0.0, 0.0), p) == 25.0
    assert Point(1.0, 2.0) == Point(1.0, 2.0)
    assert len({Point(1.0, 2.0), Point(1.0, 2.0)}) == 1


def test_normalize_angle_range_and_values():
    assert normalize_angle(0.0) == 0.0
    assert normalize_angle(TAU) == 0.0
    assert normalize_angle(-0.5) == pytest.approx(TAU - 0.5)
    assert normalize_angle(7.0 * math.pi) == pytest.approx(math.pi)
    rng = SplitMix64(5)
    for _ in range(200):
        a = rng.uniform(-50.0, 50.0)
        v = normalize_angle(a)
        assert 0.0 <= v < TAU
        assert math.isclose(math.cos(v), math.cos(a), abs_tol=1e-12)
        assert math.isclose(math.sin(v), math.sin(a), abs_tol=1e-12)


def _sign_fraction(a, b, c):
    """Independent exact orientation via rational arithmetic."""
    ax, ay = map(Fraction, a.as_tuple())
    bx, by = map(Fraction, b.as_tuple())
    cx, cy = map(Fraction, c.as_tuple())
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (v > 0) - (v < 0)


def test_orientation_sign_matches_rational_arithmetic():
    rng = SplitMix64(11)
    pts = []
    for _ in range(60):
        base = rng.uniform(-5.0, 5.0)
        pts.append(Point(base + rng.gauss() * 1e-13, base + rng.gauss() * 1e-13))
    pts += [Point(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(60)]
    checked = degenerate = 0
    for _ in range(4000):
        a, b, c = (pts[rng.randrange(len(pts))] for _ in range(3))
        got = orientation_sign(a, b, c)
        want = _sign_fraction(a, b, c)
        assert got == want, (a, b, c)
        checked += 1
        degenerate += want == 0
    assert checked == 4000 and degenerate > 0


def test_orientation_sign_exact_on_scaled_integer_grid():
    # Exactly collinear inputs (dyadic coordinates) must give sign 0.
    s = 2.0**-30
    a = Point(3 * s, 5 * s)
    b = Point(7 * s, 13 * s)
    c = Point(11 * s, 21 * s)  # b - a == c - b
    assert orientation_sign(a, b, c) == 0
    assert orientation_sign(a, c, b) == 0
    assert orientation_sign(a, b, Point(11 * s, 21 * s + s)) == 1
    assert orientation_sign(a, b, Point(11 * s, 21 * s - s)) == -1


def test_dot_sign_basic():
    o, x, y = Point(0.0, 0.0), Point(1.0, 0.0), Point(0.0, 1.0)
    assert dot_sign(o, x, y) == 0  # perpendicular
    assert dot_sign(o, x, Point(2.0, 5.0)) == 1
    assert dot_sign(o, x, Point(-1e-300, 1.0)) == -1


def test_convex_hull_hand_case():
    pts = [
        Point(0.0, 0.0),
        Point(2.0, 0.0),
        Point(2.0, 2.0),
        Point(0.0, 2.0),
        Point(1.0, 1.0),  # interior
        Point(1.0, 0.0),  # edge midpoint
        Point(0.0, 0.0),  # duplicate
    ]
    hull = convex_hull(pts)
    assert hull == [Point(0.0, 0.0), Point(2.0, 0.0), Point(2.0, 2.0), Point(0.0, 2.0)]


def test_convex_hull_collinear_returns_extremes():
    pts = [Point(float(k), 2.0 * k) for k in (3, 0, 1, 4, 2)]
    assert convex_hull(pts) == [Point(0.0, 0.0), Point(4.0, 8.0)]
    assert convex_hull([Point(1.0, 1.0)]) == [Point(1.0, 1.0)]


def test_convex_hull_matches_qhull_on_random_sets():
    rng = SplitMix64(23)
    for _ in range(40):
        pts = [Point(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(30)]
        ours = convex_hull(pts)
        arr = np.array([p.as_tuple() for p in pts])
        theirs = {tuple(arr[i]) for i in QhullHull(arr).vertices}
        assert {p.as_tuple() for p in ours} == theirs
        # counterclockwise, starting at the lexicographic minimum
        assert ours[0] == min(ours, key=lambda p: (p.x, p.y))
        area2 = sum(
            ours[i].x * ours[(i + 1) % len(ours)].y - ours[(i + 1) % len(ours)].x * ours[i].y
            for i in range(len(ours))
        )
        assert area2 > 0


def test_wedge_validation():
    apex = Point(0.0, 0.0)
    with pytest.raises(ValueError):
        Wedge(apex, 0.0, 0.0)
    with pytest.raises(ValueError):
        Wedge(apex, 0.0, TAU + 1e-6)
    with pytest.raises(ValueError):
        Wedge(apex, 0.0, QUARTER_TURN, 0.0)
    w = Wedge(apex, -QUARTER_TURN, QUARTER_TURN)
    assert 0.0 <= w.orientation < TAU


def test_wedge_contains_quarter_wedge():
    w = Wedge(Point(0.0, 0.0), math.pi / 4.0, QUARTER_TURN)  # spans [0, pi/2]
    assert wedge_contains(w, Point(0.0, 0.0))  # apex belongs
    assert wedge_contains(w, Point(1.0, 0.0))  # right boundary ray
    assert wedge_contains(w, Point(0.0, 1.0))  # left boundary ray
    assert wedge_contains(w, Point(5.0, 3.0))
    assert not wedge_contains(w, Point(-1.0, 0.5))
    assert not wedge_contains(w, Point(1.0, -1e-6))
    assert not wedge_contains(w, Point(-1e-6, 1.0))


def test_wedge_range_uses_squared_distance_tolerance():
    w = Wedge(Point(0.0, 0.0), math.pi / 4.0, QUARTER_TURN, range=5.0)
    assert wedge_contains(w, Point(3.0, 4.0))  # exactly at range
    assert not wedge_contains(w, Point(3.0, 4.1))
    # squared distance within DIST_SQ_TOL of range**2 still counts
    r = math.sqrt(25.0 + 0.5 * DIST_SQ_TOL)
    assert wedge_contains(w, Point(r / math.sqrt(2.0), r / math.sqrt(2.0)))


def _contains_reference(w, p):
    """Angle-interval membership, written independently of the vector route."""
    dx, dy = p.x - w.apex.x, p.y - w.apex.y
    d = math.hypot(dx, dy)
    if d == 0.0:
        return True
    if math.isfinite(w.range) and d * d > w.range * w.range + DIST_SQ_TOL:
        return False
    theta = math.atan2(dy, dx) % TAU
    half = 0.5 * w.aperture
    off = (theta - w.orientation) % TAU
    slack = ANGLE_TOL  # comparable to the vector-form tolerance at unit scale
    return off <= half + slack or off >= TAU - half - slack


def test_containment_matrix_matches_angle_interval_reference():
    rng = SplitMix64(37)
    for _ in range(30):
        wedges = [
            Wedge(
                Point(rng.uniform(-5, 5), rng.uniform(-5, 5)),
                rng.uniform(0, TAU),
                rng.choice([QUARTER_TURN, 1.0, math.pi, 5.0]),
                rng.choice([math.inf, 3.0, 8.0]),
            )
            for _ in range(6)
        ]
        pts = [Point(rng.uniform(-9, 9), rng.uniform(-9, 9)) for _ in range(40)]
        got = containment_matrix(wedges, pts)
        assert got.shape == (6, 40) and got.dtype == bool
        for i, w in enumerate(wedges):
            for j, p in enumerate(pts):
                assert got[i, j] == _contains_reference(w, p), (w, p)
                assert got[i, j] == wedge_contains(w, p)


def test_containment_matrix_accepts_ndarray():
    w = Wedge(Point(0.0, 0.0), 0.0, math.pi)
    arr = np.array([[1.0, 0.0], [-1.0, 0.5], [0.0, 2.0]])
    got = containment_matrix([w], arr)
    assert got.tolist() == [[True, False, True]]


def test_halfplane_value_and_contains():
    hp = HalfPlane(0.0, 1.0, 2.0)  # y >= 2
    assert hp.value(10.0, 5.0) == 3.0
    assert hp.contains(Point(0.0, 2.0))
    assert not hp.contains(Point(0.0, 1.999))
    assert hp.contains(Point(0.0, 1.999), tol=0.01)


def test_plane_coverage_rejects_bounded_wedges():
    with pytest.raises(ValueError):
        plane_coverage_verify([Wedge(Point(0.0, 0.0), 0.0, QUARTER_TURN, 5.0)])


def test_plane_coverage_empty_and_direction_gap():
    rep = plane_coverage_verify([])
    assert not rep.covered and rep.witness_direction is not None
    # all wedges aimed the same way: a direction certificate must appear
    wedges = [Wedge(Point(float(i), 0.0), 1.0, QUARTER_TURN) for i in range(4)]
    rep = plane_coverage_verify(wedges)
    assert not rep.covered
    assert rep.witness_direction is not None
    half = QUARTER_TURN / 2.0 + 1e-6
    off = (rep.witness_direction - 1.0) % TAU
    assert half < off < TAU - half  # genuinely outside every angular interval


def test_plane_coverage_hole_despite_full_direction_circle():
    # Four quarter wedges pointing outward from a square leave the middle bare.
    corners = [Point(-10.0, -10.0), Point(10.0, -10.0), Point(10.0, 10.0), Point(-10.0, 10.0)]
    outward = [1.25 * math.pi, 1.75 * math.pi, 0.25 * math.pi, 0.75 * math.pi]
    wedges = [Wedge(c, o, QUARTER_TURN) for c, o in zip(corners, outward)]
    rep = plane_coverage_verify(wedges)
    assert not rep.covered
    assert rep.witness_point is not None
    assert not any(wedge_contains(w, rep.witness_point) for w in wedges)


def test_plane_coverage_two_halfplane_wedges():
    # apex height decides: facing down from y=1 overlaps the upward half,
    # facing down from y=-1 leaves the slab -1 < y < 0 bare
    up = Wedge(Point(0.0, 0.0), math.pi / 2.0, math.pi)
    overlap = Wedge(Point(3.0, 1.0), 3.0 * math.pi / 2.0, math.pi)
    assert plane_coverage_verify([up, overlap]).covered
    touching = Wedge(Point(3.0, 0.0), 3.0 * math.pi / 2.0, math.pi)
    assert plane_coverage_verify([up, touching]).covered
    apart = Wedge(Point(3.0, -1.0), 3.0 * math.pi / 2.0, math.pi)
    rep = plane_coverage_verify([up, apart])
    assert not rep.covered and rep.witness_point is not None
    assert -1.0 < rep.witness_point.y < 0.0


def test_full_circle_wedge_covers():
    assert plane_coverage_verify([Wedge(Point(1.0, 1.0), 0.0, TAU)]).covered


def test_halfplane_covered_cases():
    hp = HalfPlane(0.0, 1.0, 0.0)  # upper half-plane
    up = Wedge(Point(0.0, 0.0), math.pi / 2.0, math.pi)
    assert halfplane_covered([up], hp).covered
    # one quarter wedge can never cover a half-plane
    q = Wedge(Point(0.0, 0.0), math.pi / 2.0, QUARTER_TURN)
    rep = halfplane_covered([q], hp)
    assert not rep.covered
    assert rep.witness_point is not None
    assert hp.value(rep.witness_point.x, rep.witness_point.y) >= -1e-9
    assert not wedge_contains(q, rep.witness_point)
    # two quarter wedges with apexes on the boundary line, fanned to split it
    left = Wedge(Point(0.0, 0.0), 0.25 * math.pi, QUARTER_TURN)
    right = Wedge(Point(0.0, 0.0), 0.75 * math.pi, QUARTER_TURN)
    assert halfplane_covered([left, right], hp).covered
    rep = halfplane_covered([], hp)
    assert not rep.covered and rep.witness_point is not None


def test_sampling_check_agrees_with_exact_decision():
    rng = SplitMix64(41)
    agree = 0
    for _ in range(20):
        wedges = [
            Wedge(Point(rng.uniform(-3, 3), rng.uniform(-3, 3)), rng.uniform(0, TAU), math.pi)
            for _ in range(3)
        ]
        exact = plane_coverage_verify(wedges)
        sampled = coverage_sample_check(wedges, grid_points=4000, ring_points=720)
        if exact.covered:
            # sampling can only refute; on robust inputs it must not
            assert sampled.covered
            agree += 1
    assert agree > 0


def test_weakly_separable_cases():
    a = [Point(0.0, 0.0), Point(1.0, 0.5)]
    b = [Point(5.0, 0.0), Point(6.0, -0.5)]
    assert weakly_separable(a, b)
    # crossing segments cannot be separated
    a = [Point(0.0, 0.0), Point(2.0, 2.0)]
    b = [Point(0.0, 2.0), Point(2.0, 0.0)]
    assert not weakly_separable(a, b)
    # sharing a point is fine for *weak* separation
    a = [Point(0.0, 0.0), Point(-1.0, 0.0)]
    b = [Point(0.0, 0.0), Point(1.0, 0.0)]
    assert weakly_separable(a, b)
    assert weakly_separable([], [Point(0.0, 0.0)])
    # one group surrounding the other
    ring = [Point(math.cos(t), math.sin(t)) for t in (0.1, 2.2, 4.3)]
    assert not weakly_separable(ring, [Point(0.0, 0.0)])
