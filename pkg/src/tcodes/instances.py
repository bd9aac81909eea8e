"""Worked example inputs: curves, divisorial polytopes, and code setups."""

from __future__ import annotations

from .codes import EvaluationSetup
from .convex import ConcavePL, LatticePolytope
from .curve import INFINITY, Curve, CurvePoint
from .tvariety import DivisorialPolytope

HEXAGON_VERTICES = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]


def standard_elliptic(p: int = 7) -> Curve:
    """The curve y^2 = x^3 + 3, smooth for p = 7 and most small primes."""
    return Curve.elliptic(p, 0, 3)


def marked_point_pair(curve: Curve) -> tuple[CurvePoint, CurvePoint]:
    """Default slice carriers: {0, infinity} on the line, else the first two points."""
    pts = curve.rational_points()
    if curve.is_p1:
        return pts[0], INFINITY
    return pts[0], pts[1]


def surface_example(curve: Curve) -> DivisorialPolytope:
    """Interval box [0, 4] with a half-slope slice and a three-break slice."""
    q1, q2 = marked_point_pair(curve)
    s1 = ConcavePL.from_graph_points([((0,), 0), ((4,), 2)])
    s2 = ConcavePL.from_graph_points([((0,), 0), ((2,), 2), ((3,), 1), ((4,), -1)])
    return DivisorialPolytope(curve, LatticePolytope.interval(0, 4), {q1: s1, q2: s2})


def surface_code_setup(p: int = 7) -> EvaluationSetup:
    """The surface example over the standard elliptic curve, all admissible points."""
    return EvaluationSetup.build(surface_example(standard_elliptic(p)))


def toric_comparison_example(p: int) -> DivisorialPolytope:
    """Restriction of the surface example to the sub-box [0, 2] on the line.

    Both restricted slices have lattice graph vertices, so the instance also
    has a toric model; the exact distance stays within enumeration budget.
    """
    curve = Curve.p1(p)
    q1, q2 = marked_point_pair(curve)
    s1 = ConcavePL.from_graph_points([((0,), 0), ((2,), 1)])
    s2 = ConcavePL.from_graph_points([((0,), 0), ((2,), 2)])
    return DivisorialPolytope(curve, LatticePolytope.interval(0, 2), {q1: s1, q2: s2})


def threefold_example(p: int = 7) -> DivisorialPolytope:
    """Hexagonal box over the line with slices at 0, 1, and infinity.

    The slice duals are min(0, u2), min(0, u1), and min(2, 2 - u1 - u2); each
    is pinned down by its values at the hexagon vertices.
    """
    curve = Curve.p1(p)
    box = LatticePolytope(HEXAGON_VERTICES)
    verts = [(u1, u2) for u1, u2 in HEXAGON_VERTICES]
    s0 = ConcavePL.from_graph_points([((u1, u2), min(0, u2)) for u1, u2 in verts])
    s1 = ConcavePL.from_graph_points([((u1, u2), min(0, u1)) for u1, u2 in verts])
    sinf = ConcavePL.from_graph_points(
        [((u1, u2), min(2, 2 - u1 - u2)) for u1, u2 in verts]
    )
    zero = CurvePoint.affine(0, 0, p)
    one = CurvePoint.affine(1, 0, p)
    return DivisorialPolytope(curve, box, {zero: s0, one: s1, INFINITY: sinf})


def threefold_code_setup(p: int = 7) -> EvaluationSetup:
    return EvaluationSetup.build(threefold_example(p))


def p1_torus_points(curve: Curve) -> list[CurvePoint]:
    """Affine points with nonzero coordinate, matching the toric-model columns."""
    if not curve.is_p1:
        raise ValueError("torus points are a projective-line notion here")
    return [P for P in curve.rational_points() if not P.is_infinity and P.x != 0]


def toric_comparison_setup(p: int) -> EvaluationSetup:
    dp = toric_comparison_example(p)
    return EvaluationSetup.build(dp, p1_torus_points(dp.curve))


def record_example(p: int = 7) -> EvaluationSetup:
    """Single-slice instance on the standard elliptic curve with a sharp count.

    Floor degrees over [0, 4] are (3, 4, 5, 4, 3), all above 2g - 2, so the
    dimension equals the sharp count 19; evaluation uses the eleven rational
    points away from the two marked ones.
    """
    curve = standard_elliptic(p)
    q1, q2 = marked_point_pair(curve)
    s = ConcavePL.from_graph_points([((0,), 3), ((2,), 5), ((4,), 3)])
    dp = DivisorialPolytope(curve, LatticePolytope.interval(0, 4), {q1: s})
    points = [P for P in curve.rational_points() if P not in (q1, q2)]
    return EvaluationSetup.build(dp, points)
