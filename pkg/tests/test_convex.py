"""Tests for lattice polytopes, concave PL functions, and min-plus duality."""

import random
from fractions import Fraction

import pytest

from tcodes import ConcavePL, LatticePolytope, SupportFunctionSlice, dual_of_slice, slice_of_dual, sup_convolution, toric_polytope
from tcodes.convex import (
    clip_segment,
    convex_hull_2d,
    floor_sum_over_lattice,
    hull_contains,
    polygon_area2,
    primitive_vector,
    signed_ceiling_interior_sum,
)
from tcodes.instances import HEXAGON_VERTICES

S1_GRAPH = [(0, 0), (4, 2)]
S2_GRAPH = [(0, 0), (2, 2), (3, 1), (4, -1)]


def hexagon() -> LatticePolytope:
    return LatticePolytope(HEXAGON_VERTICES)


def test_convex_hull_and_area():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (2, 1)]
    hull = convex_hull_2d([(Fraction(x), Fraction(y)) for x, y in pts])
    assert len(hull) == 4
    assert polygon_area2(hull) == 8
    assert hull_contains(hull, (Fraction(1), Fraction(1)))
    assert not hull_contains(hull, (Fraction(3), Fraction(1)))
    segment = convex_hull_2d([(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)), (Fraction(2), Fraction(2))])
    assert len(segment) == 2


def test_primitive_vector():
    assert primitive_vector((4, -6)) == (2, -3)
    assert primitive_vector((0, 5)) == (0, 1)
    with pytest.raises(ValueError):
        primitive_vector((0, 0))


def test_interval_polytope():
    box = LatticePolytope.interval(0, 4)
    assert box.bounds() == (0, 4)
    assert box.lattice_points() == [(0,), (1,), (2,), (3,), (4,)]
    assert box.volume() == 4
    assert box.width_along(0) == 4
    assert box.contains([Fraction(1, 2)])
    assert not box.contains([5])


def test_hexagon_polytope():
    hexa = hexagon()
    assert hexa.volume() == 3
    assert len(hexa.lattice_points()) == 7
    assert (0, 0) in hexa.lattice_points()
    with pytest.raises(ValueError):
        hexa.interior_lattice_points()
    assert LatticePolytope.interval(0, 4).interior_lattice_points() == [(1,), (2,), (3,)]
    assert hexa.width_along(0) == 2 and hexa.width_along(1) == 2
    assert hexa.is_full_dimensional()
    assert hexa.contains((0, 0)) and not hexa.contains((1, 1))
    assert hexa.scale(2).volume() == 12
    assert hexa.minkowski(hexa) == hexa.scale(2)


def test_clip_segment():
    hexa = hexagon().vertex_points()
    got = clip_segment(hexa, (Fraction(-2), Fraction(0)), (Fraction(2), Fraction(0)))
    assert got == (Fraction(1, 4), Fraction(3, 4))
    assert clip_segment(hexa, (Fraction(5), Fraction(5)), (Fraction(6), Fraction(5))) is None


def test_envelope_1d():
    f = ConcavePL.from_graph_points([(0, 0), (1, 1), (2, 2), (4, 2)])
    assert f.vertices == (((Fraction(0),), Fraction(0)), ((Fraction(2),), Fraction(2)), ((Fraction(4),), Fraction(2)))
    assert f.had_collinear
    g = ConcavePL.from_graph_points(S2_GRAPH)
    assert not g.had_collinear
    assert g.evaluate(1) == 1
    assert g.evaluate(Fraction(7, 2)) == 0
    assert g.try_evaluate(5) is None
    assert g.domain_contains(4) and not g.domain_contains(-1)
    # Dominated grid points disappear under the envelope.
    h = ConcavePL.from_graph_points([(0, 0), (1, -5), (2, 0)])
    assert h.vertices == (((Fraction(0),), Fraction(0)), ((Fraction(2),), Fraction(0)))


def test_envelope_2d():
    f = ConcavePL.from_graph_points([(v, min(0, v[1])) for v in HEXAGON_VERTICES] + [((0, 0), 0)])
    assert f.evaluate((0, 0)) == 0
    assert f.evaluate((Fraction(1, 2), Fraction(-1, 2))) == Fraction(-1, 2)
    assert f.evaluate((Fraction(1, 2), Fraction(1, 2))) == 0
    assert f.domain_polytope() == hexagon()
    assert f.try_evaluate((2, 2)) is None
    assert sorted(f.domain_lattice_points()) == sorted(hexagon().lattice_points())


def test_affine_data():
    half = ConcavePL.from_graph_points([(0, 0), (2, 1)])
    assert half.affine_data() == ((Fraction(1, 2),), Fraction(0))
    assert ConcavePL.from_graph_points(S2_GRAPH).affine_data() is None
    plane = ConcavePL.from_graph_points([((0, 0), 1), ((1, 0), 2), ((0, 1), 1), ((1, 1), 2)])
    assert plane.affine_data() == ((Fraction(1), Fraction(0)), Fraction(1))
    point = ConcavePL.from_graph_points([((3, 4), 5)])
    assert point.affine_data() == ((Fraction(0), Fraction(0)), Fraction(5))


def test_integrals():
    assert ConcavePL.from_graph_points(S1_GRAPH).integral() == 4
    assert ConcavePL.from_graph_points(S2_GRAPH).integral() == Fraction(7, 2)
    hexa = HEXAGON_VERTICES
    lower = ConcavePL.from_graph_points([(v, min(0, v[1])) for v in hexa] + [((0, 0), 0)])
    assert lower.integral() == Fraction(-2, 3)
    upper = ConcavePL.from_graph_points([(v, min(2, 2 - v[0] - v[1])) for v in hexa] + [((0, 0), 2)])
    assert upper.integral() == Fraction(16, 3)


def test_floor_and_ceiling_sums():
    s1 = ConcavePL.from_graph_points(S1_GRAPH)
    s2 = ConcavePL.from_graph_points(S2_GRAPH)
    assert floor_sum_over_lattice(s1) == 4
    assert signed_ceiling_interior_sum(s1) == 4
    assert floor_sum_over_lattice(s2) == 3
    assert signed_ceiling_interior_sum(s2) == 4


def test_duality_round_trip_frozen():
    s = SupportFunctionSlice([(0, 0), (2, 2), (3, 1), (4, -1)])
    assert s.value(0) == -2
    assert s.value(1) == 0
    assert s.value(-1) == -4
    f = dual_of_slice(s)
    assert slice_of_dual(f) == s
    assert dual_of_slice(slice_of_dual(f)) == f


def test_subdivision_vertices():
    s = SupportFunctionSlice(S2_GRAPH)
    got = s.subdivision_vertices()
    assert got == [((Fraction(-2),), Fraction(-7)), ((Fraction(-1),), Fraction(-4)), ((Fraction(1),), Fraction(0))]
    for v, z in got:
        assert s.value(v) == z


def test_sup_convolution():
    f = ConcavePL.from_graph_points([(0, 0), (2, 2)])
    g = ConcavePL.from_graph_points([(0, 0), (1, 0)])
    h = sup_convolution(f, g)
    assert h.domain_vertices() == [(Fraction(0),), (Fraction(3),)]
    assert h.evaluate(3) == 2
    assert h.evaluate(1) == 1
    two = sup_convolution(f, f)
    assert two == f.scale(2)


def test_toric_polytope():
    s1 = ConcavePL.from_graph_points(S1_GRAPH)
    s2 = ConcavePL.from_graph_points(S2_GRAPH)
    hull = toric_polytope(s1, s2)
    assert hull == LatticePolytope([(0, 0), (2, -2), (3, -1), (4, 1), (4, 2)])
    half = ConcavePL.from_graph_points([(0, 0), (2, 1)])
    whole = ConcavePL.from_graph_points([(0, 0), (2, 2)])
    assert toric_polytope(half, whole) == LatticePolytope([(0, 0), (2, 1), (2, -2)])
    bad = ConcavePL.from_graph_points([(0, 0), (1, Fraction(1, 2))])
    with pytest.raises(ValueError):
        toric_polytope(bad, whole)


def test_integral_slice_identity():
    # For slices taking integer values at every lattice point the exact
    # integral, the floor sum, and the signed interior ceiling sum satisfy
    # 2 * integral = floor_sum + signed_ceiling_sum (a trapezoid identity).
    rng = random.Random(5)
    checked = 0
    for _ in range(300):
        lo = rng.randint(-3, 2)
        hi = lo + rng.randint(1, 6)
        pts = [(u, rng.randint(-4, 4)) for u in range(lo, hi + 1)]
        f = ConcavePL.from_graph_points(pts)
        if any(f.evaluate(u).denominator != 1 for (u,) in f.domain_lattice_points()):
            continue
        checked += 1
        lhs = 2 * f.integral()
        rhs = floor_sum_over_lattice(f) + signed_ceiling_interior_sum(f)
        assert lhs == rhs, (pts, lhs, rhs)
    assert checked >= 100
