"""Tests for divisorial polytopes: validation, divisors, sections, volumes."""

from fractions import Fraction

import pytest

from tcodes import (
    INFINITY,
    ConcavePL,
    Curve,
    CurvePoint,
    DivisorialPolytope,
    LatticePolytope,
    box_lambda,
    euler_characteristic,
    genus_of_section,
    graded_sections,
    inn,
    intersection_number,
    is_ample,
    is_semiample,
    mixed_volume,
    nu,
    point_divisor_dual,
    project,
    self_intersection,
    sharp,
    validate,
    volume,
    weil_divisor,
)
from tcodes.instances import (
    marked_point_pair,
    standard_elliptic,
    surface_example,
    threefold_example,
    toric_comparison_example,
)

E7 = standard_elliptic()
Q1, Q2 = marked_point_pair(E7)
SURFACE = surface_example(E7)
THREEFOLD = threefold_example()


def one_slice_dp(graph, curve=None, point=None) -> DivisorialPolytope:
    curve = curve or E7
    point = point or Q1
    s = ConcavePL.from_graph_points(graph)
    lo, hi = s.domain_polytope().bounds()
    return DivisorialPolytope(curve, LatticePolytope.interval(lo, hi), {point: s})


def test_validate_passes_on_examples():
    for dp in (SURFACE, THREEFOLD):
        report = validate(dp)
        assert report.ok, report.failures()
        assert [c.name for c in report.conditions] == [
            "degree-nonnegative-at-vertices",
            "principal-multiple-at-degree-zero-vertices",
            "lattice-graph-vertices",
        ]


def test_validate_rejects_negative_vertex_degree():
    report = validate(one_slice_dp([(0, -1), (2, 0)]))
    assert not report.ok
    assert not report.conditions[0].ok
    assert report.conditions[2].ok
    assert "degree-nonnegative-at-vertices" in report.failures()[0]


def test_validate_rejects_fractional_graph_vertices():
    report = validate(one_slice_dp([(0, 0), (1, Fraction(1, 2)), (2, 0)]))
    assert not report.ok
    assert report.conditions[0].ok
    assert not report.conditions[2].ok


def test_validate_finds_principal_multiple():
    # Vertex value Q1 - inf has degree zero and order 13 in the class group,
    # so the principal-multiple search has to walk out to the 13th multiple.
    dp = DivisorialPolytope(
        E7,
        LatticePolytope.interval(0, 2),
        {
            Q1: ConcavePL.from_graph_points([(0, 1), (2, 2)]),
            INFINITY: ConcavePL.from_graph_points([(0, -1), (2, -1)]),
        },
    )
    report = validate(dp)
    assert report.ok
    assert is_semiample(dp)
    assert not is_ample(dp)


def test_ampleness():
    assert is_semiample(SURFACE)
    assert not is_ample(SURFACE)
    assert is_semiample(THREEFOLD)
    assert is_ample(THREEFOLD)
    collinear = one_slice_dp([(0, 1), (2, 2), (4, 3)])
    assert is_semiample(collinear)
    assert not is_ample(collinear)
    strict = one_slice_dp([(0, 1), (2, 3), (4, 4)])
    assert is_ample(strict)


def test_weil_divisor_surface():
    w = weil_divisor(SURFACE)
    assert w.ray_coefficient((1,)) == 0
    assert w.ray_coefficient((-1,)) == 4
    assert w.vertex_coefficient(Q1, (Fraction(1, 2),)) == 0
    assert w.vertex_coefficient(Q2, (Fraction(-1),)) == 4
    assert w.vertex_coefficient(Q2, (Fraction(-2),)) == 7
    assert all(t.meets_degree for t in w.ray_terms)
    assert "4*ray(-1)" in w.render()
    with pytest.raises(KeyError):
        w.ray_coefficient((2,))
    with pytest.raises(KeyError):
        w.vertex_coefficient(Q1, (Fraction(3),))


def test_weil_divisor_threefold():
    w = weil_divisor(THREEFOLD)
    rays = sorted(t.ray for t in w.ray_terms)
    assert rays == [(-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0), (1, 1)]
    assert all(t.coefficient == 1 for t in w.ray_terms)
    nonzero = {(t.point, t.v): t.coefficient for t in w.vertex_terms if t.coefficient != 0}
    assert nonzero == {
        (INFINITY, (Fraction(0), Fraction(0))): 2,
        (INFINITY, (Fraction(-1), Fraction(-1))): 2,
    }


def test_graded_sections_dimensions():
    gs = graded_sections(SURFACE)
    assert [p.dim for p in gs.pieces] == [1, 1, 3, 2, 1]
    assert gs.total_dim == 8
    assert gs.piece_at((2,)).dim == 3

    gs3 = graded_sections(THREEFOLD)
    dims = {p.u: p.dim for p in gs3.pieces}
    assert dims[(0, 0)] == 3
    assert all(d == 2 for u, d in dims.items() if u != (0, 0))
    assert gs3.total_dim == 15

    toric = graded_sections(toric_comparison_example(7))
    assert [p.dim for p in toric.pieces] == [1, 2, 4]


def test_volume_and_self_intersection():
    assert volume(SURFACE) == Fraction(15, 2)
    assert self_intersection(SURFACE) == 15
    assert volume(THREEFOLD) == 4
    assert self_intersection(THREEFOLD) == 24


def test_mixed_volume_polarization():
    assert mixed_volume([SURFACE, SURFACE]) == volume(SURFACE)
    assert intersection_number([SURFACE, SURFACE]) == 15
    assert intersection_number([THREEFOLD, THREEFOLD, THREEFOLD]) == 24
    with pytest.raises(ValueError):
        intersection_number([SURFACE])
    with pytest.raises(ValueError):
        mixed_volume([])


def test_point_divisor_dual_pairing():
    # Pairing the surface class with a fiber class gives the box length,
    # independently of the chosen base point.
    for P in (Q1, Q2, INFINITY, CurvePoint.affine(3, 3, 7)):
        pt = point_divisor_dual(E7, P)
        assert volume(pt) == 0
        assert intersection_number([SURFACE, pt]) == 4


def test_counting_invariants_surface():
    assert inn(SURFACE) == 8
    assert sharp(SURFACE) == 7
    assert genus_of_section(SURFACE) == (5, 4, 9)
    assert euler_characteristic(SURFACE) == (12, -5, 7)


def test_counting_invariants_trivial():
    flat = one_slice_dp([(0, 0), (1, 0)], curve=Curve.p1(7), point=CurvePoint.affine(0, 0, 7))
    assert genus_of_section(flat) == (0, 1, 0)
    assert euler_characteristic(flat) == (2, -2, 2)
    wide = one_slice_dp([(0, 0), (3, 0)], curve=Curve.p1(7), point=CurvePoint.affine(0, 0, 7))
    assert euler_characteristic(wide)[2] == 4


def test_box_lambda_and_nu():
    assert box_lambda(SURFACE, 0) == [(0,), (1,), (2,), (3,), (4,)]
    assert box_lambda(SURFACE, 2) == [(2,), (3,)]
    assert [nu(SURFACE, lam) for lam in range(4)] == [4, 3, 1, 0]
    with pytest.raises(ValueError):
        nu(SURFACE, 4)


def test_projection_of_threefold():
    pr = project(THREEFOLD)
    assert pr.m == 1
    assert pr.box.bounds() == (-1, 1)
    pts = pr.stored_points()
    assert len(pts) == 3
    slices = {P: pr.slice_at(P) for P in pts}
    finite = [P for P in pts if not P.is_infinity]
    assert slices[finite[0]].affine_data() == ((Fraction(0),), Fraction(0))
    assert slices[INFINITY].affine_data() == ((Fraction(0),), Fraction(2))
    mid = slices[finite[1]]
    assert mid.evaluate(-1) == -1 and mid.evaluate(0) == 0 and mid.evaluate(1) == 0
    assert [nu(pr, lam) for lam in (0, 1, 2)] == [2, 2, 1]
    assert validate(pr).ok
    with pytest.raises(ValueError):
        project(pr)


def test_scale_and_add():
    double = SURFACE.scale(2)
    assert volume(double) == 4 * volume(SURFACE)
    assert double.box.bounds() == (0, 8)
    summed = SURFACE.add(SURFACE)
    assert summed.box == double.box
    assert volume(summed) == volume(double)
    with pytest.raises(ValueError):
        SURFACE.add(threefold_example())


def test_dp_constructor_validation():
    s = ConcavePL.from_graph_points([(0, 0), (4, 2)])
    with pytest.raises(ValueError):
        DivisorialPolytope(E7, LatticePolytope.interval(0, 3), {Q1: s})
    with pytest.raises(ValueError):
        DivisorialPolytope(E7, LatticePolytope.interval(0, 4), {CurvePoint.affine(0, 1, 7): s})
