"""Tests for curves, divisors, valuations, and Riemann-Roch spaces."""

import random
from fractions import Fraction

import pytest

from tcodes import (
    INFINITY,
    Curve,
    CurvePoint,
    Divisor,
    FunctionFieldElement,
    Poly,
    divisor_of,
    evaluate,
    is_principal,
    leading_coefficient,
    riemann_roch_basis,
    twisted_evaluate,
    valuation,
)

E7 = Curve.elliptic(7, 0, 3)
L7 = Curve.p1(7)


def x_coord(curve: Curve) -> FunctionFieldElement:
    return FunctionFieldElement(curve, Poly([0, 1], curve.p), Poly([], curve.p), Poly([1], curve.p))


def y_coord(curve: Curve) -> FunctionFieldElement:
    return FunctionFieldElement(curve, Poly([], curve.p), Poly([1], curve.p), Poly([1], curve.p))


def rational_function(curve: Curve, num: list[int], den: list[int]) -> FunctionFieldElement:
    return FunctionFieldElement(curve, Poly(num, curve.p), Poly([], curve.p), Poly(den, curve.p))


def test_curve_constructors_and_validation():
    assert L7.is_p1 and L7.genus == 0
    assert not E7.is_p1 and E7.genus == 1
    with pytest.raises(ValueError):
        Curve.elliptic(7, 0, 0)
    with pytest.raises(ValueError):
        Curve.elliptic(3, 1, 1)
    with pytest.raises(ValueError):
        Curve("cubic", 7)


def test_rational_points_frozen():
    pts = E7.rational_points()
    assert len(pts) == 13 and E7.point_count() == 13
    affine = [(P.x, P.y) for P in pts if not P.is_infinity]
    assert affine == [
        (1, 2), (1, 5), (2, 2), (2, 5), (3, 3), (3, 4),
        (4, 2), (4, 5), (5, 3), (5, 4), (6, 3), (6, 4),
    ]
    assert pts[-1].is_infinity
    assert all(E7.contains(P) for P in pts)
    assert not E7.contains(CurvePoint.affine(0, 1, 7))

    line_pts = L7.rational_points()
    assert len(line_pts) == 8
    assert all(P.y == 0 or P.is_infinity for P in line_pts)


def test_group_law_samples():
    P = CurvePoint.affine(1, 2, 7)
    assert E7.group_add(P, P) == CurvePoint.affine(6, 3, 7)
    assert E7.group_neg(P) == CurvePoint.affine(1, 5, 7)
    assert E7.group_add(P, E7.group_neg(P)) == INFINITY
    assert E7.group_add(INFINITY, P) == P
    assert E7.group_multiple(13, P) == INFINITY
    for k in range(1, 13):
        assert E7.group_multiple(k, P) != INFINITY


def test_group_law_properties():
    rng = random.Random(11)
    pts = E7.rational_points()
    for _ in range(40):
        P, Q, R = (rng.choice(pts) for _ in range(3))
        assert E7.group_add(P, Q) == E7.group_add(Q, P)
        assert E7.group_add(E7.group_add(P, Q), R) == E7.group_add(P, E7.group_add(Q, R))
        assert E7.contains(E7.group_add(P, Q))


def test_is_principal():
    P = CurvePoint.affine(1, 2, 7)
    negP = CurvePoint.affine(1, 5, 7)
    assert is_principal(E7, Divisor({}))
    assert not is_principal(E7, Divisor({P: 1, INFINITY: -1}))
    assert is_principal(E7, Divisor({P: 13, INFINITY: -13}))
    assert is_principal(E7, Divisor({P: 1, negP: 1, INFINITY: -2}))
    assert not is_principal(E7, Divisor({P: 1}))
    with pytest.raises(ValueError):
        is_principal(E7, Divisor({P: Fraction(1, 2)}))


def test_valuations_on_elliptic():
    P, negP = CurvePoint.affine(1, 2, 7), CurvePoint.affine(1, 5, 7)
    x = x_coord(E7)
    y = y_coord(E7)
    x_minus_1 = x - FunctionFieldElement.one(E7)
    assert valuation(E7, x_minus_1, P) == 1
    assert valuation(E7, x_minus_1, negP) == 1
    assert valuation(E7, x_minus_1, INFINITY) == -2
    assert valuation(E7, y, INFINITY) == -3
    y_minus_2 = y - FunctionFieldElement.constant(E7, 2)
    for Q in [(1, 2), (2, 2), (4, 2)]:
        assert valuation(E7, y_minus_2, CurvePoint.affine(*Q, 7)) == 1
    assert valuation(E7, y_minus_2, INFINITY) == -3
    D = divisor_of(E7, y_minus_2, E7.rational_points())
    assert D.degree() == 0
    assert D == Divisor({
        CurvePoint.affine(1, 2, 7): 1,
        CurvePoint.affine(2, 2, 7): 1,
        CurvePoint.affine(4, 2, 7): 1,
        INFINITY: -3,
    })


def test_valuations_on_line():
    f = rational_function(L7, [6, 0, 1], [4, 1])  # (x^2 - 1) / (x + 4)
    assert valuation(L7, f, CurvePoint.affine(1, 0, 7)) == 1
    assert valuation(L7, f, CurvePoint.affine(6, 0, 7)) == 1
    assert valuation(L7, f, CurvePoint.affine(3, 0, 7)) == -1
    assert valuation(L7, f, INFINITY) == -1
    D = divisor_of(L7, f, L7.rational_points())
    assert D.degree() == 0
    with pytest.raises(ValueError):
        valuation(L7, FunctionFieldElement.zero(L7), INFINITY)
    with pytest.raises(ValueError):
        valuation(E7, x_coord(E7), CurvePoint.affine(0, 1, 7))


def test_leading_coefficients_and_twisted_evaluate():
    P = CurvePoint.affine(1, 2, 7)
    x = x_coord(E7)
    y = y_coord(E7)
    assert evaluate(E7, x - FunctionFieldElement.one(E7), CurvePoint.affine(2, 2, 7)) == 1
    # x/y is regular at (1,2) with value 1/2 = 4 mod 7.
    ratio = FunctionFieldElement(E7, Poly([0, 1], 7), Poly([], 7), Poly([1], 7))
    ratio = ratio * _invert_y()
    assert evaluate(E7, ratio, P) == 4
    # Twisting by the pole order recovers the leading coefficient.
    for f in [x, y, x - FunctionFieldElement.one(E7)]:
        for Q in [P, CurvePoint.affine(3, 4, 7), INFINITY]:
            v = valuation(E7, f, Q)
            lead = leading_coefficient(E7, f, Q)
            assert lead != 0
            assert twisted_evaluate(E7, f, Q, -v) == lead
            assert twisted_evaluate(E7, f, Q, -v + 1) == 0
            if v < 0:
                with pytest.raises(ValueError):
                    twisted_evaluate(E7, f, Q, 0)
    assert leading_coefficient(E7, x, INFINITY) == 1
    assert twisted_evaluate(E7, FunctionFieldElement.zero(E7), P, -5) == 0


def _invert_y() -> FunctionFieldElement:
    # 1/y = y / (x^3 + 3) on y^2 = x^3 + 3.
    return FunctionFieldElement(E7, Poly([], 7), Poly([1], 7), Poly([3, 0, 0, 1], 7))


def test_riemann_roch_dimensions_elliptic():
    O = INFINITY
    P = CurvePoint.affine(1, 2, 7)
    assert len(riemann_roch_basis(E7, Divisor({}))) == 1
    assert len(riemann_roch_basis(E7, Divisor({O: 1}))) == 1
    assert len(riemann_roch_basis(E7, Divisor({O: 2}))) == 2
    basis = riemann_roch_basis(E7, Divisor({O: 3}))
    assert len(basis) == 3
    assert sorted(valuation(E7, f, O) for f in basis) == [-3, -2, 0]
    assert len(riemann_roch_basis(E7, Divisor({P: 2, O: 2}))) == 4
    assert riemann_roch_basis(E7, Divisor({P: 1, O: -2})) == []
    # Degree zero: principal class has a section, non-principal has none.
    assert riemann_roch_basis(E7, Divisor({P: 1, O: -1})) == []
    negP = CurvePoint.affine(1, 5, 7)
    pair = riemann_roch_basis(E7, Divisor({P: 1, negP: 1, O: -2}))
    assert len(pair) == 1


def test_riemann_roch_dimensions_line():
    for k in range(5):
        assert len(riemann_roch_basis(L7, Divisor({INFINITY: k}))) == k + 1
    origin = CurvePoint.affine(0, 0, 7)
    basis = riemann_roch_basis(L7, Divisor({origin: 2}))
    assert len(basis) == 3
    assert sorted(valuation(L7, f, origin) for f in basis) == [-2, -1, 0]
    with pytest.raises(ValueError):
        riemann_roch_basis(L7, Divisor({INFINITY: Fraction(1, 2)}))


def test_riemann_roch_membership():
    rng = random.Random(23)
    pts = E7.rational_points()
    for _ in range(25):
        support = rng.sample(pts, rng.randint(1, 3))
        D = Divisor({P: rng.randint(-1, 3) for P in support})
        if not D.is_integral():
            continue
        for f in riemann_roch_basis(E7, D):
            div_f = divisor_of(E7, f, pts)
            assert (div_f + D).is_effective()


def test_divisor_arithmetic():
    P = CurvePoint.affine(1, 2, 7)
    D = Divisor({P: 2, INFINITY: -1})
    assert D.degree() == 1
    assert (D + D).degree() == 2
    assert (D - D).is_zero()
    assert D.scale(3)[P] == 6
    half = D.scale(Fraction(1, 2))
    assert not half.is_integral()
    assert half.floor() == Divisor({P: 1, INFINITY: -1})
    assert not D.is_effective()
    assert Divisor({P: 2}).is_effective()
