"""Smooth projective curves over prime fields: points, divisors, Riemann-Roch spaces.

Supported curves are the projective line and elliptic curves in short Weierstrass
form y^2 = x^3 + A x + B with p >= 5. Valuations are exact (no series truncation
guesswork): parity and norm arguments give the order, and Hensel-lifted local
expansions give leading coefficients, each asserting against the other.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .algebra import Poly, check_prime_field, inv_mod, rational_floor


class CurvePoint(NamedTuple):
    is_infinity: bool
    x: int
    y: int

    @classmethod
    def affine(cls, x: int, y: int, p: int) -> "CurvePoint":
        return cls(False, x % p, y % p)

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls(True, 0, 0)

    def sort_key(self) -> tuple[int, int, int]:
        return (1 if self.is_infinity else 0, self.x, self.y)

    def render(self) -> str:
        return "inf" if self.is_infinity else f"({self.x},{self.y})"


INFINITY = CurvePoint.infinity()


class Curve:
    """The projective line ("p1") or a short Weierstrass elliptic curve ("elliptic")."""

    def __init__(self, kind: str, p: int, A: int = 0, B: int = 0):
        check_prime_field(p)
        if kind not in ("p1", "elliptic"):
            raise ValueError(f"unknown curve kind: {kind}")
        self.kind = kind
        self.p = p
        self.A = A % p
        self.B = B % p
        if kind == "elliptic":
            if p < 5:
                raise ValueError("elliptic curves require characteristic >= 5")
            disc = (4 * self.A**3 + 27 * self.B**2) % p
            if disc == 0:
                raise ValueError("singular Weierstrass equation (4A^3 + 27B^2 = 0)")

    @classmethod
    def p1(cls, p: int) -> "Curve":
        return cls("p1", p)

    @classmethod
    def elliptic(cls, p: int, A: int, B: int) -> "Curve":
        return cls("elliptic", p, A, B)

    @property
    def is_p1(self) -> bool:
        return self.kind == "p1"

    @property
    def genus(self) -> int:
        return 0 if self.kind == "p1" else 1

    def rhs(self) -> Poly:
        """The cubic x^3 + A x + B (elliptic only)."""
        return Poly([self.B, self.A, 0, 1], self.p)

    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        if not (0 <= P.x < self.p and 0 <= P.y < self.p):
            return False
        if self.kind == "p1":
            return P.y == 0
        return (P.y * P.y - self.rhs().evaluate(P.x)) % self.p == 0

    def rational_points(self) -> list[CurvePoint]:
        """All rational points, affine ones sorted by (x, y), infinity last."""
        p = self.p
        pts: list[CurvePoint] = []
        if self.kind == "p1":
            pts = [CurvePoint.affine(x, 0, p) for x in range(p)]
        else:
            roots: dict[int, list[int]] = {}
            for y in range(p):
                roots.setdefault(y * y % p, []).append(y)
            cubic = self.rhs()
            for x in range(p):
                for y in roots.get(cubic.evaluate(x), []):
                    pts.append(CurvePoint.affine(x, y, p))
        pts.sort(key=CurvePoint.sort_key)
        pts.append(INFINITY)
        return pts

    def point_count(self) -> int:
        return len(self.rational_points())

    def group_neg(self, P: CurvePoint) -> CurvePoint:
        self._require_elliptic()
        if P.is_infinity:
            return P
        return CurvePoint.affine(P.x, -P.y, self.p)

    def group_add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        """Chord-tangent addition with identity at infinity."""
        self._require_elliptic()
        p = self.p
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x and (P.y + Q.y) % p == 0:
            return INFINITY
        if P == Q:
            lam = (3 * P.x * P.x + self.A) * inv_mod(2 * P.y, p) % p
        else:
            lam = (Q.y - P.y) * inv_mod(Q.x - P.x, p) % p
        x3 = (lam * lam - P.x - Q.x) % p
        y3 = (lam * (P.x - x3) - P.y) % p
        return CurvePoint.affine(x3, y3, p)

    def group_multiple(self, n: int, P: CurvePoint) -> CurvePoint:
        self._require_elliptic()
        if n < 0:
            return self.group_multiple(-n, self.group_neg(P))
        acc = INFINITY
        base = P
        while n:
            if n & 1:
                acc = self.group_add(acc, base)
            base = self.group_add(base, base)
            n >>= 1
        return acc

    def _require_elliptic(self) -> None:
        if self.kind != "elliptic":
            raise ValueError("group law requires an elliptic curve")

    def describe(self) -> str:
        if self.kind == "p1":
            return f"p1 over F_{self.p}"
        return f"y^2 = x^3 + {self.A}*x + {self.B} over F_{self.p}"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Curve)
            and (self.kind, self.p, self.A, self.B) == (other.kind, other.p, other.A, other.B)
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.p, self.A, self.B))


class Divisor:
    """Formal Q-linear combination of curve points."""

    def __init__(self, coeffs: dict[CurvePoint, Fraction | int] | None = None):
        self.coeffs: dict[CurvePoint, Fraction] = {}
        if coeffs:
            for P, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    self.coeffs[P] = c

    def __getitem__(self, P: CurvePoint) -> Fraction:
        return self.coeffs.get(P, Fraction(0))

    def items(self) -> list[tuple[CurvePoint, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def support(self) -> list[CurvePoint]:
        return [P for P, _ in self.items()]

    def degree(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Divisor") -> "Divisor":
        out = dict(self.coeffs)
        for P, c in other.coeffs.items():
            out[P] = out.get(P, Fraction(0)) + c
        return Divisor(out)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + other.scale(-1)

    def scale(self, k: Fraction | int) -> "Divisor":
        return Divisor({P: c * k for P, c in self.coeffs.items()})

    def floor(self) -> "Divisor":
        return Divisor({P: rational_floor(c) for P, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Divisor) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{P.render()}" for P, c in self.items())


def is_principal(curve: Curve, D: Divisor) -> bool:
    """Whether the integral degree-zero divisor D is a function's divisor."""
    if not D.is_integral():
        raise ValueError("principality is defined for integral divisors")
    if D.degree() != 0:
        return False
    if curve.kind == "p1":
        return True
    acc = INFINITY
    for P, c in D.items():
        if not P.is_infinity:
            acc = curve.group_add(acc, curve.group_multiple(int(c), P))
    return acc == INFINITY


class FunctionFieldElement:
    """A function (a(x) + b(x) y) / c(x) on the curve, in lowest terms with c monic.

    On the projective line b is identically zero.
    """

    __slots__ = ("curve", "a", "b", "c")

    def __init__(self, curve: Curve, a: Poly, b: Poly, c: Poly):
        if c.is_zero():
            raise ZeroDivisionError("zero denominator")
        if curve.kind == "p1" and not b.is_zero():
            raise ValueError("no y coordinate on the projective line")
        if a.is_zero() and b.is_zero():
            a, b, c = Poly([], curve.p), Poly([], curve.p), Poly([1], curve.p)
        else:
            g = a.gcd(b).gcd(c) if not b.is_zero() else a.gcd(c)
            if not g.is_zero() and g.degree > 0:
                a, b, c = a // g, b // g, c // g
            lead_inv = inv_mod(c.leading(), curve.p)
            a, b, c = a.scale(lead_inv), b.scale(lead_inv), c.monic()
        self.curve = curve
        self.a = a
        self.b = b
        self.c = c

    @classmethod
    def zero(cls, curve: Curve) -> "FunctionFieldElement":
        return cls(curve, Poly([], curve.p), Poly([], curve.p), Poly([1], curve.p))

    @classmethod
    def one(cls, curve: Curve) -> "FunctionFieldElement":
        return cls(curve, Poly([1], curve.p), Poly([], curve.p), Poly([1], curve.p))

    @classmethod
    def constant(cls, curve: Curve, value: int) -> "FunctionFieldElement":
        return cls(curve, Poly([value], curve.p), Poly([], curve.p), Poly([1], curve.p))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __add__(self, other: "FunctionFieldElement") -> "FunctionFieldElement":
        a1, b1, c1 = self.a, self.b, self.c
        a2, b2, c2 = other.a, other.b, other.c
        return FunctionFieldElement(self.curve, a1 * c2 + a2 * c1, b1 * c2 + b2 * c1, c1 * c2)

    def __sub__(self, other: "FunctionFieldElement") -> "FunctionFieldElement":
        return self + other.scale(-1)

    def __mul__(self, other: "FunctionFieldElement") -> "FunctionFieldElement":
        a1, b1, c1 = self.a, self.b, self.c
        a2, b2, c2 = other.a, other.b, other.c
        if self.curve.kind == "p1":
            return FunctionFieldElement(self.curve, a1 * a2, Poly([], self.curve.p), c1 * c2)
        E = self.curve.rhs()
        return FunctionFieldElement(self.curve, a1 * a2 + b1 * b2 * E, a1 * b2 + a2 * b1, c1 * c2)

    def scale(self, k: int) -> "FunctionFieldElement":
        return FunctionFieldElement(self.curve, self.a.scale(k), self.b.scale(k), self.c)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FunctionFieldElement)
            and self.curve == other.curve
            and (self.a, self.b, self.c) == (other.a, other.b, other.c)
        )

    def __repr__(self) -> str:
        num = repr(self.a)
        if not self.b.is_zero():
            num = f"{num} + ({self.b})*y" if not self.a.is_zero() else f"({self.b})*y"
        if self.c.degree <= 0:
            return num
        return f"({num})/({self.c})"


def _series_mul(xs: list[int], ys: list[int], prec: int, p: int) -> list[int]:
    out = [0] * prec
    for i, a in enumerate(xs[:prec]):
        if a:
            for j, b in enumerate(ys[: prec - i]):
                out[i + j] = (out[i + j] + a * b) % p
    return out


def _poly_on_series(f: Poly, xs: list[int], prec: int, p: int) -> list[int]:
    acc = [0] * prec
    for c in reversed(f.coeffs):
        acc = _series_mul(acc, xs, prec, p)
        acc[0] = (acc[0] + c) % p
    return acc


def local_expansions(curve: Curve, P: CurvePoint, prec: int) -> tuple[list[int], list[int] | None]:
    """Series of x(t) and y(t) mod t^prec at an affine point, t the fixed uniformizer.

    On the projective line t = x - x0 and the y series is None. At an elliptic
    point with y0 != 0, t = x - x0 and y is the Hensel square root of the cubic;
    at a 2-torsion point t = y and x solves the curve equation with x(0) = x0.
    """
    if P.is_infinity:
        raise ValueError("local expansions at infinity are handled by degree bookkeeping")
    p = curve.p
    if curve.kind == "p1":
        xs = [P.x, 1] + [0] * (prec - 2) if prec >= 2 else [P.x][:prec]
        return xs, None
    E = curve.rhs()
    if P.y != 0:
        xs = ([P.x, 1] + [0] * (prec - 2))[:prec]
        es = _poly_on_series(E, xs, prec, p)
        ys = [P.y] + [0] * (prec - 1)
        inv2y = inv_mod(2 * P.y, p)
        for k in range(1, prec):
            conv = sum(ys[i] * ys[k - i] for i in range(1, k)) % p
            ys[k] = (es[k] - conv) * inv2y % p
        return xs, ys
    # 2-torsion: t = y, x = x0 + delta(t) with E(x) = t^2 and E'(x0) invertible.
    dE = (3 * P.x * P.x + curve.A) % p
    inv_dE = inv_mod(dE, p)
    delta = [0] * prec
    for k in range(1, prec):
        d2 = sum(delta[i] * delta[k - i] for i in range(1, k)) % p
        d3 = 0
        for i in range(1, k):
            for j in range(1, k - i):
                rem = k - i - j
                if rem >= 1:
                    d3 += delta[i] * delta[j] * delta[rem]
        d3 %= p
        target = 1 if k == 2 else 0
        delta[k] = (target - 3 * P.x * d2 - d3) * inv_dE % p
    xs = [(P.x + delta[0]) % p] + delta[1:]
    ys = ([0, 1] + [0] * (prec - 2))[:prec]
    return xs, ys


def _numerator_series(
    curve: Curve, a: Poly, b: Poly, P: CurvePoint, prec: int
) -> list[int]:
    xs, ys = local_expansions(curve, P, prec)
    out = _poly_on_series(a, xs, prec, curve.p)
    if not b.is_zero():
        assert ys is not None
        bs = _poly_on_series(b, xs, prec, curve.p)
        by = _series_mul(bs, ys, prec, curve.p)
        out = [(u + v) % curve.p for u, v in zip(out, by)]
    return out


def _numerator_valuation_affine(curve: Curve, a: Poly, b: Poly, P: CurvePoint) -> int:
    """Exact order of a(x) + b(x) y at an affine point."""
    p = curve.p
    if curve.kind == "p1":
        return a.multiplicity(P.x)
    if b.is_zero():
        e = 1 if P.y != 0 else 2
        return e * a.multiplicity(P.x)
    if a.is_zero():
        if P.y != 0:
            return b.multiplicity(P.x)
        return 2 * b.multiplicity(P.x) + 1
    if P.y == 0:
        # Orders 2*mult(a) and 2*mult(b)+1 have distinct parities: no cancellation.
        return min(2 * a.multiplicity(P.x), 2 * b.multiplicity(P.x) + 1)
    w = min(a.multiplicity(P.x), b.multiplicity(P.x))
    root = Poly.x_minus(P.x, p)
    a1, b1 = a, b
    for _ in range(w):
        a1, b1 = a1 // root, b1 // root
    if (a1.evaluate(P.x) + b1.evaluate(P.x) * P.y) % p != 0:
        return w
    # Cancellation: use the norm (a1 + b1 y)(a1 - b1 y) = a1^2 - b1^2 E, whose
    # second factor is a unit at P, so ord(a1 + b1 y) = mult of the norm.
    norm = a1 * a1 - b1 * b1 * curve.rhs()
    assert (a1.evaluate(P.x) - b1.evaluate(P.x) * P.y) % p != 0
    return w + norm.multiplicity(P.x)


def _infinity_valuation_parts(curve: Curve, f: FunctionFieldElement) -> tuple[int, int]:
    """(numerator order, denominator order) at the point at infinity."""
    if curve.kind == "p1":
        return -f.a.degree, -f.c.degree
    cands = []
    if not f.a.is_zero():
        cands.append(-2 * f.a.degree)
    if not f.b.is_zero():
        cands.append(-3 - 2 * f.b.degree)
    return min(cands), -2 * f.c.degree


def valuation(curve: Curve, f: FunctionFieldElement, P: CurvePoint) -> int:
    """Exact order of vanishing of f at P (poles negative)."""
    if f.is_zero():
        raise ValueError("the zero function has no valuation")
    if not curve.contains(P):
        raise ValueError(f"{P.render()} is not on the curve")
    if P.is_infinity:
        num, den = _infinity_valuation_parts(curve, f)
        return num - den
    num = _numerator_valuation_affine(curve, f.a, f.b, P)
    if curve.kind == "p1":
        den = f.c.multiplicity(P.x)
    else:
        e = 1 if P.y != 0 else 2
        den = e * f.c.multiplicity(P.x)
    return num - den


def leading_coefficient(curve: Curve, f: FunctionFieldElement, P: CurvePoint) -> int:
    """Coefficient of t^(ord_P f) in the local expansion of f at P."""
    if f.is_zero():
        raise ValueError("the zero function has no leading coefficient")
    p = curve.p
    if P.is_infinity:
        # x has expansion t^-2 (1 + O(t)) and y has t^-3 (1 + O(t)) at the
        # elliptic origin (t^-1 exactly on the line), so leading coefficients
        # of numerator and denominator are their top polynomial coefficients.
        if curve.kind == "p1":
            num_lead = f.a.leading()
        else:
            ord_a = -2 * f.a.degree if not f.a.is_zero() else None
            ord_b = -3 - 2 * f.b.degree if not f.b.is_zero() else None
            if ord_b is None or (ord_a is not None and ord_a < ord_b):
                num_lead = f.a.leading()
            else:
                num_lead = f.b.leading()
        return num_lead * inv_mod(f.c.leading(), p) % p
    num_ord = _numerator_valuation_affine(curve, f.a, f.b, P)
    if curve.kind == "p1":
        den_ord = f.c.multiplicity(P.x)
    else:
        den_ord = (1 if P.y != 0 else 2) * f.c.multiplicity(P.x)
    prec = max(num_ord, den_ord) + 1
    num_series = _numerator_series(curve, f.a, f.b, P, prec)
    den_series = _numerator_series(curve, f.c, Poly([], p), P, prec)
    assert all(c == 0 for c in num_series[:num_ord]) and num_series[num_ord] != 0
    assert all(c == 0 for c in den_series[:den_ord]) and den_series[den_ord] != 0
    return num_series[num_ord] * inv_mod(den_series[den_ord], p) % p


def evaluate(curve: Curve, f: FunctionFieldElement, P: CurvePoint) -> int:
    """Value of f at P; requires f regular at P."""
    return twisted_evaluate(curve, f, P, 0)


def twisted_evaluate(curve: Curve, f: FunctionFieldElement, P: CurvePoint, k: int) -> int:
    """Value of f * t^k at P, where t is the fixed uniformizer at P.

    Returns 0 when ord_P(f) > -k and raises when the pole is too deep.
    """
    if f.is_zero():
        return 0
    v = valuation(curve, f, P)
    if v + k < 0:
        raise ValueError(f"pole of order {-v} exceeds twist {k} at {P.render()}")
    if v + k > 0:
        return 0
    return leading_coefficient(curve, f, P)


def _points_above(curve: Curve, x0: int) -> list[CurvePoint]:
    if curve.kind == "p1":
        return [CurvePoint.affine(x0, 0, curve.p)]
    r = curve.rhs().evaluate(x0)
    if r == 0:
        return [CurvePoint.affine(x0, 0, curve.p)]
    ys = [y for y in range(curve.p) if y * y % curve.p == r]
    return [CurvePoint.affine(x0, y, curve.p) for y in sorted(ys)]


def riemann_roch_basis(curve: Curve, D: Divisor) -> list[FunctionFieldElement]:
    """Basis of L(D) = {f : div(f) + D >= 0}, deterministically echelonized.

    The basis is ordered by decreasing valuation at the largest-coefficient
    point of D (ties in the coefficient broken by point order), and successive
    elements have strictly decreasing valuations there.
    """
    if not D.is_integral():
        raise ValueError("Riemann-Roch spaces are computed for integral divisors")
    if not all(curve.contains(P) for P in D.support()):
        raise ValueError("divisor support must lie on the curve")
    basis = _rr_raw_basis(curve, D)
    _assert_rr_dimension(curve, D, len(basis))
    if len(basis) <= 1:
        return basis
    anchor = max(D.items(), key=lambda kv: (kv[1], [-k for k in kv[0].sort_key()]))[0] if D.coeffs else INFINITY
    return _echelonize_by_valuation(curve, basis, anchor)


def _assert_rr_dimension(curve: Curve, D: Divisor, dim: int) -> None:
    deg = D.degree()
    if curve.genus == 0:
        expected = int(deg) + 1 if deg >= 0 else 0
    else:
        if deg < 0:
            expected = 0
        elif deg == 0:
            expected = 1 if is_principal(curve, D) else 0
        else:
            expected = int(deg)
    assert dim == expected, f"Riemann-Roch dimension {dim} != {expected} for {D!r}"


def _rr_raw_basis(curve: Curve, D: Divisor) -> list[FunctionFieldElement]:
    from .algebra import MatrixFp

    p = curve.p
    if curve.kind == "p1":
        n_inf = int(D[INFINITY])
        den = Poly([1], p)
        for P, c in D.items():
            if not P.is_infinity and c > 0:
                den = den * Poly.x_minus(P.x, p) ** int(c)
        cap = den.degree + n_inf
        if cap < 0:
            return []
        constraints: list[tuple[int, int]] = []
        seen = set()
        for P, c in D.items():
            if P.is_infinity:
                continue
            r = den.multiplicity(P.x) - int(c)
            if r > 0:
                constraints.append((P.x, r))
                seen.add(P.x)
        rows = []
        for x0, r in constraints:
            # Coefficients of (x0 + t)^j up to t^(r-1) must vanish.
            for d in range(r):
                row = []
                for j in range(cap + 1):
                    shifted = Poly.x_minus(-x0, p) ** j  # (x + x0)^j = (x0 + t)^j with x -> t
                    row.append(shifted.coeffs[d] if d < len(shifted.coeffs) else 0)
                rows.append(row)
        if rows:
            kern = MatrixFp(rows, p).kernel_basis()
        else:
            kern = [[1 if i == j else 0 for i in range(cap + 1)] for j in range(cap + 1)]
        return [
            FunctionFieldElement(curve, Poly(vec, p), Poly([], p), den) for vec in kern
        ]

    n_O = int(D[INFINITY])
    mult_by_x: dict[int, int] = {}
    for P, c in D.items():
        if P.is_infinity or c <= 0:
            continue
        need = int(c) if P.y != 0 else -(-int(c) // 2)
        mult_by_x[P.x] = max(mult_by_x.get(P.x, 0), need)
    den = Poly([1], p)
    for x0, m in sorted(mult_by_x.items()):
        den = den * Poly.x_minus(x0, p) ** m
    dc = den.degree
    cap_a = dc + rational_floor(Fraction(n_O, 2))
    cap_b = dc + rational_floor(Fraction(n_O - 3, 2))
    monomials: list[tuple[int, bool]] = [(i, False) for i in range(cap_a + 1)]
    monomials += [(j, True) for j in range(cap_b + 1)]
    if not monomials:
        return []
    constrained: dict[CurvePoint, int] = {}
    for x0, m in mult_by_x.items():
        for P in _points_above(curve, x0):
            e = 1 if P.y != 0 else 2
            r = e * m - int(D[P])
            if r > 0:
                constrained[P] = r
    for P, c in D.items():
        if not P.is_infinity and c < 0 and P not in constrained:
            constrained[P] = -int(c)
    rows: list[list[int]] = []
    for P in sorted(constrained, key=CurvePoint.sort_key):
        r = constrained[P]
        xs, ys = local_expansions(curve, P, r)
        assert ys is not None
        x_pows = [[1] + [0] * (r - 1)]
        for _ in range(max(cap_a, cap_b)):
            x_pows.append(_series_mul(x_pows[-1], xs, r, p))
        cols = []
        for j, with_y in monomials:
            series = _series_mul(x_pows[j], ys, r, p) if with_y else x_pows[j]
            cols.append(series)
        for d in range(r):
            rows.append([col[d] for col in cols])
    if rows:
        kern = MatrixFp(rows, p).kernel_basis()
    else:
        kern = [[1 if i == j else 0 for i in range(len(monomials))] for j in range(len(monomials))]
    out = []
    for vec in kern:
        a = [0] * (cap_a + 1)
        b = [0] * (cap_b + 1)
        for coef, (j, with_y) in zip(vec, monomials):
            if with_y:
                b[j] = coef
            else:
                a[j] = coef
        out.append(FunctionFieldElement(curve, Poly(a, p), Poly(b, p), den))
    return out


def _echelonize_by_valuation(
    curve: Curve, basis: list[FunctionFieldElement], anchor: CurvePoint
) -> list[FunctionFieldElement]:
    p = curve.p
    work = list(basis)
    while True:
        vals = [valuation(curve, f, anchor) for f in work]
        by_val: dict[int, list[int]] = {}
        for i, v in enumerate(vals):
            by_val.setdefault(v, []).append(i)
        clash = next((idxs for idxs in by_val.values() if len(idxs) > 1), None)
        if clash is None:
            break
        keep, other = clash[0], clash[1]
        lc_keep = leading_coefficient(curve, work[keep], anchor)
        lc_other = leading_coefficient(curve, work[other], anchor)
        factor = lc_other * inv_mod(lc_keep, p) % p
        work[other] = work[other] - work[keep].scale(factor)
        assert not work[other].is_zero(), "basis was linearly dependent"
    work.sort(key=lambda f: -valuation(curve, f, anchor))
    return work


def divisor_of(curve: Curve, f: FunctionFieldElement, candidates: Iterable[CurvePoint]) -> Divisor:
    """Orders of f at the given points, as a divisor (zero orders dropped)."""
    return Divisor({P: valuation(curve, f, P) for P in candidates})
