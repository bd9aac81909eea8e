"""Evaluation codes attached to divisorial polytopes, with parameter bounds.

A code is built from a divisorial polytope, its curve, and evaluation points
whose slices are affine with integer data. Rows are graded section basis
elements, columns are (point, torus element) pairs, and entries twist the
section value by the fixed local trivialization exponent at each point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .algebra import MatrixFp, Poly, is_prime_power, primitive_root, rational_floor
from .convex import ConcavePL, LatticePolytope
from .curve import (
    INFINITY,
    Curve,
    CurvePoint,
    Divisor,
    FunctionFieldElement,
    riemann_roch_basis,
    twisted_evaluate,
)
from .tvariety import (
    DivisorialPolytope,
    genus_of_section,
    graded_sections,
    nu,
    project,
)


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} classes, budget is {budget}")
        self.required = required
        self.budget = budget


def _affine_twist(slice_) -> tuple[tuple[int, ...], int] | None:
    data = slice_.affine_data()
    if data is None:
        return None
    g, c = data
    if any(x.denominator != 1 for x in g) or c.denominator != 1:
        return None
    return tuple(int(x) for x in g), int(c)


def admissible_points(dp: DivisorialPolytope) -> list[CurvePoint]:
    """Rational points whose slice is affine with integer data."""
    return [P for P in dp.curve.rational_points() if _affine_twist(dp.slice_at(P)) is not None]


@dataclass
class EvaluationSetup:
    """A divisorial polytope with chosen evaluation points and their twists."""

    dp: DivisorialPolytope
    points: list[CurvePoint]
    twists: list[tuple[tuple[int, ...], int]]

    @classmethod
    def build(cls, dp: DivisorialPolytope, points: list[CurvePoint] | None = None) -> "EvaluationSetup":
        if points is None:
            points = admissible_points(dp)
        if len(set(points)) != len(points):
            raise ValueError("evaluation points must be distinct")
        twists = []
        for P in points:
            tw = _affine_twist(dp.slice_at(P))
            if tw is None:
                raise ValueError(f"slice at {P.render()} is not affine-integral")
            twists.append(tw)
        return cls(dp, list(points), twists)

    @property
    def curve(self) -> Curve:
        return self.dp.curve

    @property
    def q(self) -> int:
        return self.curve.p

    @property
    def l(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return self.dp.m

    @property
    def n(self) -> int:
        return self.l * (self.q - 1) ** self.m

    def torus(self) -> list[tuple[int, ...]]:
        """All m-tuples over the unit group, in power order of the smallest
        primitive root (outer coordinates vary slowest)."""
        q = self.q
        g = primitive_root(q)
        powers = [pow(g, i, q) for i in range(q - 1)]
        out: list[tuple[int, ...]] = [()]
        for _ in range(self.m):
            out = [t + (w,) for t in out for w in powers]
        return out

    def twist_exponent(self, i: int, u: tuple[int, ...]) -> int:
        v, c = self.twists[i]
        return sum(a * b for a, b in zip(u, v)) + c


def _t_power(t: tuple[int, ...], u: tuple[int, ...], p: int) -> int:
    out = 1
    for base, e in zip(t, u):
        out = out * pow(base, e % (p - 1), p) % p
    return out


@dataclass
class EvaluationCode:
    """Raw evaluation matrix with row labels and derived rank data."""

    setup: EvaluationSetup
    rows: list[list[int]]
    row_labels: list[tuple[tuple[int, ...], int]]

    def __post_init__(self) -> None:
        mat = MatrixFp(self.rows, self.setup.q)
        self.selected = mat.independent_row_indices()

    @property
    def n(self) -> int:
        return self.setup.n

    @property
    def k(self) -> int:
        return len(self.selected)

    @property
    def injective(self) -> bool:
        return self.k == len(self.rows)

    def matrix(self) -> MatrixFp:
        return MatrixFp(self.rows, self.setup.q)

    def generator(self) -> MatrixFp:
        """The first k linearly independent rows, in construction order."""
        return MatrixFp([self.rows[i] for i in self.selected], self.setup.q)


def build_code(setup: EvaluationSetup) -> EvaluationCode:
    """Evaluate every graded basis element at every (point, torus) column."""
    curve = setup.curve
    p = setup.q
    torus = setup.torus()
    sections = graded_sections(setup.dp)
    rows: list[list[int]] = []
    labels: list[tuple[tuple[int, ...], int]] = []
    for piece in sections.pieces:
        u = piece.u
        t_pows = [_t_power(t, u, p) for t in torus]
        for j, f in enumerate(piece.basis):
            row: list[int] = []
            for i, P in enumerate(setup.points):
                val = twisted_evaluate(curve, f, P, setup.twist_exponent(i, u))
                row.extend(val * tp % p for tp in t_pows)
            rows.append(row)
            labels.append((u, j))
    return EvaluationCode(setup, rows, labels)


@dataclass
class KBounds:
    lower: int
    gamma: int
    upper: int
    equality_case: bool


def k_bounds(dp: DivisorialPolytope) -> KBounds:
    """Dimension bound data from floor degrees, genus, and effectivity.

    gamma(u) is floor-degree + 1 - g when positive, else 1 for weights whose
    slice values are all nonnegative, else 0. The lower value sharp + N(1-g)
    and the gamma sum never exceed the section count k. The upper value
    sharp + N caps k whenever every floor degree is at least -1, and k equals
    the lower value whenever every floor degree exceeds 2g - 2. The
    equality_case flag records the weaker rational-degree form of that last
    condition, which leaves room for floor drops at interior weights.
    """
    g = dp.curve.genus
    pts = dp.lattice_points()
    sharp_total = sum(dp.floor_deg_at(u) for u in pts)
    gamma = 0
    for u in pts:
        x = dp.floor_deg_at(u) + 1 - g
        if x > 0:
            gamma += x
        elif dp.value_at(u).is_effective():
            gamma += 1
    equality = all(dp.deg_at(u) > 2 * g - 2 for u in pts)
    return KBounds(sharp_total + len(pts) * (1 - g), gamma, sharp_total + len(pts), equality)


@dataclass
class DistanceBound:
    value: int
    detail: str


def d_lower_surface(dp: DivisorialPolytope, l: int, q: int) -> DistanceBound:
    """Minimize (l - lambda) * (q - 1 - nu(lambda)) over feasible lambda (m = 1)."""
    if dp.m != 1:
        raise ValueError("the direct bound applies to interval boxes")
    lam0 = max(dp.floor_deg_at(u) for u in dp.lattice_points())
    if lam0 < 0:
        raise ValueError("no sections: every floored degree is negative")
    best = None
    arg = 0
    for lam in range(lam0 + 1):
        val = max(0, l - lam) * max(0, q - 1 - nu(dp, lam))
        if best is None or val < best:
            best, arg = val, lam
    return DistanceBound(best, f"lambda={arg} of lambda0={lam0}")


def d_lower(setup: EvaluationSetup) -> DistanceBound:
    """Minimum-distance lower bound; inductive over the last axis for m = 2."""
    dp = setup.dp
    l, q = setup.l, setup.q
    if dp.m == 1:
        return d_lower_surface(dp, l, q)
    pr = project(dp)
    base = d_lower_surface(pr, l, q)
    curves = l * (q - 1)
    lam_max = min(max(curves - base.value, 0), curves)
    w = min(dp.box.width_along(dp.m - 1), q - 1)
    z_max = lam_max * (q - 1) + (curves - lam_max) * w
    value = max(setup.n - z_max, 0)
    return DistanceBound(value, f"projected bound {base.value}, lambda_max={lam_max}, width={w}")


def _sub_boxes(dp: DivisorialPolytope, q: int) -> list[tuple[tuple[int, int], ...]]:
    """Axis-aligned lattice sub-boxes of the weight box with sides <= q - 2."""
    out = []
    if dp.m == 1:
        lo, hi = dp.box.bounds()
        for s in range(lo, hi + 1):
            for t in range(s, min(hi, s + q - 2) + 1):
                out.append(((s, t),))
        return out
    xlo, xhi = dp.box.bounds(0)
    ylo, yhi = dp.box.bounds(1)
    pts = set(dp.lattice_points())
    for s1 in range(xlo, xhi + 1):
        for t1 in range(s1, min(xhi, s1 + q - 2) + 1):
            for s2 in range(ylo, yhi + 1):
                for t2 in range(s2, min(yhi, s2 + q - 2) + 1):
                    cells = [(x, y) for x in range(s1, t1 + 1) for y in range(s2, t2 + 1)]
                    if all(c in pts for c in cells):
                        out.append(((s1, t1), (s2, t2)))
    return out


@dataclass
class UpperWitness:
    sub_box: tuple[tuple[int, int], ...]
    r0: int
    section: FunctionFieldElement
    weight: int | None


@dataclass
class UpperBound:
    value: int
    formula_min: int
    witness: UpperWitness | None


def d_upper(setup: EvaluationSetup) -> UpperBound:
    """Upper distance bound certified by an explicit low-weight codeword.

    For a sub-box B with sides r_i, let c_j be the floored minimum of slice j
    over B; a nonzero section of sum(c_j Q_j) - (first r0 points), with
    r0 = clamp(sum c_j - g, 0, l), multiplied by r_i distinct unit-root
    factors per axis, yields a codeword whose exact weight certifies the
    bound. The value is the lightest certificate over all viable sub-boxes;
    formula_min records min (l - r0) prod(q - 1 - r_i), which the value can
    exceed when an evaluation point has a sloped slice (the unit-root factors
    collapse on such a column block) and which is not trustworthy on its own
    when a certificate evaluates to the zero word. If every certificate does
    (only possible when the code's section map has a kernel), the value falls
    back to the code length.
    """
    dp, curve = setup.dp, setup.curve
    l, q, g = setup.l, setup.q, curve.genus
    stored = dp.stored_points()
    if not stored:
        raise ValueError("upper bound needs at least one stored slice")
    candidates: list[tuple[int, tuple, int, FunctionFieldElement]] = []
    for B in _sub_boxes(dp, q):
        sides = [t - s for s, t in B]
        cells = [
            u
            for u in dp.lattice_points()
            if all(s <= c <= t for c, (s, t) in zip(u, B))
        ]
        coeffs = {
            Q: rational_floor(min(dp.slice_at(Q).evaluate(u) for u in cells)) for Q in stored
        }
        r0 = max(0, min(sum(coeffs.values()) - g, l))
        D = Divisor({Q: c for Q, c in coeffs.items()})
        for P in setup.points[:r0]:
            D = D + Divisor({P: -1})
        bound = l - r0
        for r in sides:
            bound *= q - 1 - r
        if bound <= 0:
            continue
        basis = riemann_roch_basis(curve, D)
        if not basis:
            continue
        candidates.append((bound, B, r0, basis[0]))
    if not candidates:
        raise ValueError("no valid sub-box certificate exists")
    formula_min = min(bound for bound, _, _, _ in candidates)
    best: tuple[int, tuple, int, FunctionFieldElement] | None = None
    for bound, B, r0, f in sorted(candidates, key=lambda c: c[0]):
        weight = _witness_weight(setup, B, f)
        if weight is not None and (best is None or weight < best[0]):
            best = (weight, B, r0, f)
    if best is not None:
        weight, B, r0, f = best
        return UpperBound(weight, formula_min, UpperWitness(B, r0, f, weight))
    _, B, r0, f = min(candidates, key=lambda c: c[0])
    return UpperBound(setup.n, formula_min, UpperWitness(B, r0, f, None))


def _witness_weight(setup: EvaluationSetup, B: tuple[tuple[int, int], ...], f: FunctionFieldElement) -> int | None:
    """Exact weight of the certificate codeword, None if it evaluates to zero."""
    curve, p = setup.curve, setup.q
    g = primitive_root(p)
    base = tuple(s for s, _ in B)
    sides = [t - s for s, t in B]
    # Coefficients of prod_j (T - eta_j) with eta_j the first r powers of g.
    axis_polys = []
    for r in sides:
        poly = Poly([1], p)
        for j in range(r):
            poly = poly * Poly([-pow(g, j, p), 1], p)
        axis_polys.append(poly.coeffs)
    shifts: list[tuple[tuple[int, ...], int]] = [((), 1)]
    for coeffs in axis_polys:
        shifts = [
            (e + (d,), c * coeffs[d] % p)
            for e, c in shifts
            for d in range(len(coeffs))
        ]
    torus = setup.torus()
    weight = 0
    any_nonzero = False
    for i, P in enumerate(setup.points):
        vals = {}
        for e, c in shifts:
            if c == 0:
                continue
            u = tuple(b + d for b, d in zip(base, e))
            vals[u] = (vals.get(u, 0) + c * twisted_evaluate(curve, f, P, setup.twist_exponent(i, u))) % p
        for t in torus:
            entry = sum(c * _t_power(t, u, p) for u, c in vals.items()) % p
            if entry:
                weight += 1
                any_nonzero = True
    return weight if any_nonzero else None


def d_exact(generator: MatrixFp, budget: int = 2_000_000) -> int:
    """Exact minimum weight by exhausting projective message classes."""
    nonzero = [w for w in weight_enumerator(generator, budget) if w > 0]
    if not nonzero:
        raise ValueError("the zero code has no minimum distance")
    return min(nonzero)


def weight_enumerator(generator: MatrixFp, budget: int = 2_000_000) -> dict[int, int]:
    """Weight distribution of the full code (including the zero word)."""
    p = generator.p
    picked = generator.independent_row_indices()
    rows = [generator.rows[i] for i in picked]
    k = len(rows)
    n = generator.ncols
    classes = (p**k - 1) // (p - 1)
    if classes > budget:
        raise BudgetExceeded(classes, budget)
    G = np.array(rows, dtype=np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    chunk = 1 << 17
    for lead in range(k):
        free = k - 1 - lead
        total = p**free
        start = 0
        while start < total:
            cnt = min(chunk, total - start)
            idx = np.arange(start, start + cnt, dtype=np.int64)
            msgs = np.zeros((cnt, k), dtype=np.int64)
            msgs[:, lead] = 1
            for pos in range(free):
                msgs[:, k - 1 - pos] = idx % p
                idx = idx // p
            words = (msgs @ G) % p
            wts = np.count_nonzero(words, axis=1)
            counts += np.bincount(wts, minlength=n + 1)
            start += cnt
    out = {0: 1}
    for w, c in enumerate(counts):
        if c and w > 0:
            out[w] = int(c) * (p - 1)
    return dict(sorted(out.items()))


@dataclass
class HasseWeilReport:
    genus: int
    threshold_q: int
    point_bound: int


def hasse_weil_diagnostic(dp: DivisorialPolytope) -> HasseWeilReport:
    """Smallest prime power q0 with (q0-2)^2 >= g^2 q0, plus a point bound.

    Past the threshold the Weil interval guarantees enough rational points
    for the generic-section count; the bound q + 1 + floor(2 g sqrt(q)) caps
    the count at the current field size. Diagnostic only, not a certificate.
    """
    g = genus_of_section(dp)[2]
    n = 2
    while not (is_prime_power(n) and (n - 2) ** 2 >= g * g * n):
        n += 1
    q = dp.curve.p
    return HasseWeilReport(g, n, q + 1 + isqrt(4 * g * g * q))


def reed_solomon_generator(p: int, k: int) -> MatrixFp:
    """[q-1, k] Reed-Solomon code evaluated on the unit group in power order."""
    if not 1 <= k <= p - 1:
        raise ValueError("dimension must be between 1 and q-1")
    g = primitive_root(p)
    points = [pow(g, i, p) for i in range(p - 1)]
    return MatrixFp([[pow(x, i, p) for x in points] for i in range(k)], p)


def one_point_ag_generator(curve: Curve, tau: int, points: list[CurvePoint]) -> MatrixFp:
    """Evaluation of L(tau * infinity) at the given points."""
    basis = riemann_roch_basis(curve, Divisor({INFINITY: tau}))
    rows = [[twisted_evaluate(curve, f, P, 0) for P in points] for f in basis]
    return MatrixFp(rows, curve.p)


def kronecker_generator(A: MatrixFp, B: MatrixFp) -> MatrixFp:
    """Generator of the product code (Kronecker product of generators)."""
    if A.p != B.p:
        raise ValueError("mixed characteristics")
    rows = []
    for ra in A.rows:
        for rb in B.rows:
            rows.append([a * b % A.p for a in ra for b in rb])
    return MatrixFp(rows, A.p)


def ruled_divpoly(curve: Curve, a: int, alpha: int, b: int, point: CurvePoint | None = None) -> DivisorialPolytope:
    """Single-slice family: box [0, a], slice value b + alpha*u at one point."""
    if point is None:
        point = INFINITY
    box = LatticePolytope.interval(0, a)
    graph = [((0,), b)] if a == 0 else [((0,), b), ((a,), b + alpha * a)]
    return DivisorialPolytope(curve, box, {point: ConcavePL.from_graph_points(graph)})


def ruled_closed_forms(a: int, alpha: int, b: int, l: int, q: int, g: int) -> dict[str, int]:
    """Closed forms for the single-slice family used in comparisons."""
    lam0 = b + a * alpha
    at_b = max(0, l - b) * max(0, q - 1 - a)
    at_top = max(0, l - lam0) * (q - 1)
    k_eq = (a + 1) * (2 * (b + 1 - g) + alpha * a) // 2
    return {"lambda0": lam0, "d_lower": min(at_b, at_top), "k": k_eq}


@dataclass
class ProductComparison:
    k1: int
    tau: int
    a: int
    alpha: int
    b: int
    k_product: int
    d_product: int
    k_tcode: int
    d_tcode: int

    @property
    def k_matches(self) -> bool:
        return self.k_tcode == self.k_product

    @property
    def d_strictly_better(self) -> bool:
        return self.d_tcode > self.d_product


def compare_with_product(curve: Curve, k1: int, tau: int, points: list[CurvePoint]) -> ProductComparison:
    """Match a Reed-Solomon x one-point-AG product against the one-slice code.

    The slice parameters are a = k1 - 1, the smallest alpha making alpha*a
    even (with alpha*a <= 2*tau), and b = tau - alpha*a/2, so the section
    space dimension equals the product dimension k1 * (tau + 1 - g).
    """
    q, g = curve.p, curve.genus
    l = len(points)
    a = k1 - 1
    alpha = 1 if a == 0 else (1 if a % 2 == 0 else 2)
    if alpha * a > 2 * tau:
        raise ValueError("tau too small for the slice construction")
    b = tau - alpha * a // 2
    if b <= 2 * g - 2:
        raise ValueError("slice offset must exceed 2g-2 for exact dimensions")
    dp = ruled_divpoly(curve, a, alpha, b)
    setup = EvaluationSetup.build(dp, points)
    k_t = graded_sections(dp).total_dim
    d_t = d_lower(setup).value
    k_prod = k1 * (tau + 1 - g)
    d_prod = (q - k1) * (l - tau)
    return ProductComparison(k1, tau, a, alpha, b, k_prod, d_prod, k_t, d_t)


def toric_generator(p: int, lattice_points: list[tuple[int, int]]) -> MatrixFp:
    """Toric code generator: monomials at lattice points over the torus squared."""
    g = primitive_root(p)
    powers = [pow(g, i, p) for i in range(p - 1)]
    cols = [(s1, s2) for s1 in powers for s2 in powers]
    rows = []
    for z1, z2 in lattice_points:
        rows.append(
            [
                pow(s1, z1 % (p - 1), p) * pow(s2, z2 % (p - 1), p) % p
                for s1, s2 in cols
            ]
        )
    return MatrixFp(rows, p)
