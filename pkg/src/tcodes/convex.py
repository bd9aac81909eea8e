"""Exact piecewise-linear convexity in one and two variables.

Everything is computed over rationals: lattice polytopes, upper concave
envelopes of finite graph-point sets, min-plus support-function slices, the
Legendre-type duality between the two, sup-convolution, and exact integrals
of concave piecewise-linear functions over their domains.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .algebra import rational_ceil, rational_floor

Point = tuple[Fraction, ...]


def make_point(coords: Sequence[Fraction | int] | Fraction | int) -> Point:
    if isinstance(coords, (int, Fraction)):
        return (Fraction(coords),)
    return tuple(Fraction(c) for c in coords)


def dot(u: Point, v: Point) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def primitive_vector(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for c in v:
        g = gcd(g, c)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(c // g for c in v)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points: Iterable[Point]) -> list[Point]:
    """Convex hull, counterclockwise from the lexicographic minimum.

    Degenerate inputs give one point or the two segment endpoints.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return [pts[0], pts[-1]]
    return hull


def polygon_area2(hull: Sequence[Point]) -> Fraction:
    """Twice the signed area (positive for counterclockwise order)."""
    total = Fraction(0)
    for i in range(len(hull)):
        x1, y1 = hull[i]
        x2, y2 = hull[(i + 1) % len(hull)]
        total += x1 * y2 - x2 * y1
    return total


def hull_contains(hull: Sequence[Point], p: Point) -> bool:
    if len(hull) == 1:
        return hull[0] == p
    if len(hull) == 2:
        a, b = hull
        if _cross(a, b, p) != 0:
            return False
        return all(min(a[i], b[i]) <= p[i] <= max(a[i], b[i]) for i in range(2))
    return all(
        _cross(hull[i], hull[(i + 1) % len(hull)], p) >= 0 for i in range(len(hull))
    )


def clip_segment(hull: Sequence[Point], q0: Point, q1: Point) -> tuple[Fraction, Fraction] | None:
    """Parameter range [tmin, tmax] of {q0 + t(q1-q0) : 0 <= t <= 1} inside the hull."""
    tmin, tmax = Fraction(0), Fraction(1)
    d = (q1[0] - q0[0], q1[1] - q0[1])
    if len(hull) < 3:
        raise ValueError("segment clipping needs a full-dimensional polygon")
    for i in range(len(hull)):
        a, b = hull[i], hull[(i + 1) % len(hull)]
        # Inside condition cross(a, b, q0 + t d) >= 0 is affine in t.
        base = _cross(a, b, q0)
        slope = (b[0] - a[0]) * d[1] - (b[1] - a[1]) * d[0]
        if slope == 0:
            if base < 0:
                return None
        elif slope > 0:
            tmin = max(tmin, -base / slope)
        else:
            tmax = min(tmax, -base / slope)
    if tmin > tmax:
        return None
    return tmin, tmax


def _interp_on_segment(q: Point, r: Point, zq: Fraction, zr: Fraction, p: Point) -> Fraction | None:
    d = tuple(rc - qc for rc, qc in zip(r, q))
    axis = next((i for i, c in enumerate(d) if c != 0), None)
    if axis is None:
        return None
    lam = (p[axis] - q[axis]) / d[axis]
    if not 0 <= lam <= 1:
        return None
    if any(q[i] + lam * d[i] != p[i] for i in range(len(p))):
        return None
    return (1 - lam) * zq + lam * zr


def _signed2(a: Point, b: Point, c: Point) -> Fraction:
    return _cross(a, b, c)


class LatticePolytope:
    """Convex lattice polytope in Z^m, m in {1, 2}, with canonical vertex order."""

    def __init__(self, vertices: Sequence[Sequence[int]]):
        vtx = [tuple(int(c) for c in v) for v in vertices]
        if not vtx:
            raise ValueError("empty polytope")
        m = len(vtx[0])
        if m not in (1, 2) or any(len(v) != m for v in vtx):
            raise ValueError("polytopes are supported in dimensions 1 and 2")
        self.m = m
        if m == 1:
            lo = min(v[0] for v in vtx)
            hi = max(v[0] for v in vtx)
            self.vertices: tuple[tuple[int, ...], ...] = ((lo,),) if lo == hi else ((lo,), (hi,))
        else:
            hull = convex_hull_2d([make_point(v) for v in vtx])
            out = []
            for p in hull:
                if any(c.denominator != 1 for c in p):
                    raise ValueError("lattice polytope vertices must be integral")
                out.append(tuple(int(c) for c in p))
            self.vertices = tuple(out)

    @classmethod
    def interval(cls, lo: int, hi: int) -> "LatticePolytope":
        if lo > hi:
            raise ValueError(f"empty interval [{lo},{hi}]")
        return cls([(lo,), (hi,)])

    @classmethod
    def from_points(cls, points: Sequence[Sequence[int]]) -> "LatticePolytope":
        return cls(points)

    def vertex_points(self) -> list[Point]:
        return [make_point(v) for v in self.vertices]

    def contains(self, u: Sequence[int] | Sequence[Fraction]) -> bool:
        p = make_point(u)
        if self.m == 1:
            lo, hi = self.bounds()
            return lo <= p[0] <= hi
        return hull_contains(self.vertex_points(), p)

    def bounds(self, axis: int = 0) -> tuple[int, int]:
        vals = [v[axis] for v in self.vertices]
        return min(vals), max(vals)

    def lattice_points(self) -> list[tuple[int, ...]]:
        """All integer points, in lexicographic order."""
        if self.m == 1:
            lo, hi = self.bounds()
            return [(u,) for u in range(lo, hi + 1)]
        xlo, xhi = self.bounds(0)
        ylo, yhi = self.bounds(1)
        return [
            (x, y)
            for x in range(xlo, xhi + 1)
            for y in range(ylo, yhi + 1)
            if self.contains((x, y))
        ]

    def interior_lattice_points(self) -> list[tuple[int, ...]]:
        if self.m != 1:
            raise ValueError("interior lattice points are needed only on intervals")
        lo, hi = self.bounds()
        return [(u,) for u in range(lo + 1, hi)]

    def volume(self) -> Fraction:
        """Length for m = 1, Euclidean area for m = 2."""
        if self.m == 1:
            lo, hi = self.bounds()
            return Fraction(hi - lo)
        if len(self.vertices) < 3:
            return Fraction(0)
        return polygon_area2(self.vertex_points()) / 2

    def width_along(self, axis: int) -> int:
        lo, hi = self.bounds(axis)
        return hi - lo

    def is_full_dimensional(self) -> bool:
        if self.m == 1:
            return len(self.vertices) == 2
        return len(self.vertices) >= 3

    def minkowski(self, other: "LatticePolytope") -> "LatticePolytope":
        sums = [
            tuple(a + b for a, b in zip(v, w))
            for v in self.vertices
            for w in other.vertices
        ]
        return LatticePolytope(sums)

    def scale(self, k: int) -> "LatticePolytope":
        if k < 0:
            raise ValueError("scaling factor must be nonnegative")
        if k == 0:
            return LatticePolytope([(0,) * self.m])
        return LatticePolytope([tuple(k * c for c in v) for v in self.vertices])

    def rays(self) -> list[tuple[int, ...]]:
        """Primitive ray generators of the normal fan (one per facet)."""
        if not self.is_full_dimensional():
            raise ValueError("normal-fan rays need a full-dimensional polytope")
        if self.m == 1:
            return [(-1,), (1,)]
        out = []
        n = len(self.vertices)
        for i in range(n):
            a, b = self.vertices[i], self.vertices[(i + 1) % n]
            d = (b[0] - a[0], b[1] - a[1])
            out.append(primitive_vector((d[1], -d[0])))
        return sorted(out)

    def min_face_vertices(self, n: Sequence[int]) -> list[tuple[int, ...]]:
        """Vertices minimizing the pairing with n."""
        vals = [sum(c * w for c, w in zip(v, n)) for v in self.vertices]
        lo = min(vals)
        return [v for v, val in zip(self.vertices, vals) if val == lo]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LatticePolytope)
            and self.m == other.m
            and set(self.vertices) == set(other.vertices)
        )

    def __repr__(self) -> str:
        return f"LatticePolytope({list(self.vertices)})"


Facet = tuple[Point, Fraction, tuple[Point, ...]]  # (gradient, constant, cell vertices)


class ConcavePL:
    """A concave piecewise-linear function, stored by its graph vertices.

    Built as the upper concave envelope of finite graph data. `had_collinear`
    records whether some input point lay on the envelope without being one of
    its vertices, which is exactly a failure of strict concavity.
    """

    def __init__(self, m: int, vertices: Sequence[tuple[Point, Fraction]], had_collinear: bool, facets: tuple[Facet, ...] | None = None):
        self.m = m
        self.vertices = tuple(sorted(((tuple(p), Fraction(z)) for p, z in vertices)))
        self.had_collinear = had_collinear
        self._facets = facets

    @classmethod
    def from_graph_points(
        cls, points: Iterable[tuple[Sequence[Fraction | int] | int, Fraction | int]]
    ) -> "ConcavePL":
        reps: dict[Point, Fraction] = {}
        for pos, val in points:
            p = make_point(pos)
            z = Fraction(val)
            if p not in reps or reps[p] < z:
                reps[p] = z
        if not reps:
            raise ValueError("a concave function needs at least one graph point")
        m = len(next(iter(reps)))
        if m not in (1, 2):
            raise ValueError("supported in dimensions 1 and 2 only")
        if any(len(p) != m for p in reps):
            raise ValueError("mixed-dimension graph points")
        if m == 1:
            return cls._envelope_1d(reps)
        return cls._envelope_2d(reps)

    @classmethod
    def constant_on(cls, domain: LatticePolytope, value: Fraction | int = 0) -> "ConcavePL":
        return cls.from_graph_points([(v, value) for v in domain.vertices])

    @classmethod
    def _envelope_1d(cls, reps: dict[Point, Fraction]) -> "ConcavePL":
        # Monotone upper-hull scan; the extreme positions always survive, so
        # this yields exactly the envelope vertices of a function graph.
        pts = sorted(reps.items())
        chain: list[tuple[Point, Fraction]] = []
        collinear = False
        for p, z in pts:
            while len(chain) >= 2:
                (p0, z0), (p1, z1) = chain[-2], chain[-1]
                turn = _cross((p0[0], z0), (p1[0], z1), (p[0], z))
                if turn > 0:
                    chain.pop()
                elif turn == 0:
                    chain.pop()
                    collinear = True
                else:
                    break
            chain.append((p, z))
        return cls(1, chain, collinear)

    @classmethod
    def _envelope_2d(cls, reps: dict[Point, Fraction]) -> "ConcavePL":
        positions = list(reps)
        hull = convex_hull_2d(positions)
        if len(hull) == 1:
            return cls(2, [(hull[0], reps[hull[0]])], False)
        if len(hull) == 2:
            q0, q1 = hull
            d = (q1[0] - q0[0], q1[1] - q0[1])
            dd = d[0] * d[0] + d[1] * d[1]
            params = {}
            for p, z in reps.items():
                s = ((p[0] - q0[0]) * d[0] + (p[1] - q0[1]) * d[1]) / dd
                sp = (Fraction(s),)
                if sp not in params or params[sp] < z:
                    params[sp] = z
            inner = cls._envelope_1d(params)
            verts = [((q0[0] + s[0] * d[0], q0[1] + s[0] * d[1]), z) for s, z in inner.vertices]
            return cls(2, verts, inner.had_collinear)
        items = list(reps.items())
        n = len(items)
        planes: set[tuple[Fraction, Fraction, Fraction]] = set()
        for i in range(n):
            pi, zi = items[i]
            for j in range(i + 1, n):
                pj, zj = items[j]
                for k in range(j + 1, n):
                    pk, zk = items[k]
                    d = _signed2(pi, pj, pk)
                    if d == 0:
                        continue
                    g1 = ((zj - zi) * (pk[1] - pi[1]) - (zk - zi) * (pj[1] - pi[1])) / d
                    g2 = ((zk - zi) * (pj[0] - pi[0]) - (zj - zi) * (pk[0] - pi[0])) / d
                    c = zi - g1 * pi[0] - g2 * pi[1]
                    if all(g1 * p[0] + g2 * p[1] + c >= z for p, z in items):
                        planes.add((g1, g2, c))
        facets: list[Facet] = []
        for g1, g2, c in sorted(planes):
            tight = [p for p, z in items if g1 * p[0] + g2 * p[1] + c == z]
            cell = convex_hull_2d(tight)
            if len(cell) >= 3:
                facets.append(((g1, g2), c, tuple(cell)))
        assert facets, "full-dimensional hull must have at least one upper facet"

        def env_value(p: Point) -> Fraction:
            return min(g[0] * p[0] + g[1] * p[1] + c for g, c, _ in facets)

        on_env = [(p, z) for p, z in items if env_value(p) == z]
        vertices: list[tuple[Point, Fraction]] = []
        collinear = False
        for p, z in on_env:
            others = [(q, w) for q, w in on_env if q != p]
            best: Fraction | None = None
            for a in range(len(others)):
                qa, za = others[a]
                for b in range(a + 1, len(others)):
                    qb, zb = others[b]
                    val = _interp_on_segment(qa, qb, za, zb, p)
                    if val is not None and (best is None or val > best):
                        best = val
                    for cdx in range(b + 1, len(others)):
                        qc, zc = others[cdx]
                        denom = _signed2(qa, qb, qc)
                        if denom == 0:
                            continue
                        la = _signed2(p, qb, qc) / denom
                        lb = _signed2(qa, p, qc) / denom
                        lc = _signed2(qa, qb, p) / denom
                        if la >= 0 and lb >= 0 and lc >= 0:
                            val = la * za + lb * zb + lc * zc
                            if best is None or val > best:
                                best = val
            if best is None or best < z:
                vertices.append((p, z))
            else:
                collinear = True
        return cls(2, vertices, collinear, tuple(facets))

    # -- domain ----------------------------------------------------------

    def domain_vertices(self) -> list[Point]:
        positions = [p for p, _ in self.vertices]
        if self.m == 1:
            return [min(positions), max(positions)] if len(positions) > 1 else positions
        return convex_hull_2d(positions)

    def domain_dim(self) -> int:
        dv = self.domain_vertices()
        if len(dv) == 1:
            return 0
        if self.m == 1 or len(dv) == 2:
            return 1
        return 2

    def domain_contains(self, u: Sequence[Fraction | int] | int) -> bool:
        p = make_point(u)
        if self.m == 1:
            dv = self.domain_vertices()
            return dv[0][0] <= p[0] <= dv[-1][0]
        return hull_contains(self.domain_vertices(), p)

    def domain_polytope(self) -> LatticePolytope:
        dv = self.domain_vertices()
        if any(c.denominator != 1 for p in dv for c in p):
            raise ValueError("domain is not a lattice polytope")
        return LatticePolytope([tuple(int(c) for c in p) for p in dv])

    def domain_lattice_points(self) -> list[tuple[int, ...]]:
        if self.m == 1:
            dv = self.domain_vertices()
            lo = rational_ceil(dv[0][0])
            hi = rational_floor(dv[-1][0])
            return [(u,) for u in range(lo, hi + 1)]
        hull = self.domain_vertices()
        xs = [p[0] for p in hull]
        ys = [p[1] for p in hull]
        out = []
        for x in range(rational_ceil(min(xs)), rational_floor(max(xs)) + 1):
            for y in range(rational_ceil(min(ys)), rational_floor(max(ys)) + 1):
                if hull_contains(hull, make_point((x, y))):
                    out.append((x, y))
        return out

    # -- evaluation ------------------------------------------------------

    def try_evaluate(self, u: Sequence[Fraction | int] | int) -> Fraction | None:
        p = make_point(u)
        if not self.domain_contains(p):
            return None
        if self.m == 1:
            verts = self.vertices
            if len(verts) == 1:
                return verts[0][1]
            for (qa, za), (qb, zb) in zip(verts, verts[1:]):
                if qa[0] <= p[0] <= qb[0]:
                    return za + (zb - za) * (p[0] - qa[0]) / (qb[0] - qa[0])
            raise AssertionError("unreachable: point inside domain but no segment")
        dim = self.domain_dim()
        if dim == 0:
            return self.vertices[0][1]
        if dim == 1:
            verts = self.vertices
            for (qa, za), (qb, zb) in zip(verts, verts[1:]):
                val = _interp_on_segment(qa, qb, za, zb, p)
                if val is not None:
                    return val
            raise AssertionError("unreachable: point inside segment domain")
        return min(g[0] * p[0] + g[1] * p[1] + c for g, c, _ in self.facets())

    def evaluate(self, u: Sequence[Fraction | int] | int) -> Fraction:
        val = self.try_evaluate(u)
        if val is None:
            raise ValueError(f"{u} is outside the domain")
        return val

    # -- structure -------------------------------------------------------

    def facets(self) -> tuple[Facet, ...]:
        """Full-dimensional linearity cells with their affine data."""
        if self._facets is not None:
            return self._facets
        if self.m == 1:
            out: list[Facet] = []
            verts = self.vertices
            for (qa, za), (qb, zb) in zip(verts, verts[1:]):
                g = (zb - za) / (qb[0] - qa[0])
                out.append(((g,), za - g * qa[0], (qa, qb)))
            self._facets = tuple(out)
        elif self.domain_dim() < 2:
            self._facets = ()
        else:
            rebuilt = ConcavePL._envelope_2d(dict(self.vertices))
            self._facets = rebuilt.facets()
        return self._facets

    def cells(self) -> list[tuple[Point, Fraction]]:
        """(gradient, constant) per linearity cell."""
        return [(g, c) for g, c, _ in self.facets()]

    def is_integral(self) -> bool:
        return all(
            all(c.denominator == 1 for c in p) and z.denominator == 1
            for p, z in self.vertices
        )

    def affine_data(self) -> tuple[Point, Fraction] | None:
        """(gradient, constant) when the function is affine on its whole domain."""
        dim = self.domain_dim()
        if dim == 0:
            return (Fraction(0),) * self.m, self.vertices[0][1]
        if self.m == 1:
            if len(self.vertices) != 2:
                return None
            (g,), c, _ = self.facets()[0]
            return (g,), c
        if dim == 1:
            if len(self.vertices) != 2:
                return None
            (q0, z0), (q1, z1) = self.vertices
            d = (q1[0] - q0[0], q1[1] - q0[1])
            dd = d[0] * d[0] + d[1] * d[1]
            s = (z1 - z0) / dd
            g = (s * d[0], s * d[1])
            return g, z0 - g[0] * q0[0] - g[1] * q0[1]
        fs = self.facets()
        if len(fs) != 1:
            return None
        g, c, _ = fs[0]
        return g, c

    def integral(self) -> Fraction:
        """Exact integral over the domain (zero for degenerate domains)."""
        if self.m == 1:
            total = Fraction(0)
            for (qa, za), (qb, zb) in zip(self.vertices, self.vertices[1:]):
                total += (qb[0] - qa[0]) * (za + zb) / 2
            return total
        if self.domain_dim() < 2:
            return Fraction(0)
        total = Fraction(0)
        for g, c, cell in self.facets():
            base = cell[0]
            for a, b in zip(cell[1:], cell[2:]):
                area2 = _signed2(base, a, b)
                mean = (
                    g[0] * (base[0] + a[0] + b[0]) + g[1] * (base[1] + a[1] + b[1])
                ) / 3 + c
                total += area2 * mean / 2
        return total

    def shift(self, c: Fraction | int) -> "ConcavePL":
        out = ConcavePL(self.m, [(p, z + c) for p, z in self.vertices], self.had_collinear)
        return out

    def scale(self, k: int) -> "ConcavePL":
        if k <= 0:
            raise ValueError("scaling factor must be positive")
        verts = [(tuple(k * c for c in p), k * z) for p, z in self.vertices]
        return ConcavePL(self.m, verts, self.had_collinear)

    def min_vertex_value(self) -> Fraction:
        return min(z for _, z in self.vertices)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ConcavePL)
            and self.m == other.m
            and self.vertices == other.vertices
        )

    def __repr__(self) -> str:
        pieces = ", ".join(f"{tuple(map(str, p))}: {z}" for p, z in self.vertices)
        return f"ConcavePL[{pieces}]"


class SupportFunctionSlice:
    """A min-plus combination  v -> min_j (<u_j, v> - a_j)  of affine terms.

    Terms are kept canonical: exactly the vertices of the upper concave
    envelope of the graph points (u_j, a_j), which never changes the minimum.
    """

    def __init__(self, terms: Iterable[tuple[Sequence[Fraction | int] | int, Fraction | int]]):
        dual = ConcavePL.from_graph_points(list(terms))
        self.m = dual.m
        self.terms: tuple[tuple[Point, Fraction], ...] = dual.vertices
        self._dual = dual

    def value(self, v: Sequence[Fraction | int] | int) -> Fraction:
        p = make_point(v)
        return min(dot(u, p) - a for u, a in self.terms)

    def is_integral(self) -> bool:
        return self._dual.is_integral()

    def dual(self) -> ConcavePL:
        return self._dual

    def subdivision_vertices(self) -> list[tuple[Point, Fraction]]:
        """Vertices v of the induced subdivision with their values min(v).

        Each full-dimensional linearity cell of the dual, with affine data
        z = <g, u> + c, contributes the subdivision vertex v = g at which
        the slice takes the value -c.
        """
        out = {}
        for g, c in self._dual.cells():
            out[g] = -c
        return sorted(out.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SupportFunctionSlice) and self.terms == other.terms

    def __repr__(self) -> str:
        pieces = ", ".join(f"({tuple(map(str, u))}, {a})" for u, a in self.terms)
        return f"SupportFunctionSlice[{pieces}]"


def dual_of_slice(s: SupportFunctionSlice) -> ConcavePL:
    """Concave dual u -> min_v (<u, v> - s(v)), finite exactly on conv(terms)."""
    return s.dual()


def slice_of_dual(f: ConcavePL) -> SupportFunctionSlice:
    """Inverse of dual_of_slice; graph vertices become the min-plus terms."""
    return SupportFunctionSlice(f.vertices)


def sup_convolution(f: ConcavePL, g: ConcavePL) -> ConcavePL:
    """Sup-convolution: u -> sup {f(u') + g(u'') : u' + u'' = u}.

    The hypograph of the result is the Minkowski sum of the hypographs, so the
    envelope of pairwise vertex sums computes it exactly.
    """
    if f.m != g.m:
        raise ValueError("mixed dimensions in sup-convolution")
    sums = [
        (tuple(a + b for a, b in zip(p, q)), zf + zg)
        for p, zf in f.vertices
        for q, zg in g.vertices
    ]
    return ConcavePL.from_graph_points(sums)


def floor_sum_over_lattice(f: ConcavePL) -> int:
    """Sum of floor(f(u)) over the lattice points of the domain."""
    return sum(rational_floor(f.evaluate(u)) for u in f.domain_lattice_points())


def signed_ceiling_interior_sum(f: ConcavePL) -> int:
    """Sum over interior lattice points of sign(f(u)) * ceil(|f(u)|) (m = 1)."""
    if f.m != 1:
        raise ValueError("interior counting is defined on intervals")
    dv = f.domain_vertices()
    lo = rational_floor(dv[0][0]) + 1
    hi = rational_ceil(dv[-1][0]) - 1
    total = 0
    for u in range(lo, hi + 1):
        x = f.evaluate(u)
        if x > 0:
            total += rational_ceil(x)
        elif x < 0:
            total -= rational_ceil(-x)
    return total


def toric_polytope(first: ConcavePL, second: ConcavePL) -> LatticePolytope:
    """Lattice polytope spanned by the graph of the first slice and the
    negated graph of the second (both m = 1 with lattice graph vertices)."""
    if first.m != 1 or second.m != 1:
        raise ValueError("the toric model is built from two interval slices")
    pts = []
    for sign, pl in ((1, first), (-1, second)):
        for p, z in pl.vertices:
            if p[0].denominator != 1 or z.denominator != 1:
                raise ValueError("graph vertices must be lattice points")
            pts.append((int(p[0]), sign * int(z)))
    return LatticePolytope(pts)
