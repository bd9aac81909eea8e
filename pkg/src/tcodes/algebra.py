"""Exact arithmetic over prime fields: residues, polynomials, matrices, rationals."""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

Rational = Fraction


def rational_floor(x: Rational | int) -> int:
    """Floor toward minus infinity, e.g. floor(-1/2) = -1."""
    return floor(x)


def rational_ceil(x: Rational | int) -> int:
    return -floor(-Fraction(x))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_prime_power(n: int) -> bool:
    """True when n = p^e for a prime p and e >= 1."""
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            while n % f == 0:
                n //= f
            return n == 1
        f += 1 if f == 2 else 2
    return True


def check_prime_field(p: int) -> None:
    if not isinstance(p, int) or not 2 <= p < 2**31:
        raise ValueError(f"field characteristic out of range: {p}")
    if not is_prime(p):
        raise ValueError(f"field characteristic must be prime: {p}")


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of zero residue")
    return pow(a, p - 2, p)


def _factorize(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def element_order(a: int, p: int) -> int:
    """Multiplicative order of a nonzero residue mod p."""
    a %= p
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    order = p - 1
    for q in _factorize(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def primitive_root(p: int) -> int:
    """Smallest positive primitive root mod p (returns 1 for p = 2)."""
    check_prime_field(p)
    if p == 2:
        return 1
    for g in range(2, p):
        if element_order(g, p) == p - 1:
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


class Poly:
    """Dense univariate polynomial over F_p, coefficients low to high."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs: list[int] | tuple[int, ...], p: int):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int, p: int) -> "Poly":
        return cls([c], p)

    @classmethod
    def x_minus(cls, x0: int, p: int) -> "Poly":
        return cls([-x0, 1], p)

    @property
    def degree(self) -> int:
        """Degree, with deg 0 = -1 by convention."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out, self.p)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs], self.p)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly([], self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.p)

    def scale(self, c: int) -> "Poly":
        return Poly([c * a for a in self.coeffs], self.p)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1], self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = inv_mod(other.leading(), p)
        quo = [0] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] % p
            if c == 0:
                continue
            q = c * inv_lead % p
            quo[i - d] = q
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] = (rem[i - d + j] - q * b) % p
        return Poly(quo, p), Poly(rem, p)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(inv_mod(self.leading(), self.p))

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def multiplicity(self, x0: int) -> int:
        """Vanishing order at x = x0 (raises on the zero polynomial)."""
        if self.is_zero():
            raise ValueError("zero polynomial vanishes to infinite order")
        m = 0
        f = self
        root = Poly.x_minus(x0, self.p)
        while f.evaluate(x0) == 0:
            f = f // root
            m += 1
        return m

    def deflate(self, x0: int) -> tuple[int, "Poly"]:
        """Split off the (x - x0)-power: returns (m, g) with self = (x-x0)^m g, g(x0) != 0."""
        m = self.multiplicity(x0)
        g = self
        root = Poly.x_minus(x0, self.p)
        for _ in range(m):
            g = g // root
        return m, g

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.p)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts)


class MatrixFp:
    """Dense matrix over F_p with exact Gaussian elimination."""

    def __init__(self, rows: list[list[int]], p: int):
        check_prime_field(p)
        self.p = p
        self.rows = [[c % p for c in row] for row in rows]
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged matrix")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def transpose(self) -> "MatrixFp":
        return MatrixFp([list(col) for col in zip(*self.rows)] if self.rows else [], self.p)

    def rank_and_rref(self) -> tuple[int, list[list[int]], list[int]]:
        """Row-reduce; returns (rank, rref rows, pivot column indices)."""
        p = self.p
        a = [row[:] for row in self.rows]
        pivots: list[int] = []
        r = 0
        for col in range(self.ncols):
            pivot_row = next((i for i in range(r, len(a)) if a[i][col] % p != 0), None)
            if pivot_row is None:
                continue
            a[r], a[pivot_row] = a[pivot_row], a[r]
            inv = inv_mod(a[r][col], p)
            a[r] = [c * inv % p for c in a[r]]
            for i in range(len(a)):
                if i != r and a[i][col] % p != 0:
                    f = a[i][col]
                    a[i] = [(c - f * d) % p for c, d in zip(a[i], a[r])]
            pivots.append(col)
            r += 1
            if r == len(a):
                break
        return r, a, pivots

    def rank(self) -> int:
        return self.rank_and_rref()[0]

    def kernel_basis(self) -> list[list[int]]:
        """Basis of the right null space, one vector per free column."""
        p = self.p
        rank, rref, pivots = self.rank_and_rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for j in free:
            v = [0] * self.ncols
            v[j] = 1
            for i, pc in enumerate(pivots):
                v[pc] = (-rref[i][j]) % p
            basis.append(v)
        return basis

    def independent_row_indices(self) -> list[int]:
        """Indices of the first maximal linearly independent subset of rows."""
        p = self.p
        echelon: list[list[int]] = []
        lead_cols: list[int] = []
        picked = []
        for idx, row in enumerate(self.rows):
            v = row[:]
            for lc, er in zip(lead_cols, echelon):
                if v[lc]:
                    f = v[lc]
                    v = [(c - f * d) % p for c, d in zip(v, er)]
            lead = next((j for j, c in enumerate(v) if c % p != 0), None)
            if lead is None:
                continue
            inv = inv_mod(v[lead], p)
            v = [c * inv % p for c in v]
            echelon.append(v)
            lead_cols.append(lead)
            picked.append(idx)
        return picked

    def multiply_vector(self, vec: list[int]) -> list[int]:
        p = self.p
        return [sum(c * x for c, x in zip(row, vec)) % p for row in self.rows]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MatrixFp) and self.p == other.p and self.rows == other.rows


def lattice_gcd(values: tuple[int, ...] | list[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
