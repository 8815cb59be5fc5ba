"""Exact rational linear algebra.

Vectors are tuples of :class:`fractions.Fraction`; matrices are sequences of
rows.  Every routine here is exact, there is no floating point anywhere.
Subspaces are stored in reduced row echelon form (pivots equal to 1, pivot
columns leftmost), which is canonical, so two subspaces are equal exactly
when their stored bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = list[list[Fraction]]


class DimensionMismatch(ValueError):
    """Raised when two objects live in ambient spaces of different dimension."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted, use Fraction or str")
    return Fraction(x)


def vector(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[to_fraction(v) for v in row] for row in rows]


def zeros(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[Fraction]], cols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a)


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def scale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * x for x in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(u, v) if x and y), Fraction(0))


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def rref(m: Sequence[Sequence[Fraction]], cols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form of ``m``.

    Returns the nonzero rows of the echelon form and the list of pivot
    columns.  ``cols`` is only needed when ``m`` has no rows.
    """
    rows = [list(r) for r in m]
    ncols = len(rows[0]) if rows else (cols or 0)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _integer_rows(m: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in m:
        d = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * d) for x in row])
    return out


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination over the integers."""
    a = _integer_rows(m)
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        prow = a[r]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def kernel_basis(m: Sequence[Sequence[Fraction]], cols: int | None = None) -> list[Vector]:
    """Basis of the right null space ``{x : m x = 0}``.

    One vector per free column of the echelon form; the vector for free
    column ``f`` has a 1 in position ``f``.
    """
    ncols = len(m[0]) if m else (cols or 0)
    red, pivots = rref(m, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """One solution of ``a x = b``, or None if the system is inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return tuple(x)


def inverse(a: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(a)
    aug = [list(row) + list(e) for row, e in zip(a, identity(n))]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient`` held in canonical echelon form."""

    ambient: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [vector(v) for v in vectors]
        for v in rows:
            if len(v) != ambient:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient}")
        red, pivots = rref(rows, ambient)
        return cls(ambient, tuple(tuple(r) for r in red), tuple(pivots))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, (), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.span(ambient, (unit(ambient, i) for i in range(ambient)))

    @classmethod
    def coordinate(cls, ambient: int, indices: Iterable[int]) -> "Subspace":
        return cls.span(ambient, (unit(ambient, i) for i in indices))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """``v`` minus its component along this subspace, relative to the
        coordinate complement (the non-pivot coordinate axes)."""
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] -= c * x
        return tuple(out)

    def __contains__(self, v: Sequence[Fraction]) -> bool:
        return is_zero(self.reduce(v))

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coordinates of ``v`` in the echelon basis; ``v`` must lie in the span."""
        if v not in self:
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def complement_indices(self) -> tuple[int, ...]:
        piv = set(self.pivots)
        return tuple(i for i in range(self.ambient) if i not in piv)

    def quotient_coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coordinates of ``v mod self`` on the coordinate complement."""
        red = self.reduce(v)
        return tuple(red[i] for i in self.complement_indices())

    def issubset(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(v in other for v in self.basis)

    def combination(self, coeffs: Sequence[Fraction]) -> Vector:
        out = [Fraction(0)] * self.ambient
        for c, row in zip(coeffs, self.basis):
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] += c * x
        return tuple(out)


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient:
        raise DimensionMismatch(f"ambient dimensions differ: {a.ambient} vs {b.ambient}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.span(a.ambient, a.basis + b.basis)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if not a.dim or not b.dim:
        return Subspace.zero(a.ambient)
    # solve sum_i s_i a_i - sum_j t_j b_j = 0
    cols = list(a.basis) + [scale(Fraction(-1), v) for v in b.basis]
    m = transpose(cols)
    sols = kernel_basis(m, len(cols))
    return Subspace.span(a.ambient, (a.combination(s[: a.dim]) for s in sols))


class CoordinateSolver:
    """Coordinates with respect to a fixed, not necessarily echelon, basis.

    Precomputes a left inverse on a set of independent rows so that each
    lookup costs one small matrix-vector product.
    """

    def __init__(self, basis: Sequence[Sequence[Fraction]], ambient: int | None = None):
        self.basis = [vector(b) for b in basis]
        self.ambient = len(self.basis[0]) if self.basis else (ambient or 0)
        self.span = Subspace.span(self.ambient, self.basis)
        if self.span.dim != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")
        # pivot columns of the basis rows index an invertible square block
        _, piv = rref([list(r) for r in self.basis], self.ambient)
        self._rows = piv
        square = [[b[r] for b in self.basis] for r in piv]
        self._inv = inverse(square) if piv else []

    def __call__(self, v: Sequence[Fraction]) -> Vector:
        if v not in self.span:
            raise ValueError("vector is not in the span of the basis")
        return matvec(self._inv, [v[r] for r in self._rows]) if self._rows else ()
