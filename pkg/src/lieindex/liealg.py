"""Finite-dimensional Lie algebras over the rationals.

A :class:`LieAlgebra` is given by sparse structure constants stored for
``i < j`` only, ``[x_i, x_j] = sum_k c_ij^k x_k``.  The Jacobi identity is
checked on every basis triple when the algebra is built, so any instance in
hand is a genuine Lie algebra.

Elements are dense coordinate tuples of :class:`~fractions.Fraction`;
subspaces are :class:`~lieindex.exactlin.Subspace` objects in canonical echelon
form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exactlin import (
    CoordinateSolver,
    Matrix,
    Subspace,
    Vector,
    is_zero,
    kernel_basis,
    matmul,
    subspace_intersect,
    subspace_sum,
    to_fraction,
    transpose,
    unit,
)

Brackets = Mapping[tuple[int, int], Sequence[tuple[int, Fraction]]]


class LieError(ValueError):
    """Base class for mathematical validation failures."""


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]
    residual: Vector

    def describe(self, labels: Sequence[str] | None = None) -> str:
        names = [labels[i] for i in self.triple] if labels else [str(i) for i in self.triple]
        nz = {i: str(c) for i, c in enumerate(self.residual) if c}
        return f"Jacobi identity fails on ({', '.join(names)}): residual {nz}"


class JacobiError(LieError):
    def __init__(self, violation: JacobiViolation, labels: Sequence[str] | None = None):
        self.violation = violation
        super().__init__(violation.describe(labels))


class NotClosedError(LieError):
    """A subspace failed a closure test; ``pair`` names the offending basis pair."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        self.pair = pair
        super().__init__(message)


def _normalize_brackets(dim: int, brackets: Brackets) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
    out = {}
    for (i, j), terms in brackets.items():
        if not (0 <= i < j < dim):
            raise ValueError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < {dim}")
        acc: dict[int, Fraction] = {}
        for k, c in terms:
            if not 0 <= k < dim:
                raise ValueError(f"bracket target {k} out of range")
            acc[k] = acc.get(k, Fraction(0)) + to_fraction(c)
        clean = tuple((k, c) for k, c in sorted(acc.items()) if c)
        if clean:
            out[(i, j)] = clean
    return dict(sorted(out.items()))


def _full_table(brackets) -> dict[int, dict[int, dict[int, Fraction]]]:
    table: dict[int, dict[int, dict[int, Fraction]]] = {}
    for (i, j), terms in brackets.items():
        table.setdefault(i, {})[j] = {k: c for k, c in terms}
        table.setdefault(j, {})[i] = {k: -c for k, c in terms}
    return table


def _sparse_bracket(table, dim: int, x: dict[int, Fraction], y: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, a in x.items():
        row = table.get(i)
        if not row:
            continue
        for j, b in y.items():
            t = row.get(j)
            if t:
                ab = a * b
                for k, c in t.items():
                    out[k] = out.get(k, Fraction(0)) + ab * c
    return {k: c for k, c in out.items() if c}


def find_jacobi_violation(dim: int, brackets: Brackets) -> JacobiViolation | None:
    """First basis triple ``i < j < k`` on which the Jacobi identity fails."""
    brackets = _normalize_brackets(dim, brackets)
    table = _full_table(brackets)
    basis_br = {}

    def br(i, j):
        key = (i, j)
        if key not in basis_br:
            basis_br[key] = table.get(i, {}).get(j, {})
        return basis_br[key]

    for i, j, k in combinations(range(dim), 3):
        acc: dict[int, Fraction] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            inner = br(a, b)
            if inner:
                for m, v in _sparse_bracket(table, dim, inner, {c: Fraction(1)}).items():
                    acc[m] = acc.get(m, Fraction(0)) + v
        if any(acc.values()):
            res = [Fraction(0)] * dim
            for m, v in acc.items():
                res[m] = v
            return JacobiViolation((i, j, k), tuple(res))
    return None


class LieAlgebra:
    """Lie algebra with validated structure constants.

    ``realization`` optionally holds one square matrix per basis vector when
    the algebra was built as a matrix algebra; ``parts`` names distinguished
    subspaces (Borel, nilradical, ideal, ...) that other code can select.
    """

    def __init__(
        self,
        dim: int,
        brackets: Brackets,
        labels: Sequence[str] | None = None,
        *,
        realization: Sequence[Matrix] | None = None,
        parts: Mapping[str, Subspace] | None = None,
    ):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"x{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("one label per basis vector is required")
        self.brackets = _normalize_brackets(dim, brackets)
        violation = find_jacobi_violation(dim, self.brackets)
        if violation is not None:
            raise JacobiError(violation, self.labels)
        self._table = _full_table(self.brackets)
        self.realization = tuple(realization) if realization is not None else None
        self.parts = dict(parts or {})
        for name, s in self.parts.items():
            if s.ambient != dim:
                raise ValueError(f"part {name!r} lives in the wrong ambient space")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.dim, self.labels, self.brackets) == (other.dim, other.labels, other.brackets)

    def __hash__(self) -> int:
        return hash((self.dim, self.labels, tuple(self.brackets.items())))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, nonzero_brackets={len(self.brackets)})"

    def basis(self, i: int) -> Vector:
        return unit(self.dim, i)

    def structure(self, i: int, j: int) -> Vector:
        """``[x_i, x_j]`` as a dense vector."""
        out = [Fraction(0)] * self.dim
        for k, c in self._table.get(i, {}).get(j, {}).items():
            out[k] = c
        return tuple(out)

    def vector(self, **coeffs) -> Vector:
        """Build an element from label keyword arguments, e.g. ``g.vector(P=1, Q=2)``."""
        out = [Fraction(0)] * self.dim
        for name, c in coeffs.items():
            out[self.labels.index(name)] = to_fraction(c)
        return tuple(out)

    def span(self, vectors: Iterable[Sequence]) -> Subspace:
        return Subspace.span(self.dim, vectors)

    def span_labels(self, *names: str) -> Subspace:
        return Subspace.coordinate(self.dim, (self.labels.index(n) for n in names))

    def part(self, name: str) -> Subspace:
        try:
            return self.parts[name]
        except KeyError:
            raise KeyError(f"no distinguished subspace {name!r}; available: {sorted(self.parts)}") from None

    @property
    def is_abelian_algebra(self) -> bool:
        return not self.brackets


def _check_length(g: LieAlgebra, *vs: Sequence) -> None:
    for v in vs:
        if len(v) != g.dim:
            raise ValueError(f"vector of length {len(v)} does not match algebra dimension {g.dim}")


def bracket(g: LieAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    _check_length(g, x, y)
    xs = {i: to_fraction(a) for i, a in enumerate(x) if a}
    ys = {j: to_fraction(b) for j, b in enumerate(y) if b}
    out = [Fraction(0)] * g.dim
    for k, c in _sparse_bracket(g._table, g.dim, xs, ys).items():
        out[k] = c
    return tuple(out)


def ad_matrix(g: LieAlgebra, x: Sequence[Fraction]) -> Matrix:
    """Matrix of ``ad(x)``; column ``j`` is ``[x, x_j]``."""
    cols = [bracket(g, x, g.basis(j)) for j in range(g.dim)]
    return transpose(cols, g.dim)


def validate(g: LieAlgebra) -> JacobiViolation | None:
    return find_jacobi_violation(g.dim, g.brackets)


# -- closure tests --------------------------------------------------------


def _first_escape(g: LieAlgebra, left: Sequence[Vector], right: Sequence[Vector], target: Subspace, same=False):
    for a, x in enumerate(left):
        for b, y in enumerate(right):
            if same and b <= a:
                continue
            if bracket(g, x, y) not in target:
                return a, b
    return None


def is_subalgebra(g: LieAlgebra, s: Subspace) -> bool:
    return _first_escape(g, s.basis, s.basis, s, same=True) is None


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    return _first_escape(g, [g.basis(i) for i in range(g.dim)], s.basis, s) is None


def is_abelian(g: LieAlgebra, s: Subspace | None = None) -> bool:
    basis = s.basis if s is not None else [g.basis(i) for i in range(g.dim)]
    return all(is_zero(bracket(g, x, y)) for x, y in combinations(basis, 2))


def require_subalgebra(g: LieAlgebra, s: Subspace, what: str = "subspace") -> None:
    hit = _first_escape(g, s.basis, s.basis, s, same=True)
    if hit is not None:
        raise NotClosedError(f"{what} is not closed under the bracket (basis pair {hit})", hit)


def require_ideal(g: LieAlgebra, s: Subspace, what: str = "subspace") -> None:
    hit = _first_escape(g, [g.basis(i) for i in range(g.dim)], s.basis, s)
    if hit is not None:
        raise NotClosedError(
            f"{what} is not an ideal: [{g.labels[hit[0]]}, basis vector {hit[1]}] escapes", hit
        )


# -- subspace calculus ------------------------------------------------------


def centralizer(g: LieAlgebra, s: Subspace) -> Subspace:
    """``{x in g : [x, s] = 0}``."""
    rows: list[list[Fraction]] = []
    for v in s.basis:
        rows.extend(ad_matrix(g, v))  # [v, x] = 0 for each generator
    if not rows:
        return Subspace.full(g.dim)
    return g.span(kernel_basis(rows, g.dim))


def normalizer(g: LieAlgebra, s: Subspace) -> Subspace:
    """``{x in g : [x, s] contained in s}``."""
    comp = s.complement_indices()
    if not comp:
        return Subspace.full(g.dim)
    rows: list[list[Fraction]] = []
    for v in s.basis:
        cols = [s.quotient_coordinates(bracket(g, g.basis(i), v)) for i in range(g.dim)]
        rows.extend(transpose(cols, len(comp)))
    if not rows:
        return Subspace.full(g.dim)
    return g.span(kernel_basis(rows, g.dim))


def center_of(g: LieAlgebra, s: Subspace | None = None) -> Subspace:
    """Center of the subalgebra ``s`` (of ``g`` itself when ``s`` is None)."""
    if s is None:
        s = Subspace.full(g.dim)
    require_subalgebra(g, s)
    return subspace_intersect(s, centralizer(g, s))


def derived(g: LieAlgebra, s: Subspace | None = None) -> Subspace:
    """``[s, s]``."""
    basis = s.basis if s is not None else [g.basis(i) for i in range(g.dim)]
    return g.span(bracket(g, x, y) for x, y in combinations(basis, 2))


def bracket_spaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return g.span(bracket(g, x, y) for x in a.basis for y in b.basis)


def ideal_generated(g: LieAlgebra, vectors: Iterable[Sequence]) -> Subspace:
    s = g.span(vectors)
    while True:
        grown = subspace_sum(s, bracket_spaces(g, Subspace.full(g.dim), s))
        if grown == s:
            return s
        s = grown


def derived_series(g: LieAlgebra) -> list[Subspace]:
    series = [Subspace.full(g.dim)]
    while True:
        nxt = derived(g, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    full = Subspace.full(g.dim)
    series = [full]
    while True:
        nxt = bracket_spaces(g, full, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


# -- derived algebras ------------------------------------------------------------


def _combination_label(labels: Sequence[str], v: Sequence[Fraction]) -> str:
    terms = [(labels[i], c) for i, c in enumerate(v) if c]
    if len(terms) == 1 and terms[0][1] == 1:
        return terms[0][0]
    out = ""
    for name, c in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}*"
        out += f"{sign}{coef}{name}"
    return out.lstrip("+") or "0"


def _combine_matrices(mats: Sequence[Matrix], v: Sequence[Fraction]) -> Matrix:
    n = len(mats[0])
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, m in zip(v, mats):
        if c:
            for i in range(n):
                row, mrow = out[i], m[i]
                for j in range(n):
                    if mrow[j]:
                        row[j] += c * mrow[j]
    return out


def restrict(s: Subspace, t: Subspace) -> Subspace:
    """Express ``t`` (contained in ``s``) in the echelon coordinates of ``s``."""
    return Subspace.span(s.dim, (s.coordinates(v) for v in t.basis))


def embed(s: Subspace, t: Subspace) -> Subspace:
    """Inverse of :func:`restrict`: a subspace of ``s``-coordinates back in the ambient."""
    return Subspace.span(s.ambient, (s.combination(v) for v in t.basis))


def subalgebra(g: LieAlgebra, s: Subspace, parts: Mapping[str, Subspace] | None = None) -> LieAlgebra:
    """The subalgebra ``s`` as a Lie algebra on its echelon basis.

    ``parts`` are ambient subspaces contained in ``s``; they are carried over
    in the new coordinates.
    """
    require_subalgebra(g, s)
    brackets = {}
    for a, b in combinations(range(s.dim), 2):
        coords = s.coordinates(bracket(g, s.basis[a], s.basis[b]))
        brackets[(a, b)] = [(k, c) for k, c in enumerate(coords) if c]
    labels = [_combination_label(g.labels, v) for v in s.basis]
    realization = None
    if g.realization is not None:
        realization = [_combine_matrices(g.realization, v) for v in s.basis]
    new_parts = {name: restrict(s, t) for name, t in (parts or {}).items()}
    return LieAlgebra(s.dim, brackets, labels, realization=realization, parts=new_parts)


def quotient(g: LieAlgebra, a: Subspace) -> LieAlgebra:
    """``g / a`` on the coordinate complement of ``a`` (the non-pivot axes)."""
    require_ideal(g, a)
    comp = a.complement_indices()
    brackets = {}
    for p, q in combinations(range(len(comp)), 2):
        coords = a.quotient_coordinates(g.structure(comp[p], comp[q]))
        brackets[(p, q)] = [(k, c) for k, c in enumerate(coords) if c]
    return LieAlgebra(len(comp), brackets, [g.labels[i] for i in comp])


def change_basis(g: LieAlgebra, new_basis: Sequence[Sequence[Fraction]]) -> LieAlgebra:
    """The same algebra written in the basis ``y_i = new_basis[i]``."""
    solver = CoordinateSolver(new_basis, g.dim)
    if len(solver.basis) != g.dim:
        raise ValueError("a basis needs exactly dim vectors")
    ys = solver.basis
    brackets = {}
    for i, j in combinations(range(g.dim), 2):
        coords = solver(bracket(g, ys[i], ys[j]))
        brackets[(i, j)] = [(k, c) for k, c in enumerate(coords) if c]
    return LieAlgebra(g.dim, brackets, [f"y{i}" for i in range(g.dim)])


def direct_sum(g: LieAlgebra, h: LieAlgebra) -> LieAlgebra:
    brackets = dict(g.brackets)
    for (i, j), terms in h.brackets.items():
        brackets[(i + g.dim, j + g.dim)] = [(k + g.dim, c) for k, c in terms]
    return LieAlgebra(g.dim + h.dim, brackets, g.labels + h.labels)


# -- matrix algebras ---------------------------------------------------------


def flatten(m: Sequence[Sequence[Fraction]]) -> Vector:
    return tuple(x for row in m for x in row)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    ab, ba = matmul(a, b), matmul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def from_matrices(
    mats: Sequence[Sequence[Sequence]],
    labels: Sequence[str] | None = None,
    parts: Mapping[str, Sequence[int] | Subspace] | None = None,
) -> LieAlgebra:
    """Lie algebra spanned by square matrices, with the commutator bracket.

    Raises :class:`NotClosedError` if the span is not closed.  ``parts`` may
    give index lists, which are turned into coordinate subspaces.
    """
    mats = [[list(map(to_fraction, row)) for row in m] for m in mats]
    solver = CoordinateSolver([flatten(m) for m in mats], len(mats[0]) ** 2 if mats else 0)
    brackets = {}
    for i, j in combinations(range(len(mats)), 2):
        c = flatten(commutator(mats[i], mats[j]))
        try:
            coords = solver(c)
        except ValueError:
            raise NotClosedError(f"commutator of basis matrices {i}, {j} leaves the span", (i, j)) from None
        brackets[(i, j)] = [(k, v) for k, v in enumerate(coords) if v]
    dim = len(mats)
    conv = {}
    for name, p in (parts or {}).items():
        conv[name] = p if isinstance(p, Subspace) else Subspace.coordinate(dim, p)
    return LieAlgebra(dim, brackets, labels, realization=mats, parts=conv)


def to_matrix(g: LieAlgebra, x: Sequence[Fraction]) -> Matrix:
    if g.realization is None:
        raise ValueError("algebra has no matrix realization")
    _check_length(g, x)
    return _combine_matrices(g.realization, x)


def from_matrix(g: LieAlgebra, m: Sequence[Sequence]) -> Vector:
    if g.realization is None:
        raise ValueError("algebra has no matrix realization")
    solver = getattr(g, "_matrix_solver", None)
    if solver is None:
        solver = CoordinateSolver([flatten(r) for r in g.realization])
        g._matrix_solver = solver
    return solver(flatten([[to_fraction(x) for x in row] for row in m]))


# -- serialization ------------------------------------------------------------


class SchemaError(ValueError):
    """Malformed algebra document."""


def _frac_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def to_dict(g: LieAlgebra) -> dict:
    return {
        "dim": g.dim,
        "labels": list(g.labels),
        "brackets": [[i, j, [[k, _frac_str(c)] for k, c in terms]] for (i, j), terms in g.brackets.items()],
    }


def from_dict(doc) -> LieAlgebra:
    """Inverse of :func:`to_dict`; raises :class:`SchemaError` or :class:`JacobiError`."""
    try:
        if not isinstance(doc, dict):
            raise SchemaError("algebra document must be a JSON object")
        dim = doc["dim"]
        labels = doc.get("labels")
        raw = doc["brackets"]
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise SchemaError("'dim' must be a non-negative integer")
        if labels is not None and (not isinstance(labels, list) or not all(isinstance(s, str) for s in labels)):
            raise SchemaError("'labels' must be a list of strings")
        brackets = {}
        for entry in raw:
            i, j, terms = entry
            if not all(isinstance(v, int) for v in (i, j)) or not 0 <= i < j < dim:
                raise SchemaError(f"bad bracket indices {i}, {j}")
            if (i, j) in brackets:
                raise SchemaError(f"duplicate bracket ({i}, {j})")
            parsed = []
            for k, c in terms:
                if not isinstance(k, int) or not 0 <= k < dim or not isinstance(c, str):
                    raise SchemaError(f"bad term {[k, c]!r}")
                parsed.append((k, Fraction(c)))
            brackets[(i, j)] = parsed
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"malformed algebra document: {exc}") from exc
    if labels is not None and len(labels) != dim:
        raise SchemaError("label count does not match 'dim'")
    return LieAlgebra(dim, brackets, labels)


def dumps(g: LieAlgebra) -> str:
    return json.dumps(to_dict(g), indent=None, separators=(", ", ": ")) + "\n"


def loads(text: str) -> LieAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_dict(doc)
