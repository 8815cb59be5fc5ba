"""Index of Lie algebras and of their representations.

The index of ``g`` is ``dim g`` minus the generic rank of the alternating
matrix ``B_l[i][j] = l([x_i, x_j])``, a matrix whose entries are linear in
the coordinates of ``l``.  For a representation on ``M`` the index is
``dim M`` minus the generic rank of ``x -> x.l0`` on ``M*``.

Generic ranks are found either exactly (fraction-free elimination over the
polynomial ring in the parameters) or by evaluating at random integer points.
Random evaluation can only under-estimate the rank; the probability of doing
so is bounded with the Schwartz-Zippel lemma and carried in the report.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .constructions import Representation, ideal_representation
from .exactlin import Matrix, Subspace, Vector, kernel_basis, rank, to_fraction, vector
from .liealg import LieAlgebra, bracket, require_subalgebra

CONST = -1  # key of the constant term in a family entry

LinearForm = Vector


class NonlinearFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class GenericRankConfig:
    seed: int = 0
    trials: int = 3
    coeff_bound: int = 10**6
    symbolic_threshold: int = 10
    symbolic: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.coeff_bound < 2:
            raise ValueError("coeff_bound must be >= 2")

    def derive(self, tag: str) -> "GenericRankConfig":
        """Same settings with a seed derived from ``(seed, tag)``."""
        digest = hashlib.sha256(f"{self.seed}:{tag}".encode()).digest()
        return replace(self, seed=int.from_bytes(digest[:8], "big"))

    def rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass(frozen=True)
class LinearFamily:
    """Matrix whose entries are affine in ``nparams`` parameters.

    ``entries[r][c]`` maps a parameter index (or :data:`CONST`) to its
    coefficient.
    """

    rows: int
    cols: int
    nparams: int
    entries: tuple[tuple[Mapping[int, Fraction], ...], ...]

    @classmethod
    def from_exprs(cls, exprs: Sequence[Sequence], symbols: Sequence) -> "LinearFamily":
        """Build from sympy expressions; entries of degree > 1 are rejected."""
        import sympy

        entries = []
        for row in exprs:
            out = []
            for e in row:
                poly = sympy.Poly(sympy.sympify(e), *symbols)
                if poly.total_degree() > 1:
                    raise NonlinearFamilyError(f"entry {e} is not affine in the parameters")
                d = {}
                for monom, c in poly.terms():
                    key = monom.index(1) if any(monom) else CONST
                    d[key] = Fraction(int(c.p), int(c.q))
                out.append(d)
            entries.append(tuple(out))
        cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, len(symbols), tuple(entries))

    def evaluate(self, point: Sequence[Fraction]) -> Matrix:
        out = []
        for row in self.entries:
            r = []
            for d in row:
                s = Fraction(0)
                for k, c in d.items():
                    s += c if k == CONST else c * point[k]
                r.append(s)
            out.append(r)
        return out

    @property
    def is_constant(self) -> bool:
        return all(k == CONST for row in self.entries for d in row for k in d if d[k])


@dataclass(frozen=True)
class GenericRank:
    rank: int
    witness: Vector
    error_bound: Fraction
    mode: str


# -- symbolic rank ---------------------------------------------------------------


def _poly_ring(nparams: int):
    from sympy import QQ
    from sympy.polys.rings import ring

    names = ",".join(f"l{i}" for i in range(max(nparams, 1)))
    R, *gens = ring(names, QQ)
    return R, gens


def polynomial_matrix(family: LinearFamily):
    """Entries of ``family`` as elements of a sympy polynomial ring."""
    R, gens = _poly_ring(family.nparams)
    mat = []
    for row in family.entries:
        r = []
        for d in row:
            p = R.zero
            for k, c in d.items():
                p += R(c) if k == CONST else gens[k] * c
            r.append(p)
        mat.append(r)
    return R, gens, mat


def bareiss(mat) -> tuple[int, object]:
    """Fraction-free elimination with full pivoting over an integral domain.

    Returns ``(rank, last_pivot)``; for a square matrix of full rank the last
    pivot is the determinant up to the sign of the permutations applied.
    """
    a = [list(r) for r in mat]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = None
    k = 0
    sign = 1
    while k < min(nrows, ncols):
        piv = next(((i, j) for j in range(k, ncols) for i in range(k, nrows) if a[i][j]), None)
        if piv is None:
            break
        i, j = piv
        if i != k:
            a[k], a[i] = a[i], a[k]
            sign = -sign
        if j != k:
            for row in a:
                row[k], row[j] = row[j], row[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, nrows):
            for j in range(k + 1, ncols):
                num = p * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else num.exquo(prev) if hasattr(num, "exquo") else num / prev
            a[i][k] = a[i][k] * 0
        prev = p
        k += 1
    det = None
    if k == nrows == ncols:
        det = prev * sign if prev is not None else None
    return k, det


def symbolic_rank(family: LinearFamily) -> int:
    _, _, mat = polynomial_matrix(family)
    return bareiss(mat)[0] if mat else 0


def symbolic_det(family: LinearFamily):
    """Determinant of a square family as a sympy ring element (and the ring)."""
    if family.rows != family.cols:
        raise ValueError("determinant needs a square family")
    R, gens, mat = polynomial_matrix(family)
    if not mat:
        return R.one, R, gens
    r, det = bareiss(mat)
    return (det if r == family.rows else R.zero), R, gens


# -- randomized rank ---------------------------------------------------------------


def random_point(rng: random.Random, n: int, bound: int) -> Vector:
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))


def generic_rank(family: LinearFamily, cfg: GenericRankConfig = GenericRankConfig()) -> GenericRank:
    """Generic rank of an affine matrix family.

    Small families (``rows * cols <= symbolic_threshold``) or ``cfg.symbolic``
    use exact polynomial elimination with error bound 0.  Otherwise the rank
    is the maximum over ``cfg.trials`` random integer points and the error
    bound is ``(min(rows, cols) / (2 * coeff_bound + 1)) ** trials``, or 0 when
    the sampled rank is already maximal.
    """
    rng = cfg.rng()
    top = min(family.rows, family.cols)
    if family.is_constant or family.nparams == 0:
        point = (Fraction(0),) * family.nparams
        return GenericRank(rank(family.evaluate(point)), point, Fraction(0), "symbolic")
    if cfg.symbolic or family.rows * family.cols <= cfg.symbolic_threshold:
        target = symbolic_rank(family)
        for _ in range(1000):
            point = random_point(rng, family.nparams, cfg.coeff_bound)
            if rank(family.evaluate(point)) == target:
                return GenericRank(target, point, Fraction(0), "symbolic")
        raise RuntimeError("failed to find a point of generic rank")  # probability ~ 0
    best, best_point = -1, None
    for _ in range(cfg.trials):
        point = random_point(rng, family.nparams, cfg.coeff_bound)
        r = rank(family.evaluate(point))
        if r > best:
            best, best_point = r, point
    err = Fraction(0) if best == top else Fraction(top, 2 * cfg.coeff_bound + 1) ** cfg.trials
    return GenericRank(best, best_point, err, "randomized")


# -- families ---------------------------------------------------------------------


def form_family(g: LieAlgebra) -> LinearFamily:
    """``B_l[i][j] = l([x_i, x_j])`` with the coordinates of ``l`` as parameters."""
    rows = [[{} for _ in range(g.dim)] for _ in range(g.dim)]
    for (i, j), terms in g.brackets.items():
        rows[i][j] = {k: c for k, c in terms}
        rows[j][i] = {k: -c for k, c in terms}
    return LinearFamily(g.dim, g.dim, g.dim, tuple(tuple(r) for r in rows))


def action_family(rho: Representation) -> LinearFamily:
    """Matrix of ``x -> x.l0`` (algebra to module dual) in dual coordinates.

    Coadjoint convention ``(x.l0)(v) = -l0(rho(x) v)``; column ``i`` is
    ``x_i.l0``, row ``j`` pairs with module basis vector ``v_j``.
    """
    m, d = rho.module_dim, rho.algebra.dim
    rows = [[{} for _ in range(d)] for _ in range(m)]
    for i, a in enumerate(rho.actions):
        for k in range(m):
            for j in range(m):
                if a[k][j]:
                    rows[j][i][k] = -a[k][j]
    return LinearFamily(m, d, m, tuple(tuple(r) for r in rows))


def form_matrix(g: LieAlgebra, l: Sequence[Fraction]) -> Matrix:
    return form_family(g).evaluate(vector(l))


def action_matrix(rho: Representation, l0: Sequence[Fraction]) -> Matrix:
    return action_family(rho).evaluate(vector(l0))


# -- reports ------------------------------------------------------------------------


@dataclass(frozen=True)
class IndexReport:
    value: int
    witness: LinearForm
    mode: str
    error_bound: Fraction
    trials: int
    seed: int
    rank: int = field(default=0, compare=False)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "mode": self.mode,
            "error_bound": f"{self.error_bound.numerator}/{self.error_bound.denominator}",
            "witness": [f"{c.numerator}/{c.denominator}" for c in self.witness],
            "trials": self.trials,
            "seed": self.seed,
        }


def index(g: LieAlgebra, cfg: GenericRankConfig = GenericRankConfig()) -> IndexReport:
    gr = generic_rank(form_family(g), cfg)
    value = g.dim - gr.rank
    if (g.dim - value) % 2:
        raise AssertionError("rank of an alternating form must be even")
    return IndexReport(value, gr.witness, gr.mode, gr.error_bound, cfg.trials, cfg.seed, gr.rank)


def index_rep(rho: Representation, cfg: GenericRankConfig = GenericRankConfig()) -> IndexReport:
    gr = generic_rank(action_family(rho), cfg)
    value = rho.module_dim - gr.rank
    stab = rho.algebra.dim - gr.rank
    if value + gr.rank != rho.module_dim or stab < 0:
        raise AssertionError("inconsistent orbit dimensions")
    return IndexReport(value, gr.witness, gr.mode, gr.error_bound, cfg.trials, cfg.seed, gr.rank)


def index_ideal(g: LieAlgebra, a: Subspace, cfg: GenericRankConfig = GenericRankConfig()) -> IndexReport:
    """``ind(g, a)``: index of the natural representation of ``g`` in ``a``."""
    return index_rep(ideal_representation(g, a), cfg)


# -- forms, stabilizers, predicates -------------------------------------------------


def restrict_form(l: Sequence[Fraction], s: Subspace) -> LinearForm:
    """``l`` restricted to ``s``, in the dual of the echelon basis of ``s``."""
    return tuple(sum((a * b for a, b in zip(l, v) if a and b), Fraction(0)) for v in s.basis)


def form_value(l: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(l, v) if a and b), Fraction(0))


def form_centralizer(g: LieAlgebra, l: Sequence[Fraction]) -> Subspace:
    """``g^l = {x : l([x, y]) = 0 for all y}``."""
    return g.span(kernel_basis(form_matrix(g, l), g.dim))


def stabilizer_at(rho: Representation, l0: Sequence[Fraction]) -> Subspace:
    """``{x : x.l0 = 0}`` inside the acting algebra."""
    d = rho.algebra.dim
    return Subspace.span(d, kernel_basis(action_matrix(rho, l0), d))


def orbit_dim(rho: Representation, l0: Sequence[Fraction]) -> int:
    return rank(action_matrix(rho, l0))


def orthogonal_wrt_form(g: LieAlgebra, a: Subspace, l: Sequence[Fraction]) -> Subspace:
    """``a^l = {x in g : l([x, a]) = 0}``."""
    l = vector(l)
    rows = []
    for v in a.basis:
        rows.append([form_value(l, bracket(g, g.basis(i), v)) for i in range(g.dim)])
    if not rows:
        return Subspace.full(g.dim)
    return g.span(kernel_basis(rows, g.dim))


def is_regular(g: LieAlgebra, l: Sequence[Fraction], cfg: GenericRankConfig = GenericRankConfig(), ind: int | None = None) -> bool:
    if ind is None:
        ind = index(g, cfg).value
    return form_centralizer(g, l).dim == ind


def is_subordinate(g: LieAlgebra, h: Subspace, l: Sequence[Fraction]) -> bool:
    require_subalgebra(g, h)
    l = vector(l)
    return all(form_value(l, bracket(g, x, y)) == 0 for x, y in combinations(h.basis, 2))


def is_polarization(g: LieAlgebra, h: Subspace, l: Sequence[Fraction]) -> bool:
    require_subalgebra(g, h)
    return orthogonal_wrt_form(g, h, l) == h


def random_form(dim: int, rng: random.Random, bound: int = 10**6) -> LinearForm:
    return random_point(rng, dim, bound)


def to_forms(values: Sequence) -> LinearForm:
    return tuple(to_fraction(v) for v in values)
