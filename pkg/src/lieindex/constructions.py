"""Constructors for the algebras, representations and products used throughout.

Matrix algebras keep their matrix realization (``g.realization``) so that
elements can be moved between coordinates and matrices with
:func:`~lieindex.liealg.to_matrix` / :func:`~lieindex.liealg.from_matrix`.
Distinguished subspaces are attached as ``g.parts``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactlin import Matrix, Subspace, identity, matmul, matvec, to_fraction, transpose, unit
from .liealg import (
    LieAlgebra,
    LieError,
    bracket,
    commutator,
    flatten,
    from_matrices,
    require_subalgebra,
    subalgebra,
)


def elementary(n: int, i: int, j: int) -> Matrix:
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = Fraction(1)
    return m


def _madd(*terms: tuple[int, Matrix]) -> Matrix:
    n = len(terms[0][1])
    out = [[Fraction(0)] * n for _ in range(n)]
    for c, m in terms:
        for i in range(n):
            for j in range(n):
                out[i][j] += c * m[i][j]
    return out


def _pos(n: int, i: int, j: int) -> str:
    return f"{i + 1}{j + 1}" if n < 10 else f"{i + 1},{j + 1}"


def gl(n: int) -> LieAlgebra:
    if n < 1:
        raise ValueError("gl(n) needs n >= 1")
    idx = [(i, j) for i in range(n) for j in range(n)]
    mats = [elementary(n, i, j) for i, j in idx]
    labels = [f"E{_pos(n, i, j)}" for i, j in idx]
    so = Subspace.span(n * n, (_so_vector_in_gl(n, i, j) for i, j in combinations(range(n), 2)))
    parts = {
        "b": [k for k, (i, j) in enumerate(idx) if i <= j],
        "n+": [k for k, (i, j) in enumerate(idx) if i < j],
        "n-": [k for k, (i, j) in enumerate(idx) if i > j],
        "h": [k for k, (i, j) in enumerate(idx) if i == j],
        "so": so,
        "sl": Subspace.span(
            n * n,
            [unit(n * n, k) for k, (i, j) in enumerate(idx) if i != j]
            + [_diag_diff(n, d) for d in range(n - 1)],
        ),
    }
    parts["borel"] = parts["b"]
    return from_matrices(mats, labels, parts)


def _so_vector_in_gl(n: int, i: int, j: int):
    v = [0] * (n * n)
    v[i * n + j] = 1
    v[j * n + i] = -1
    return v


def _diag_diff(n: int, d: int):
    v = [0] * (n * n)
    v[d * n + d] = 1
    v[(d + 1) * n + d + 1] = -1
    return v


def sl(n: int) -> LieAlgebra:
    """sl(n) on the basis E_ij (i != j) and H_i = E_ii - E_{i+1,i+1}, in
    row-major position order (H_i sits at position (i, i))."""
    if n < 1:
        raise ValueError("sl(n) needs n >= 1")
    mats, labels, kinds = [], [], []
    for i in range(n):
        for j in range(n):
            if i == j:
                if i == n - 1:
                    continue
                mats.append(_madd((1, elementary(n, i, i)), (-1, elementary(n, i + 1, i + 1))))
                labels.append(f"H{i + 1}")
            else:
                mats.append(elementary(n, i, j))
                labels.append(f"E{_pos(n, i, j)}")
            kinds.append((i, j))
    dim = len(mats)
    so = []
    for i, j in combinations(range(n), 2):
        v = [0] * dim
        v[kinds.index((i, j))] = 1
        v[kinds.index((j, i))] = -1
        so.append(v)
    last_row = [k for k, (i, j) in enumerate(kinds) if i == n - 1 and j != n - 1]
    parts = {
        "n+": [k for k, (i, j) in enumerate(kinds) if i < j],
        "n-": [k for k, (i, j) in enumerate(kinds) if i > j],
        "h": [k for k, (i, j) in enumerate(kinds) if i == j],
        "b": [k for k, (i, j) in enumerate(kinds) if i <= j],
        "so": Subspace.span(dim, so),
        "p": [k for k in range(dim) if k not in last_row],
        "q": last_row,
    }
    parts["borel"] = parts["b"]
    return from_matrices(mats, labels, parts)


def so(n: int) -> LieAlgebra:
    """so(n) as antisymmetric matrices, basis A_ij = E_ij - E_ji (i < j)."""
    if n < 1:
        raise ValueError("so(n) needs n >= 1")
    pairs = list(combinations(range(n), 2))
    mats = [_madd((1, elementary(n, i, j)), (-1, elementary(n, j, i))) for i, j in pairs]
    return from_matrices(mats, [f"A{_pos(n, i, j)}" for i, j in pairs])


def sp(n2: int) -> LieAlgebra:
    """sp(2m): matrices X with X^T J + J X = 0, J = [[0, I], [-I, 0]]."""
    if n2 < 2 or n2 % 2:
        raise ValueError("sp takes an even parameter 2m >= 2")
    m = n2 // 2
    mats, labels = [], []
    for i in range(m):
        for j in range(m):
            mats.append(_madd((1, elementary(n2, i, j)), (-1, elementary(n2, m + j, m + i))))
            labels.append(f"A{_pos(m, i, j)}")
    for i in range(m):
        for j in range(i, m):
            if i == j:
                mats.append(elementary(n2, i, m + i))
            else:
                mats.append(_madd((1, elementary(n2, i, m + j)), (1, elementary(n2, j, m + i))))
            labels.append(f"B{_pos(m, i, j)}")
    for i in range(m):
        for j in range(i, m):
            if i == j:
                mats.append(elementary(n2, m + i, i))
            else:
                mats.append(_madd((1, elementary(n2, m + i, j)), (1, elementary(n2, m + j, i))))
            labels.append(f"C{_pos(m, i, j)}")
    return from_matrices(mats, labels)


def classical(name: str, n: int) -> LieAlgebra:
    """``gl``, ``sl``, ``so`` or ``sp`` (for ``sp`` the parameter is the even
    matrix size 2m)."""
    builders = {"gl": gl, "sl": sl, "so": so, "sp": sp}
    try:
        return builders[name](n)
    except KeyError:
        raise ValueError(f"unknown classical family {name!r}") from None


def heisenberg(k: int) -> LieAlgebra:
    """Heisenberg algebra of dimension ``k = 2m + 1``: [P_i, Q_i] = E."""
    if k < 1 or k % 2 == 0:
        raise ValueError("Heisenberg dimension must be odd and positive")
    m = (k - 1) // 2
    if m == 1:
        labels = ["P", "Q", "E"]
    else:
        labels = [f"P{i + 1}" for i in range(m)] + [f"Q{i + 1}" for i in range(m)] + ["E"]
    brackets = {(i, m + i): [(2 * m, 1)] for i in range(m)}
    return LieAlgebra(k, brackets, labels, parts={"center": Subspace.coordinate(k, [2 * m])})


def mautner() -> LieAlgebra:
    """Basis (P, Q, E, X) with [P, Q] = E, [X, P] = Q, [X, Q] = -P."""
    brackets = {
        (0, 1): [(2, 1)],  # [P, Q] = E
        (0, 3): [(1, -1)],  # [P, X] = -Q
        (1, 3): [(0, 1)],  # [Q, X] = P
    }
    a = Subspace.coordinate(4, [0, 1, 2])
    return LieAlgebra(
        4, brackets, ["P", "Q", "E", "X"], parts={"a": a, "heisenberg": a, "q": Subspace.coordinate(4, [3])}
    )


def borel_gl(n: int) -> LieAlgebra:
    """Upper triangular n x n matrices."""
    idx = [(i, j) for i in range(n) for j in range(n) if i <= j]
    return from_matrices(
        [elementary(n, i, j) for i, j in idx],
        [f"E{_pos(n, i, j)}" for i, j in idx],
        {
            "h": [k for k, (i, j) in enumerate(idx) if i == j],
            "n+": [k for k, (i, j) in enumerate(idx) if i < j],
        },
    )


def strict_upper(n: int) -> LieAlgebra:
    """Strictly upper triangular n x n matrices (nilradical of the Borel)."""
    idx = [(i, j) for i in range(n) for j in range(n) if i < j]
    if not idx:
        return LieAlgebra(0, {}, [])
    return from_matrices([elementary(n, i, j) for i, j in idx], [f"E{_pos(n, i, j)}" for i, j in idx])


def triangular_sl(n: int) -> tuple[LieAlgebra, Subspace, Subspace, Subspace]:
    """sl(n) together with its triangular decomposition (n-, h, n+)."""
    g = sl(n)
    return g, g.part("n-"), g.part("h"), g.part("n+")


def named(name: str, n: int | None = None) -> LieAlgebra:
    if name == "mautner":
        return mautner()
    if n is None:
        raise ValueError(f"{name} needs a size parameter")
    table = {
        "heisenberg": heisenberg,
        "borel_gl": borel_gl,
        "strict_upper": strict_upper,
        "triangular_sl": lambda k: triangular_sl(k)[0],
    }
    try:
        return table[name](n)
    except KeyError:
        raise ValueError(f"unknown named algebra {name!r}") from None


def parabolic_sl(n: int, composition: Sequence[int]) -> tuple[LieAlgebra, Subspace, Subspace]:
    """Standard parabolic of sl(n) with diagonal blocks of the given sizes.

    Returns ``(sl(n), p, p^u)`` with ``p`` block upper triangular and ``p^u``
    its nilradical (strictly block upper triangular part).
    """
    if sum(composition) != n or any(c < 1 for c in composition):
        raise ValueError(f"{composition} is not a composition of {n}")
    block = []
    for b, size in enumerate(composition):
        block.extend([b] * size)
    g = sl(n)
    p, pu = [], []
    for k, m in enumerate(g.realization):
        if g.labels[k].startswith("H"):
            p.append(k)
            continue
        i, j = next((i, j) for i in range(n) for j in range(n) if m[i][j])
        if block[i] <= block[j]:
            p.append(k)
            if block[i] < block[j]:
                pu.append(k)
    return g, Subspace.coordinate(g.dim, p), Subspace.coordinate(g.dim, pu)


# -- nilpotent elements ------------------------------------------------------


def jordan_block_matrix(sizes: Sequence[int]) -> Matrix:
    """Nilpotent matrix in Jordan form, ones on the subdiagonal of each block."""
    n = sum(sizes)
    m = [[Fraction(0)] * n for _ in range(n)]
    start = 0
    for s in sizes:
        for i in range(start, start + s - 1):
            m[i + 1][i] = Fraction(1)
        start += s
    return m


def matrix_power(m: Matrix, p: int) -> Matrix:
    out = identity(len(m))
    for _ in range(p):
        out = matmul(out, m)
    return out


def jordan_nilpotent(n: int, p: int) -> tuple[Fraction, ...]:
    """Coordinates of J^p in the basis of :func:`gl` (J the n x n Jordan matrix)."""
    if not 1 <= p <= n:
        raise ValueError(f"power {p} out of range 1..{n}")
    return flatten(matrix_power(jordan_block_matrix([n]), p))


def sl2_neutral(e: Matrix) -> Matrix:
    """Diagonal ``h`` with ``[h, e] = 2e`` for ``e`` in explicit Jordan form.

    ``e`` must be a nilpotent partial permutation matrix (each row and column
    holds at most one entry, equal to 1); ``h`` is built chain by chain.
    """
    n = len(e)
    succ = {}
    pred = set()
    for j in range(n):
        nz = [i for i in range(n) if e[i][j]]
        if len(nz) > 1 or any(e[i][j] != 1 for i in nz):
            raise ValueError("e is not in explicit Jordan form")
        if nz:
            succ[j] = nz[0]
            pred.add(nz[0])
    for i in range(n):
        if sum(1 for j in range(n) if e[i][j]) > 1:
            raise ValueError("e is not in explicit Jordan form")
    h = [[Fraction(0)] * n for _ in range(n)]
    seen = set()
    for start in range(n):
        if start in pred:
            continue
        chain = [start]
        while chain[-1] in succ:
            nxt = succ[chain[-1]]
            if nxt in chain:
                raise ValueError("e is not nilpotent")
            chain.append(nxt)
        length = len(chain)
        for m, c in enumerate(chain):
            h[c][c] = Fraction(2 * m - (length - 1))
            seen.add(c)
    if len(seen) != n:
        raise ValueError("e is not nilpotent")
    return h


# -- representations -----------------------------------------------------------


class RepresentationError(LieError):
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    """Linear action of ``algebra`` on Q^module_dim, one matrix per basis vector.

    The homomorphism property rho([x_i, x_j]) = [rho(x_i), rho(x_j)] is
    checked for every basis pair on construction.
    """

    algebra: LieAlgebra
    module_dim: int
    actions: tuple

    def __post_init__(self):
        acts = tuple(tuple(tuple(to_fraction(x) for x in row) for row in m) for m in self.actions)
        object.__setattr__(self, "actions", acts)
        g, m = self.algebra, self.module_dim
        if len(acts) != g.dim:
            raise RepresentationError("one action matrix per basis vector is required")
        for a in acts:
            if len(a) != m or any(len(row) != m for row in a):
                raise RepresentationError("action matrices must be module_dim x module_dim")
        for i, j in combinations(range(g.dim), 2):
            lhs = self.action(g.structure(i, j))
            rhs = commutator([list(r) for r in acts[i]], [list(r) for r in acts[j]])
            if lhs != rhs:
                raise RepresentationError(f"not a representation: fails on basis pair ({g.labels[i]}, {g.labels[j]})")

    def action(self, x: Sequence[Fraction]) -> Matrix:
        out = [[Fraction(0)] * self.module_dim for _ in range(self.module_dim)]
        for c, a in zip(x, self.actions):
            if c:
                for r in range(self.module_dim):
                    row, arow = out[r], a[r]
                    for s in range(self.module_dim):
                        if arow[s]:
                            row[s] += c * arow[s]
        return out

    def act(self, x: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return matvec(self.action(x), v)


def adjoint(g: LieAlgebra) -> Representation:
    acts = []
    for i in range(g.dim):
        cols = [g.structure(i, j) for j in range(g.dim)]
        acts.append(transpose(cols, g.dim))
    return Representation(g, g.dim, tuple(acts))


def ideal_representation(g: LieAlgebra, a: Subspace, basis: Sequence[Sequence[Fraction]] | None = None) -> Representation:
    """Natural action of ``g`` on its ideal ``a``.

    The module basis is the echelon basis of ``a`` unless ``basis`` is given.
    """
    from .exactlin import CoordinateSolver
    from .liealg import require_ideal

    require_ideal(g, a)
    vecs = [tuple(map(to_fraction, v)) for v in basis] if basis is not None else list(a.basis)
    coords = CoordinateSolver(vecs, g.dim) if basis is not None else a.coordinates
    if basis is not None and Subspace.span(g.dim, vecs) != a:
        raise ValueError("supplied basis does not span the ideal")
    acts = []
    for i in range(g.dim):
        cols = [coords(bracket(g, g.basis(i), v)) for v in vecs]
        acts.append(transpose(cols, len(vecs)))
    return Representation(g, len(vecs), tuple(acts))


def quotient_representation(g: LieAlgebra, h: Subspace) -> Representation:
    """Action of the subalgebra ``h`` on ``g/h`` (coordinate complement basis)."""
    halg = subalgebra(g, h)
    comp = h.complement_indices()
    acts = []
    for v in h.basis:
        cols = [h.quotient_coordinates(bracket(g, v, g.basis(c))) for c in comp]
        acts.append(transpose(cols, len(comp)))
    return Representation(halg, len(comp), tuple(acts))


def irreducible_sl2(m: int) -> Representation:
    """The m-dimensional irreducible representation of :func:`sl` (2).

    Weight basis v_0..v_{m-1}: H v_k = (m-1-2k) v_k, E v_k = k(m-k) v_{k-1},
    F v_k = v_{k+1}.
    """
    if m < 1:
        raise ValueError("dimension must be >= 1")
    g = sl(2)  # basis order H1, E12, E21
    H = [[Fraction(m - 1 - 2 * k) if r == k else Fraction(0) for k in range(m)] for r in range(m)]
    E = [[Fraction(k * (m - k)) if r == k - 1 else Fraction(0) for k in range(m)] for r in range(m)]
    F = [[Fraction(1) if r == k + 1 else Fraction(0) for k in range(m)] for r in range(m)]
    return Representation(g, m, (H, E, F))


# -- products ------------------------------------------------------------------


def semidirect_abelian(rho: Representation, module_labels: Sequence[str] | None = None) -> LieAlgebra:
    """``V x| q`` with V abelian: [(v, x), (w, y)] = (x.w - y.v, [x, y]).

    Basis order is V first, then q; the parts ``"V"`` (abelian ideal) and
    ``"q"`` are attached.
    """
    q, m = rho.algebra, rho.module_dim
    dim = m + q.dim
    brackets: dict[tuple[int, int], list] = {}
    for i in range(q.dim):
        a = rho.actions[i]
        for j in range(m):
            # [v_j, x_i] = -rho(x_i) v_j
            terms = [(r, -a[r][j]) for r in range(m) if a[r][j]]
            if terms:
                brackets[(j, m + i)] = terms
    for (i, j), terms in q.brackets.items():
        brackets[(m + i, m + j)] = [(m + k, c) for k, c in terms]
    labels = list(module_labels) if module_labels is not None else [f"v{j}" for j in range(m)]
    labels += list(q.labels)
    parts = {"V": Subspace.coordinate(dim, range(m)), "q": Subspace.coordinate(dim, range(m, dim))}
    return LieAlgebra(dim, brackets, labels, parts=parts)


def takiff(q: LieAlgebra) -> LieAlgebra:
    """``q x|_ad q``: the semidirect product for the adjoint representation."""
    return semidirect_abelian(adjoint(q), [f"{lab}'" for lab in q.labels])


def generalized_takiff(q: LieAlgebra, k: int) -> LieAlgebra:
    """``q (x) Q[t]/(t^k)``; basis x_i t^a ordered by ``a`` first."""
    if k < 1:
        raise ValueError("truncation degree k must be >= 1")
    d = q.dim
    if k == 1:
        return LieAlgebra(d, q.brackets, q.labels, realization=q.realization, parts=q.parts)
    brackets = {}
    for u, v in combinations(range(k * d), 2):
        a, i = divmod(u, d)
        b, j = divmod(v, d)
        if a + b >= k or i == j:
            continue
        s = q.structure(i, j)
        terms = [((a + b) * d + t, c) for t, c in enumerate(s) if c]
        if terms:
            brackets[(u, v)] = terms
    labels = [lab if a == 0 else f"{lab}*t^{a}" for a in range(k) for lab in q.labels]
    parts = {
        "q": Subspace.coordinate(k * d, range(d)),
        "ideal": Subspace.coordinate(k * d, range(d, k * d)),
    }
    return LieAlgebra(k * d, brackets, labels, parts=parts)


def inonu_wigner(g: LieAlgebra, k: Subspace) -> LieAlgebra:
    """The contraction (g/k) x| k, with g/k made abelian.

    g/k is modelled on the coordinate complement of k; its basis comes first.
    Parts ``"module"`` and ``"k"`` are attached.
    """
    require_subalgebra(g, k)
    rho = quotient_representation(g, k)
    comp = k.complement_indices()
    h = semidirect_abelian(rho, [f"{g.labels[c]}~" for c in comp])
    h.parts["module"] = h.parts["V"]
    h.parts["k"] = h.parts["q"]
    return h
