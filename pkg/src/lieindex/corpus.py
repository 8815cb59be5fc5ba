"""Random solvable Lie algebras with samples of their ideals.

Algebras are Lie closures of a few random integer upper triangular matrices
(solvable by construction, nilpotent when the matrices are strictly upper
triangular), optionally followed by a quotient by one of their ideals.  The
Jacobi identity therefore holds automatically; it is still checked by the
:class:`~lieindex.liealg.LieAlgebra` constructor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exactlin import Subspace, rref
from .liealg import (
    LieAlgebra,
    bracket_spaces,
    center_of,
    commutator,
    derived_series,
    flatten,
    from_matrices,
    ideal_generated,
    lower_central_series,
    quotient,
)


def lie_closure(mats) -> LieAlgebra:
    """Lie algebra generated by square matrices under the commutator."""
    n = len(mats[0])
    span_rows: list = []
    current: list = []

    def add(m):
        nonlocal span_rows
        trial, piv = rref(span_rows + [list(flatten(m))], n * n)
        if len(trial) > len(span_rows):
            span_rows = trial
            current.append(m)
            return True
        return False

    for m in mats:
        add(m)
    frontier = list(current)
    while frontier:
        new = []
        for a in list(current):
            for b in frontier:
                c = commutator(a, b)
                if any(any(r) for r in c) and add(c):
                    new.append(c)
        frontier = new
    basis = [[row[i * n:(i + 1) * n] for i in range(n)] for row in span_rows]
    return from_matrices(basis) if basis else LieAlgebra(0, {}, [])


def _random_triangular(rng: random.Random, n: int, strict: bool) -> list:
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + (1 if strict else 0), n):
            if rng.random() < 0.45:
                m[i][j] = Fraction(rng.randint(-2, 2))
    return m


def ideal_sample(g: LieAlgebra, rng: random.Random, extra: int = 2) -> list[Subspace]:
    """Distinct ideals: derived and lower central series, center, and ideals
    generated by random elements."""
    found: list[Subspace] = []

    def push(s):
        if s not in found:
            found.append(s)

    for s in derived_series(g):
        push(s)
    for s in lower_central_series(g):
        push(s)
    push(center_of(g))
    push(bracket_spaces(g, center_of(g), Subspace.full(g.dim)))
    for _ in range(extra):
        v = [Fraction(rng.randint(-1, 1)) if rng.random() < 0.5 else Fraction(0) for _ in range(g.dim)]
        push(ideal_generated(g, [v]))
    for i in rng.sample(range(g.dim), min(2, g.dim)):
        push(ideal_generated(g, [g.basis(i)]))
    return found


@dataclass
class CorpusEntry:
    name: str
    algebra: LieAlgebra
    ideals: list[Subspace]


def random_solvable(rng: random.Random, max_dim: int = 8) -> LieAlgebra:
    while True:
        n = rng.choice([3, 4, 4, 5, 5])
        strict = rng.random() < 0.5 or n == 5
        gens = [_random_triangular(rng, n, strict) for _ in range(rng.choice([2, 3, 3]))]
        g = lie_closure(gens)
        if not 3 <= g.dim <= max_dim + 3:
            continue
        if g.dim > max_dim or rng.random() < 0.25:
            ideals = [s for s in ideal_sample(g, rng, extra=1) if 0 < s.dim < g.dim and g.dim - s.dim <= max_dim]
            if ideals:
                g = quotient(g, rng.choice(ideals))
        if 3 <= g.dim <= max_dim:
            return g


def solvable_corpus(seed: int, count: int = 200, max_dim: int = 8) -> list[CorpusEntry]:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        g = random_solvable(rng, max_dim)
        out.append(CorpusEntry(f"solv{k:03d}", g, ideal_sample(g, rng)))
    return out
