from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import matrices, small_fracs, sympy_rank
from lieindex.exactlin import (
    CoordinateSolver,
    DimensionMismatch,
    Subspace,
    identity,
    inverse,
    kernel_basis,
    matmul,
    matvec,
    rank,
    rref,
    solve,
    subspace_intersect,
    subspace_sum,
    to_fraction,
    vector,
)

F = Fraction


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == sympy_rank(m)


@given(matrices())
def test_rref_is_canonical_and_idempotent(m):
    rows, piv = rref(m)
    assert len(rows) == rank(m)
    for r, p in zip(rows, piv):
        assert r[p] == 1
        assert all(x == 0 for x in r[:p])
        assert all(other[p] == 0 for other in rows if other is not r)
    assert piv == sorted(piv)
    assert rref(rows, len(m[0])) == (rows, piv)


@given(matrices())
def test_rank_nullity(m):
    cols = len(m[0])
    ker = kernel_basis(m, cols)
    assert len(ker) + rank(m) == cols
    for v in ker:
        assert all(x == 0 for x in matvec(m, v))


@given(matrices(4, 4), matrices(4, 4))
def test_dimension_formula(a, b):
    n = 4
    pad = lambda m: [list(r) + [F(0)] * (n - len(r)) for r in m]
    A, B = Subspace.span(n, pad(a)), Subspace.span(n, pad(b))
    s, i = subspace_sum(A, B), subspace_intersect(A, B)
    assert s.dim + i.dim == A.dim + B.dim
    assert all(v in A and v in B for v in i.basis)
    assert A.issubset(s) and B.issubset(s)


@given(matrices(4, 5))
def test_subspace_span_is_basis_independent(m):
    s = Subspace.span(len(m[0]), m)
    shuffled = list(reversed(m)) + [[2 * x for x in m[0]]]
    assert Subspace.span(len(m[0]), shuffled) == s


@given(matrices(4, 5), st.lists(small_fracs, min_size=4, max_size=4))
def test_coordinates_roundtrip(m, coeffs):
    s = Subspace.span(len(m[0]), m)
    c = tuple(coeffs[: s.dim])
    v = s.combination(c)
    assert v in s
    assert s.coordinates(v) == c


@given(st.lists(st.lists(small_fracs, min_size=6, max_size=6), min_size=1, max_size=3))
def test_quotient_coordinates_vanish_exactly_on_subspace(m):
    s = Subspace.span(6, m)
    comp = s.complement_indices()
    assert len(comp) == 6 - s.dim
    for v in s.basis:
        assert all(x == 0 for x in s.quotient_coordinates(v))
    for i in comp:
        e = [F(0)] * 6
        e[i] = F(1)
        q = s.quotient_coordinates(e)
        assert q == tuple(F(int(k == comp.index(i))) for k in range(len(comp)))


def test_inverse_and_solve():
    a = [[F(2), F(1)], [F(1), F(1)]]
    assert matmul(a, inverse(a)) == identity(2)
    assert solve(a, (F(3), F(2))) == (F(1), F(1))
    with pytest.raises(ValueError):
        inverse([[F(1), F(2)], [F(2), F(4)]])
    assert solve([[F(1), F(2)], [F(2), F(4)]], (F(1), F(1))) is None


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        to_fraction(0.5)
    assert vector(["1/3", 2]) == (F(1, 3), F(2))


def test_ambient_mismatch():
    with pytest.raises(DimensionMismatch):
        subspace_sum(Subspace.full(2), Subspace.full(3))


def test_coordinate_solver_on_non_echelon_basis():
    basis = [(F(1), F(1), F(0)), (F(0), F(1), F(1))]
    solve_ = CoordinateSolver(basis)
    assert solve_((F(2), F(5), F(3))) == (F(2), F(3))
    with pytest.raises(ValueError):
        solve_((F(1), F(0), F(0)))
    with pytest.raises(ValueError):
        CoordinateSolver([(F(1), F(0)), (F(2), F(0))])


@settings(max_examples=30)
@given(st.integers(0, 3))
def test_zero_and_full(n):
    assert Subspace.zero(n).dim == 0
    assert Subspace.full(n).dim == n
    assert Subspace.zero(n).issubset(Subspace.full(n))
