from __future__ import annotations

from fractions import Fraction

import pytest

from lieindex.constructions import (
    RepresentationError,
    Representation,
    adjoint,
    borel_gl,
    generalized_takiff,
    gl,
    heisenberg,
    ideal_representation,
    inonu_wigner,
    irreducible_sl2,
    jordan_block_matrix,
    jordan_nilpotent,
    matrix_power,
    mautner,
    parabolic_sl,
    quotient_representation,
    semidirect_abelian,
    sl,
    sl2_neutral,
    so,
    sp,
    strict_upper,
    takiff,
    triangular_sl,
)
from lieindex.exactlin import Subspace, subspace_intersect
from lieindex.liealg import (
    bracket,
    center_of,
    centralizer,
    commutator,
    is_abelian,
    is_ideal,
    is_subalgebra,
    validate,
)

F = Fraction


@pytest.mark.parametrize(
    "g, dim",
    [(gl(3), 9), (sl(4), 15), (so(5), 10), (sp(4), 10), (sp(6), 21), (heisenberg(5), 5), (mautner(), 4),
     (borel_gl(4), 10), (strict_upper(4), 6)],
    ids=lambda x: str(x) if isinstance(x, int) else None,
)
def test_classical_dimensions_and_jacobi(g, dim):
    assert g.dim == dim
    assert validate(g) is None


def test_sl2_basis_order():
    g = sl(2)
    assert g.labels == ("H1", "E12", "E21")
    h, e, f = (g.basis(i) for i in range(3))
    assert bracket(g, h, e) == tuple(2 * x for x in e)
    assert bracket(g, e, f) == h


def test_mautner_structure():
    g = mautner()
    P, Q, E, X = (g.basis(i) for i in range(4))
    assert bracket(g, P, Q) == E
    assert bracket(g, X, P) == Q
    assert bracket(g, X, Q) == tuple(-v for v in P)
    assert is_ideal(g, g.part("a"))
    assert center_of(g) == g.span([E])


def test_parts_are_closed():
    g = sl(4)
    for name in ("b", "n+", "n-", "h", "so", "p"):
        assert is_subalgebra(g, g.part(name)), name
    assert is_abelian(g, g.part("q"))
    assert g.part("p").dim + g.part("q").dim == g.dim
    assert subspace_intersect(g.part("p"), g.part("q")).dim == 0
    _, nm, h, npl = triangular_sl(4)
    assert nm.dim + h.dim + npl.dim == 15


@pytest.mark.parametrize("comp", [(1, 1, 1), (2, 1), (1, 2), (3,), (2, 2), (1, 3)])
def test_parabolics(comp):
    n = sum(comp)
    g, p, pu = parabolic_sl(n, comp)
    assert is_subalgebra(g, p) and is_subalgebra(g, pu)
    levi = sum(k * k for k in comp) - 1
    assert p.dim == levi + pu.dim
    assert pu.dim == (n * n - sum(k * k for k in comp)) // 2
    assert all(v in p for v in pu.basis)


def test_representation_homomorphism_is_checked():
    g = sl(2)
    acts = tuple([[F(int(i == j == 0))] for j in range(1)] for i in range(3))
    with pytest.raises(RepresentationError):
        Representation(g, 1, acts)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_irreducible_sl2(m):
    rho = irreducible_sl2(m)
    assert rho.module_dim == m
    h = rho.action(rho.algebra.basis(0))
    assert sorted(h[i][i] for i in range(m)) == [F(m - 1 - 2 * k) for k in reversed(range(m))]


def test_adjoint_and_ideal_representation():
    g = mautner()
    ad = adjoint(g)
    for i in range(4):
        for j in range(4):
            assert ad.act(g.basis(i), g.basis(j)) == bracket(g, g.basis(i), g.basis(j))
    rho = ideal_representation(g, g.part("a"))
    assert rho.module_dim == 3
    with pytest.raises(ValueError):
        ideal_representation(sl(2), sl(2).part("b"))


def test_semidirect_and_takiff():
    g = semidirect_abelian(irreducible_sl2(4))
    assert g.dim == 7 and is_abelian(g, g.part("V")) and is_ideal(g, g.part("V"))
    t = takiff(sl(2))
    assert t.dim == 6 and is_ideal(t, t.part("V"))
    t3 = generalized_takiff(sl(2), 3)
    assert t3.dim == 9 and is_ideal(t3, t3.part("ideal"))
    assert generalized_takiff(sl(2), 1) == sl(2)


def test_takiff_bracket_truncates():
    t = generalized_takiff(sl(2), 2)
    x1 = t.basis(t.labels.index("E12*t^1"))
    y1 = t.basis(t.labels.index("E21*t^1"))
    assert all(v == 0 for v in bracket(t, x1, y1))


def test_inonu_wigner_shape():
    g = sl(3)
    h = inonu_wigner(g, g.part("b"))
    assert h.dim == 8
    V = h.part("module")
    assert is_abelian(h, V) and is_ideal(h, V) and V.dim == 3
    full = inonu_wigner(mautner(), Subspace.full(4))
    assert full.dim == 4


def test_quotient_representation_dimension():
    g = sl(3)
    rho = quotient_representation(g, g.part("b"))
    assert rho.module_dim == 3 and rho.algebra.dim == 5


def test_nilpotent_helpers():
    J = jordan_block_matrix([3, 1])
    assert matrix_power(J, 3) == [[F(0)] * 4 for _ in range(4)]
    h = sl2_neutral(J)
    assert commutator(h, J) == [[2 * x for x in r] for r in J]
    assert sum(h[i][i] for i in range(4)) == 0
    G = gl(4)
    e = jordan_nilpotent(4, 2)
    assert centralizer(G, G.span([e])).dim == 8
