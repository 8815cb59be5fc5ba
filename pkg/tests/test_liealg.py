from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_fracs
from lieindex.constructions import gl, heisenberg, mautner, sl
from lieindex.corpus import solvable_corpus
from lieindex.exactlin import Subspace
from lieindex.liealg import (
    JacobiError,
    LieAlgebra,
    NotClosedError,
    SchemaError,
    bracket,
    center_of,
    centralizer,
    change_basis,
    derived,
    direct_sum,
    dumps,
    from_dict,
    from_matrix,
    is_ideal,
    is_nilpotent,
    is_solvable,
    is_subalgebra,
    loads,
    normalizer,
    quotient,
    require_ideal,
    subalgebra,
    to_dict,
    to_matrix,
    validate,
)

F = Fraction
ALGEBRAS = [sl(2), sl(3), gl(2), heisenberg(3), mautner()]


def vectors(dim):
    return st.lists(small_fracs, min_size=dim, max_size=dim).map(tuple)


@pytest.mark.parametrize("g", ALGEBRAS, ids=lambda g: f"dim{g.dim}")
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_bracket_is_bilinear_and_alternating(g, data):
    x, y, z = (data.draw(vectors(g.dim)) for _ in range(3))
    c = data.draw(small_fracs)
    lin = tuple(a + c * b for a, b in zip(x, z))
    lhs = bracket(g, lin, y)
    rhs = tuple(a + c * b for a, b in zip(bracket(g, x, y), bracket(g, z, y)))
    assert lhs == rhs
    assert bracket(g, x, y) == tuple(-v for v in bracket(g, y, x))
    assert all(v == 0 for v in bracket(g, x, x))


def test_jacobi_violation_names_triple():
    with pytest.raises(JacobiError) as exc:
        LieAlgebra(3, {(0, 1): [(1, 1)], (1, 2): [(0, 1)]}, ["a", "b", "c"])
    assert "(a, b, c)" in str(exc.value)


def test_structure_constants_from_matrices_agree_with_commutators():
    g = sl(3)
    for i in range(g.dim):
        for j in range(g.dim):
            a, b = to_matrix(g, g.basis(i)), to_matrix(g, g.basis(j))
            comm = [[sum(a[r][k] * b[k][c] - b[r][k] * a[k][c] for k in range(3)) for c in range(3)] for r in range(3)]
            assert from_matrix(g, comm) == g.structure(i, j)


def test_closure_predicates():
    g = sl(3)
    assert is_subalgebra(g, g.part("b"))
    assert not is_ideal(g, g.part("b"))
    assert is_ideal(g, Subspace.full(g.dim)) and is_ideal(g, Subspace.zero(g.dim))
    b = subalgebra(g, g.part("b"), {"n+": g.part("n+")})
    assert is_ideal(b, b.part("n+"))
    with pytest.raises(NotClosedError):
        require_ideal(g, g.part("n+"))


def test_centralizer_normalizer_center():
    h = heisenberg(3)
    assert center_of(h) == h.span_labels("E")
    assert derived(h) == h.span_labels("E")
    assert centralizer(h, h.span_labels("P")) == h.span_labels("P", "E")
    assert normalizer(h, h.span_labels("E")).dim == 3
    g = sl(2)
    assert center_of(g).dim == 0
    assert normalizer(g, g.part("h")) == g.part("h")


def test_solvable_and_nilpotent():
    assert is_nilpotent(heisenberg(5))
    assert is_solvable(mautner()) and not is_nilpotent(mautner())
    assert not is_solvable(sl(2))


def test_quotient_and_subalgebra_dimensions():
    g = mautner()
    q = quotient(g, g.part("a"))
    assert q.dim == 1 and q.is_abelian_algebra
    hq = quotient(heisenberg(3), heisenberg(3).part("center"))
    assert hq.dim == 2 and hq.is_abelian_algebra
    a = subalgebra(g, g.part("a"))
    assert a.dim == 3 and center_of(a).dim == 1


def test_direct_sum():
    s = direct_sum(sl(2), heisenberg(3))
    assert s.dim == 6 and center_of(s).dim == 1


def test_change_basis_preserves_invariants():
    g = sl(2)
    P = [(F(1), F(1), F(0)), (F(0), F(1), F(1)), (F(1), F(0), F(2))]
    h = change_basis(g, P)
    assert validate(h) is None
    assert derived(h).dim == 3 and center_of(h).dim == 0


def test_serialization_roundtrip_is_bit_exact():
    for g in ALGEBRAS + [e.algebra for e in solvable_corpus(5, 10)]:
        text = dumps(g)
        h = loads(text)
        assert h == g
        assert dumps(h) == text
        assert from_dict(json.loads(text)) == g


def test_rationals_serialize_as_ratios():
    g = LieAlgebra(2, {(0, 1): [(1, F(1, 3))]})
    assert to_dict(g)["brackets"] == [[0, 1, [[1, "1/3"]]]]
    assert loads(dumps(g)) == g


@pytest.mark.parametrize(
    "doc",
    [
        "[1, 2]",
        '{"dim": 2}',
        '{"dim": -1, "brackets": []}',
        '{"dim": 2, "brackets": [[1, 0, [[0, "1/1"]]]]}',
        '{"dim": 2, "brackets": [[0, 1, [[5, "1/1"]]]]}',
        '{"dim": 2, "brackets": [[0, 1, [[0, 0.5]]]]}',
        '{"dim": 2, "brackets": [[0, 1, [[0, "x"]]]]}',
        '{"dim": 2, "labels": ["a"], "brackets": []}',
        '{"dim": 2, "brackets": [[0, 1',
    ],
)
def test_schema_violations(doc):
    with pytest.raises(SchemaError):
        loads(doc)
