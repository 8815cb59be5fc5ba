from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import CFG
from lieindex.constructions import (
    gl,
    heisenberg,
    irreducible_sl2,
    jordan_block_matrix,
    mautner,
    semidirect_abelian,
    sl,
    takiff,
)
from lieindex.exactlin import Subspace
from lieindex.liealg import LieError, from_matrix
from lieindex.verify import (
    EQUALITY,
    FAILS,
    HOLDS,
    PROBE,
    STRICT,
    ClaimReport,
    SuiteEntry,
    analyze_nilpotent,
    check_additivity,
    check_contraction,
    check_equality_criteria,
    check_equality_criteria_abelian,
    check_key_identity,
    check_panyushev,
    check_subregular_contraction,
    check_takiff_centralizer,
    compositions,
    gl4_row_blocks,
    probe_questions,
    run_suite,
)

F = Fraction


def test_key_identity_on_degenerate_forms():
    g = mautner()
    a = g.part("a")
    for l in [(F(0),) * 4, (F(0), F(0), F(1), F(0)), (F(0), F(0), F(0), F(1)), (F(1), F(2), F(3), F(4))]:
        assert check_key_identity(g, a, l).verdict == HOLDS
    s = sl(3)
    assert check_key_identity(s, Subspace.zero(8), (F(1),) * 8).verdict == HOLDS
    assert check_key_identity(s, Subspace.full(8), (F(1),) * 8).verdict == HOLDS


def test_key_identity_requires_ideal():
    g = sl(3)
    with pytest.raises(LieError):
        check_key_identity(g, g.part("b"), (F(1),) * 8)


def test_panyushev_examples():
    g = mautner()
    rep = check_panyushev(g, g.part("a"), CFG)
    q = rep.quantities
    assert (q["ind_g"], q["ind_a"], q["ind_g_a"], q["lhs"], q["rhs"]) == (2, 1, 1, 3, 3)
    assert rep.verdict == EQUALITY
    h = heisenberg(3)
    rep = check_panyushev(h, h.part("center"), CFG)
    assert (rep.quantities["lhs"], rep.quantities["rhs"]) == (2, 4)
    assert rep.verdict == STRICT


def test_equality_criteria_agree():
    v4 = semidirect_abelian(irreducible_sl2(4))
    rep = check_equality_criteria_abelian(v4, v4.part("V"), CFG, v4.part("q"))
    assert rep.verdict == EQUALITY and all(rep.quantities["criteria"].values())
    h = heisenberg(3)
    rep = check_equality_criteria_abelian(h, h.part("center"), CFG)
    assert rep.verdict == STRICT and not any(rep.quantities["criteria"].values())


def test_equality_criteria_preconditions():
    m = mautner()
    with pytest.raises(ValueError):
        check_equality_criteria_abelian(m, m.part("a"), CFG)
    t = takiff(sl(2))
    with pytest.raises(ValueError, match="complement"):
        check_equality_criteria(t, t.part("V"), CFG, t.part("V"))
    skew = t.span([tuple(a + b for a, b in zip(t.basis(3 + i), t.basis((i + 1) % 3))) for i in range(3)])
    with pytest.raises(LieError):
        check_equality_criteria(t, t.part("V"), CFG, skew)


def test_analyze_nilpotent_sl3():
    g = sl(3)
    reps = {r.claim_id: r for r in analyze_nilpotent(g, from_matrix(g, jordan_block_matrix([3])), CFG)}
    assert all(r.verdict in (HOLDS, EQUALITY) for r in reps.values())
    assert reps["P2.5-detA"].quantities["expected_abs"] == "8*lambda2**2"
    assert reps["P2.5-quotient"].quantities["ind_eta_mod_z"] == 0


def test_analyze_nilpotent_sl4_odd_quotient():
    g = sl(4)
    reps = {r.claim_id: r for r in analyze_nilpotent(g, from_matrix(g, jordan_block_matrix([4])), CFG, "x")}
    assert reps["P2.5-quotient-x"].quantities["ind_eta_mod_z"] == 1


def test_analyze_nilpotent_rejects_bad_input():
    g = sl(3)
    with pytest.raises(ValueError):
        analyze_nilpotent(g, (F(0),) * 8, CFG)
    with pytest.raises(ValueError):
        analyze_nilpotent(g, g.basis(0), CFG)


def test_contraction_examples():
    assert check_contraction(gl(3), gl(3).part("so"), CFG).quantities["ind_contraction"] == 3
    rep = check_contraction(sl(3), sl(3).part("b"), CFG)
    assert rep.quantities["ind_contraction"] == 2 and rep.verdict == EQUALITY


def test_additivity_examples():
    assert check_additivity(gl(3), gl(3).part("so"), gl(3).part("b"), CFG).verdict == HOLDS
    s = sl(3)
    assert check_additivity(s, s.part("n-"), s.part("b"), CFG).verdict == HOLDS
    rep = check_additivity(*gl4_row_blocks(), CFG)
    assert rep.verdict == FAILS and (rep.quantities["ind_g0"], rep.quantities["ind_g1"]) == (0, 0)
    with pytest.raises(ValueError):
        check_additivity(s, s.part("b"), s.part("b"), CFG)


@pytest.mark.parametrize("n, p", [(4, 2), (3, 3), (4, 1)])
def test_takiff_centralizer(n, p):
    rep = check_takiff_centralizer(n, p, CFG)
    assert rep.verdict == HOLDS and rep.quantities["ind_z"] == n


def test_takiff_centralizer_needs_divisor():
    with pytest.raises(ValueError):
        check_takiff_centralizer(5, 2, CFG)


def test_subregular():
    rep = check_subregular_contraction(sl(3), CFG)
    q = rep.quantities
    assert q["dim_z"] == 4 and q["ind_z"] == 2
    assert rep.verdict == HOLDS and q["ind_contraction"] == 2


def test_probes_never_assert():
    reps = probe_questions(CFG, max_n=3)
    assert reps and all(r.verdict == PROBE for r in reps)
    b = next(r for r in reps if r.claim_id == "P4.5-q4bis-sl3-111")
    assert b.quantities["ind_contraction"] == 2
    full = next(r for r in reps if r.claim_id == "P5.4-q7-sl3-3")
    assert full.quantities["ind_p"] == 2 and full.quantities["ind_pu"] == 0


def test_compositions():
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]


def test_report_serialization():
    rep = ClaimReport("P9-x", "demo", {"v": F(1, 2), "ok": True}, HOLDS, {"l": (F(3),)}, (HOLDS,))
    d = rep.to_dict()
    assert d["quantities"]["v"] == "1/2" and d["witness"]["l"] == ["3/1"] and d["ok"]


def test_suite_filter_and_order():
    rep = run_suite(CFG, "P5.3-*")
    ids = [c.claim_id for c in rep.claims]
    assert ids == sorted(ids) and ids and all(i.startswith("P5.3-") for i in ids)
    assert rep.ok


def test_unexpected_verdict_fails_the_suite():
    def broken(cfg):
        return [ClaimReport("P9-broken", "", {}, FAILS)]

    rep = run_suite(CFG, plan=[SuiteEntry(("P9-broken",), broken)])
    assert not rep.ok


def test_corrupted_structure_constant_is_caught():
    from lieindex.liealg import JacobiError, LieAlgebra, to_dict

    doc = to_dict(sl(2))
    brackets = {(i, j): [(k, F(c)) for k, c in terms] for i, j, terms in doc["brackets"]}
    brackets[(0, 1)] = [(1, F(3))]
    with pytest.raises(JacobiError):
        LieAlgebra(3, brackets)


def test_contraction_independent_of_complement():
    from lieindex.verify import check_complement_independence

    g = sl(3)
    rep = check_complement_independence(g, g.part("b"), CFG)
    assert rep.verdict == HOLDS and rep.quantities["other_complements"] == [2, 2, 2]
