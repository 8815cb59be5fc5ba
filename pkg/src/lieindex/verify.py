"""Executable checks of index identities, inequalities and worked examples.

Each check returns a :class:`ClaimReport` holding the exact quantities it
computed and a verdict derived from them.  :func:`run_suite` runs a fixed,
versioned list of instances and compares every verdict with the expected one.
"""

from __future__ import annotations

import fnmatch
import random
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import factorial
from typing import Callable, Mapping, Sequence

from .constructions import (
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
    takiff,
)
from .corpus import solvable_corpus
from .exactlin import (
    CoordinateSolver,
    Subspace,
    identity,
    is_zero,
    matmul,
    rank,
    subspace_intersect,
    subspace_sum,
)
from .index import (
    GenericRankConfig,
    LinearFamily,
    action_family,
    form_centralizer,
    form_family,
    form_value,
    generic_rank,
    index,
    index_ideal,
    index_rep,
    is_polarization,
    orbit_dim,
    orthogonal_wrt_form,
    random_point,
    restrict_form,
    symbolic_det,
    symbolic_rank,
)
from .liealg import (
    LieAlgebra,
    bracket,
    center_of,
    centralizer,
    change_basis,
    commutator,
    flatten,
    from_matrix,
    is_abelian,
    is_ideal,
    is_subalgebra,
    normalizer,
    quotient,
    require_ideal,
    require_subalgebra,
    restrict,
    subalgebra,
    to_matrix,
)

SUITE_VERSION = "1.0"

HOLDS = "holds"
FAILS = "fails"
EQUALITY = "equality"
STRICT = "inequality-strict"
INCONCLUSIVE = "inconclusive"
DELTA_MISMATCH = "delta-mismatch"
PROBE = "probe"


def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, Mapping):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


@dataclass
class ClaimReport:
    claim_id: str
    inputs: str
    quantities: dict
    verdict: str
    witness: dict = field(default_factory=dict)
    expected: tuple[str, ...] | None = None

    @property
    def ok(self) -> bool:
        return self.expected is None or self.verdict in self.expected

    def to_dict(self) -> dict:
        d = {
            "claim_id": self.claim_id,
            "inputs": self.inputs,
            "quantities": _jsonable(self.quantities),
            "verdict": self.verdict,
            "witness": _jsonable(self.witness),
        }
        if self.expected is not None:
            d["expected"] = list(self.expected)
            d["ok"] = self.ok
        return d


def _holds(flag: bool) -> str:
    return HOLDS if flag else FAILS


def _compare(lhs: int, rhs: int) -> str:
    """Verdict for ``lhs <= rhs``."""
    if lhs == rhs:
        return EQUALITY
    return STRICT if lhs < rhs else FAILS


def _sample_form(rng: random.Random, dim: int, kind: str) -> tuple[Fraction, ...]:
    if kind == "generic":
        return random_point(rng, dim, 10**6)
    if kind == "small":
        return tuple(Fraction(rng.choice([-1, 0, 0, 1])) for _ in range(dim))
    raise ValueError(kind)


# -- ideals: subspace identity and inequality --------------------------------------


def check_key_identity(g: LieAlgebra, a: Subspace, l, claim_id: str = "P1.1-identity") -> ClaimReport:
    """``h^{l1} = a^{l0} + g^l`` with ``h = a^l`` and ``l1 = l|h``."""
    require_ideal(g, a)
    h = orthogonal_wrt_form(g, a, l)
    lhs = subspace_intersect(h, orthogonal_wrt_form(g, h, l))
    a_l0 = subspace_intersect(a, h)
    g_l = form_centralizer(g, l)
    rhs = subspace_sum(a_l0, g_l)
    return ClaimReport(
        claim_id,
        f"dim g = {g.dim}, dim a = {a.dim}",
        {"dim_h": h.dim, "dim_h_l1": lhs.dim, "dim_a_l0": a_l0.dim, "dim_g_l": g_l.dim, "equal": lhs == rhs},
        _holds(lhs == rhs),
        {"l": tuple(l)},
    )


def check_key_identity_samples(
    g: LieAlgebra, a: Subspace, cfg: GenericRankConfig, samples: int = 20, claim_id: str = "P1.1-identity"
) -> ClaimReport:
    """:func:`check_key_identity` on generic and on degenerate (small integer) forms."""
    rng = cfg.rng()
    held = 0
    failures = []
    for s in range(samples):
        l = _sample_form(rng, g.dim, "generic" if s % 2 == 0 else "small")
        rep = check_key_identity(g, a, l, claim_id)
        if rep.verdict == HOLDS:
            held += 1
        else:
            failures.append(l)
    return ClaimReport(
        claim_id,
        f"dim g = {g.dim}, dim a = {a.dim}, {samples} forms",
        {"samples": samples, "held": held},
        _holds(held == samples),
        {"failures": failures[:3]},
    )


def check_panyushev(g: LieAlgebra, a: Subspace, cfg: GenericRankConfig, claim_id: str = "P1.2-panyushev") -> ClaimReport:
    """ind(g) + ind(a) <= dim(g/a) + 2 ind(g, a)."""
    require_ideal(g, a)
    ig = index(g, cfg.derive("g"))
    ia = index(subalgebra(g, a), cfg.derive("a"))
    iga = index_ideal(g, a, cfg.derive("ga"))
    lhs = ig.value + ia.value
    rhs = g.dim - a.dim + 2 * iga.value
    return ClaimReport(
        claim_id,
        f"dim g = {g.dim}, dim a = {a.dim}",
        {
            "ind_g": ig.value,
            "ind_a": ia.value,
            "ind_g_a": iga.value,
            "dim_g_mod_a": g.dim - a.dim,
            "lhs": lhs,
            "rhs": rhs,
            "error_bound": max(ig.error_bound, ia.error_bound, iga.error_bound),
        },
        _compare(lhs, rhs),
    )


# -- equality criteria -------------------------------------------------------------


def check_equality_criteria(
    g: LieAlgebra,
    a: Subspace,
    cfg: GenericRankConfig,
    complement: Subspace | None = None,
    claim_id: str = "P3-criteria",
) -> ClaimReport:
    """Evaluate the equality criteria for the Panyushev inequality at one
    shared generic form and report whether they all agree.

    Criteria (each a boolean at the witness ``l``):

    * ``equality``: ind g + ind a = dim(g/a) + 2 ind(g, a)
    * ``sum_is_orthogonal``: a^{l0} + g^l = a^l
    * ``orthogonal_subordinate``: l vanishes on [a^l, a^l]
    * ``orbit_relation``: dim g.l + dim a.l0 = 2 dim g.l0 (for abelian ``a``
      this is dim g.l = 2 dim g.l0)
    * for abelian ``a``: ``sum_polarization`` (a + g^l is a polarization),
      ``orthogonal_polarization`` (a^l is a polarization) and, when a
      complementary subalgebra ``q`` is given, ``stabilizer_abelian``
      (q(l0) is abelian).
    """
    require_ideal(g, a)
    abelian = is_abelian(g, a)
    ind_g = index(g, cfg.derive("g")).value
    a_alg = subalgebra(g, a)
    ind_a = a.dim if abelian else index(a_alg, cfg.derive("a")).value
    rho = ideal_representation(g, a)
    ind_ga = index_rep(rho, cfg.derive("ga")).value
    if complement is not None:
        require_subalgebra(g, complement, "complement")
        if subspace_intersect(a, complement).dim or a.dim + complement.dim != g.dim:
            raise ValueError("complement is not a vector space complement of the ideal")

    rng = cfg.derive("witness").rng()
    for _ in range(50):
        l = _sample_form(rng, g.dim, "generic")
        l0 = restrict_form(l, a)
        g_l = form_centralizer(g, l)
        a_l = orthogonal_wrt_form(g, a, l)
        a_l0 = subspace_intersect(a, a_l)
        if (
            a.dim - orbit_dim(rho, l0) == ind_ga
            and g_l.dim == ind_g
            and a_l0.dim == ind_a
        ):
            break
    else:  # pragma: no cover - probability ~ 0
        raise RuntimeError("no generic witness found")

    orbit_g = g.dim - g_l.dim
    orbit_g_l0 = orbit_dim(rho, l0)
    orbit_a_l0 = a.dim - a_l0.dim
    criteria = {
        "equality": ind_g + ind_a == g.dim - a.dim + 2 * ind_ga,
        "sum_is_orthogonal": subspace_sum(a_l0, g_l) == a_l,
        "orthogonal_subordinate": all(form_value(l, bracket(g, x, y)) == 0 for x, y in combinations(a_l.basis, 2)),
        "orbit_relation": orbit_g + orbit_a_l0 == 2 * orbit_g_l0,
    }
    if abelian:
        criteria["sum_polarization"] = is_polarization(g, subspace_sum(a, g_l), l)
        criteria["orthogonal_polarization"] = is_subalgebra(g, a_l) and is_polarization(g, a_l, l)
        if complement is not None:
            stab = subspace_intersect(complement, a_l)
            criteria["stabilizer_abelian"] = is_abelian(g, stab)
    values = set(criteria.values())
    if len(values) > 1:
        verdict = FAILS
    else:
        verdict = EQUALITY if values == {True} else STRICT
    quantities = {
        "abelian_ideal": abelian,
        "ind_g": ind_g,
        "ind_a": ind_a,
        "ind_g_a": ind_ga,
        "dim_g_mod_a": g.dim - a.dim,
        "dim_g_orbit": orbit_g,
        "dim_g_orbit_l0": orbit_g_l0,
        "dim_a_orbit_l0": orbit_a_l0,
        "criteria": criteria,
    }
    return ClaimReport(claim_id, f"dim g = {g.dim}, dim a = {a.dim}", quantities, verdict, {"l": l})


def check_equality_criteria_abelian(
    g: LieAlgebra, a: Subspace, cfg: GenericRankConfig, complement: Subspace | None = None, claim_id: str = "P3-criteria"
) -> ClaimReport:
    if not is_abelian(g, a):
        raise ValueError("the ideal is not abelian")
    return check_equality_criteria(g, a, cfg, complement, claim_id)


# -- nilpotent elements of sl(n) ---------------------------------------------------


def _mat_sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _mat_scale(c, a):
    return [[c * x for x in r] for r in a]


def _is_zero_matrix(m) -> bool:
    return all(not x for r in m for x in r)


def _lambda_str(poly, gens) -> str:
    """Render a polynomial in the coordinates lambda_1, ..., lambda_r of l0."""
    import sympy

    lam = sympy.symbols(f"lambda1:{len(gens) + 1}")
    expr = poly.as_expr().subs({x.as_expr(): y for x, y in zip(gens, lam)}, simultaneous=True)
    return str(expr)


def analyze_nilpotent(g: LieAlgebra, e, cfg: GenericRankConfig, tag: str = "") -> list[ClaimReport]:
    """Normalizer-of-centralizer analysis for a nilpotent ``e`` of sl(n).

    ``g`` must be a matrix realization of sl(n) and ``e`` must be in explicit
    Jordan form (needed for the sl2-triple element ``h``).  Returns one report
    per check; a mismatch of the center basis stops the dependent checks.
    """
    if g.realization is None:
        raise ValueError("analyze_nilpotent needs a matrix realization")
    n = len(g.realization[0])
    E = to_matrix(g, e)
    if is_zero(e):
        raise ValueError("e must be nonzero")
    if not _is_zero_matrix(matrix_power(E, n)):
        raise ValueError("e is not nilpotent")
    r = max(k for k in range(1, n + 1) if not _is_zero_matrix(matrix_power(E, k)))
    sfx = f"-{tag}" if tag else ""
    reports: list[ClaimReport] = []
    rng = cfg.derive("analyze" + sfx).rng()

    powers_m = [matrix_power(E, k) for k in range(1, r + 1)]
    powers = [from_matrix(g, m) for m in powers_m]
    z = centralizer(g, g.span([e]))
    eta = normalizer(g, z)
    delta = center_of(g, z)
    base = {"n": n, "r": r, "dim_z": z.dim, "dim_eta": eta.dim, "dim_delta": delta.dim}
    inputs = f"sl({n}), nilpotent of order {r + 1}"

    reports.append(
        ClaimReport(f"P2.1-bk-dims{sfx}", inputs, dict(base, dim_eta_mod_z=eta.dim - z.dim), _holds(delta.dim == eta.dim - z.dim))
    )
    delta_ok = delta == g.span(powers)
    reports.append(
        ClaimReport(f"P2.5-delta-basis{sfx}", inputs, dict(base, matches_powers=delta_ok), HOLDS if delta_ok else DELTA_MISMATCH)
    )
    if not delta_ok:
        return reports

    eta_alg = subalgebra(g, eta)
    z_in = restrict(eta, z)
    delta_in = restrict(eta, delta)
    z_alg = subalgebra(eta_alg, z_in)
    ind_eta = index(eta_alg, cfg.derive("eta" + sfx)).value
    ind_z = index(z_alg, cfg.derive("z" + sfx)).value
    rho_delta = ideal_representation(eta_alg, delta_in, basis=[eta.coordinates(p) for p in powers])
    ind_eta_delta = index_rep(rho_delta, cfg.derive("eta-delta" + sfx)).value
    rho_z = ideal_representation(eta_alg, z_in)
    ind_eta_z = index_rep(rho_z, cfg.derive("eta-z" + sfx)).value
    idx = dict(base, ind_eta=ind_eta, ind_z=ind_z, ind_eta_delta=ind_eta_delta, ind_eta_z=ind_eta_z)

    reports.append(ClaimReport(f"P2.1-ind-eta-delta{sfx}", inputs, idx, _holds(ind_eta_delta == 0)))
    reports.append(ClaimReport(f"P2.1-ind-eta-formula{sfx}", inputs, idx, _holds(ind_eta == ind_z - delta.dim)))
    reports.append(ClaimReport(f"P2.1-ind-eta-z{sfx}", inputs, idx, _holds(ind_eta_z == ind_eta)))
    reports.append(
        ClaimReport(
            f"P3.5-eta-z-equality{sfx}",
            inputs,
            idx,
            _compare(ind_eta + ind_z, eta.dim - z.dim + 2 * ind_eta_z),
        )
    )

    # regularity of l0 on delta <=> <l0, e^r> != 0, tested both ways
    agree = {"nonzero": 0, "zero": 0}
    samples = 50
    for s in range(samples):
        lam = list(random_point(rng, r, 1000))
        while lam[-1] == 0:
            lam[-1] = Fraction(rng.randint(-1000, 1000))
        if orbit_dim(rho_delta, lam) == r:
            agree["nonzero"] += 1
        lam0 = lam[:-1] + [Fraction(0)]
        if orbit_dim(rho_delta, lam0) < r:
            agree["zero"] += 1
    reports.append(
        ClaimReport(
            f"P2.5-regularity{sfx}",
            inputs,
            {"samples_each_way": samples, "regular_when_nonzero": agree["nonzero"], "singular_when_zero": agree["zero"]},
            _holds(agree["nonzero"] == samples and agree["zero"] == samples),
        )
    )

    # explicit x_k = traceless part of h e^k and the matrix A
    h = sl2_neutral(E)
    ok_h = commutator(h, E) == _mat_scale(Fraction(2), E)
    xs_m = []
    for k in range(r):
        he = matmul(h, matrix_power(E, k))
        tr = sum(he[i][i] for i in range(n)) / n
        xs_m.append(_mat_sub(he, _mat_scale(tr, identity(n))))
    xs = [from_matrix(g, m) for m in xs_m]
    zero = [[Fraction(0)] * n for _ in range(n)]
    rel_ok = ok_h
    for k in range(r):
        for ell in range(1, r + 1):
            expect = _mat_scale(Fraction(2 * ell), powers_m[k + ell - 1]) if k + ell <= r else zero
            rel_ok &= commutator(xs_m[k], powers_m[ell - 1]) == expect
    eta_split = subspace_sum(z, g.span(xs)) == eta and len(xs) + z.dim == eta.dim
    coords = CoordinateSolver(powers)
    entries = []
    for i in range(1, r + 1):
        row = []
        for j in range(r):
            c = coords(bracket(g, xs[j], powers[i - 1]))
            row.append({k: -v for k, v in enumerate(c) if v})
        entries.append(tuple(row))
    fam = LinearFamily(r, r, r, tuple(entries))
    det, R, gens = symbolic_det(fam)
    target = gens[r - 1] ** r * (2**r * factorial(r))
    det_ok = det == target or det == -target
    reports.append(
        ClaimReport(
            f"P2.5-detA{sfx}",
            inputs,
            {"det_A": _lambda_str(det, gens), "expected_abs": _lambda_str(target, gens), "brackets_ok": rel_ok, "eta_is_z_plus_q": eta_split},
            _holds(det_ok and rel_ok and eta_split),
        )
    )

    # eta/z with basis images of x_0..x_{r-1}
    q_alg = quotient(eta_alg, z_in)
    xbar = [z_in.quotient_coordinates(eta.coordinates(x)) for x in xs]
    quot_ok = g.span(xs).dim == r and Subspace.span(q_alg.dim, xbar).dim == q_alg.dim == r
    for k, ell in combinations(range(r), 2):
        lhs = bracket(q_alg, xbar[k], xbar[ell])
        if k + ell <= r - 1:
            rhs = tuple(Fraction(2 * (ell - k)) * c for c in xbar[k + ell])
        else:
            rhs = (Fraction(0),) * r
        quot_ok &= lhs == rhs
    ind_q = index(q_alg, cfg.derive("eta-mod-z" + sfx)).value
    want = 0 if r % 2 == 0 else 1
    reports.append(
        ClaimReport(
            f"P2.5-quotient{sfx}",
            inputs,
            {"dim": q_alg.dim, "brackets_ok": quot_ok, "ind_eta_mod_z": ind_q, "expected": want},
            _holds(quot_ok and ind_q == want),
        )
    )

    # the three regularity statements agree wherever eta.l0 = delta*
    rho_delta_e = ideal_representation(eta_alg, delta_in)
    counts = {"tested": 0, "agree": 0, "all_true": 0, "all_false": 0}
    kinds = ["generic"] * 10 + ["small"] * 20 + ["delta"] * 10
    for kind in kinds:
        if kind == "delta":
            l = [Fraction(0)] * eta.dim
            for p in delta_in.pivots:
                l[p] = Fraction(rng.randint(-50, 50))
            l = tuple(l)
        else:
            l = _sample_form(rng, eta.dim, kind)
        l0 = restrict_form(l, delta_in)
        if orbit_dim(rho_delta_e, l0) != delta.dim:
            continue
        l1 = restrict_form(l, z_in)
        s1 = form_centralizer(eta_alg, l).dim == ind_eta
        s2 = form_centralizer(z_alg, l1).dim == ind_z
        s3 = z.dim - orbit_dim(rho_z, l1) == ind_eta_z
        counts["tested"] += 1
        counts["agree"] += s1 == s2 == s3
        counts["all_true"] += s1 and s2 and s3
        counts["all_false"] += not (s1 or s2 or s3)
    reports.append(
        ClaimReport(
            f"P2.2-equivalences{sfx}",
            inputs,
            counts,
            _holds(counts["tested"] > 0 and counts["agree"] == counts["tested"]),
        )
    )
    return reports


# -- contractions ------------------------------------------------------------------


def check_contraction(g: LieAlgebra, k: Subspace, cfg: GenericRankConfig, claim_id: str = "P4.1-contraction") -> ClaimReport:
    """ind(g) <= ind((g/k) x| k)."""
    h = inonu_wigner(g, k)
    ig = index(g, cfg.derive("g")).value
    ih = index(h, cfg.derive("h")).value
    return ClaimReport(
        claim_id, f"dim g = {g.dim}, dim k = {k.dim}", {"ind_g": ig, "ind_contraction": ih}, _compare(ig, ih)
    )


def check_complement_independence(
    g: LieAlgebra, k: Subspace, cfg: GenericRankConfig, bases: int = 3, claim_id: str = "P4.1-complement"
) -> ClaimReport:
    """The contraction along ``k`` does not depend on the complement used to
    build it: recompute it after random changes of basis of ``g`` (which move
    the coordinate complement) and compare indices."""
    rng = cfg.derive("bases").rng()
    ref = index(inonu_wigner(g, k), cfg.derive("ref")).value
    values = []
    for t in range(bases):
        while True:
            P = [tuple(Fraction(rng.randint(-2, 2)) for _ in range(g.dim)) for _ in range(g.dim)]
            if rank(P) == g.dim:
                break
        h = change_basis(g, P)
        coords = CoordinateSolver(P, g.dim)
        kh = h.span([coords(v) for v in k.basis])
        values.append(index(inonu_wigner(h, kh), cfg.derive(f"b{t}")).value)
    return ClaimReport(
        claim_id,
        f"dim g = {g.dim}, dim k = {k.dim}, {bases} random bases",
        {"ind_contraction": ref, "other_complements": values},
        _holds(all(v == ref for v in values)),
    )


def weight_basis(g: LieAlgebra, s: Subspace, h) -> list:
    """Basis of ``s`` made of ad(h)-eigenvectors (``h`` diagonal, ``s`` ad(h)-stable)."""
    n = len(h)
    weights = sorted({h[i][i] - h[j][j] for i in range(n) for j in range(n)})
    out = []
    for w in weights:
        proj = []
        for v in s.basis:
            m = to_matrix(g, v)
            pm = [[m[i][j] if h[i][i] - h[j][j] == w else Fraction(0) for j in range(n)] for i in range(n)]
            proj.append(from_matrix(g, pm))
        out.extend(g.span(proj).basis)
    return out


def check_subregular_contraction(
    g: LieAlgebra, cfg: GenericRankConfig, budget: int = 200, claim_id: str = "P4.6-subregular"
) -> ClaimReport:
    """Sub-regular nilpotent of sl(n): ind z = n - 1 directly and through an
    abelian, non-ideal subalgebra k of dimension n - 1 of z, for which the
    contraction (z/k) x| k has index n - 1 as well."""
    n = len(g.realization[0])
    r = n - 1
    E = jordan_block_matrix([n - 1, 1])
    e = from_matrix(g, E)
    z = centralizer(g, g.span([e]))
    z_alg = subalgebra(g, z)
    ind_z = index(z_alg, cfg.derive("z")).value
    wb = [z.coordinates(v) for v in weight_basis(g, z, sl2_neutral(E))]

    nonideal = ideal = None
    tried = 0
    for subset in combinations(wb, r):
        tried += 1
        k = z_alg.span(subset)
        if k.dim != r or not is_abelian(z_alg, k):
            continue
        if is_ideal(z_alg, k):
            ideal = ideal or k
        else:
            nonideal = nonideal or k
        if ideal and nonideal:
            break
    rng = cfg.derive("search").rng()
    while nonideal is None and tried < budget:
        tried += 1
        vecs = [tuple(sum((Fraction(rng.randint(-2, 2)) * w[i] for w in wb), Fraction(0)) for i in range(z.dim)) for _ in range(r)]
        k = z_alg.span(vecs)
        if k.dim == r and is_abelian(z_alg, k) and not is_ideal(z_alg, k):
            nonideal = k

    q = {"n": n, "rank": r, "dim_z": z.dim, "ind_z": ind_z, "candidates_tried": tried}
    witness = {}
    contraction_ok = True
    if nonideal is not None:
        h = inonu_wigner(z_alg, nonideal)
        ind_h = index(h, cfg.derive("h")).value
        d = (z.dim - r) - index_rep(quotient_representation(z_alg, nonideal), cfg.derive("d")).value
        q.update(ind_contraction=ind_h, d=d)
        witness["k"] = nonideal.basis
        contraction_ok = ind_h == r and d == 1 and ind_z <= ind_h
    if ideal is not None:
        hi = inonu_wigner(z_alg, ideal)
        q["ind_contraction_ideal"] = index(hi, cfg.derive("hi")).value
        q["d_ideal"] = (z.dim - r) - index_rep(quotient_representation(z_alg, ideal), cfg.derive("di")).value
        contraction_ok &= q["ind_contraction_ideal"] == r + 2 and q["d_ideal"] == 0
    direct_ok = z.dim == r + 2 and ind_z == r
    if not direct_ok or not contraction_ok:
        verdict = FAILS
    elif nonideal is None:
        verdict = INCONCLUSIVE
    else:
        verdict = HOLDS
    return ClaimReport(claim_id, f"sl({n}), sub-regular nilpotent", q, verdict, witness)


# -- decompositions ----------------------------------------------------------------


def check_additivity(
    g: LieAlgebra, g0: Subspace, g1: Subspace, cfg: GenericRankConfig, claim_id: str = "P5-additivity"
) -> ClaimReport:
    """ind(g) = ind(g0) + ind(g1) for a vector space decomposition g = g0 + g1
    into subalgebras."""
    require_subalgebra(g, g0, "g0")
    require_subalgebra(g, g1, "g1")
    if g0.dim + g1.dim != g.dim or subspace_intersect(g0, g1).dim:
        raise ValueError("not a direct-sum decomposition")
    i = index(g, cfg.derive("g")).value
    i0 = index(subalgebra(g, g0), cfg.derive("g0")).value
    i1 = index(subalgebra(g, g1), cfg.derive("g1")).value
    return ClaimReport(
        claim_id,
        f"dim g = {g.dim} = {g0.dim} + {g1.dim}",
        {"ind_g": i, "ind_g0": i0, "ind_g1": i1, "sum": i0 + i1},
        _holds(i == i0 + i1),
    )


def centralizer_takiff_map(n: int, p: int) -> list:
    """Images in gl(n) (as flattened matrices) of the basis x (x) t^a of the
    generalized Takiff algebra of gl(p), k = n/p: block lower-triangular
    Toeplitz matrices with x on the a-th block subdiagonal."""
    k = n // p
    images = []
    for a in range(k):
        for s in range(p):
            for t in range(p):
                m = [[Fraction(0)] * n for _ in range(n)]
                for b in range(k - a):
                    m[p * (b + a) + s][p * b + t] = Fraction(1)
                images.append(flatten(m))
    return images


def check_takiff_centralizer(n: int, p: int, cfg: GenericRankConfig, claim_id: str = "P5.2-takiff") -> ClaimReport:
    if p < 1 or n % p:
        raise ValueError(f"{p} does not divide {n}")
    k = n // p
    G = gl(n)
    e = jordan_nilpotent(n, p)
    z = centralizer(G, G.span([e]))
    T = generalized_takiff(gl(p), k)
    phi = centralizer_takiff_map(n, p)
    in_z = all(v in z for v in phi) and G.span(phi) == z
    hom = True
    for u, v in combinations(range(T.dim), 2):
        img = [Fraction(0)] * G.dim
        for t, c in enumerate(T.structure(u, v)):
            if c:
                for i, x in enumerate(phi[t]):
                    if x:
                        img[i] += c * x
        if tuple(img) != bracket(G, phi[u], phi[v]):
            hom = False
            break
    ind_z = index(subalgebra(G, z), cfg.derive("z")).value
    ind_t = index(T, cfg.derive("takiff")).value
    return ClaimReport(
        claim_id,
        f"gl({n}), e = J^{p}",
        {"k": k, "dim_z": z.dim, "dim_takiff": T.dim, "isomorphism": in_z and hom, "ind_z": ind_z, "ind_takiff": ind_t},
        _holds(in_z and hom and ind_z == n == ind_t),
    )


def compositions(n: int):
    for cuts in product([0, 1], repeat=n - 1):
        parts, size = [], 1
        for c in cuts:
            if c:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield tuple(parts)


def probe_questions(cfg: GenericRankConfig, max_n: int = 4) -> list[ClaimReport]:
    """Evidence tables for open questions on small parabolics and
    decompositions; verdicts are always ``probe``."""
    out = []
    for n in range(2, max_n + 1):
        ind_g = n - 1
        for comp in compositions(n):
            g, p, pu = parabolic_sl(n, comp)
            tag = "".join(map(str, comp))
            i_iw = index(inonu_wigner(g, p), cfg.derive(f"q4bis{n}{tag}")).value
            out.append(
                ClaimReport(
                    f"P4.5-q4bis-sl{n}-{tag}",
                    f"sl({n}), parabolic {comp}",
                    {"ind_contraction": i_iw, "rank": ind_g, "consistent": i_iw == ind_g},
                    PROBE,
                )
            )
            i_p = index(subalgebra(g, p), cfg.derive(f"q7p{n}{tag}")).value
            i_pu = index(subalgebra(g, pu), cfg.derive(f"q7u{n}{tag}")).value if pu.dim else 0
            out.append(
                ClaimReport(
                    f"P5.4-q7-sl{n}-{tag}",
                    f"sl({n}), parabolic {comp}",
                    {"ind_p": i_p, "ind_pu": i_pu, "ind_g": ind_g, "consistent": i_p + i_pu == ind_g},
                    PROBE,
                )
            )
        g = sl(n)
        b = g.part("b")
        k = g.part("so")
        i_k = index(subalgebra(g, k), cfg.derive(f"q6k{n}")).value
        i_b = index(subalgebra(g, b), cfg.derive(f"q6b{n}")).value
        out.append(
            ClaimReport(
                f"P5.3-q6-sl{n}",
                f"sl({n}) = so({n}) + b",
                {"ind_k": i_k, "ind_b": i_b, "ind_g": ind_g, "consistent": i_k + i_b == ind_g},
                PROBE,
            )
        )
    return out


# -- engine properties ----------------------------------------------------------------


def check_engine_corpus(algebras: Sequence[LieAlgebra], cfg: GenericRankConfig, conjugations: int = 50) -> list[ClaimReport]:
    """Parity, basis-change invariance and randomized/symbolic agreement."""
    rng = cfg.derive("engine").rng()
    parity_bad = 0
    for t, g in enumerate(algebras):
        if (g.dim - index(g, cfg.derive(f"par{t}")).value) % 2:
            parity_bad += 1
    reports = [
        ClaimReport("P0-parity", f"{len(algebras)} algebras", {"algebras": len(algebras), "violations": parity_bad}, _holds(parity_bad == 0))
    ]
    changed = 0
    for t in range(conjugations):
        g = rng.choice(algebras)
        while True:
            P = [tuple(Fraction(rng.randint(-3, 3)) for _ in range(g.dim)) for _ in range(g.dim)]
            if rank(P) == g.dim:
                break
        h = change_basis(g, P)
        if index(g, cfg.derive(f"bc{t}a")).value != index(h, cfg.derive(f"bc{t}b")).value:
            changed += 1
    reports.append(
        ClaimReport("P0-basis-change", f"{conjugations} random conjugations", {"conjugations": conjugations, "violations": changed}, _holds(changed == 0))
    )
    fams = []
    for g in algebras:
        fams.append(form_family(g))
    for m in (1, 2, 3, 4):
        fams.append(action_family(irreducible_sl2(m)))
    small = [f for f in fams if f.rows * f.cols <= cfg.symbolic_threshold]
    disagree = 0
    for t, f in enumerate(small):
        rnd = generic_rank(f, GenericRankConfig(seed=cfg.seed + t, symbolic_threshold=0))
        if rnd.rank != symbolic_rank(f):
            disagree += 1
    reports.append(
        ClaimReport(
            "P0-symbolic-agreement",
            f"{len(small)} families of total size <= {cfg.symbolic_threshold}",
            {"families": len(small), "disagreements": disagree},
            _holds(disagree == 0 and len(small) > 0),
        )
    )
    return reports


# -- suite --------------------------------------------------------------------------


@dataclass
class SuiteEntry:
    ids: tuple[str, ...]
    run: Callable[[GenericRankConfig], list[ClaimReport]]
    expect: Mapping[str, tuple[str, ...]] = field(default_factory=dict)


@dataclass
class SuiteReport:
    seed: int
    claims: list[ClaimReport]
    suite_version: str = SUITE_VERSION

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.claims)

    def claim(self, claim_id: str) -> ClaimReport:
        return next(c for c in self.claims if c.claim_id == claim_id)

    def to_dict(self) -> dict:
        return {"suite_version": self.suite_version, "seed": self.seed, "claims": [c.to_dict() for c in self.claims]}


PASSING = (HOLDS, EQUALITY)


def _one(fn):
    return lambda cfg: [fn(cfg)]


def gl4_row_blocks() -> tuple[LieAlgebra, Subspace, Subspace]:
    """gl(4) split into matrices supported on the top two rows and on the bottom two rows."""
    g = gl(4)
    top = Subspace.coordinate(g.dim, [i * 4 + j for i in range(2) for j in range(4)])
    bottom = Subspace.coordinate(g.dim, [i * 4 + j for i in range(2, 4) for j in range(4)])
    return g, top, bottom


def borel_sl(n: int) -> tuple[LieAlgebra, Subspace]:
    g = sl(n)
    b = g.part("b")
    b_alg = subalgebra(g, b, {"n+": g.part("n+")})
    return b_alg, b_alg.part("n+")


CORPUS_SEED = 20240611


@lru_cache(maxsize=4)
def fixed_corpus(count: int = 200) -> tuple:
    """The versioned random solvable corpus; it does not depend on the run seed."""
    return tuple(solvable_corpus(CORPUS_SEED, count))


def _corpus_checks(cfg: GenericRankConfig, corpus_size: int) -> list[ClaimReport]:
    corpus = fixed_corpus(corpus_size)
    pairs = violations = equalities = 0
    mono_pairs = mono_bad = 0
    for entry in corpus:
        g = entry.algebra
        for t, a in enumerate(entry.ideals):
            rep = check_panyushev(g, a, cfg.derive(f"{entry.name}-{t}"))
            pairs += 1
            violations += rep.verdict == FAILS
            equalities += rep.verdict == EQUALITY
            if 0 < a.dim < g.dim:
                c = check_contraction(g, a, cfg.derive(f"{entry.name}-iw{t}"))
                mono_pairs += 1
                mono_bad += c.verdict == FAILS
    return [
        ClaimReport(
            "P1.2-panyushev-corpus",
            f"{len(corpus)} random solvable algebras",
            {"algebras": len(corpus), "pairs": pairs, "violations": violations, "equalities": equalities},
            _holds(violations == 0 and pairs >= 200),
        ),
        ClaimReport(
            "P4.1-monotonicity-corpus",
            f"{len(corpus)} random solvable algebras",
            {"pairs": mono_pairs, "violations": mono_bad},
            _holds(mono_bad == 0),
        ),
    ]


def _engine(cfg: GenericRankConfig, corpus_size: int) -> list[ClaimReport]:
    corpus = fixed_corpus(corpus_size)
    algebras = [e.algebra for e in corpus] + [
        mautner(), heisenberg(3), heisenberg(5), sl(2), sl(3), gl(3), so(4), sp(4), takiff(sl(2)), borel_gl(4)
    ]
    return check_engine_corpus(algebras, cfg)


def default_plan(corpus_size: int = 200) -> list[SuiteEntry]:
    plan: list[SuiteEntry] = []
    add = plan.append

    # ideals: subspace identity and inequality
    m = mautner()
    b3, n3 = borel_sl(3)
    s3 = sl(3)
    h3 = heisenberg(3)
    tk = generalized_takiff(sl(2), 2)
    pairs = {
        "mautner": (m, m.part("a")),
        "b-sl3": (b3, n3),
        "sl3-zero": (s3, Subspace.zero(s3.dim)),
        "heisenberg-center": (h3, h3.part("center")),
        "takiff-sl2": (tk, tk.part("ideal")),
    }
    for name, (g, a) in pairs.items():
        cid = f"P1.1-identity-{name}"
        add(SuiteEntry((cid,), _one(lambda cfg, g=g, a=a, cid=cid: check_key_identity_samples(g, a, cfg, 20, cid))))
    for name, (g, a) in {"mautner": (m, m.part("a")), "b-sl3": (b3, n3), "g-g": (m, Subspace.full(4))}.items():
        cid = f"P1.2-panyushev-{name}"
        add(SuiteEntry((cid,), _one(lambda cfg, g=g, a=a, cid=cid: check_panyushev(g, a, cfg, cid)), {cid: (EQUALITY,)}))
    add(SuiteEntry(("P1.2-panyushev-corpus", "P4.1-monotonicity-corpus"), lambda cfg: _corpus_checks(cfg, corpus_size)))

    # nilpotent elements of sl(n)
    for n in (3, 4, 5):
        tag = f"sl{n}-regular"
        ids = tuple(
            f"{p}-{tag}"
            for p in (
                "P2.1-bk-dims", "P2.5-delta-basis", "P2.1-ind-eta-delta", "P2.1-ind-eta-formula", "P2.1-ind-eta-z",
                "P3.5-eta-z-equality", "P2.5-regularity", "P2.5-detA", "P2.5-quotient", "P2.2-equivalences",
            )
        )
        add(
            SuiteEntry(
                ids,
                lambda cfg, n=n, tag=tag: analyze_nilpotent(sl(n), from_matrix(sl(n), jordan_block_matrix([n])), cfg, tag),
                {f"P3.5-eta-z-equality-{tag}": (EQUALITY,)},
            )
        )
    tag = "sl4-type22"
    ids = tuple(
        f"{p}-{tag}"
        for p in (
            "P2.1-bk-dims", "P2.5-delta-basis", "P2.1-ind-eta-delta", "P2.1-ind-eta-formula", "P2.1-ind-eta-z",
            "P3.5-eta-z-equality", "P2.5-regularity", "P2.5-detA", "P2.5-quotient", "P2.2-equivalences",
        )
    )
    add(
        SuiteEntry(
            ids,
            lambda cfg, tag=tag: analyze_nilpotent(sl(4), from_matrix(sl(4), matrix_power(jordan_block_matrix([4]), 2)), cfg, tag),
            {f"P3.5-eta-z-equality-{tag}": (EQUALITY,)},
        )
    )

    # equality criteria
    v4 = semidirect_abelian(irreducible_sl2(4))
    tq = takiff(sl(2))
    crit = {
        "v4-sl2": (v4, v4.part("V"), v4.part("q"), (EQUALITY,)),
        "takiff-sl2": (tq, tq.part("V"), tq.part("q"), (EQUALITY,)),
        "heisenberg-center": (h3, h3.part("center"), None, (STRICT,)),
        "mautner-heisenberg": (m, m.part("a"), m.part("q"), (EQUALITY,)),
    }
    for name, (g, a, q, exp) in crit.items():
        cid = f"P3-criteria-{name}"
        add(SuiteEntry((cid,), _one(lambda cfg, g=g, a=a, q=q, cid=cid: check_equality_criteria(g, a, cfg, q, cid)), {cid: exp}))
    for n in range(2, 6):
        cid = f"P3.5-borel-nilradical-sl{n}"

        def borel_claim(cfg, n=n, cid=cid):
            b, nplus = borel_sl(n)
            rep = check_panyushev(b, nplus, cfg, cid)
            rep.quantities["rank"] = n - 1
            ok = rep.quantities["ind_g_a"] == 0 and rep.quantities["lhs"] == n - 1
            if not ok and rep.verdict == EQUALITY:
                rep.verdict = FAILS
            return rep

        add(SuiteEntry((cid,), _one(borel_claim), {cid: (EQUALITY,)}))

    # contractions
    for n in (2, 3, 4):
        cid = f"P4.4-z2-gl{n}-so"
        add(SuiteEntry((cid,), _one(lambda cfg, n=n, cid=cid: _expect_value(check_contraction(gl(n), gl(n).part("so"), cfg, cid), "ind_contraction", n)), {cid: (EQUALITY,)}))
        cid = f"P4.5-borel-sl{n}"
        add(SuiteEntry((cid,), _one(lambda cfg, n=n, cid=cid: _expect_value(check_contraction(sl(n), sl(n).part("b"), cfg, cid), "ind_contraction", n - 1)), {cid: (EQUALITY,)}))
    cid = "P4.1-k-equals-g"
    add(SuiteEntry((cid,), _one(lambda cfg: check_contraction(m, Subspace.full(4), cfg, "P4.1-k-equals-g")), {cid: (EQUALITY,)}))
    for name, (g, k) in {"sl3-borel": (s3, s3.part("b")), "gl3-so": (gl(3), gl(3).part("so")), "mautner-q": (m, m.part("q"))}.items():
        cid = f"P4.1-complement-{name}"
        add(SuiteEntry((cid,), _one(lambda cfg, g=g, k=k, cid=cid: check_complement_independence(g, k, cfg, claim_id=cid))))
    for n in (3, 4):
        cid = f"P4.6-subregular-sl{n}"
        add(SuiteEntry((cid,), _one(lambda cfg, n=n, cid=cid: check_subregular_contraction(sl(n), cfg, claim_id=cid)), {cid: (HOLDS, INCONCLUSIVE)}))

    # decompositions
    for n, p in ((4, 2), (4, 1), (6, 2), (6, 3), (3, 3)):
        cid = f"P5.2-takiff-n{n}-p{p}"
        add(SuiteEntry((cid,), _one(lambda cfg, n=n, p=p, cid=cid: check_takiff_centralizer(n, p, cfg, cid))))
    for n in range(1, 7):
        cid = f"P5.3-indices-n{n}"
        add(SuiteEntry((cid,), _one(lambda cfg, n=n, cid=cid: _so_borel_indices(n, cfg, cid))))
        cid = f"P5.3-additivity-gl{n}"
        add(SuiteEntry((cid,), _one(lambda cfg, n=n, cid=cid: check_additivity(gl(n), gl(n).part("so"), gl(n).part("b"), cfg, cid))))
    for n in (2, 3, 4):
        cid = f"P5.4-triangular-sl{n}"
        add(SuiteEntry((cid,), _one(lambda cfg, n=n, cid=cid: check_additivity(sl(n), sl(n).part("n-"), sl(n).part("b"), cfg, cid))))
        cid = f"P5.4-parabolic-sl{n}"
        add(SuiteEntry((cid,), _one(lambda cfg, n=n, cid=cid: _max_parabolic(n, cfg, cid))))
    cid = "P5.5-counterexample-gl4"
    add(SuiteEntry((cid,), _one(lambda cfg: check_additivity(*gl4_row_blocks(), cfg, "P5.5-counterexample-gl4")), {cid: (FAILS,)}))

    # open questions, evidence only
    probe_ids = []
    for n in range(2, 5):
        for comp in compositions(n):
            tag = "".join(map(str, comp))
            probe_ids += [f"P4.5-q4bis-sl{n}-{tag}", f"P5.4-q7-sl{n}-{tag}"]
        probe_ids.append(f"P5.3-q6-sl{n}")
    add(SuiteEntry(tuple(probe_ids), probe_questions, {i: (PROBE,) for i in probe_ids}))

    add(SuiteEntry(("P0-parity", "P0-basis-change", "P0-symbolic-agreement"), lambda cfg: _engine(cfg, corpus_size)))
    return plan


def _expect_value(rep: ClaimReport, key: str, value: int) -> ClaimReport:
    rep.quantities["expected_" + key] = value
    if rep.quantities[key] != value and rep.verdict in PASSING:
        rep.verdict = FAILS
    return rep


def _so_borel_indices(n: int, cfg: GenericRankConfig, cid: str) -> ClaimReport:
    i_so = index(so(n), cfg.derive("so")).value if n > 1 else 0
    i_b = index(borel_gl(n), cfg.derive("b")).value
    q = {"ind_so": i_so, "expected_so": n // 2, "ind_borel": i_b, "expected_borel": (n + 1) // 2}
    return ClaimReport(cid, f"n = {n}", q, _holds(i_so == n // 2 and i_b == (n + 1) // 2))


def _max_parabolic(n: int, cfg: GenericRankConfig, cid: str) -> ClaimReport:
    g = sl(n)
    p, q = g.part("p"), g.part("q")
    _, _, pu = parabolic_sl(n, (n - 1, 1))
    i_p = index(subalgebra(g, p), cfg.derive("p")).value
    i_pu = index(subalgebra(g, pu), cfg.derive("pu")).value
    i_q = index(subalgebra(g, q), cfg.derive("q")).value
    add = check_additivity(g, p, q, cfg, cid)
    quantities = dict(add.quantities, ind_p=i_p, ind_pu=i_pu, ind_q=i_q, q_abelian=is_abelian(g, q))
    ok = i_p == 0 and i_pu == n - 1 == i_q and i_p + i_pu == add.quantities["ind_g"] and add.verdict == HOLDS
    return ClaimReport(cid, f"sl({n}) = p + q, maximal parabolic", quantities, _holds(ok))


def run_suite(
    cfg: GenericRankConfig = GenericRankConfig(),
    pattern: str | None = None,
    plan: Sequence[SuiteEntry] | None = None,
) -> SuiteReport:
    """Run every planned claim whose id matches the glob ``pattern``.

    Each entry gets its own seed derived from ``(cfg.seed, first claim id)``;
    reports come back sorted by claim id.
    """
    plan = default_plan() if plan is None else plan
    claims: list[ClaimReport] = []
    for entry in plan:
        if pattern and not any(fnmatch.fnmatchcase(i, pattern) for i in entry.ids):
            continue
        for rep in entry.run(cfg.derive(entry.ids[0])):
            if pattern and not fnmatch.fnmatchcase(rep.claim_id, pattern):
                continue
            rep.expected = entry.expect.get(rep.claim_id, PASSING)
            claims.append(rep)
    claims.sort(key=lambda c: c.claim_id)
    return SuiteReport(cfg.seed, claims)
