"""An ideal a of g gives three indices: ind g, ind a and ind(g, a), the index
of g acting on the dual of a.  They satisfy

    ind g + ind a <= dim(g/a) + 2 ind(g, a).

This script checks the inequality on a few algebras and shows the subspace
identity behind it: for any form l, with h = a^l the B_l-orthogonal of a and
l0, l1 the restrictions of l to a and h,

    h^{l1} = a^{l0} + g^l.
"""

from __future__ import annotations

from fractions import Fraction

from lieindex import GenericRankConfig, heisenberg, mautner
from lieindex.verify import check_equality_criteria, check_key_identity, check_panyushev

cfg = GenericRankConfig(seed=7)

g = mautner()
a = g.part("a")  # the Heisenberg ideal span(P, Q, E)
rep = check_panyushev(g, a, cfg)
q = rep.quantities
print(f"Mautner: {q['ind_g']} + {q['ind_a']} <= {q['dim_g_mod_a']} + 2*{q['ind_g_a']}   -> {rep.verdict}")

# The identity holds at every form, including very degenerate ones.
for l in [(1, 2, 3, 4), (0, 0, 1, 0), (0, 0, 0, 0)]:
    l = tuple(Fraction(x) for x in l)
    r = check_key_identity(g, a, l)
    print(f"  l = {[int(x) for x in l]}: dim h^l1 = {r.quantities['dim_h_l1']}, identity {r.verdict}")

# When is the inequality an equality?  The criteria are evaluated at one
# shared generic form and must all agree.
for name, alg, ideal in [("Mautner / Heisenberg", g, a), ("Heisenberg / center", heisenberg(3), heisenberg(3).part("center"))]:
    c = check_equality_criteria(alg, ideal, cfg)
    print(f"\n{name}: {c.verdict}")
    for k, v in c.quantities["criteria"].items():
        print(f"  {k:24s} {v}")
