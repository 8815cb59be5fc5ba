"""Computing indices exactly.

The index of g is dim g minus the generic rank of the alternating matrix
B_l[i][j] = l([x_i, x_j]).  Entries are linear in the coordinates of l, so
the generic rank is a rank over Q(l_1, ..., l_n).  Small families are handled
by fraction-free elimination over that polynomial ring; larger ones by exact
ranks at random integer points, with a Schwartz-Zippel bound on the chance
that every point was unlucky.
"""

from __future__ import annotations

from lieindex import GenericRankConfig, gl, heisenberg, index, mautner, sl, so, sp
from lieindex.index import form_centralizer

cfg = GenericRankConfig(seed=2024)

print("reductive algebras have index equal to their rank:")
for g, name in [(sl(3), "sl(3)"), (gl(4), "gl(4)"), (so(5), "so(5)"), (sp(4), "sp(4)")]:
    rep = index(g, cfg)
    print(f"  ind {name:6s} = {rep.value}   ({rep.mode}, error bound {rep.error_bound})")

print("\nthe Heisenberg algebra has index 1, the dimension of its center:")
print("  ind heisenberg(5) =", index(heisenberg(5), cfg).value)

# The witness is a regular form: its stabilizer has dimension exactly ind g.
g = mautner()
rep = index(g, cfg)
stab = form_centralizer(g, rep.witness)
print(f"\nMautner algebra: ind = {rep.value}, stabilizer of the witness has dim {stab.dim}")

# Forcing the symbolic route gives error bound 0.
exact = index(sl(3), GenericRankConfig(symbolic=True))
print(f"symbolic route on sl(3): ind = {exact.value}, error bound = {exact.error_bound}")
