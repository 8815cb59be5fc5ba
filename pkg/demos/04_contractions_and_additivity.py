"""Contractions never lower the index, and some decompositions are additive.

The Inonu-Wigner contraction of g along a subalgebra k is (g/k) x| k with g/k
made abelian.  For a decomposition g = g0 + g1 into two subalgebras one can
compare ind g with ind g0 + ind g1; it works for gl(n) = so(n) + b but fails
for a decomposition of gl(4) into two row blocks.
"""

from __future__ import annotations

from lieindex import GenericRankConfig, gl, sl
from lieindex.verify import check_additivity, check_contraction, check_subregular_contraction, gl4_row_blocks

cfg = GenericRankConfig(seed=3)

for n in (2, 3, 4):
    c = check_contraction(sl(n), sl(n).part("b"), cfg)
    print(f"sl({n}) contracted along the Borel: ind {c.quantities['ind_g']} -> {c.quantities['ind_contraction']}")

r = check_subregular_contraction(sl(4), cfg)
q = r.quantities
print(f"\nsub-regular centralizer in sl(4): dim {q['dim_z']}, ind {q['ind_z']}, "
      f"contraction along an abelian non-ideal: ind {q.get('ind_contraction')}, along an ideal: {q.get('ind_contraction_ideal')}")

print()
for n in range(2, 6):
    g = gl(n)
    a = check_additivity(g, g.part("so"), g.part("b"), cfg)
    q = a.quantities
    print(f"gl({n}) = so({n}) + b: {q['ind_g0']} + {q['ind_g1']} = {q['sum']} vs {q['ind_g']}  {a.verdict}")

a = check_additivity(*gl4_row_blocks(), cfg)
q = a.quantities
print(f"gl(4) = top rows + bottom rows: {q['ind_g0']} + {q['ind_g1']} vs {q['ind_g']}  {a.verdict}")
