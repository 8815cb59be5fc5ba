"""Centralizers of nilpotent elements in sl(n) and their normalizers.

For a nilpotent e with e^r != 0 = e^(r+1), let z be its centralizer, eta the
normalizer of z and delta the center of z.  The analysis below checks, among
other things, that delta is spanned by e, ..., e^r, that eta acts on delta*
with index 0, and that ind(eta) = ind(z) - dim(delta).
"""

from __future__ import annotations

from lieindex import GenericRankConfig, sl
from lieindex.constructions import jordan_block_matrix, matrix_power
from lieindex.liealg import from_matrix
from lieindex.verify import analyze_nilpotent

cfg = GenericRankConfig(seed=1)

for n, e_matrix, label in [
    (4, jordan_block_matrix([4]), "regular nilpotent of sl(4)"),
    (4, matrix_power(jordan_block_matrix([4]), 2), "Jordan type (2,2) in sl(4)"),
]:
    g = sl(n)
    e = from_matrix(g, e_matrix)
    print(label)
    for rep in analyze_nilpotent(g, e, cfg):
        q = rep.quantities
        extra = ""
        if rep.claim_id.startswith("P2.5-detA"):
            extra = f"  det A = {q['det_A']}"
        elif rep.claim_id.startswith("P2.5-quotient"):
            extra = f"  ind(eta/z) = {q['ind_eta_mod_z']}"
        elif "ind_eta" in q:
            extra = f"  ind eta = {q['ind_eta']}, ind z = {q['ind_z']}, dim delta = {q['dim_delta']}"
        print(f"  {rep.claim_id:28s} {rep.verdict:10s}{extra}")
    print()
