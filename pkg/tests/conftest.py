from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from lieindex.index import GenericRankConfig

small_fracs = st.builds(Fraction, st.integers(-4, 4), st.sampled_from([1, 1, 1, 2, 3]))


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_fracs, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def sympy_rank(m) -> int:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m]).rank()


def sampled_rank(entries, nparams: int, points: int = 6, seed: int = 12345) -> int:
    """Generic rank of an affine family, as the maximum of sympy's exact rank
    at random integer points.  Shares no code with the engine under test."""
    import random

    rng = random.Random(seed)
    best = 0
    for _ in range(points):
        p = [rng.randint(-10**9, 10**9) for _ in range(nparams)]
        m = sympy.Matrix(
            [[sum(sympy.Rational(c.numerator, c.denominator) * (1 if k < 0 else p[k]) for k, c in d.items()) for d in row] for row in entries]
        )
        best = max(best, m.rank())
    return best


def form_rank_oracle(g) -> int:
    """Generic rank of l([x_i, x_j]) built directly from the structure constants."""
    entries = [[{k: c for k, c in enumerate(g.structure(i, j)) if c} for j in range(g.dim)] for i in range(g.dim)]
    return sampled_rank(entries, g.dim) if g.dim else 0


CFG = GenericRankConfig(seed=11)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
