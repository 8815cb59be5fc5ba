"""Command line interface.

Algebras are described by a small expression language::

    expr     := NAME [ "(" arg { "," arg } ")" ]
    arg      := INT | expr | NAME

    gl(n) sl(n) so(n) sp(2m) heisenberg(k) mautner borel(n) nilrad(n)
    takiff(expr, k)          expr (x) Q[t]/(t^k)
    iw(expr, part)           (g/k) x| k for a named part k of expr
    semidirect(adj(expr))    expr x| expr with the adjoint action
    semidirect(irr(m))       sl(2) x| V_m, V_m irreducible of dimension m

Named parts are the distinguished subspaces that constructions export
(``b``/``borel``, ``n+``, ``n-``, ``h``, ``so``, ``p``, ``q``, ``center``, ...).
An argument of the form ``@path`` loads a saved algebra instead.

Exit codes: 0 success, 1 unexpected claim verdict, 2 input error,
3 mathematical validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import constructions as C
from .index import GenericRankConfig, index
from .liealg import LieAlgebra, LieError, SchemaError, dumps, loads
from .verify import run_suite

EXIT_OK, EXIT_CLAIM, EXIT_INPUT, EXIT_MATH = 0, 1, 2, 3


class SpecError(ValueError):
    """The algebra expression does not parse or names something unknown."""


# -- parsing -----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*[+-]?)|(@[^\s,()]+)|([(),]))")


@dataclass(frozen=True)
class Node:
    head: str
    args: tuple = ()


def tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SpecError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos}")
        num, name, path, punct = m.groups()
        if num is not None:
            out.append(("int", num))
        elif name is not None:
            out.append(("name", name))
        elif path is not None:
            out.append(("path", path[1:]))
        else:
            out.append((punct, punct))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind: str) -> str:
        if self.peek() != kind:
            got = self.toks[self.i][1] if self.i < len(self.toks) else "end of input"
            raise SpecError(f"expected {kind}, got {got!r}")
        self.i += 1
        return self.toks[self.i - 1][1]

    def arg(self):
        kind = self.peek()
        if kind == "int":
            return int(self.take("int"))
        if kind == "path":
            return Node("@", (self.take("path"),))
        return self.expr()

    def expr(self) -> Node:
        if self.peek() == "path":
            return Node("@", (self.take("path"),))
        head = self.take("name")
        args = []
        if self.peek() == "(":
            self.take("(")
            args.append(self.arg())
            while self.peek() == ",":
                self.take(",")
                args.append(self.arg())
            self.take(")")
        return Node(head, tuple(args))

    def parse(self) -> Node:
        node = self.expr()
        if self.peek() is not None:
            raise SpecError(f"trailing input at {self.toks[self.i][1]!r}")
        return node


def parse_spec(text: str) -> Node:
    return _Parser(text).parse()


# -- building ------------------------------------------------------------------------

_SIZED = {
    "gl": C.gl,
    "sl": C.sl,
    "so": C.so,
    "sp": C.sp,
    "heisenberg": C.heisenberg,
    "borel": C.borel_gl,
    "nilrad": C.strict_upper,
}


def _int_arg(node: Node, k: int) -> int:
    if len(node.args) <= k or not isinstance(node.args[k], int):
        raise SpecError(f"{node.head} expects an integer argument in position {k + 1}")
    return node.args[k]


def _expr_arg(node: Node, k: int) -> Node:
    if len(node.args) <= k or not isinstance(node.args[k], Node):
        raise SpecError(f"{node.head} expects an algebra in position {k + 1}")
    return node.args[k]


def _arity(node: Node, n: int):
    if len(node.args) != n:
        raise SpecError(f"{node.head} takes {n} argument(s), got {len(node.args)}")


def build(node: Node) -> LieAlgebra:
    h = node.head
    if h == "@":
        try:
            with open(node.args[0], encoding="utf-8") as fh:
                return loads(fh.read())
        except OSError as exc:
            raise SpecError(f"cannot read {node.args[0]}: {exc.strerror}") from exc
    if h in _SIZED:
        _arity(node, 1)
        return _SIZED[h](_int_arg(node, 0))
    if h == "mautner":
        _arity(node, 0)
        return C.mautner()
    if h == "takiff":
        _arity(node, 2)
        return C.generalized_takiff(build(_expr_arg(node, 0)), _int_arg(node, 1))
    if h == "iw":
        _arity(node, 2)
        g = build(_expr_arg(node, 0))
        sel = node.args[1]
        if not isinstance(sel, Node) or sel.args:
            raise SpecError("iw expects a part name as second argument")
        try:
            k = g.part(sel.head)
        except KeyError:
            raise SpecError(f"no part {sel.head!r}; available: {', '.join(sorted(g.parts)) or 'none'}") from None
        return C.inonu_wigner(g, k)
    if h == "semidirect":
        _arity(node, 1)
        rep = _expr_arg(node, 0)
        _arity(rep, 1)
        if rep.head == "adj":
            return C.takiff(build(_expr_arg(rep, 0)))
        if rep.head == "irr":
            return C.semidirect_abelian(C.irreducible_sl2(_int_arg(rep, 0)))
        raise SpecError(f"unknown representation {rep.head!r} (use adj or irr)")
    raise SpecError(f"unknown algebra {h!r}")


def algebra_from_spec(text: str) -> LieAlgebra:
    return build(parse_spec(text))


# -- commands -------------------------------------------------------------------------


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args) -> GenericRankConfig:
    return GenericRankConfig(seed=args.seed, trials=args.trials, coeff_bound=args.coeff_bound, symbolic=args.symbolic)


def cmd_index(args) -> int:
    g = algebra_from_spec(args.spec)
    rep = index(g, _config(args))
    if args.json:
        text = json.dumps(rep.to_dict(), indent=2) + "\n"
    else:
        text = (
            f"ind = {rep.value}\n"
            f"dim = {g.dim}\n"
            f"mode = {rep.mode}\n"
            f"error_bound = {_frac(rep.error_bound)}\n"
            f"seed = {rep.seed}\n"
            f"witness = [{', '.join(_frac(c) for c in rep.witness)}]\n"
        )
    _emit(text, args.out)
    return EXIT_OK


def cmd_suite(args) -> int:
    report = run_suite(_config(args), args.filter)
    if args.json:
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        width = max((len(c.claim_id) for c in report.claims), default=0)
        lines = []
        for c in report.claims:
            mark = "ok" if c.ok else "UNEXPECTED"
            lines.append(f"{c.claim_id:<{width}}  {c.verdict:<18} {mark}")
        bad = sum(not c.ok for c in report.claims)
        lines.append(f"{len(report.claims)} claims, {bad} unexpected, seed {report.seed}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if report.ok else EXIT_CLAIM


def cmd_save(args) -> int:
    _emit(dumps(algebra_from_spec(args.spec)), args.out)
    return EXIT_OK


def cmd_load(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(f"cannot read {args.path}: {exc.strerror}") from exc
    _emit(dumps(loads(text)), args.out)
    return EXIT_OK


def _default_seed() -> int:
    raw = os.environ.get("LIEINDEX_SEED")
    if raw is None or raw == "":
        return 0
    try:
        seed = int(raw)
    except ValueError:
        raise SpecError(f"LIEINDEX_SEED must be an integer, got {raw!r}") from None
    if seed < 0:
        raise SpecError("LIEINDEX_SEED must be non-negative")
    return seed


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser(default_seed: int) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_nonneg, default=default_seed, help="master seed (default: $LIEINDEX_SEED or 0)")
    common.add_argument("--trials", type=_positive, default=3, help="random evaluation points per rank computation")
    common.add_argument("--coeff-bound", type=_positive, default=10**6, help="random coordinates are drawn from [-B, B]")
    common.add_argument("--symbolic", action="store_true", help="always compute generic ranks symbolically")
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="lieindex", description="Exact index computations for Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("index", parents=[common], help="index of an algebra")
    s.add_argument("spec", help='algebra expression, e.g. "iw(sl(3), borel)" or @file.json')
    s.set_defaults(func=cmd_index)
    s = sub.add_parser("suite", parents=[common], help="run the verification suite")
    s.add_argument("--filter", help="only claims whose id matches this glob")
    s.set_defaults(func=cmd_suite)
    s = sub.add_parser("save", parents=[common], help="write an algebra as JSON")
    s.add_argument("spec")
    s.set_defaults(func=cmd_save)
    s = sub.add_parser("load", parents=[common], help="validate a saved algebra and print it canonically")
    s.add_argument("path")
    s.set_defaults(func=cmd_load)
    return p


def main(argv=None) -> int:
    try:
        default_seed = _default_seed()
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    parser = build_parser(default_seed)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (SpecError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (LieError, ValueError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
