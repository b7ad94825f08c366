"""Command-line front end.

Predicates exit 0 for true and 1 for false; usage, parse and range errors
exit 2. An expression argument of "-" is read from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import expr
from .artin import are_equal, is_trivial
from .braid import BraidWord, PureGenerator
from .brunnian import (
    ConstraintFamily,
    enumerate_generators,
    in_intersection,
    is_brunnian,
    is_k_decomposable,
    linking_number,
    linking_numbers,
)
from .collection import (
    Decomposition,
    NotInIntersection,
    SubsetOrder,
    collect,
    prune,
    subset_order,
)
from .commutator import Bracket, Leaf, Tree
from .relations import failures
from .retraction import StrandSet, phi, support

TRUE, FALSE, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(text: str) -> str:
    return sys.stdin.read() if text == "-" else text


def _word(text: str, n: int | None) -> BraidWord:
    e = expr.parse(_read(text))
    return expr.lower_to_word(e, expr.infer_n(e, n))


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}") from None


def _family(text: str, n: int) -> ConstraintFamily:
    """Parse "1,2;3" into the family {{1,2},{3}}."""
    return ConstraintFamily.of(n, (_ints(part) for part in text.split(";") if part.strip()))


def _word_text(w: BraidWord) -> str:
    return str(w) if w.letters else "1"


def tree_to_json(t: Tree) -> list:
    if isinstance(t, Leaf):
        return ["p", t.gen.a, t.gen.b, t.gen.sign]
    return ["br", tree_to_json(t.left), tree_to_json(t.right)]


def tree_from_json(data: list, n: int) -> Tree:
    if data[0] == "p":
        _, a, b, sign = data
        return Leaf(PureGenerator(a, b, sign), n)
    if data[0] == "br":
        return Bracket(tree_from_json(data[1], n), tree_from_json(data[2], n))
    raise ValueError(f"unknown tree tag {data[0]!r}")


def decomposition_to_json(d: Decomposition) -> dict:
    return {
        "n": d.n,
        "order": [sorted(s) for s in d.order.subsets],
        "buckets": [
            {"support": sorted(s), "trees": [tree_to_json(t) for t in b]} for s, b in d.items()
        ],
    }


def decomposition_from_json(doc: dict) -> Decomposition:
    n = doc["n"]
    order = SubsetOrder(n, tuple(frozenset(s) for s in doc["order"]))
    buckets = tuple(tuple(tree_from_json(t, n) for t in b["trees"]) for b in doc["buckets"])
    return Decomposition(order, buckets)


def _cmd_trivial(args) -> int:
    return TRUE if is_trivial(_word(args.expr, args.n)) else FALSE


def _cmd_equal(args) -> int:
    e1, e2 = expr.parse(_read(args.expr)), expr.parse(_read(args.other))
    n = args.n if args.n is not None else max(expr.infer_n(e1), expr.infer_n(e2))
    w1, w2 = expr.lower_to_word(e1, expr.infer_n(e1, n)), expr.lower_to_word(e2, expr.infer_n(e2, n))
    return TRUE if are_equal(w1, w2) else FALSE


def _cmd_support(args) -> int:
    print(" ".join(map(str, support(_word(args.expr, args.n)))))
    return TRUE


def _cmd_delete(args) -> int:
    w = _word(args.expr, args.n)
    S = StrandSet.of(w.n, _ints(args.strands))
    out = phi(S, w)
    if args.renumber:
        keep = [i for i in range(1, w.n + 1) if i not in S]
        new = {old: k for k, old in enumerate(keep, 1)}
        out = BraidWord(
            max(len(keep), 1), tuple(PureGenerator(new[g.a], new[g.b], g.sign) for g in out.letters)
        )
    print(_word_text(out))
    return TRUE


def _cmd_brunnian(args) -> int:
    return TRUE if is_brunnian(_word(args.expr, args.n)) else FALSE


def _cmd_kdecomp(args) -> int:
    return TRUE if is_k_decomposable(_word(args.expr, args.n), args.k) else FALSE


def _cmd_member(args) -> int:
    w = _word(args.expr, args.n)
    f = _family(args.sets, w.n)
    if in_intersection(w, f):
        return TRUE
    witness = next(S for S in f if not is_trivial(phi(S, w)))
    print(f"not in Q_{witness}")
    return FALSE


def _print_decomposition(d: Decomposition, as_json: bool):
    if as_json:
        print(json.dumps(decomposition_to_json(d)))
        return
    for s, b in d.items():
        trees = " ".join(expr.tree_text(t) for t in b)
        print(f"{{{','.join(map(str, sorted(s)))}}} {len(b)} {trees}".rstrip())


def _cmd_collect(args) -> int:
    w = _word(args.expr, args.n)
    d = collect(w, subset_order(w.n), strict=args.strict, max_leaves=args.budget)
    if args.constraints is not None:
        try:
            d = prune(d, list(_family(args.constraints, w.n)))
        except NotInIntersection as err:
            print(f"not in Q_{err.witness}")
            return FALSE
    _print_decomposition(d, args.json)
    return TRUE


def _cmd_lk(args) -> int:
    w = _word(args.expr, args.n)
    i, j = _ints(args.pair)
    print(linking_number(w, i, j))
    return TRUE


def _cmd_abelianize(args) -> int:
    for (i, j), k in linking_numbers(_word(args.expr, args.n)).items():
        print(f"{i} {j} {k}")
    return TRUE


def _cmd_gen(args) -> int:
    f = _family(args.sets, args.n)
    for t in enumerate_generators(f, args.max_leaves):
        print(expr.tree_text(t))
    return TRUE


def _cmd_check_relations(args) -> int:
    bad = failures(args.n)
    for r in bad:
        print(f"fails: {r}")
    return TRUE if not bad else FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="purebraid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help, expression=True, n_required=False):
        p = sub.add_parser(name, help=help)
        if expression:
            p.add_argument("expr", help='braid expression, or "-" for stdin')
        p.add_argument("--n", type=int, required=n_required, help="strand count")
        p.set_defaults(func=func)
        return p

    command("trivial", _cmd_trivial, "is the braid trivial")
    command("equal", _cmd_equal, "are two braids equal").add_argument("other")
    command("support", _cmd_support, "print the support")
    p = command("delete", _cmd_delete, "delete strands")
    p.add_argument("--strands", required=True, help='e.g. "1,3"')
    p.add_argument("--renumber", action="store_true", help="reindex surviving strands")
    command("brunnian", _cmd_brunnian, "is the braid Brunnian")
    command("kdecomp", _cmd_kdecomp, "is the braid k-decomposable").add_argument(
        "--k", type=int, required=True
    )
    command("member", _cmd_member, "membership in the intersection of Q_S").add_argument(
        "--sets", required=True, help='e.g. "1,2;3"'
    )
    p = command("collect", _cmd_collect, "support-graded commutator decomposition")
    p.add_argument("--constraints", help="prune against these sets, e.g. \"1;2;3;4\"")
    p.add_argument("--strict", action="store_true", help="keep trivial corrections")
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, help="give up once this many tree leaves are held")
    command("lk", _cmd_lk, "linking number").add_argument("--pair", required=True, help='e.g. "1,2"')
    command("abelianize", _cmd_abelianize, "all linking numbers")
    p = command("gen", _cmd_gen, "enumerate generators", expression=False, n_required=True)
    p.add_argument("--sets", required=True)
    p.add_argument("--max-leaves", type=int, required=True)
    command("check-relations", _cmd_check_relations, "verify the presentation", expression=False,
            n_required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else TRUE
    try:
        return args.func(args)
    except (ValueError, UsageError, RuntimeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
