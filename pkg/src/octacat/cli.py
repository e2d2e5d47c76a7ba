"""Command-line front end.

Morphism arguments are either diagram literals in the text grammar
(``"2>0: {1,2}"``, coloured labels as ``1:-1``) or generator words in the
s-expression grammar (``"(compose cap cup)"``); words are evaluated through
the presentation matching the selected category.

Exit codes: 0 on success (and all checks passing), 1 when a verification
suite reports a failure, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import diagrams as dg
from .linear_category import Category, Morphism, PAR_Z2, PAR_Z2_2T, REP_H0
from .matrix_rep import RepSpec, T_colored, T_even, hom_dim
from .omega import omega0_raw
from .presentations import GENERATORS, eval_gtilde, eval_htilde, parse_word
from .verify import SUITES, run_suite

_WORD_ATOMS = set(GENERATORS["parz2"]) | set(GENERATORS["part"]) | {"empty"}


def _category(args) -> Category:
    if args.cat == "even":
        if getattr(args, "weight2t", False):
            raise SystemExit2("--weight2t only applies to the coloured category")
        return REP_H0
    return PAR_Z2_2T if getattr(args, "weight2t", False) else PAR_Z2


class SystemExit2(Exception):
    """Usage-level error: reported on stderr with exit code 2."""


def _parse_morphism(text: str, cat: Category) -> Morphism:
    stripped = text.strip()
    if stripped.startswith("(") or stripped in _WORD_ATOMS:
        word = parse_word(stripped)
        return eval_gtilde(word, cat) if cat.kind == "even" else eval_htilde(word, cat)
    if cat.kind == "even":
        return Morphism.from_diagram(cat, dg.parse_partition(stripped))
    return Morphism.from_diagram(cat, dg.parse_colored(stripped))


def _emit_morphism(m: Morphism, args):
    if args.t is not None:
        m = m.specialize(Fraction(args.t))
    if args.format == "json":
        print(m.to_json())
    else:
        print(m.to_text())


def _add_common(p, cat_flag=True):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--t", default=None, help="specialize the parameter to an exact rational")
    if cat_flag:
        p.add_argument("--cat", choices=("even", "colored"), default="even")
        p.add_argument(
            "--weight2t", action="store_true", help="coloured category at doubled loop weight"
        )


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="octacat",
        description="Exact diagram calculus for the hyperoctahedral interpolation categories.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compose", help="compose two morphisms (first after second)")
    _add_common(p)
    p.add_argument("upper")
    p.add_argument("lower")

    p = sub.add_parser("tensor", help="horizontal concatenation of two morphisms")
    _add_common(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("dual", help="involution (swap the two rows)")
    _add_common(p)
    p.add_argument("morphism")

    p = sub.add_parser("trace", help="categorical trace of an endomorphism")
    _add_common(p)
    p.add_argument("morphism")

    p = sub.add_parser("homdim", help="dimension of an intertwiner space by group averaging")
    p.add_argument("--rep", choices=("reflection", "permutation"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("omega", help="compressed coloured image of an even morphism")
    _add_common(p, cat_flag=False)
    p.add_argument("morphism")

    p = sub.add_parser("matrix", help="interpolation matrix of a diagram")
    p.add_argument("--rep", choices=("reflection", "permutation"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("diagram")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help=f"one of {sorted(SUITES)} or 'all'")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return ap


def _run(args) -> int:
    if args.verb in ("compose", "tensor"):
        cat = _category(args)
        a = _parse_morphism(args.upper if args.verb == "compose" else args.left, cat)
        b = _parse_morphism(args.lower if args.verb == "compose" else args.right, cat)
        out = a.compose(b) if args.verb == "compose" else a.tensor(b)
        _emit_morphism(out, args)
        return 0
    if args.verb == "dual":
        cat = _category(args)
        _emit_morphism(_parse_morphism(args.morphism, cat).involution(), args)
        return 0
    if args.verb == "trace":
        cat = _category(args)
        tr = _parse_morphism(args.morphism, cat).trace()
        if args.t is not None:
            print(tr(Fraction(args.t)))
        else:
            print(tr)
        return 0
    if args.verb == "homdim":
        value = hom_dim(RepSpec(args.rep, args.n), args.k, args.l)
        if args.format == "json":
            print(json.dumps({"rep": args.rep, "n": args.n, "k": args.k, "l": args.l, "dim": value}))
        else:
            print(value)
        return 0
    if args.verb == "omega":
        m = _parse_morphism(args.morphism, REP_H0)
        _emit_morphism(omega0_raw(m), args)
        return 0
    if args.verb == "matrix":
        if args.rep == "reflection":
            mat = T_even(dg.parse_partition(args.diagram), args.n)
        else:
            mat = T_colored(dg.parse_colored(args.diagram), args.n)
        if args.format == "json":
            print(mat.to_json())
        else:
            print(json.dumps(mat.to_json_dict(), indent=2, sort_keys=True))
        return 0
    if args.verb == "verify":
        report = run_suite(args.suite, n=args.n, kmax=args.kmax, seed=args.seed)
        failures = [r for r in report if not r["pass"]]
        if args.format == "json":
            print(json.dumps(report, sort_keys=True, default=str))
        else:
            for item in report:
                status = "PASS" if item["pass"] else "FAIL"
                extra = f"  counterexample: {item['counterexample']}" if "counterexample" in item else ""
                print(f"{status} {item['check']} {json.dumps(item['params'], sort_keys=True, default=str)}{extra}")
            print(f"{len(report) - len(failures)}/{len(report)} checks passed")
        return 1 if failures else 0
    raise SystemExit2(f"unknown verb {args.verb!r}")


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return _run(args)
    except (dg.DiagramError, ValueError, KeyError) as exc:
        print(f"octacat: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit2 as exc:
        print(f"octacat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
