"""Named verification suites with machine-readable reports.

Every function returns a list of report items {check, params, pass[,
counterexample]}; the CLI serialises them and the acceptance tests assert
on them.  All comparisons are exact.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from . import diagrams as dg
from ._gauss import rank_rows
from .linear_category import Category, Morphism, PAR_Z2, PAR_Z2_2T, REP_H0
from .matrix_rep import (
    MatrixQ,
    RepSpec,
    T_colored,
    T_even,
    equivariance_check,
    g_matrix_datum,
    group_average_projector,
    h_matrix_datum,
    hom_dim,
)
from .omega import (
    compress,
    ess_surj_witness,
    omega0_raw,
    scaling_exponent,
    verify_full_faithful,
    verify_square,
)
from .poly import PolyQ, T
from .presentations import (
    eval_gtilde,
    eval_htilde,
    verify_datum,
    verify_relations,
)

__all__ = [
    "relations_report",
    "counting_report",
    "category_axioms_report",
    "interpolation_report",
    "schur_weyl_report",
    "omega_report",
    "square_report",
    "universal_report",
    "SUITES",
    "run_suite",
]


def relations_report(presentation: str) -> list[dict]:
    evaluator = eval_htilde if presentation == "parz2" else eval_gtilde
    return verify_relations(presentation, evaluator)


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------


def _even_count_oracle(m: int) -> int:
    """Set partitions of m points into even blocks, by direct recurrence."""
    memo = {0: 1}

    def rec(r):
        if r not in memo:
            memo[r] = sum(comb(r - 1, j) * rec(r - 1 - j) for j in range(1, r, 2))
        return memo[r]

    return rec(m)


def _colored_orbit_count(k: int, l: int) -> int:
    """Coloured classes by brute-force orbit enumeration over all labelings."""
    classes = set()
    for p in dg.enumerate_diagrams("all", k, l):
        for z in itertools.product((1, -1), repeat=k + l):
            classes.add(dg.ColoredPartition(p, z))
    return len(classes)


def counting_report(max_total: int = 8, colored_max: int = 6) -> list[dict]:
    report = []
    for total in range(max_total + 1):
        for k in range(total + 1):
            l = total - k
            got = len(dg.enumerate_diagrams("all", k, l))
            want = dg.bell_number(total)
            report.append(
                {
                    "check": "counting/all",
                    "params": {"k": k, "l": l, "count": got, "bell": want},
                    "pass": got == want,
                }
            )
    for total in range(max_total + 1):
        for k in range(total + 1):
            l = total - k
            enumerated = len(dg.enumerate_diagrams("even", k, l))
            filtered = sum(1 for p in dg.enumerate_diagrams("all", k, l) if p.is_even())
            oracle = _even_count_oracle(total)
            ok = enumerated == filtered == oracle
            report.append(
                {
                    "check": "counting/even",
                    "params": {"k": k, "l": l, "count": enumerated, "oracle": oracle},
                    "pass": ok,
                }
            )
    report.append(
        {
            "check": "counting/even_2_2",
            "params": {"count": len(dg.enumerate_diagrams("even", 2, 2))},
            "pass": len(dg.enumerate_diagrams("even", 2, 2)) == 4,
        }
    )
    for total in range(colored_max + 1):
        for k in range(total + 1):
            l = total - k
            enumerated = len(dg.enumerate_diagrams("colored_classes", k, l))
            formula = sum(
                2 ** (total - p.n_blocks()) for p in dg.enumerate_diagrams("all", k, l)
            )
            orbits = _colored_orbit_count(k, l)
            ok = enumerated == formula == orbits
            report.append(
                {
                    "check": "counting/colored_classes",
                    "params": {"k": k, "l": l, "count": enumerated, "orbits": orbits},
                    "pass": ok,
                }
            )
    return report


# ---------------------------------------------------------------------------
# Category axioms
# ---------------------------------------------------------------------------


def _basis_morphisms(cat: Category, k: int, l: int):
    return [Morphism.from_diagram(cat, d) for d in cat.basis(k, l)]


def category_axioms_report(limit: int = 2) -> list[dict]:
    report = []
    for cat, name in ((REP_H0, "even"), (PAR_Z2, "colored")):
        sizes = range(limit + 1)
        ok = True
        counter = None
        checked = 0
        for a, b, c, d in itertools.product(sizes, repeat=4):
            for f in _basis_morphisms(cat, a, b):
                for g in _basis_morphisms(cat, b, c):
                    gf = g.compose(f)
                    for h in _basis_morphisms(cat, c, d):
                        if h.compose(gf) != h.compose(g).compose(f):
                            ok = False
                            counter = (h, g, f)
                        checked += 1
        item = {
            "check": f"axioms/{name}/associativity",
            "params": {"limit": limit, "triples": checked},
            "pass": ok,
        }
        if counter:
            item["counterexample"] = repr(counter)
        report.append(item)

        ok = True
        checked = 0
        for a, b in itertools.product(sizes, repeat=2):
            ida = Morphism.identity(cat, a)
            idb = Morphism.identity(cat, b)
            for f in _basis_morphisms(cat, a, b):
                if idb.compose(f) != f or f.compose(ida) != f:
                    ok = False
                checked += 1
        report.append(
            {
                "check": f"axioms/{name}/identity",
                "params": {"limit": limit, "morphisms": checked},
                "pass": ok,
            }
        )

        ok = True
        checked = 0
        c1, c2 = T, PolyQ.const(Fraction(-3, 2))
        for a, b, c in itertools.product(sizes, repeat=3):
            fs = _basis_morphisms(cat, a, b)
            gs = _basis_morphisms(cat, b, c)
            for f1, f2 in zip(fs, fs[1:] + fs[:1]):
                lin_f = f1.scale(c1) + f2.scale(c2)
                for g in gs[:3]:
                    if g.compose(lin_f) != g.compose(f1).scale(c1) + g.compose(f2).scale(c2):
                        ok = False
                    checked += 1
            for g1, g2 in zip(gs, gs[1:] + gs[:1]):
                lin_g = g1.scale(c1) + g2.scale(c2)
                for f in fs[:3]:
                    if lin_g.compose(f) != g1.compose(f).scale(c1) + g2.compose(f).scale(c2):
                        ok = False
                    checked += 1
        report.append(
            {
                "check": f"axioms/{name}/bilinearity",
                "params": {"limit": limit, "pairs": checked},
                "pass": ok,
            }
        )

        ok = True
        checked = 0
        for a, b in itertools.product(sizes, repeat=2):
            for f in _basis_morphisms(cat, a, b)[:6]:
                for g in _basis_morphisms(cat, b, a)[:6]:
                    f1 = f.tensor(g)
                    g1 = g.tensor(f)
                    lhs = g1.compose(f1)
                    rhs = g.compose(f).tensor(f.compose(g))
                    if lhs != rhs:
                        ok = False
                    checked += 1
        report.append(
            {
                "check": f"axioms/{name}/interchange",
                "params": {"limit": limit, "pairs": checked},
                "pass": ok,
            }
        )

        ok = True
        for k in range(limit + 2):
            idm = Morphism.identity(cat, k)
            cap_d = cat.diagram_from_partition(dg.cap())
            cup_d = cat.diagram_from_partition(dg.cup())
            capm = Morphism.from_diagram(cat, cap_d)
            cupm = Morphism.from_diagram(cat, cup_d)
            one = Morphism.identity(cat, 1)
            snake = one.tensor(capm).compose(cupm.tensor(one))
            if snake != one:
                ok = False
        report.append({"check": f"axioms/{name}/snake", "params": {}, "pass": ok})

        ok = True
        for k in range(1, 4):
            for d in cat.basis(k, k):
                m = Morphism.from_diagram(cat, d)
                if m._closure("left") != m._closure("right"):
                    ok = False
        report.append(
            {"check": f"axioms/{name}/sphericity", "params": {"kmax": 3}, "pass": ok}
        )
    return report


# ---------------------------------------------------------------------------
# Interpolation matrices
# ---------------------------------------------------------------------------


def interpolation_report(sizes: int = 2, eq_total: int = 3) -> list[dict]:
    report = []
    for n in (2, 3):
        ok = True
        checked = 0
        for k, l, m in itertools.product(range(sizes + 1), repeat=3):
            for p in dg.enumerate_diagrams("even", k, l):
                tp = T_even(p, n)
                for q in dg.enumerate_diagrams("even", l, m):
                    res = dg.stack(q, p)
                    want = T_even(res.composite, n).scale(Fraction(n) ** res.loops)
                    if T_even(q, n) @ tp != want:
                        ok = False
                    checked += 1
        report.append(
            {
                "check": "interpolation/even_composition",
                "params": {"n": n, "pairs": checked},
                "pass": ok,
            }
        )
    n = 2
    ok = True
    checked = 0
    for k, l, m in itertools.product(range(sizes + 1), repeat=3):
        for p in dg.enumerate_diagrams("colored_classes", k, l):
            tp = T_colored(p, n)
            for q in dg.enumerate_diagrams("colored_classes", l, m):
                res = dg.colored_stack(q, p)
                prod = T_colored(q, n) @ tp
                if res is None:
                    want = MatrixQ.zero((2 * n) ** m, (2 * n) ** k)
                else:
                    want = T_colored(res.composite, n).scale(Fraction(2 * n) ** res.loops)
                if prod != want:
                    ok = False
                checked += 1
    report.append(
        {
            "check": "interpolation/colored_composition",
            "params": {"n": n, "weight": 2 * n, "pairs": checked},
            "pass": ok,
        }
    )
    for n in (1, 2, 3):
        ok = True
        checked = 0
        for total in range(eq_total + 1):
            for k in range(total + 1):
                l = total - k
                for p in dg.enumerate_diagrams("even", k, l):
                    rep = equivariance_check(T_even(p, n), k, l, RepSpec("reflection", n))
                    ok = ok and all(item["pass"] for item in rep)
                    checked += 1
                for c in dg.enumerate_diagrams("colored_classes", k, l):
                    rep = equivariance_check(T_colored(c, n), k, l, RepSpec("permutation", n))
                    ok = ok and all(item["pass"] for item in rep)
                    checked += 1
        report.append(
            {
                "check": "interpolation/equivariance",
                "params": {"n": n, "diagrams": checked},
                "pass": ok,
            }
        )
    return report


# ---------------------------------------------------------------------------
# Schur-Weyl regimes
# ---------------------------------------------------------------------------


def _span_rank(matrices) -> int:
    return rank_rows([m.flatten() for m in matrices])


def schur_weyl_report(surj_total: int = 4) -> list[dict]:
    report = []
    for n in (2, 3):
        for total in range(surj_total + 1):
            for k in range(total + 1):
                l = total - k
                evens = dg.enumerate_diagrams("even", k, l)
                r = _span_rank([T_even(p, n) for p in evens])
                want = hom_dim(RepSpec("reflection", n), k, l)
                report.append(
                    {
                        "check": "schur_weyl/surjective_even",
                        "params": {"n": n, "k": k, "l": l, "rank": r, "hom_dim": want},
                        "pass": r == want,
                    }
                )
                colored = dg.enumerate_diagrams("colored_classes", k, l)
                r = _span_rank([T_colored(c, n) for c in colored])
                want = hom_dim(RepSpec("permutation", n), k, l)
                report.append(
                    {
                        "check": "schur_weyl/surjective_colored",
                        "params": {"n": n, "k": k, "l": l, "rank": r, "hom_dim": want},
                        "pass": r == want,
                    }
                )
    n = 4
    for total in range(min(n, 4) + 1):
        for k in range(total + 1):
            l = total - k
            evens = dg.enumerate_diagrams("even", k, l)
            r = _span_rank([T_even(p, n) for p in evens])
            report.append(
                {
                    "check": "schur_weyl/independent_even",
                    "params": {"n": n, "k": k, "l": l, "rank": r, "basis": len(evens)},
                    "pass": r == len(evens),
                }
            )
    n = 3
    for total in range(n + 1):
        for k in range(total + 1):
            l = total - k
            colored = dg.enumerate_diagrams("colored_classes", k, l)
            r = _span_rank([T_colored(c, n) for c in colored])
            report.append(
                {
                    "check": "schur_weyl/independent_colored",
                    "params": {"n": n, "k": k, "l": l, "rank": r, "basis": len(colored)},
                    "pass": r == len(colored),
                }
            )
    return report


# ---------------------------------------------------------------------------
# The equivalence battery
# ---------------------------------------------------------------------------


def omega_report(fun_max: int = 3, vanish_total: int = 5, ff_total: int = 6, seed: int = 0) -> list[dict]:
    report = []

    ok = True
    checked = 0
    for k, l, m in itertools.product(range(fun_max + 1), repeat=3):
        for p in dg.enumerate_diagrams("even", k, l):
            fp = Morphism.from_diagram(REP_H0, p)
            op = omega0_raw(fp)
            for q in dg.enumerate_diagrams("even", l, m):
                fq = Morphism.from_diagram(REP_H0, q)
                if omega0_raw(fq.compose(fp)) != omega0_raw(fq).compose(op):
                    ok = False
                checked += 1
    report.append(
        {
            "check": "omega/functorial_compose",
            "params": {"max": fun_max, "pairs": checked},
            "pass": ok,
        }
    )

    ok = True
    checked = 0
    for k, l in itertools.product(range(3), repeat=2):
        for p in dg.enumerate_diagrams("even", k, l):
            fp = Morphism.from_diagram(REP_H0, p)
            for q in dg.enumerate_diagrams("even", 1, 1) + dg.enumerate_diagrams("even", 2, 0):
                fq = Morphism.from_diagram(REP_H0, q)
                if omega0_raw(fp.tensor(fq)) != omega0_raw(fp).tensor(omega0_raw(fq)):
                    ok = False
                checked += 1
    report.append(
        {"check": "omega/monoidal_tensor", "params": {"pairs": checked}, "pass": ok}
    )

    ok = True
    checked = 0
    for total in range(vanish_total + 1):
        for k in range(total + 1):
            l = total - k
            for p in dg.enumerate_diagrams("all", k, l):
                if p.is_even():
                    continue
                c = compress(Morphism.from_diagram(PAR_Z2_2T, dg.all_plus(p)))
                if not c.is_zero():
                    ok = False
                checked += 1
    report.append(
        {
            "check": "omega/odd_block_vanishing",
            "params": {"max_total": vanish_total, "diagrams": checked},
            "pass": ok,
        }
    )

    ok = True
    for total in range(2, vanish_total + 1, 2):
        for k in range(total + 1):
            l = total - k
            blk = dg.make_partition(
                k, l, [tuple(dg.bottom(i) for i in range(1, k + 1)) + tuple(dg.top(j) for j in range(1, l + 1))]
            )
            if compress(Morphism.from_diagram(PAR_Z2_2T, dg.all_plus(blk))).is_zero():
                ok = False
            if scaling_exponent(blk) != (total - 2) // 2 or scaling_exponent(blk) < 0:
                ok = False
    report.append(
        {"check": "omega/even_block_nonvanishing", "params": {"max_total": vanish_total}, "pass": ok}
    )

    for total in range(ff_total + 1):
        for k in range(total + 1):
            report.append(verify_full_faithful(k, total - k, seed=seed))

    report.extend(ess_surj_witness())
    return report


def square_report(n_values=(2, 3), kmax: int = 3) -> list[dict]:
    report = []
    for n in n_values:
        report.extend(verify_square(n, kmax))
    return report


def universal_report(n: int = 2) -> list[dict]:
    report = []
    report.extend(verify_datum(h_matrix_datum(n)))
    report.extend(verify_datum(g_matrix_datum(n)))
    return report


# ---------------------------------------------------------------------------
# Suite registry
# ---------------------------------------------------------------------------

SUITES = {
    "relations-parz2": lambda args: relations_report("parz2"),
    "relations-part": lambda args: relations_report("part"),
    "counting": lambda args: counting_report(max_total=args.get("kmax") or 8),
    "category-axioms": lambda args: category_axioms_report(limit=args.get("kmax") or 2),
    "interpolation": lambda args: interpolation_report(),
    "schur-weyl": lambda args: schur_weyl_report(),
    "omega": lambda args: omega_report(
        fun_max=args.get("kmax") or 3, seed=args.get("seed") or 0
    ),
    "square": lambda args: square_report(
        n_values=(args.get("n"),) if args.get("n") else (2, 3), kmax=args.get("kmax") or 3
    ),
    "universal": lambda args: universal_report(n=args.get("n") or 2),
}


def run_suite(name: str, **kwargs) -> list[dict]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key](kwargs))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](kwargs)
