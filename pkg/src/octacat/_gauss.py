"""Exact Gaussian elimination over sparse rows (dict index -> scalar).

Scalars are Fractions or PolyQ values.  Pivoting is by smallest column
index, so every computation here is deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import PolyQ


def rank_rows(rows) -> int:
    """Rank of a family of sparse Fraction-rows, by exact elimination."""
    pivots = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v != 0}
        while row:
            c = min(row)
            if c in pivots:
                factor = row[c]
                prow = pivots[c]
                for cc, vv in prow.items():
                    nv = row.get(cc, Fraction(0)) - factor * vv
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
            else:
                inv = Fraction(1) / row[c]
                pivots[c] = {cc: vv * inv for cc, vv in row.items()}
                break
    return len(pivots)


def rank_rows_poly(rows) -> int:
    """Rank over the fraction field of PolyQ, by fraction-free elimination.

    Slow fallback: cross-multiplication avoids rational functions at the cost
    of degree growth.  Only intended for small systems.
    """
    pivots = {}
    for row in rows:
        row = {c: v for c, v in row.items() if not v.is_zero()}
        while row:
            c = min(row)
            if c in pivots:
                factor = row[c]
                prow, pval = pivots[c]
                new = {}
                for cc in set(row) | set(prow):
                    nv = row.get(cc, PolyQ()) * pval - prow.get(cc, PolyQ()) * factor
                    if not nv.is_zero():
                        new[cc] = nv
                row = new
            else:
                pivots[c] = (dict(row), row[c])
                break
    return len(pivots)
