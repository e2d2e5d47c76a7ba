"""The two linear diagram categories and their additive Karoubi envelopes.

A morphism is a finite formal linear combination of basis diagrams with PolyQ
coefficients.  Composition stacks diagrams and multiplies by the category's
loop weight once per closed loop; in the coloured category an incompatible
pair of colour classes composes to zero.  The even category at weight t is
the reflection-side interpolation category, the coloured category at weight
t (or 2t) the permutation-side one.

The Karoubi layer adds formal direct sums of idempotent-compressed objects:
an object is a list of pairs (k, e) with e an exactly verified idempotent
endomorphism of [k], and hom spaces are compressed entrywise.
"""

from __future__ import annotations

import functools
import json
import random
from fractions import Fraction

from . import diagrams as dg
from ._gauss import rank_rows, rank_rows_poly
from .poly import ONE, PolyQ, T, ZERO

__all__ = [
    "Category",
    "REP_H0",
    "PAR_Z2",
    "PAR_Z2_2T",
    "Morphism",
    "KaroubiObject",
    "KaroubiMorphism",
    "CategoryMismatch",
    "NotEndomorphism",
    "NotIdempotent",
    "CompressionViolation",
    "karoubi_id",
    "karoubi_compose",
    "karoubi_tensor",
    "karoubi_dim",
    "karoubi_trace",
    "dim",
    "rank_of_morphisms",
]


class CategoryMismatch(ValueError):
    pass


class NotEndomorphism(ValueError):
    pass


class NotIdempotent(ValueError):
    def __init__(self, difference):
        self.difference = difference
        super().__init__(f"not idempotent; e o e - e = {difference}")


class CompressionViolation(ValueError):
    pass


class Category:
    """A diagram-category instance: basis kind plus loop-weight polynomial."""

    __slots__ = ("kind", "loop_weight", "_hash")

    def __init__(self, kind: str, loop_weight: PolyQ):
        if kind not in ("even", "colored"):
            raise ValueError(f"unknown category kind {kind!r}")
        self.kind = kind
        self.loop_weight = loop_weight
        self._hash = hash((kind, loop_weight))

    def identity_diagram(self, n: int):
        p = dg.identity_partition(n)
        return p if self.kind == "even" else dg.all_plus(p)

    def diagram_from_partition(self, p: dg.Partition):
        """View an uncoloured partition as a basis diagram of this category."""
        if self.kind == "even":
            if not p.is_even():
                raise ValueError(f"{p!r} is not an even partition")
            return p
        return dg.all_plus(p)

    def specialized(self, value) -> "Category":
        """The same category with the parameter pinned to an exact rational."""
        return Category(self.kind, PolyQ.const(self.loop_weight(value)))

    def basis(self, k: int, l: int) -> list:
        kind = "even" if self.kind == "even" else "colored_classes"
        return dg.enumerate_diagrams(kind, k, l)

    def __eq__(self, other):
        if not isinstance(other, Category):
            return NotImplemented
        return self.kind == other.kind and self.loop_weight == other.loop_weight

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Category({self.kind!r}, loop_weight={self.loop_weight})"


REP_H0 = Category("even", T)
PAR_Z2 = Category("colored", T)
PAR_Z2_2T = Category("colored", 2 * T)


@functools.lru_cache(maxsize=None)
def _stack_even(q, p):
    return dg.stack(q, p)


@functools.lru_cache(maxsize=None)
def _stack_colored(q, p):
    return dg.colored_stack(q, p)


def _check_diagram(cat: Category, d, k, l):
    if cat.kind == "even":
        if not isinstance(d, dg.Partition):
            raise CategoryMismatch(f"even category needs Partition terms, got {type(d).__name__}")
        if not d.is_even():
            raise ValueError(f"non-even diagram in even category: {d!r}")
    else:
        if not isinstance(d, dg.ColoredPartition):
            raise CategoryMismatch(
                f"coloured category needs ColoredPartition terms, got {type(d).__name__}"
            )
    if d.size != (k, l):
        raise dg.SizeMismatch(f"term of size {d.size} in a ({k},{l}) morphism")


class Morphism:
    """A formal PolyQ-linear combination of diagrams from [k] to [l]."""

    __slots__ = ("category", "k", "l", "terms")

    def __init__(self, category: Category, k: int, l: int, terms=None, _validated=False):
        self.category = category
        self.k = k
        self.l = l
        clean = {}
        for d, c in (terms or {}).items():
            if not isinstance(c, PolyQ):
                c = PolyQ.const(c)
            if c.is_zero():
                continue
            if not _validated:
                _check_diagram(category, d, k, l)
            clean[d] = c
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, category, k, l):
        return cls(category, k, l, {}, _validated=True)

    @classmethod
    def from_diagram(cls, category, diagram, coeff=ONE):
        return cls(category, diagram.size[0], diagram.size[1], {diagram: coeff})

    @classmethod
    def identity(cls, category, n):
        return cls(category, n, n, {category.identity_diagram(n): ONE}, _validated=True)

    # -- linear structure ----------------------------------------------------

    def _require_same_hom(self, other):
        if self.category != other.category:
            raise CategoryMismatch("morphisms live in different categories")
        if (self.k, self.l) != (other.k, other.l):
            raise dg.SizeMismatch(f"({self.k},{self.l}) vs ({other.k},{other.l})")

    def __add__(self, other):
        self._require_same_hom(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, ZERO) + c
        return Morphism(self.category, self.k, self.l, terms, _validated=True)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Morphism":
        if not isinstance(c, PolyQ):
            c = PolyQ.const(c)
        return Morphism(
            self.category,
            self.k,
            self.l,
            {d: cc * c for d, cc in self.terms.items()},
            _validated=True,
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.category == other.category
            and (self.k, self.l) == (other.k, other.l)
            and self.terms == other.terms
        )

    # -- categorical structure -------------------------------------------------

    def compose(self, other: "Morphism") -> "Morphism":
        """self o other: apply ``other`` first.  Loops weigh in once each."""
        if self.category != other.category:
            raise CategoryMismatch("morphisms live in different categories")
        if self.k != other.l:
            raise dg.SizeMismatch(f"cannot compose ({self.k},{self.l}) after ({other.k},{other.l})")
        w = self.category.loop_weight
        stack_fn = _stack_even if self.category.kind == "even" else _stack_colored
        terms = {}
        for dq, cq in self.terms.items():
            for dp, cp in other.terms.items():
                res = stack_fn(dq, dp)
                if res is None:  # incompatible colour classes compose to zero
                    continue
                coeff = cq * cp * w**res.loops
                d = res.composite
                terms[d] = terms.get(d, ZERO) + coeff
        return Morphism(self.category, other.k, self.l, terms, _validated=True)

    def tensor(self, other: "Morphism") -> "Morphism":
        if self.category != other.category:
            raise CategoryMismatch("morphisms live in different categories")
        terms = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d = d1.tensor(d2)
                terms[d] = terms.get(d, ZERO) + c1 * c2
        return Morphism(self.category, self.k + other.k, self.l + other.l, terms, _validated=True)

    def involution(self) -> "Morphism":
        return Morphism(
            self.category,
            self.l,
            self.k,
            {d.involution(): c for d, c in self.terms.items()},
            _validated=True,
        )

    def specialize(self, value) -> "Morphism":
        """Pin the parameter: coefficients and loop weight evaluated at t=value."""
        cat = self.category.specialized(value)
        return Morphism(
            cat,
            self.k,
            self.l,
            {d: PolyQ.const(c(value)) for d, c in self.terms.items()},
            _validated=True,
        )

    # -- trace ---------------------------------------------------------------

    def _closure(self, side: str) -> PolyQ:
        k = self.k
        cups = dg.Partition(
            0,
            2 * k,
            tuple((dg.top(i), dg.top(2 * k + 1 - i)) for i in range(1, k + 1)),
            _validated=True,
        )
        if self.category.kind == "colored":
            cups_m = Morphism.from_diagram(self.category, dg.all_plus(cups))
        else:
            cups_m = Morphism.from_diagram(self.category, cups)
        caps_m = cups_m.involution()
        ident = Morphism.identity(self.category, k)
        middle = self.tensor(ident) if side == "right" else ident.tensor(self)
        closed = caps_m.compose(middle.compose(cups_m))
        return _scalar_of(closed)

    def trace(self) -> PolyQ:
        """Categorical trace: close each strand i to i' with nested cups/caps.

        Left and right closure are both computed and must agree.
        """
        if self.k != self.l:
            raise NotEndomorphism(f"trace of a ({self.k},{self.l}) morphism")
        if self.k == 0:
            return _scalar_of(self)
        left = self._closure("left")
        right = self._closure("right")
        if left != right:
            raise ArithmeticError("left and right trace closures disagree")
        return right

    # -- serialisation ---------------------------------------------------------

    def _format_diagram(self, d):
        return dg.format_partition(d) if self.category.kind == "even" else dg.format_colored(d)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d in sorted(self.terms, key=self._format_diagram):
            c = self.terms[d]
            cs = str(c)
            if len(c.items()) > 1:
                cs = f"({cs})"
            parts.append(f"{cs} * ({self._format_diagram(d)})")
        return " + ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "category": self.category.kind,
            "loop_weight": str(self.category.loop_weight),
            "k": self.k,
            "l": self.l,
            "terms": [
                {"diagram": self._format_diagram(d), "coeff": str(self.terms[d])}
                for d in sorted(self.terms, key=self._format_diagram)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Morphism":
        cat = Category(data["category"], PolyQ.parse(data["loop_weight"]))
        parse = dg.parse_partition if cat.kind == "even" else dg.parse_colored
        terms = {}
        for item in data["terms"]:
            d = parse(item["diagram"])
            terms[d] = terms.get(d, ZERO) + PolyQ.parse(item["coeff"])
        return cls(cat, data["k"], data["l"], terms)

    @classmethod
    def from_json(cls, text: str) -> "Morphism":
        return cls.from_json_dict(json.loads(text))

    def __repr__(self):
        return f"Morphism({self.k}->{self.l}: {self.to_text()})"


def _scalar_of(m: Morphism) -> PolyQ:
    if (m.k, m.l) != (0, 0):
        raise NotEndomorphism("not a scalar morphism")
    if not m.terms:
        return ZERO
    (coeff,) = m.terms.values()
    return coeff


def dim(category: Category, n: int) -> PolyQ:
    """Categorical dimension of the n-th tensor power object."""
    return Morphism.identity(category, n).trace()


# ---------------------------------------------------------------------------
# Karoubi envelope (formal direct sums of split idempotents)
# ---------------------------------------------------------------------------


class KaroubiObject:
    """A formal direct sum of pairs (k, e) with e an exact idempotent on [k]."""

    __slots__ = ("category", "summands")

    def __init__(self, category: Category, summands, check: bool = True):
        summands = tuple((int(k), e) for k, e in summands)
        if check:
            for k, e in summands:
                if (e.k, e.l) != (k, k):
                    raise NotEndomorphism(f"summand idempotent has size ({e.k},{e.l}), object {k}")
                if e.category != category:
                    raise CategoryMismatch("summand idempotent from a different category")
                diff = e.compose(e) - e
                if not diff.is_zero():
                    raise NotIdempotent(diff)
        self.category = category
        self.summands = summands

    def __eq__(self, other):
        if not isinstance(other, KaroubiObject):
            return NotImplemented
        return self.category == other.category and self.summands == other.summands

    def __repr__(self):
        return f"KaroubiObject({[(k, e.to_text()) for k, e in self.summands]})"


class KaroubiMorphism:
    """A matrix of compressed morphisms; entry (j, i) maps summand i to j."""

    __slots__ = ("source", "target", "entries")

    def __init__(self, source: KaroubiObject, target: KaroubiObject, entries, check: bool = True):
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != len(target.summands) or any(
            len(row) != len(source.summands) for row in entries
        ):
            raise ValueError("entry matrix shape does not match the objects")
        if check:
            for j, row in enumerate(entries):
                f = target.summands[j][1]
                for i, g in enumerate(row):
                    e = source.summands[i][1]
                    if f.compose(g.compose(e)) != g:
                        raise CompressionViolation(f"entry ({j},{i}) is not idempotent-compressed")
        self.source = source
        self.target = target
        self.entries = entries

    def __eq__(self, other):
        if not isinstance(other, KaroubiMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"KaroubiMorphism({[[g.to_text() for g in row] for row in self.entries]})"


def karoubi_id(ob: KaroubiObject) -> KaroubiMorphism:
    """The identity of (A, e) is e itself; off-diagonal entries vanish."""
    n = len(ob.summands)
    entries = [
        [
            ob.summands[i][1]
            if i == j
            else Morphism.zero(ob.category, ob.summands[i][1].k, ob.summands[j][1].l)
            for i in range(n)
        ]
        for j in range(n)
    ]
    return KaroubiMorphism(ob, ob, entries, check=False)


def karoubi_compose(g: KaroubiMorphism, f: KaroubiMorphism) -> KaroubiMorphism:
    if f.target != g.source:
        raise dg.SizeMismatch("middle Karoubi objects differ")
    entries = []
    for j in range(len(g.target.summands)):
        row = []
        for i in range(len(f.source.summands)):
            acc = Morphism.zero(
                f.source.category, f.source.summands[i][1].k, g.target.summands[j][1].k
            )
            for m in range(len(f.target.summands)):
                acc = acc + g.entries[j][m].compose(f.entries[m][i])
            row.append(acc)
        entries.append(row)
    return KaroubiMorphism(f.source, g.target, entries, check=False)


def karoubi_tensor(a, b):
    """Tensor of Karoubi objects or morphisms (summand pairs in row-major order)."""
    if isinstance(a, KaroubiObject) and isinstance(b, KaroubiObject):
        summands = [
            (ka + kb, ea.tensor(eb)) for ka, ea in a.summands for kb, eb in b.summands
        ]
        return KaroubiObject(a.category, summands, check=False)
    src = karoubi_tensor(a.source, b.source)
    tgt = karoubi_tensor(a.target, b.target)
    entries = []
    for ja in range(len(a.target.summands)):
        for jb in range(len(b.target.summands)):
            row = []
            for ia in range(len(a.source.summands)):
                for ib in range(len(b.source.summands)):
                    row.append(a.entries[ja][ia].tensor(b.entries[jb][ib]))
            entries.append(row)
    return KaroubiMorphism(src, tgt, entries, check=False)


def karoubi_dim(ob: KaroubiObject) -> PolyQ:
    total = ZERO
    for _, e in ob.summands:
        total = total + e.trace()
    return total


def karoubi_trace(m: KaroubiMorphism) -> PolyQ:
    if m.source != m.target:
        raise NotEndomorphism("trace of a non-endomorphism")
    total = ZERO
    for i in range(len(m.source.summands)):
        total = total + m.entries[i][i].trace()
    return total


# ---------------------------------------------------------------------------
# Linear independence / rank of families of morphisms
# ---------------------------------------------------------------------------


def rank_of_morphisms(morphisms, seed: int = 0) -> int:
    """Rank of a family of morphisms in their common hom space.

    Exact elimination when all coefficients are constant.  For genuinely
    t-dependent coefficients the rank over the rational-function field is
    computed by specialising t at two distinct large random points (drawn
    from ``seed``) and taking the agreeing value; on disagreement the slow
    fraction-free symbolic elimination decides.
    """
    morphisms = list(morphisms)
    if not morphisms:
        return 0
    index = {}
    rows = []
    for m in morphisms:
        row = {}
        for d, c in m.terms.items():
            col = index.setdefault(d, len(index))
            row[col] = c
        rows.append(row)
    if all(c.is_const() for row in rows for c in row.values()):
        return rank_rows(
            [{col: c.constant_value() for col, c in row.items()} for row in rows]
        )
    rng = random.Random(seed)
    points = []
    while len(points) < 2:
        pt = Fraction(rng.randrange(10**6, 10**9), rng.randrange(1, 1000))
        if pt not in points:
            points.append(pt)
    ranks = [
        rank_rows([{col: c(pt) for col, c in row.items()} for row in rows]) for pt in points
    ]
    if ranks[0] == ranks[1]:
        return ranks[0]
    return rank_rows_poly(rows)
