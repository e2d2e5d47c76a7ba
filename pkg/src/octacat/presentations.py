"""Generator-and-relation presentations of the two diagram categories.

Two presented monoidal categories are implemented as word algebras over a
single generating object W:

* ``parz2``: generators id, merge, split, cross, token(g), bottompin,
  toppin, lolly.  Evaluating words through the generator table
  (``eval_htilde``) lands in the coloured diagram category.
* ``part``: generators id, fourlegs, cap, cup, cross.  Evaluation
  (``eval_gtilde``) lands in the even diagram category.

Each presentation carries its relation suite; reflected variants (mirror
image and upside-down) are generated programmatically from the base list.
Relation names are stable identifiers anchored to the relation content.

Canonical preimage words reconstruct any basis diagram from generators:
ladder words built from fourlegs/cap/cup for even blocks, merge/split trees
plus token rows for coloured diagrams.  Words also evaluate into arbitrary
targets through a TargetDatum, which is how matrix models of the
presentations are certified.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import diagrams as dg
from .linear_category import Category, Morphism, PAR_Z2, REP_H0
from .poly import ONE, PolyQ, ZERO

__all__ = [
    "GenWord",
    "Gen",
    "ComposeW",
    "TensorW",
    "ScaleW",
    "SumW",
    "ArityMismatch",
    "NotEven",
    "GENERATORS",
    "wid",
    "gen",
    "token",
    "parse_word",
    "format_word",
    "hflip",
    "vflip",
    "eval_htilde",
    "eval_gtilde",
    "Relation",
    "relation_suite",
    "verify_relations",
    "canonical_word",
    "canonical_word_colored",
    "TargetDatum",
    "diagram_datum",
    "eval_in_target",
    "verify_datum",
]


class ArityMismatch(ValueError):
    pass


class NotEven(ValueError):
    pass


# generator name -> (inputs, outputs) in copies of the generating object
_ARITY = {
    "id": (1, 1),
    "merge": (2, 1),
    "split": (1, 2),
    "cross": (2, 2),
    "token": (1, 1),
    "bottompin": (0, 1),
    "toppin": (1, 0),
    "lolly": (0, 0),
    "fourlegs": (2, 2),
    "cap": (2, 0),
    "cup": (0, 2),
}

GENERATORS = {
    "parz2": ("id", "merge", "split", "cross", "token", "bottompin", "toppin", "lolly"),
    "part": ("id", "fourlegs", "cap", "cup", "cross"),
}


class GenWord:
    """Base class for generator words.  Immutable trees with fixed arities."""

    __slots__ = ()

    @property
    def arity(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return format_word(self)


class Gen(GenWord):
    __slots__ = ("name", "g")

    def __init__(self, name: str, g: int | None = None):
        if name not in _ARITY:
            raise ValueError(f"unknown generator {name!r}")
        if (name == "token") != (g is not None):
            raise ValueError("token needs a group element; other generators take none")
        if g is not None and g not in (1, -1):
            raise ValueError(f"token label must be +-1, got {g}")
        self.name = name
        self.g = g

    @property
    def arity(self):
        return _ARITY[self.name]

    def _key(self):
        return (self.name, self.g)


class ComposeW(GenWord):
    """parts[0] o parts[1] o ... (leftmost applied last)."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise ArityMismatch("empty composition")
        for hi, lo in zip(parts, parts[1:]):
            if hi.arity[0] != lo.arity[1]:
                raise ArityMismatch(f"cannot compose {hi!r} after {lo!r}")
        self.parts = parts

    @property
    def arity(self):
        return (self.parts[-1].arity[0], self.parts[0].arity[1])

    def _key(self):
        return self.parts


class TensorW(GenWord):
    """Horizontal juxtaposition; the empty tensor is the unit object's identity."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(parts)

    @property
    def arity(self):
        return (sum(p.arity[0] for p in self.parts), sum(p.arity[1] for p in self.parts))

    def _key(self):
        return self.parts


class ScaleW(GenWord):
    __slots__ = ("coeff", "word")

    def __init__(self, coeff, word: GenWord):
        self.coeff = coeff if isinstance(coeff, PolyQ) else PolyQ.const(coeff)
        self.word = word

    @property
    def arity(self):
        return self.word.arity

    def _key(self):
        return (self.coeff, self.word)


class SumW(GenWord):
    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise ArityMismatch("empty sum")
        if len({p.arity for p in parts}) != 1:
            raise ArityMismatch("summands of different arity")
        self.parts = parts

    @property
    def arity(self):
        return self.parts[0].arity

    def _key(self):
        return self.parts


def gen(name: str) -> Gen:
    return Gen(name)


def token(g: int) -> Gen:
    return Gen("token", g)


def wid(n: int) -> GenWord:
    """The identity word on n strands (the empty tensor when n = 0)."""
    if n == 0:
        return TensorW(())
    if n == 1:
        return Gen("id")
    return TensorW([Gen("id")] * n)


def _at(word: GenWord, pos: int, width: int) -> GenWord:
    """word acting on strands pos..pos+arity-1 inside width parallel strands."""
    nin = word.arity[0]
    parts = []
    if pos > 0:
        parts.append(wid(pos))
    parts.append(word)
    if width - pos - nin > 0:
        parts.append(wid(width - pos - nin))
    return TensorW(parts) if len(parts) > 1 else parts[0]


# ---------------------------------------------------------------------------
# Reflections
# ---------------------------------------------------------------------------

_VFLIP_GEN = {
    "merge": "split",
    "split": "merge",
    "bottompin": "toppin",
    "toppin": "bottompin",
    "cap": "cup",
    "cup": "cap",
}


def vflip(word: GenWord) -> GenWord:
    """Upside-down reflection: reverses compositions and dualises generators."""
    if isinstance(word, Gen):
        if word.name in _VFLIP_GEN:
            return Gen(_VFLIP_GEN[word.name])
        return word
    if isinstance(word, ComposeW):
        return ComposeW([vflip(p) for p in reversed(word.parts)])
    if isinstance(word, TensorW):
        return TensorW([vflip(p) for p in word.parts])
    if isinstance(word, ScaleW):
        return ScaleW(word.coeff, vflip(word.word))
    return SumW([vflip(p) for p in word.parts])


def hflip(word: GenWord) -> GenWord:
    """Mirror reflection: reverses tensor factors; all generators are symmetric."""
    if isinstance(word, Gen):
        return word
    if isinstance(word, ComposeW):
        return ComposeW([hflip(p) for p in word.parts])
    if isinstance(word, TensorW):
        return TensorW([hflip(p) for p in reversed(word.parts)])
    if isinstance(word, ScaleW):
        return ScaleW(word.coeff, hflip(word.word))
    return SumW([hflip(p) for p in word.parts])


# ---------------------------------------------------------------------------
# S-expression grammar
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")


def format_word(word: GenWord) -> str:
    if isinstance(word, Gen):
        return f"(token {word.g})" if word.name == "token" else word.name
    if isinstance(word, ComposeW):
        return "(compose " + " ".join(format_word(p) for p in word.parts) + ")"
    if isinstance(word, TensorW):
        if not word.parts:
            return "empty"
        return "(tensor " + " ".join(format_word(p) for p in word.parts) + ")"
    if isinstance(word, ScaleW):
        return f"(scale {word.coeff} " + format_word(word.word) + ")"
    return "(sum " + " ".join(format_word(p) for p in word.parts) + ")"


def parse_word(text: str) -> GenWord:
    tokens = _TOKEN_RE.findall(text)
    if not tokens:
        raise ValueError("empty word")
    pos = 0

    def take():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of word in {text!r}")
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_one():
        tok = take()
        if tok == ")":
            raise ValueError(f"unexpected ')' in {text!r}")
        if tok != "(":
            if tok == "empty":
                return TensorW(())
            return Gen(tok)
        head = take()
        if head == "token":
            g = int(take())
            _expect_close()
            return Gen("token", g)
        if head == "scale":
            coeff = PolyQ.parse(take())
            word = parse_one()
            _expect_close()
            return ScaleW(coeff, word)
        parts = []
        while tokens[pos] != ")" if pos < len(tokens) else False:
            parts.append(parse_one())
        _expect_close()
        if head == "compose":
            return ComposeW(parts)
        if head == "tensor":
            return TensorW(parts)
        if head == "sum":
            return SumW(parts)
        raise ValueError(f"unknown word form {head!r} in {text!r}")

    def _expect_close():
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ValueError(f"missing ')' in {text!r}")
        pos += 1

    word = parse_one()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in {text!r}")
    return word


# ---------------------------------------------------------------------------
# Evaluation into the diagram categories
# ---------------------------------------------------------------------------


def _colored(cat: Category, k, l, blocks, labels=()):
    base = dg.make_partition(k, l, blocks)
    z = [1] * (k + l)
    for v, s in labels:
        z[v.index - 1 if v.row == dg.BOTTOM else k + v.index - 1] = s
    return Morphism.from_diagram(cat, dg.ColoredPartition(base, z))


def _htilde_table(cat: Category):
    b, t = dg.bottom, dg.top
    return {
        ("id", None): Morphism.identity(cat, 1),
        ("merge", None): _colored(cat, 2, 1, [(b(1), b(2), t(1))]),
        ("split", None): _colored(cat, 1, 2, [(b(1), t(1), t(2))]),
        ("cross", None): _colored(cat, 2, 2, [(b(1), t(2)), (b(2), t(1))]),
        ("token", 1): Morphism.identity(cat, 1),
        ("token", -1): _colored(cat, 1, 1, [(b(1), t(1))], [(t(1), -1)]),
        ("bottompin", None): _colored(cat, 0, 1, [(t(1),)]),
        ("toppin", None): _colored(cat, 1, 0, [(b(1),)]),
        ("lolly", None): Morphism.from_diagram(
            cat, dg.all_plus(dg.make_partition(0, 0, ())), cat.loop_weight
        ),
    }


def _gtilde_table(cat: Category):
    return {
        ("id", None): Morphism.identity(cat, 1),
        ("fourlegs", None): Morphism.from_diagram(cat, dg.fourlegs()),
        ("cap", None): Morphism.from_diagram(cat, dg.cap()),
        ("cup", None): Morphism.from_diagram(cat, dg.cup()),
        ("cross", None): Morphism.from_diagram(cat, dg.perm_partition((2, 1))),
    }


def _eval_diagram(word: GenWord, cat: Category, table) -> Morphism:
    if isinstance(word, Gen):
        key = (word.name, word.g)
        if key not in table:
            raise ArityMismatch(f"generator {word!r} not in this presentation")
        return table[key]
    if isinstance(word, ComposeW):
        out = _eval_diagram(word.parts[-1], cat, table)
        for part in reversed(word.parts[:-1]):
            out = _eval_diagram(part, cat, table).compose(out)
        return out
    if isinstance(word, TensorW):
        out = Morphism.identity(cat, 0)
        for part in word.parts:
            out = out.tensor(_eval_diagram(part, cat, table))
        return out
    if isinstance(word, ScaleW):
        return _eval_diagram(word.word, cat, table).scale(word.coeff)
    out = None
    for part in word.parts:
        m = _eval_diagram(part, cat, table)
        out = m if out is None else out + m
    return out


def eval_htilde(word: GenWord, category: Category = PAR_Z2) -> Morphism:
    """Evaluate a parz2 word in the coloured diagram category.

    The target defaults to loop weight t; passing the weight-2t category
    evaluates the same presentation at the doubled parameter (lolly then
    stands for 2t).
    """
    if category.kind != "colored":
        raise ValueError("parz2 words evaluate into the coloured category")
    return _eval_diagram(word, category, _htilde_table(category))


def eval_gtilde(word: GenWord, category: Category = REP_H0) -> Morphism:
    """Evaluate a part word in the even diagram category."""
    if category.kind != "even":
        raise ValueError("part words evaluate into the even category")
    return _eval_diagram(word, category, _gtilde_table(category))


# ---------------------------------------------------------------------------
# Relation suites
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: GenWord
    rhs: GenWord


def _parz2_base_relations():
    idw = Gen("id")
    merge, split, cross = Gen("merge"), Gen("split"), Gen("cross")
    pin, copin, lolly = Gen("bottompin"), Gen("toppin"), Gen("lolly")
    rel = []
    rel.append(Relation("unit_left", ComposeW([merge, TensorW([pin, idw])]), idw))
    rel.append(Relation("unit_right", ComposeW([merge, TensorW([idw, pin])]), idw))
    rel.append(Relation("counit_left", ComposeW([TensorW([copin, idw]), split]), idw))
    rel.append(Relation("counit_right", ComposeW([TensorW([idw, copin]), split]), idw))
    frob_mid = ComposeW([split, merge])
    rel.append(
        Relation(
            "frobenius_left",
            ComposeW([TensorW([merge, idw]), TensorW([idw, split])]),
            frob_mid,
        )
    )
    rel.append(
        Relation(
            "frobenius_right",
            ComposeW([TensorW([idw, merge]), TensorW([split, idw])]),
            frob_mid,
        )
    )
    rel.append(Relation("symmetry_involutive", ComposeW([cross, cross]), wid(2)))
    rel.append(
        Relation(
            "braid",
            ComposeW([_at(cross, 0, 3), _at(cross, 1, 3), _at(cross, 0, 3)]),
            ComposeW([_at(cross, 1, 3), _at(cross, 0, 3), _at(cross, 1, 3)]),
        )
    )
    rel.append(
        Relation("cross_pin", ComposeW([cross, TensorW([idw, pin])]), TensorW([pin, idw]))
    )
    rel.append(
        Relation(
            "cross_merge_nat",
            ComposeW([cross, TensorW([merge, idw])]),
            ComposeW([TensorW([idw, merge]), _at(cross, 0, 3), _at(cross, 1, 3)]),
        )
    )
    rel.append(Relation("commutative", ComposeW([merge, cross]), merge))
    for g in (1, -1):
        for h in (1, -1):
            bubble = ComposeW([merge, TensorW([token(g), token(h)]), split])
            target = token(g) if g == h else ScaleW(0, idw)
            rel.append(Relation(f"token_bubble[{g},{h}]", bubble, target))
    rel.append(Relation("lolly_value", lolly, ScaleW(PolyQ.t(), wid(0))))
    for g in (1, -1):
        for h in (1, -1):
            rel.append(
                Relation(
                    f"token_token[{g},{h}]",
                    ComposeW([token(g), token(h)]),
                    token(g * h),
                )
            )
    rel.append(Relation("token_one", token(1), idw))
    for g in (1, -1):
        rel.append(
            Relation(
                f"token_cross[{g}]",
                ComposeW([cross, TensorW([token(g), idw])]),
                ComposeW([TensorW([idw, token(g)]), cross]),
            )
        )
        rel.append(
            Relation(
                f"token_split[{g}]",
                ComposeW([split, token(g)]),
                ComposeW([TensorW([token(g), token(g)]), split]),
            )
        )
        rel.append(Relation(f"token_pin[{g}]", ComposeW([token(g), pin]), pin))
    return rel


def _part_base_relations():
    idw = Gen("id")
    fl, capw, cupw, cross = Gen("fourlegs"), Gen("cap"), Gen("cup"), Gen("cross")
    rel = []
    rel.append(Relation("fourlegs_idempotent", ComposeW([fl, fl]), fl))
    rel.append(
        Relation(
            "fourlegs_slide",
            ComposeW([_at(fl, 1, 3), _at(fl, 0, 3)]),
            ComposeW([_at(fl, 0, 3), _at(fl, 1, 3)]),
        )
    )
    rel.append(Relation("dimension", ComposeW([capw, cupw]), ScaleW(PolyQ.t(), wid(0))))
    rel.append(
        Relation(
            "snake_left",
            ComposeW([TensorW([idw, capw]), TensorW([cupw, idw])]),
            idw,
        )
    )
    rel.append(
        Relation(
            "snake_right",
            ComposeW([TensorW([capw, idw]), TensorW([idw, cupw])]),
            idw,
        )
    )
    rel.append(Relation("fourlegs_cup", ComposeW([fl, cupw]), cupw))
    rel.append(
        Relation(
            "fourlegs_cup_slide",
            ComposeW([_at(fl, 1, 3), TensorW([cupw, idw])]),
            ComposeW([_at(fl, 0, 3), TensorW([idw, cupw])]),
        )
    )
    rel.append(Relation("symmetry_involutive", ComposeW([cross, cross]), wid(2)))
    rel.append(
        Relation(
            "braid",
            ComposeW([_at(cross, 0, 3), _at(cross, 1, 3), _at(cross, 0, 3)]),
            ComposeW([_at(cross, 1, 3), _at(cross, 0, 3), _at(cross, 1, 3)]),
        )
    )
    rel.append(Relation("cap_cross", ComposeW([capw, cross]), capw))
    rel.append(Relation("fourlegs_cross", ComposeW([fl, cross]), fl))
    rel.append(
        Relation(
            "cross_fourlegs_nat",
            ComposeW([_at(cross, 0, 3), _at(cross, 1, 3), _at(fl, 0, 3)]),
            ComposeW([_at(fl, 1, 3), _at(cross, 0, 3), _at(cross, 1, 3)]),
        )
    )
    rel.append(
        Relation(
            "cap_cross_nat",
            ComposeW([TensorW([idw, capw]), _at(cross, 0, 3), _at(cross, 1, 3)]),
            TensorW([capw, idw]),
        )
    )
    return rel


def relation_suite(presentation: str) -> list[Relation]:
    """Base relations plus all mirror and upside-down reflections, deduplicated."""
    if presentation == "parz2":
        base = _parz2_base_relations()
    elif presentation == "part":
        base = _part_base_relations()
    else:
        raise ValueError(f"unknown presentation {presentation!r}")
    out = []
    seen = set()
    for r in base:
        for tag, fn in (
            ("", lambda w: w),
            ("[h]", hflip),
            ("[v]", vflip),
            ("[hv]", lambda w: hflip(vflip(w))),
        ):
            lhs, rhs = fn(r.lhs), fn(r.rhs)
            key = frozenset((format_word(lhs), format_word(rhs)))
            if key in seen:
                continue
            seen.add(key)
            out.append(Relation(r.name + tag, lhs, rhs))
    return out


def verify_relations(presentation: str, evaluator: Callable[[GenWord], object]) -> list[dict]:
    """Evaluate every relation of the suite; failures carry the difference."""
    report = []
    for rel in relation_suite(presentation):
        lhs = evaluator(rel.lhs)
        rhs = evaluator(rel.rhs)
        ok = lhs == rhs
        item = {
            "check": f"relations-{presentation}/{rel.name}",
            "params": {"lhs": format_word(rel.lhs), "rhs": format_word(rel.rhs)},
            "pass": bool(ok),
        }
        if not ok:
            if isinstance(lhs, Morphism) and (lhs.k, lhs.l) == (rhs.k, rhs.l):
                item["counterexample"] = (lhs - rhs).to_text()
            else:
                item["counterexample"] = repr((lhs, rhs))
        report.append(item)
    return report


# ---------------------------------------------------------------------------
# Canonical preimage words
# ---------------------------------------------------------------------------


def _perm_word(sigma) -> GenWord:
    """A crossing word evaluating to the permutation diagram of sigma.

    Adjacent transpositions in the order produced by a left-to-right bubble
    sort of the one-line form; any other order would give an equal morphism.
    """
    n = len(sigma)
    arr = list(sigma)
    swaps = []
    changed = True
    while changed:
        changed = False
        for j in range(n - 1):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                swaps.append(j)
                changed = True
    if not swaps:
        return wid(n)
    factors = [_at(Gen("cross"), j, n) for j in reversed(swaps)]
    return factors[0] if len(factors) == 1 else ComposeW(factors)


def _s_ladder(n: int) -> GenWord:
    """Word of size (n, n) evaluating to the single block {1..n, 1'..n'}."""
    if n == 1:
        return Gen("id")
    factors = [_at(Gen("fourlegs"), i, n) for i in range(n - 1)]
    return factors[0] if len(factors) == 1 else ComposeW(factors)


def _t_ladder(n: int) -> GenWord:
    """Word of size (n, 1) evaluating to the single block {1..n, 1'}; n odd."""
    if n == 1:
        return Gen("id")
    caps = TensorW([Gen("id")] + [Gen("cap")] * ((n - 1) // 2))
    return ComposeW([caps, _s_ladder(n)])


def _even_block_word(k: int, l: int) -> GenWord:
    if (k + l) % 2 != 0 or k + l == 0:
        raise NotEven(f"no even block of size ({k},{l})")
    if k >= 1 and l >= 1:
        if k >= l:
            if k == l:
                return _s_ladder(k)
            inner = TensorW([_t_ladder(k - l + 1)] + [Gen("id")] * (l - 1))
            return ComposeW([_s_ladder(l), inner])
        return vflip(_even_block_word(l, k))
    if l == 0:
        if k == 2:
            return Gen("cap")
        return ComposeW([TensorW([Gen("cap")] * (k // 2)), _s_ladder(k)])
    return vflip(_even_block_word(l, 0))


def canonical_word(p: dg.Partition) -> GenWord:
    """A part word whose even-category evaluation is exactly p (coefficient 1)."""
    if not p.is_even():
        raise NotEven(f"{p!r} has an odd block")
    nf = dg.normal_form(p)
    factors = []
    for i in nf.block_order:
        blk = p.blocks[i]
        ki = sum(1 for v in blk if v.row == dg.BOTTOM)
        factors.append(_even_block_word(ki, len(blk) - ki))
    middle = factors[0] if len(factors) == 1 else TensorW(factors)
    if not factors:
        middle = wid(0)
    parts = []
    if p.l:
        parts.append(_perm_word(nf.sigma))
    parts.append(middle)
    if p.k:
        parts.append(_perm_word(nf.rho))
    return parts[0] if len(parts) == 1 else ComposeW(parts)


def _merge_tree(k: int) -> GenWord:
    if k == 1:
        return Gen("id")
    word = Gen("merge")
    for _ in range(k - 2):
        word = ComposeW([Gen("merge"), TensorW([word, Gen("id")])])
    return word


def _colored_block_word(k: int, l: int) -> GenWord:
    if k >= 1 and l >= 1:
        if k == 1 and l == 1:
            return Gen("id")
        return ComposeW([vflip(_merge_tree(l)), _merge_tree(k)])
    if l == 0:
        return ComposeW([Gen("toppin"), _merge_tree(k)]) if k > 1 else Gen("toppin")
    return vflip(_colored_block_word(l, 0))


def _token_row(labels) -> GenWord:
    return TensorW([token(-1) if s == -1 else Gen("id") for s in labels])


def canonical_word_colored(c: dg.ColoredPartition) -> GenWord:
    """A parz2 word whose coloured-category evaluation is exactly c."""
    p = c.base
    nf = dg.normal_form(p)
    factors = []
    for i in nf.block_order:
        blk = p.blocks[i]
        ki = sum(1 for v in blk if v.row == dg.BOTTOM)
        factors.append(_colored_block_word(ki, len(blk) - ki))
    middle = factors[0] if len(factors) == 1 else TensorW(factors)
    if not factors:
        middle = wid(0)
    parts = []
    if p.l:
        parts.append(_token_row(c.labels[p.k :]))
        parts.append(_perm_word(nf.sigma))
    parts.append(middle)
    if p.k:
        parts.append(_perm_word(nf.rho))
        parts.append(_token_row(c.labels[: p.k]))
    return parts[0] if len(parts) == 1 else ComposeW(parts)


# ---------------------------------------------------------------------------
# Universal-property targets
# ---------------------------------------------------------------------------


@dataclass
class TargetDatum:
    """Everything needed to evaluate words in an arbitrary strict linear target.

    ``gens`` maps generator keys (name, g) to target morphisms; ``unit`` is
    the identity of the unit object; ``t_value`` specialises polynomial
    scalars.  ``zero(m, n)`` supplies the zero morphism on m -> n strands,
    needed to evaluate scale-by-zero words.
    """

    presentation: str
    gens: dict
    compose: Callable
    tensor: Callable
    add: Callable
    scale: Callable
    eq: Callable
    unit: object
    zero: Callable
    t_value: Fraction | None = None

    def gen_value(self, name, g=None):
        key = (name, g)
        if key not in self.gens:
            raise ArityMismatch(f"target datum has no value for generator {key}")
        return self.gens[key]


class DatumViolation(ValueError):
    def __init__(self, axiom, detail=""):
        self.axiom = axiom
        super().__init__(f"target datum violates axiom {axiom}" + (f": {detail}" if detail else ""))


def eval_in_target(word: GenWord, datum: TargetDatum):
    if isinstance(word, Gen):
        return datum.gen_value(word.name, word.g)
    if isinstance(word, ComposeW):
        out = eval_in_target(word.parts[-1], datum)
        for part in reversed(word.parts[:-1]):
            out = datum.compose(eval_in_target(part, datum), out)
        return out
    if isinstance(word, TensorW):
        out = datum.unit
        for part in word.parts:
            out = datum.tensor(out, eval_in_target(part, datum))
        return out
    if isinstance(word, ScaleW):
        coeff = word.coeff
        if datum.t_value is not None:
            coeff = PolyQ.const(coeff(datum.t_value))
        if coeff.is_zero():
            return datum.zero(*word.arity)
        if coeff.is_const():
            return datum.scale(coeff.constant_value(), eval_in_target(word.word, datum))
        # symbolic scalar: the target must accept polynomial coefficients
        return datum.scale(coeff, eval_in_target(word.word, datum))
    out = None
    for part in word.parts:
        m = eval_in_target(part, datum)
        out = m if out is None else datum.add(out, m)
    return out


def diagram_datum(presentation: str, category: Category | None = None) -> TargetDatum:
    """The tautological datum: the diagram category itself as a target."""
    if presentation == "parz2":
        category = category or PAR_Z2
        table = _htilde_table(category)
        t_value = None
    else:
        category = category or REP_H0
        table = _gtilde_table(category)
        t_value = None
    return TargetDatum(
        presentation=presentation,
        gens=table,
        compose=lambda f, g: f.compose(g),
        tensor=lambda f, g: f.tensor(g),
        add=lambda f, g: f + g,
        scale=lambda c, f: f.scale(c),
        eq=lambda f, g: f == g,
        unit=Morphism.identity(category, 0),
        zero=lambda m, n: Morphism.zero(category, m, n),
        t_value=t_value,
    )


def _frobenius_axioms() -> list[tuple[str, GenWord, GenWord]]:
    """Special commutative Frobenius object with involution, as word pairs."""
    idw = Gen("id")
    a, b = Gen("merge"), Gen("split")
    d, e_ = Gen("bottompin"), Gen("toppin")
    z = token(-1)
    zero1 = ScaleW(0, idw)
    dim_word = ScaleW(PolyQ.t(), wid(0))
    return [
        ("frobenius/unit_left", ComposeW([a, TensorW([d, idw])]), idw),
        ("frobenius/unit_right", ComposeW([a, TensorW([idw, d])]), idw),
        ("frobenius/counit_left", ComposeW([TensorW([e_, idw]), b]), idw),
        ("frobenius/counit_right", ComposeW([TensorW([idw, e_]), b]), idw),
        (
            "frobenius/associativity_left",
            ComposeW([TensorW([a, idw]), TensorW([idw, b])]),
            ComposeW([b, a]),
        ),
        (
            "frobenius/associativity_right",
            ComposeW([TensorW([idw, a]), TensorW([b, idw])]),
            ComposeW([b, a]),
        ),
        ("commutative", ComposeW([a, Gen("cross")]), a),
        ("special", ComposeW([a, b]), idw),
        ("dimension", ComposeW([e_, d]), dim_word),
        ("involution/involutive", ComposeW([z, z]), idw),
        ("involution/comultiplicative", ComposeW([b, z]), ComposeW([TensorW([z, z]), b])),
        ("involution/unital", ComposeW([z, d]), d),
        ("involution/twisted_bubble", ComposeW([a, TensorW([z, z]), b]), z),
        ("involution/mixed_bubble_left", ComposeW([a, TensorW([idw, z]), b]), zero1),
        ("involution/mixed_bubble_right", ComposeW([a, TensorW([z, idw]), b]), zero1),
    ]


def _neutralizer_axioms() -> list[tuple[str, GenWord, GenWord]]:
    """Self-dual rigid object with neutralizer, as word pairs.

    The scalar axiom is stated here as the composable order cap o cup = t;
    see the ledgered note on the direction of the dimension axiom.
    """
    idw = Gen("id")
    al, be, de = Gen("fourlegs"), Gen("cap"), Gen("cup")
    dim_word = ScaleW(PolyQ.t(), wid(0))
    return [
        (
            "rigid/snake_left",
            ComposeW([TensorW([idw, be]), TensorW([de, idw])]),
            idw,
        ),
        (
            "rigid/snake_right",
            ComposeW([TensorW([be, idw]), TensorW([idw, de])]),
            idw,
        ),
        ("dimension", ComposeW([be, de]), dim_word),
        ("neutralizer/idempotent", ComposeW([al, al]), al),
        (
            "neutralizer/slide",
            ComposeW([_at(al, 1, 3), _at(al, 0, 3)]),
            ComposeW([_at(al, 0, 3), _at(al, 1, 3)]),
        ),
        ("compat/coev", ComposeW([al, de]), de),
        ("compat/ev", ComposeW([be, al]), be),
        (
            "compat/coev_slide",
            ComposeW([_at(al, 1, 3), TensorW([de, idw])]),
            ComposeW([_at(al, 0, 3), TensorW([idw, de])]),
        ),
        (
            "compat/ev_slide",
            ComposeW([TensorW([be, idw]), _at(al, 1, 3)]),
            ComposeW([TensorW([idw, be]), _at(al, 0, 3)]),
        ),
    ]


def verify_datum(datum: TargetDatum) -> list[dict]:
    """Check the object axioms classifying functors out of the presentation.

    parz2 targets must be special commutative Frobenius objects with an
    involution; part targets must be self-dual rigid objects with a
    neutralizer.  Every axiom is reported; failures name the axiom.
    """
    axioms = _frobenius_axioms() if datum.presentation == "parz2" else _neutralizer_axioms()
    report = []
    for name, lhs, rhs in axioms:
        ok = bool(datum.eq(eval_in_target(lhs, datum), eval_in_target(rhs, datum)))
        report.append(
            {
                "check": f"datum-{datum.presentation}/{name}",
                "params": {"lhs": format_word(lhs), "rhs": format_word(rhs)},
                "pass": ok,
            }
        )
    return report
