"""Exact univariate polynomials in the interpolation parameter t.

All scalar arithmetic in the morphism spaces runs over PolyQ: polynomials in
a single formal variable ``t`` with rational coefficients.  Values are
immutable; every operation returns a new polynomial.  Equality is decidable
and exact, which is what makes every relation check in this package a real
proof at the chosen sizes.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["PolyQ", "T", "ONE", "ZERO"]

_TERM_RE = re.compile(r"^([+-]?)(\d+(?:/\d+)?)?(t(?:\^(\d+))?)?$")


class PolyQ:
    """A polynomial ``sum c_e * t^e`` with Fraction coefficients."""

    __slots__ = ("_items", "_hash")

    def __init__(self, coeffs=None):
        items = []
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    items.append((int(e), c))
        items.sort(reverse=True)
        self._items = tuple(items)
        self._hash = hash(self._items)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(value) -> "PolyQ":
        return PolyQ({0: Fraction(value)})

    @staticmethod
    def t(coeff=1, exp=1) -> "PolyQ":
        return PolyQ({exp: Fraction(coeff)})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._items

    def is_const(self) -> bool:
        return all(e == 0 for e, _ in self._items)

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return self._items[0][0] if self._items else -1

    def items(self):
        return self._items

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises otherwise."""
        if not self.is_const():
            raise ValueError(f"not a constant polynomial: {self}")
        return self._items[0][1] if self._items else Fraction(0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        coeffs = dict(self._items)
        for e, c in other._items:
            coeffs[e] = coeffs.get(e, Fraction(0)) + c
        return PolyQ(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ({e: -c for e, c in self._items})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        coeffs = {}
        for e1, c1 in self._items:
            for e2, c2 in other._items:
                e = e1 + e2
                coeffs[e] = coeffs.get(e, Fraction(0)) + c1 * c2
        return PolyQ(coeffs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value) -> Fraction:
        """Evaluate at an exact rational point."""
        value = Fraction(value)
        acc = Fraction(0)
        for e, c in self._items:
            acc += c * value**e
        return acc

    # -- equality / formatting ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyQ.const(other)
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self._items:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._items):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"PolyQ({self})"

    @staticmethod
    def parse(text: str) -> "PolyQ":
        """Inverse of str(); accepts e.g. '0', '2t', '-t^2 + 1/2'."""
        compact = text.replace(" ", "")
        if compact in ("", "0"):
            return ZERO
        tokens = re.findall(r"[+-]?[^+-]+", compact)
        if "".join(tokens) != compact:
            raise ValueError(f"cannot parse polynomial: {text!r}")
        coeffs = {}
        for tok in tokens:
            m = _TERM_RE.match(tok)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"bad polynomial term {tok!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(3) is None:
                exp = 0
            elif m.group(4) is None:
                exp = 1
            else:
                exp = int(m.group(4))
            coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coeff
        return PolyQ(coeffs)


def _coerce(value) -> PolyQ:
    if isinstance(value, PolyQ):
        return value
    return PolyQ.const(value)


T = PolyQ.t()
ONE = PolyQ.const(1)
ZERO = PolyQ()
