"""Concrete matrix models: signed permutation groups acting on tensor powers.

The group of signed permutations on n letters acts on the n-dimensional
signed-permutation space (kind 'reflection') and on the 2n-dimensional space
permuting basis vectors e^i_{+-1} (kind 'permutation').  Diagrams map to
exact 0/1 matrices by the usual delta rule: an entry is 1 iff within every
block the value labels agree and, in the coloured case, the sign labels
multiplied by the diagram's own labels agree.

Multi-indices flatten row-major with the leftmost tensor factor most
significant; every matrix equality in the test suite depends on that
convention.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import NamedTuple

from . import diagrams as dg
from ._gauss import rank_rows
from .linear_category import KaroubiMorphism, Morphism
from .poly import PolyQ
from .presentations import TargetDatum

__all__ = [
    "MatrixQ",
    "GroupElement",
    "RepSpec",
    "TooLarge",
    "SpecializationMismatch",
    "rho",
    "rho_power",
    "all_group_elements",
    "group_generators",
    "T_uncolored",
    "T_even",
    "T_colored",
    "equivariance_check",
    "hom_dim",
    "group_average_projector",
    "functor_G",
    "functor_H",
    "split_idempotent",
    "h_matrix_datum",
    "g_matrix_datum",
]


class TooLarge(ValueError):
    pass


class SpecializationMismatch(ValueError):
    pass


class MatrixQ:
    """Exact rational matrix, stored as sparse rows in canonical order."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = tuple({} for _ in range(rows))
        elif isinstance(data, dict):
            rowdicts = [{} for _ in range(rows)]
            for (r, c), v in data.items():
                v = Fraction(v)
                if v:
                    rowdicts[r][c] = v
            self.data = tuple(rowdicts)
        else:
            self.data = tuple({c: Fraction(v) for c, v in row.items() if v} for row in data)
            if len(self.data) != rows:
                raise ValueError("row count mismatch")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "MatrixQ":
        return MatrixQ(n, n, [{i: Fraction(1)} for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "MatrixQ":
        return MatrixQ(rows, cols)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "MatrixQ") -> "MatrixQ":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        out = []
        for ra, rb in zip(self.data, other.data):
            row = dict(ra)
            for c, v in rb.items():
                nv = row.get(c, Fraction(0)) + v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
            out.append(row)
        return MatrixQ(self.rows, self.cols, out)

    def __sub__(self, other: "MatrixQ") -> "MatrixQ":
        return self + other.scale(-1)

    def scale(self, c) -> "MatrixQ":
        c = Fraction(c)
        if c == 0:
            return MatrixQ.zero(self.rows, self.cols)
        return MatrixQ(self.rows, self.cols, [{j: v * c for j, v in row.items()} for row in self.data])

    def __matmul__(self, other: "MatrixQ") -> "MatrixQ":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for row in self.data:
            acc = {}
            for k, v in row.items():
                for j, w in other.data[k].items():
                    nv = acc.get(j, Fraction(0)) + v * w
                    if nv:
                        acc[j] = nv
                    else:
                        acc.pop(j, None)
            out.append(acc)
        return MatrixQ(self.rows, other.cols, out)

    def kron(self, other: "MatrixQ") -> "MatrixQ":
        out = []
        for ra in self.data:
            for rb in other.data:
                row = {}
                for ca, va in ra.items():
                    for cb, vb in rb.items():
                        row[ca * other.cols + cb] = va * vb
                out.append(row)
        return MatrixQ(self.rows * other.rows, self.cols * other.cols, out)

    def transpose(self) -> "MatrixQ":
        out = [{} for _ in range(self.cols)]
        for r, row in enumerate(self.data):
            for c, v in row.items():
                out[c][r] = v
        return MatrixQ(self.cols, self.rows, out)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((row.get(i, Fraction(0)) for i, row in enumerate(self.data)), Fraction(0))

    def rank(self) -> int:
        return rank_rows(self.data)

    def flatten(self) -> dict:
        """Row-major flattening to a single sparse vector (for span ranks)."""
        return {r * self.cols + c: v for r, row in enumerate(self.data) for c, v in row.items()}

    def __eq__(self, other):
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.data == other.data

    def __repr__(self):
        return f"MatrixQ({self.rows}x{self.cols}, nnz={sum(len(r) for r in self.data)})"

    # -- serialisation ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        triplets = [
            [r, c, str(v)] for r, row in enumerate(self.data) for c, v in sorted(row.items())
        ]
        return {"rows": self.rows, "cols": self.cols, "triplets": triplets}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(data: dict) -> "MatrixQ":
        return MatrixQ(
            data["rows"],
            data["cols"],
            {(r, c): Fraction(v) for r, c, v in data["triplets"]},
        )


def kron_power(m: MatrixQ, k: int) -> MatrixQ:
    out = MatrixQ.identity(1)
    for _ in range(k):
        out = out.kron(m)
    return out


# ---------------------------------------------------------------------------
# The group of signed permutations
# ---------------------------------------------------------------------------


class GroupElement(NamedTuple):
    """A signed permutation: sign vector in {+-1}^n and a permutation of n."""

    signs: tuple
    perm: tuple

    @property
    def n(self):
        return len(self.perm)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        inv = _inverse_perm(self.perm)
        signs = tuple(a * other.signs[inv[i] - 1] for i, a in enumerate(self.signs))
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(self.n))
        return GroupElement(signs, perm)

    def inverse(self) -> "GroupElement":
        inv = _inverse_perm(self.perm)
        signs = tuple(self.signs[self.perm[j] - 1] for j in range(self.n))
        return GroupElement(signs, inv)

    @staticmethod
    def identity(n: int) -> "GroupElement":
        return GroupElement((1,) * n, tuple(range(1, n + 1)))


def _inverse_perm(perm):
    inv = [0] * len(perm)
    for i, image in enumerate(perm, start=1):
        inv[image - 1] = i
    return tuple(inv)


def all_group_elements(n: int):
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield GroupElement(signs, perm)


def group_generators(n: int):
    """Single sign flips and adjacent transpositions."""
    gens = []
    for i in range(n):
        signs = tuple(-1 if j == i else 1 for j in range(n))
        gens.append(GroupElement(signs, tuple(range(1, n + 1))))
    for i in range(1, n):
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        gens.append(GroupElement((1,) * n, tuple(perm)))
    return gens


class RepSpec(NamedTuple):
    """Which representation: 'reflection' (dim n) or 'permutation' (dim 2n)."""

    kind: str
    n: int

    @property
    def dim(self):
        return self.n if self.kind == "reflection" else 2 * self.n


def _vindex(n: int, i: int, b: int) -> int:
    """Basis index of e^i_b in the 2n-dimensional space (i 1-based, b +-1)."""
    return 2 * (i - 1) + (0 if b == 1 else 1)


def rho(g: GroupElement, spec: RepSpec) -> MatrixQ:
    """The matrix of g: signed scaling on 'reflection', index shuffling on 'permutation'."""
    n = spec.n
    if g.n != n:
        raise ValueError("group element size does not match the representation")
    if spec.kind == "reflection":
        data = {}
        for i in range(1, n + 1):
            data[(g.perm[i - 1] - 1, i - 1)] = Fraction(g.signs[g.perm[i - 1] - 1])
        return MatrixQ(n, n, data)
    if spec.kind == "permutation":
        data = {}
        for i in range(1, n + 1):
            for b in (1, -1):
                data[(_vindex(n, g.perm[i - 1], g.signs[g.perm[i - 1] - 1] * b), _vindex(n, i, b))] = Fraction(1)
        return MatrixQ(2 * n, 2 * n, data)
    raise ValueError(f"unknown representation kind {spec.kind!r}")


def rho_power(g: GroupElement, spec: RepSpec, k: int) -> MatrixQ:
    return kron_power(rho(g, spec), k)


# ---------------------------------------------------------------------------
# Interpolation matrices
# ---------------------------------------------------------------------------


def T_uncolored(p: dg.Partition, n: int) -> MatrixQ:
    """The 0/1 matrix of a partition on the n-dimensional space.

    Entry ((j), (i)) is 1 iff all vertices of each block carry the same
    value; for even p this is an intertwiner of the signed-permutation
    action, for general p of the plain permutation action.
    """
    k, l = p.size
    data = {}
    for values in itertools.product(range(n), repeat=p.n_blocks()):
        col = 0
        for i in range(1, k + 1):
            col = col * n + values[p.block_of(dg.bottom(i))]
        row = 0
        for j in range(1, l + 1):
            row = row * n + values[p.block_of(dg.top(j))]
        data[(row, col)] = Fraction(1)
    return MatrixQ(n**l, n**k, data)


def T_even(p: dg.Partition, n: int) -> MatrixQ:
    """T_uncolored restricted to the even diagrams (the equivariant regime)."""
    if not p.is_even():
        raise ValueError(f"{p!r} is not even")
    return T_uncolored(p, n)


def T_colored(c: dg.ColoredPartition, n: int) -> MatrixQ:
    """The 0/1 matrix of a coloured class on the 2n-dimensional space.

    A basis assignment contributes 1 iff per block the values agree and the
    products (basis sign) * (diagram label) agree; the rule is invariant
    under blockwise label flips, so it only depends on the class.
    """
    k, l = c.size
    base = c.base
    data = {}
    for choice in itertools.product(itertools.product(range(1, n + 1), (1, -1)), repeat=base.n_blocks()):
        col = 0
        for i in range(1, k + 1):
            v = dg.bottom(i)
            val, s = choice[base.block_of(v)]
            col = col * (2 * n) + _vindex(n, val, s * c.label(v))
        row = 0
        for j in range(1, l + 1):
            v = dg.top(j)
            val, s = choice[base.block_of(v)]
            row = row * (2 * n) + _vindex(n, val, s * c.label(v))
        data[(row, col)] = Fraction(1)
    return MatrixQ((2 * n) ** l, (2 * n) ** k, data)


def equivariance_check(m: MatrixQ, k: int, l: int, spec: RepSpec) -> list[dict]:
    """Does m intertwine the tensor-power actions?  Checked on group generators."""
    report = []
    for g in group_generators(spec.n):
        lhs = m @ rho_power(g, spec, k)
        rhs = rho_power(g, spec, l) @ m
        report.append(
            {
                "check": "equivariance",
                "params": {"signs": list(g.signs), "perm": list(g.perm), "k": k, "l": l},
                "pass": lhs == rhs,
            }
        )
    return report


def hom_dim(spec: RepSpec, k: int, l: int) -> int:
    """Dimension of the space of intertwiners from the k-th to the l-th power.

    Computed as the rank of the full group-averaging projector on the hom
    space.  The projector is idempotent, so its rank equals its trace, which
    collapses to an exact sum of character powers over the whole group; no
    irreducible decomposition is used anywhere.
    """
    if spec.n > 4:
        raise TooLarge("group averaging is kept to n <= 4 (|group| <= 384)")
    total = Fraction(0)
    count = 0
    for g in all_group_elements(spec.n):
        chi = rho(g, spec).trace()
        chi_inv = rho(g.inverse(), spec).trace()
        total += chi**l * chi_inv**k
        count += 1
    dim = total / count
    if dim.denominator != 1:
        raise ArithmeticError("projector trace is not an integer")
    return int(dim)


def group_average_projector(spec: RepSpec, k: int, l: int) -> MatrixQ:
    """The averaging projector itself (small sizes; used as a rank oracle)."""
    dim_space = spec.dim ** (k + l)
    if dim_space > 400:
        raise TooLarge(f"projector would be {dim_space}x{dim_space}")
    acc = MatrixQ.zero(dim_space, dim_space)
    count = 0
    for g in all_group_elements(spec.n):
        m = rho_power(g, spec, l).kron(rho_power(g.inverse(), spec, k).transpose())
        acc = acc + m
        count += 1
    return acc.scale(Fraction(1, count))


# ---------------------------------------------------------------------------
# Interpolation functors (with Karoubi image splitting)
# ---------------------------------------------------------------------------


def _rref(m: MatrixQ):
    """Reduced row echelon form; returns (pivot column list, rref rows)."""
    rows = [dict(r) for r in m.data]
    pivots = []
    rank_rows_out = []
    r = 0
    order = list(range(len(rows)))
    for col in range(m.cols):
        pivot_row = None
        for i in order[r:]:
            if rows[i].get(col):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        idx = order.index(pivot_row)
        order[r], order[idx] = order[idx], order[r]
        prow = rows[pivot_row]
        inv = Fraction(1) / prow[col]
        prow = {c: v * inv for c, v in prow.items()}
        rows[pivot_row] = prow
        for i in range(len(rows)):
            if i == pivot_row:
                continue
            factor = rows[i].get(col)
            if factor:
                tgt = rows[i]
                for c, v in prow.items():
                    nv = tgt.get(c, Fraction(0)) - factor * v
                    if nv:
                        tgt[c] = nv
                    else:
                        tgt.pop(c, None)
        pivots.append(col)
        rank_rows_out.append(prow)
        r += 1
    return pivots, rank_rows_out


def split_idempotent(m: MatrixQ):
    """Split an exact idempotent matrix as m = B @ R with R @ B = identity.

    B consists of the pivot columns of m (smallest column indices first,
    exact elimination), R of the nonzero rows of the reduced echelon form;
    the choice is fully deterministic.
    """
    if m @ m != m:
        raise ValueError("matrix is not idempotent")
    pivots, rref_rows = _rref(m)
    rank = len(pivots)
    bdata = [{} for _ in range(m.rows)]
    for r, row in enumerate(m.data):
        for j, col in enumerate(pivots):
            v = row.get(col)
            if v:
                bdata[r][j] = v
    b = MatrixQ(m.rows, rank, bdata)
    r_mat = MatrixQ(rank, m.cols, rref_rows)
    return b, r_mat


def _require_specialized(f: Morphism, kind: str, weight: int):
    if f.category.kind != kind:
        raise SpecializationMismatch(f"expected a {kind}-category morphism")
    w = f.category.loop_weight
    if not (w.is_const() and w.constant_value() == weight):
        raise SpecializationMismatch(
            f"specialize the parameter first: loop weight must be the constant {weight}, got {w}"
        )


def _matrix_of_morphism(f: Morphism, n: int, t_map) -> MatrixQ:
    rows, cols = _hom_shape(f, n)
    acc = MatrixQ.zero(rows, cols)
    for d, c in f.terms.items():
        acc = acc + t_map(d).scale(c.constant_value())
    return acc


def _hom_shape(f: Morphism, n: int):
    d = n if f.category.kind == "even" else 2 * n
    return d**f.l, d**f.k


def functor_G(f, n: int):
    """Even-category interpolation functor at the integer point n.

    Plain morphisms map to sums of block-delta matrices; Karoubi morphisms
    are realised on the deterministic pivot-column bases of their idempotent
    images.
    """
    if isinstance(f, Morphism):
        _require_specialized(f, "even", n)
        return _matrix_of_morphism(f, n, lambda d: T_even(d, n))
    return _karoubi_matrix(f, n, "even")


def functor_H(f, n: int):
    """Coloured-category interpolation functor at loop weight 2n."""
    if isinstance(f, Morphism):
        _require_specialized(f, "colored", 2 * n)
        return _matrix_of_morphism(f, n, lambda d: T_colored(d, n))
    return _karoubi_matrix(f, n, "colored")


def _karoubi_matrix(km: KaroubiMorphism, n: int, kind: str) -> MatrixQ:
    plain = functor_G if kind == "even" else functor_H

    def splittings(ob):
        out = []
        for _, e in ob.summands:
            out.append(split_idempotent(plain(e, n)))
        return out

    src = splittings(km.source)
    tgt = splittings(km.target)
    col_offsets = [0]
    for b, _ in src:
        col_offsets.append(col_offsets[-1] + b.cols)
    row_offsets = [0]
    for b, _ in tgt:
        row_offsets.append(row_offsets[-1] + b.cols)
    data = {}
    for j, (_, r_mat) in enumerate(tgt):
        for i, (b, _) in enumerate(src):
            block = r_mat @ plain(km.entries[j][i], n) @ b
            for r, row in enumerate(block.data):
                for c, v in row.items():
                    data[(row_offsets[j] + r, col_offsets[i] + c)] = v
    return MatrixQ(row_offsets[-1], col_offsets[-1], data)


# ---------------------------------------------------------------------------
# Matrix models of the presentations
# ---------------------------------------------------------------------------


def _matrix_target(presentation: str, dim: int, gens: dict, t_value) -> TargetDatum:
    return TargetDatum(
        presentation=presentation,
        gens=gens,
        compose=lambda a, b: a @ b,
        tensor=lambda a, b: a.kron(b),
        add=lambda a, b: a + b,
        scale=lambda c, m: m.scale(c),
        eq=lambda a, b: a == b,
        unit=MatrixQ.identity(1),
        zero=lambda m, n_out: MatrixQ.zero(dim**n_out, dim**m),
        t_value=Fraction(t_value),
    )


def h_matrix_datum(n: int) -> TargetDatum:
    """The permutation-space matrices of the coloured generators at size n.

    The generating object is the 2n-dimensional space; the parameter
    specialises to 2n.
    """
    d = 2 * n
    merge = {}
    split = {}
    cross = {}
    for i in range(1, n + 1):
        for b in (1, -1):
            x = _vindex(n, i, b)
            merge[(x, x * d + x)] = Fraction(1)
            split[(x * d + x, x)] = Fraction(1)
    for x in range(d):
        for y in range(d):
            cross[(y * d + x, x * d + y)] = Fraction(1)
    gens = {
        ("id", None): MatrixQ.identity(d),
        ("merge", None): MatrixQ(d, d * d, merge),
        ("split", None): MatrixQ(d * d, d, split),
        ("cross", None): MatrixQ(d * d, d * d, cross),
        ("token", 1): MatrixQ.identity(d),
        ("token", -1): MatrixQ(
            d, d, {(_vindex(n, i, -b), _vindex(n, i, b)): Fraction(1) for i in range(1, n + 1) for b in (1, -1)}
        ),
        ("bottompin", None): MatrixQ(d, 1, {(x, 0): Fraction(1) for x in range(d)}),
        ("toppin", None): MatrixQ(1, d, {(0, x): Fraction(1) for x in range(d)}),
        ("lolly", None): MatrixQ(1, 1, {(0, 0): Fraction(2 * n)}),
    }
    return _matrix_target("parz2", d, gens, 2 * n)


def g_matrix_datum(n: int) -> TargetDatum:
    """The reflection-space matrices of the even generators at size n."""
    fourlegs = {}
    cap_m = {}
    cup_m = {}
    cross = {}
    for i in range(n):
        fourlegs[(i * n + i, i * n + i)] = Fraction(1)
        cap_m[(0, i * n + i)] = Fraction(1)
        cup_m[(i * n + i, 0)] = Fraction(1)
    for x in range(n):
        for y in range(n):
            cross[(y * n + x, x * n + y)] = Fraction(1)
    gens = {
        ("id", None): MatrixQ.identity(n),
        ("fourlegs", None): MatrixQ(n * n, n * n, fourlegs),
        ("cap", None): MatrixQ(1, n * n, cap_m),
        ("cup", None): MatrixQ(n * n, 1, cup_m),
        ("cross", None): MatrixQ(n * n, n * n, cross),
    }
    return _matrix_target("part", n, gens, n)
