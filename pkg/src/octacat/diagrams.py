"""Partition diagrams: the combinatorial layer underneath both categories.

A diagram of size (k, l) is a set partition of k bottom vertices and l top
vertices.  This module provides uncoloured partitions, their Z2-coloured
refinement (a +-1 label per vertex, taken up to flipping all labels of a
block at once), and the operations that generate the diagram calculus:
horizontal concatenation, involution, vertical stacking with loop counts,
permutation diagrams and normal forms.

Everything is stored in a fixed canonical form so that value equality is
exactly diagram (respectively, colour-class) equality.
"""

from __future__ import annotations

import itertools
import re
from typing import NamedTuple

__all__ = [
    "BOTTOM",
    "TOP",
    "Vertex",
    "bottom",
    "top",
    "Partition",
    "ColoredPartition",
    "StackResult",
    "NormalForm",
    "DiagramError",
    "DuplicateVertex",
    "MissingVertex",
    "OutOfRangeVertex",
    "SizeMismatch",
    "make_partition",
    "identity_partition",
    "perm_partition",
    "cap",
    "cup",
    "fourlegs",
    "stack",
    "colored_canon",
    "colored_stack",
    "normal_form",
    "reassemble",
    "enumerate_diagrams",
    "bell_number",
    "parse_partition",
    "parse_colored",
    "format_partition",
    "format_colored",
]

BOTTOM = 0
TOP = 1


class Vertex(NamedTuple):
    """A diagram vertex: bottom row or top row, with a 1-based index."""

    row: int
    index: int

    def __str__(self):
        return f"{self.index}'" if self.row == TOP else str(self.index)


def bottom(i: int) -> Vertex:
    return Vertex(BOTTOM, i)


def top(i: int) -> Vertex:
    return Vertex(TOP, i)


class DiagramError(ValueError):
    pass


class DuplicateVertex(DiagramError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} appears in more than one block")


class MissingVertex(DiagramError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not covered by any block")


class OutOfRangeVertex(DiagramError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} lies outside the diagram size")


class SizeMismatch(DiagramError):
    pass


class Partition:
    """A set partition of {1..k} bottom and {1..l} top vertices.

    Blocks are stored sorted internally (bottom before top, then by index)
    and the block list is sorted by each block's minimal vertex, so two
    Partition values compare equal iff they are the same set partition.
    """

    __slots__ = ("k", "l", "blocks", "_hash")

    def __init__(self, k: int, l: int, blocks, _validated: bool = False):
        if not _validated:
            blocks = _validate_blocks(k, l, blocks)
        self.k = k
        self.l = l
        self.blocks = blocks
        self._hash = hash((k, l, blocks))

    # -- basic structure ---------------------------------------------------

    @property
    def size(self):
        return (self.k, self.l)

    def n_blocks(self) -> int:
        return len(self.blocks)

    def block_of(self, v: Vertex) -> int:
        for i, blk in enumerate(self.blocks):
            if v in blk:
                return i
        raise MissingVertex(v)

    def block_index_map(self) -> dict:
        out = {}
        for i, blk in enumerate(self.blocks):
            for v in blk:
                out[v] = i
        return out

    def is_even(self) -> bool:
        """True iff every block has an even number of vertices."""
        return all(len(b) % 2 == 0 for b in self.blocks)

    # -- operations ----------------------------------------------------------

    def tensor(self, other: "Partition") -> "Partition":
        """Horizontal concatenation; other's vertices are shifted by (k, l)."""
        shifted = tuple(
            tuple(Vertex(v.row, v.index + (self.k if v.row == BOTTOM else self.l)) for v in blk)
            for blk in other.blocks
        )
        blocks = _canon_blocks(self.blocks + shifted)
        return Partition(self.k + other.k, self.l + other.l, blocks, _validated=True)

    def involution(self) -> "Partition":
        """Swap the two rows: a diagram of size (k,l) becomes one of size (l,k)."""
        blocks = tuple(
            tuple(Vertex(TOP if v.row == BOTTOM else BOTTOM, v.index) for v in blk)
            for blk in self.blocks
        )
        return Partition(self.l, self.k, _canon_blocks(blocks), _validated=True)

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.k == other.k and self.l == other.l and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Partition({format_partition(self)!r})"


def _canon_blocks(blocks):
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def _validate_blocks(k, l, blocks):
    seen = set()
    for blk in blocks:
        for v in blk:
            v = Vertex(*v)
            if v.row not in (BOTTOM, TOP) or v.index < 1:
                raise OutOfRangeVertex(v)
            if (v.row == BOTTOM and v.index > k) or (v.row == TOP and v.index > l):
                raise OutOfRangeVertex(v)
            if v in seen:
                raise DuplicateVertex(v)
            seen.add(v)
    for i in range(1, k + 1):
        if Vertex(BOTTOM, i) not in seen:
            raise MissingVertex(Vertex(BOTTOM, i))
    for j in range(1, l + 1):
        if Vertex(TOP, j) not in seen:
            raise MissingVertex(Vertex(TOP, j))
    return _canon_blocks(tuple(Vertex(*v) for v in blk) for blk in blocks if blk)


def make_partition(k: int, l: int, blocks) -> Partition:
    """Build a partition of size (k, l) from an iterable of vertex iterables.

    Rejects ill-formed input: duplicate, missing or out-of-range vertices
    each raise a dedicated error naming the offending vertex.
    """
    return Partition(k, l, blocks)


def identity_partition(n: int) -> Partition:
    return Partition(n, n, tuple((bottom(i), top(i)) for i in range(1, n + 1)), _validated=True)


def perm_partition(sigma) -> Partition:
    """The diagram of a permutation: blocks {i, sigma(i)'}.

    ``sigma`` is a sequence of 1-based images; stacking these diagrams is a
    loop-free monoid homomorphism.
    """
    sigma = tuple(sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise DiagramError(f"not a permutation of 1..{n}: {sigma}")
    blocks = tuple((bottom(i), top(sigma[i - 1])) for i in range(1, n + 1))
    return Partition(n, n, _canon_blocks(blocks), _validated=True)


def cap() -> Partition:
    """The one-block diagram {1,2} of size (2,0)."""
    return Partition(2, 0, ((bottom(1), bottom(2)),), _validated=True)


def cup() -> Partition:
    """The one-block diagram {1',2'} of size (0,2)."""
    return Partition(0, 2, ((top(1), top(2)),), _validated=True)


def fourlegs() -> Partition:
    """The single-block diagram {1,2,1',2'} of size (2,2)."""
    return Partition(2, 2, ((bottom(1), bottom(2), top(1), top(2)),), _validated=True)


class StackResult(NamedTuple):
    """Outcome of a vertical concatenation: the composite and its loop count."""

    composite: object
    loops: int


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def stack(q: Partition, p: Partition) -> StackResult:
    """Stack q on top of p (q's bottom row glued to p's top row).

    Returns the composite of size (p.k, q.l) together with the number of
    loops: connected components of the three-row graph that live entirely in
    the glued middle row.
    """
    if q.k != p.l:
        raise SizeMismatch(f"cannot stack ({q.k},{q.l}) onto ({p.k},{p.l})")
    k, l, m = p.k, p.l, q.l
    # vertex ids: p bottoms 0..k-1, middle k..k+l-1, q tops k+l..k+l+m-1
    uf = _UnionFind(k + l + m)

    def pid(v):
        return v.index - 1 if v.row == BOTTOM else k + v.index - 1

    def qid(v):
        return k + v.index - 1 if v.row == BOTTOM else k + l + v.index - 1

    for blk in p.blocks:
        first = pid(blk[0])
        for v in blk[1:]:
            uf.union(first, pid(v))
    for blk in q.blocks:
        first = qid(blk[0])
        for v in blk[1:]:
            uf.union(first, qid(v))

    comps = {}
    for x in range(k + l + m):
        comps.setdefault(uf.find(x), []).append(x)

    loops = 0
    blocks = []
    for members in comps.values():
        outer = [x for x in members if x < k or x >= k + l]
        if not outer:
            loops += 1
            continue
        blocks.append(
            tuple(
                Vertex(BOTTOM, x + 1) if x < k else Vertex(TOP, x - k - l + 1)
                for x in sorted(outer)
            )
        )
    composite = Partition(k, m, _canon_blocks(blocks), _validated=True)
    return StackResult(composite, loops)


# ---------------------------------------------------------------------------
# Z2-coloured partitions
# ---------------------------------------------------------------------------


class ColoredPartition:
    """A partition with a +-1 label per vertex, up to blockwise sign flips.

    The stored labels are the canonical class representative: in every block
    the minimal vertex carries label +1.  Labels are kept as a tuple indexed
    bottom 1..k then top 1..l.
    """

    __slots__ = ("base", "labels", "_hash")

    def __init__(self, base: Partition, labels, _canonical: bool = False):
        labels = tuple(int(x) for x in labels)
        if len(labels) != base.k + base.l or any(x not in (1, -1) for x in labels):
            raise DiagramError(f"bad label vector of length {len(labels)} for size {base.size}")
        if not _canonical:
            labels = _canon_labels(base, labels)
        self.base = base
        self.labels = labels
        self._hash = hash((base, labels))

    @property
    def k(self):
        return self.base.k

    @property
    def l(self):
        return self.base.l

    @property
    def size(self):
        return self.base.size

    def label(self, v: Vertex) -> int:
        return self.labels[self._pos(v)]

    def _pos(self, v: Vertex) -> int:
        return v.index - 1 if v.row == BOTTOM else self.base.k + v.index - 1

    def is_even(self) -> bool:
        return self.base.is_even()

    def tensor(self, other: "ColoredPartition") -> "ColoredPartition":
        base = self.base.tensor(other.base)
        k1, l1, k2, l2 = self.k, self.l, other.k, other.l
        labels = (
            self.labels[:k1]
            + other.labels[:k2]
            + self.labels[k1 : k1 + l1]
            + other.labels[k2 : k2 + l2]
        )
        return ColoredPartition(base, labels)

    def involution(self) -> "ColoredPartition":
        base = self.base.involution()
        labels = self.labels[self.k :] + self.labels[: self.k]
        return ColoredPartition(base, labels)

    def __eq__(self, other):
        if not isinstance(other, ColoredPartition):
            return NotImplemented
        return self.base == other.base and self.labels == other.labels

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ColoredPartition({format_colored(self)!r})"


def _canon_labels(base: Partition, labels):
    labels = list(labels)

    def pos(v):
        return v.index - 1 if v.row == BOTTOM else base.k + v.index - 1

    for blk in base.blocks:
        lead = labels[pos(blk[0])]  # blocks are stored sorted, blk[0] is minimal
        if lead == -1:
            for v in blk:
                labels[pos(v)] = -labels[pos(v)]
    return tuple(labels)


def colored_canon(p: Partition, z) -> ColoredPartition:
    """Canonical class representative of (p, z): minimal vertex of each block +1."""
    return ColoredPartition(p, z)


def all_plus(p: Partition) -> ColoredPartition:
    """The uncoloured diagram p viewed as a coloured one (all labels +1)."""
    return ColoredPartition(p, (1,) * (p.k + p.l), _canonical=True)


def colored_stack(q: ColoredPartition, p: ColoredPartition):
    """Vertical concatenation of coloured classes, or None when incompatible.

    Compatibility is decided by a parity 2-colouring: one node per block of p
    and of q, one edge per shared middle vertex, weighted by the product of
    the two labels meeting there.  The classes compose iff the constraint
    graph is consistent; the colouring tells which blocks to sign-flip so
    every middle vertex carries product +1, after which labels pass straight
    through to the composite.
    """
    if q.k != p.l:
        raise SizeMismatch(f"cannot stack ({q.k},{q.l}) onto ({p.k},{p.l})")
    l = p.l
    np_, nq = p.base.n_blocks(), q.base.n_blocks()
    pmap = p.base.block_index_map()
    qmap = q.base.block_index_map()

    # parity union-find over p-blocks (0..np-1) and q-blocks (np..np+nq-1)
    parent = list(range(np_ + nq))
    parity = [0] * (np_ + nq)  # parity relative to parent

    def find(x):
        root, par = x, 0
        while parent[root] != root:
            par ^= parity[root]
            root = parent[root]
        # path compression, keeping parities relative to the root
        result = par
        while parent[x] != root:
            nxt, nxt_par = parent[x], parity[x]
            parent[x], parity[x] = root, par
            par ^= nxt_par
            x = nxt
        return root, result

    for j in range(1, l + 1):
        bp = pmap[Vertex(TOP, j)]
        bq = np_ + qmap[Vertex(BOTTOM, j)]
        w = p.label(Vertex(TOP, j)) * q.labels[j - 1]
        need = 0 if w == 1 else 1
        ra, pa = find(bp)
        rb, pb = find(bq)
        if ra == rb:
            if pa ^ pb != need:
                return None
        else:
            parent[rb] = ra
            parity[rb] = pa ^ pb ^ need

    flip_p = [find(i)[1] for i in range(np_)]
    flip_q = [find(np_ + i)[1] for i in range(nq)]

    plabels = [
        s * (-1 if flip_p[pmap[v]] else 1)
        for v, s in zip(_vertex_order(p.base), p.labels)
    ]
    qlabels = [
        s * (-1 if flip_q[qmap[v]] else 1)
        for v, s in zip(_vertex_order(q.base), q.labels)
    ]

    composite, loops = stack(q.base, p.base)
    labels = plabels[: p.k] + qlabels[q.k :]
    return StackResult(ColoredPartition(composite, labels), loops)


def _vertex_order(base: Partition):
    return [Vertex(BOTTOM, i) for i in range(1, base.k + 1)] + [
        Vertex(TOP, j) for j in range(1, base.l + 1)
    ]


def colored_stack_bruteforce(q: ColoredPartition, p: ColoredPartition):
    """Oracle for colored_stack: try all sign flips of blocks of p and q.

    Exponential in the number of blocks; used only by tests.
    """
    if q.k != p.l:
        raise SizeMismatch(f"cannot stack ({q.k},{q.l}) onto ({p.k},{p.l})")
    pmap = p.base.block_index_map()
    qmap = q.base.block_index_map()
    for pflips in itertools.product((1, -1), repeat=p.base.n_blocks()):
        for qflips in itertools.product((1, -1), repeat=q.base.n_blocks()):
            pl = [s * pflips[pmap[v]] for v, s in zip(_vertex_order(p.base), p.labels)]
            ql = [s * qflips[qmap[v]] for v, s in zip(_vertex_order(q.base), q.labels)]
            ok = True
            for blk in q.base.blocks:
                mids = [v for v in blk if v.row == BOTTOM]
                prods = {pl[p.k + v.index - 1] * ql[v.index - 1] for v in mids}
                if len(prods) > 1:
                    ok = False
                    break
            if not ok:
                continue
            composite, loops = stack(q.base, p.base)
            qblock_prod = {}
            for blk in q.base.blocks:
                mids = [v for v in blk if v.row == BOTTOM]
                if mids:
                    v = mids[0]
                    qblock_prod[qmap[v]] = pl[p.k + v.index - 1] * ql[v.index - 1]
            labels = pl[: p.k] + [
                ql[q.k + j - 1] * qblock_prod.get(qmap[Vertex(TOP, j)], 1)
                for j in range(1, q.l + 1)
            ]
            return StackResult(ColoredPartition(composite, labels), loops)
    return None


# ---------------------------------------------------------------------------
# Normal forms
# ---------------------------------------------------------------------------


class NormalForm(NamedTuple):
    """A factorisation p = perm(sigma) o (tensor of one-block diagrams) o perm(rho).

    ``block_order`` lists indices into p.blocks giving the order of the
    one-block factors in the middle diagram; both stackings are loop-free.
    """

    sigma: tuple
    rho: tuple
    block_order: tuple


def normal_form(p: Partition) -> NormalForm:
    """Factor p through permutations and a non-crossing middle diagram.

    Blocks are ordered by minimal bottom vertex, ties broken by minimal top
    vertex; bottomless blocks come last.
    """
    inf = float("inf")

    def key(i):
        blk = p.blocks[i]
        bmin = min((v.index for v in blk if v.row == BOTTOM), default=inf)
        tmin = min((v.index for v in blk if v.row == TOP), default=inf)
        return (bmin, tmin)

    order = tuple(sorted(range(len(p.blocks)), key=key))

    rho = [0] * p.k
    sigma = [0] * p.l
    boff = toff = 0
    for i in order:
        blk = p.blocks[i]
        bots = sorted(v.index for v in blk if v.row == BOTTOM)
        tops = sorted(v.index for v in blk if v.row == TOP)
        for m, b in enumerate(bots, start=1):
            rho[b - 1] = boff + m
        for m, tv in enumerate(tops, start=1):
            sigma[toff + m - 1] = tv
        boff += len(bots)
        toff += len(tops)
    return NormalForm(tuple(sigma), tuple(rho), order)


def noncrossing_middle(p: Partition, block_order) -> Partition:
    """The tensor of one-block diagrams of p in the given block order."""
    mid = Partition(0, 0, (), _validated=True)
    for i in block_order:
        blk = p.blocks[i]
        ki = sum(1 for v in blk if v.row == BOTTOM)
        li = len(blk) - ki
        one = Partition(
            ki,
            li,
            (tuple(bottom(j) for j in range(1, ki + 1)) + tuple(top(j) for j in range(1, li + 1)),),
            _validated=True,
        )
        mid = mid.tensor(one)
    return mid


def reassemble(p: Partition, nf: NormalForm) -> Partition:
    """Rebuild perm(sigma) o middle o perm(rho); loop-freeness is asserted."""
    mid = noncrossing_middle(p, nf.block_order)
    lower = stack(mid, perm_partition(nf.rho)) if p.k else StackResult(mid, 0)
    assert lower.loops == 0
    upper = stack(perm_partition(nf.sigma), lower.composite) if p.l else lower
    assert upper.loops == 0
    return upper.composite


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _rgs(n: int):
    """Restricted growth strings of length n (set partitions in canonical order)."""
    if n == 0:
        yield ()
        return
    a = [0] * n
    b = [0] * n  # b[i] = max(a[0..i-1])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == b[i] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, n):
            b[j] = max(b[i], a[i])
            a[j] = 0


def _partition_from_rgs(k: int, l: int, rgs) -> Partition:
    verts = _vertex_order_kl(k, l)
    blocks = {}
    for v, c in zip(verts, rgs):
        blocks.setdefault(c, []).append(v)
    return Partition(k, l, tuple(tuple(b) for b in blocks.values()), _validated=True)


def _vertex_order_kl(k, l):
    return [Vertex(BOTTOM, i) for i in range(1, k + 1)] + [Vertex(TOP, j) for j in range(1, l + 1)]


def enumerate_diagrams(kind: str, k: int, l: int) -> list:
    """Complete duplicate-free enumeration of diagram bases in canonical order.

    kind 'all': every partition of the k+l vertices (restricted-growth order);
    kind 'even': the all-blocks-even subset; kind 'colored_classes': coloured
    classes, i.e. partitions times all canonical labelings (free labels on the
    non-minimal vertices of each block).
    """
    if kind == "all":
        return [_partition_from_rgs(k, l, r) for r in _rgs(k + l)]
    if kind == "even":
        return [p for p in enumerate_diagrams("all", k, l) if p.is_even()]
    if kind == "colored_classes":
        out = []
        verts = _vertex_order_kl(k, l)
        for p in enumerate_diagrams("all", k, l):
            mins = {blk[0] for blk in p.blocks}
            free = [i for i, v in enumerate(verts) if v not in mins]
            for signs in itertools.product((1, -1), repeat=len(free)):
                labels = [1] * (k + l)
                for i, s in zip(free, signs):
                    labels[i] = s
                out.append(ColoredPartition(p, labels, _canonical=True))
        return out
    raise ValueError(f"unknown enumeration kind {kind!r}")


def bell_number(n: int) -> int:
    """Bell numbers by the triangle recurrence (independent counting oracle)."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


# ---------------------------------------------------------------------------
# Text grammar:  k>l: {v,...},{v,...}   with optional label suffix  v:-1
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(r"^\s*(\d+)\s*>\s*(\d+)\s*:\s*(.*)$", re.S)
_VERTEX_RE = re.compile(r"^(\d+)(')?(?::(-?1))?$")


def format_partition(p: Partition) -> str:
    body = ",".join("{" + ",".join(str(v) for v in blk) + "}" for blk in p.blocks)
    return f"{p.k}>{p.l}:" + (" " + body if body else "")


def format_colored(c: ColoredPartition) -> str:
    def vtxt(v):
        s = str(v)
        return s + ":-1" if c.label(v) == -1 else s

    body = ",".join("{" + ",".join(vtxt(v) for v in blk) + "}" for blk in c.base.blocks)
    return f"{c.k}>{c.l}:" + (" " + body if body else "")


def _parse_blocks(text: str):
    text = text.strip()
    blocks = []
    pos = 0
    while pos < len(text):
        if text[pos] == ",":
            pos += 1
            continue
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "{":
            raise DiagramError(f"expected '{{' at position {pos} in {text!r}")
        end = text.find("}", pos)
        if end < 0:
            raise DiagramError(f"unterminated block in {text!r}")
        inner = text[pos + 1 : end].strip()
        entries = [e.strip() for e in inner.split(",")] if inner else []
        blocks.append(entries)
        pos = end + 1
    return blocks


def _parse_literal(text: str):
    m = _HEADER_RE.match(text)
    if not m:
        raise DiagramError(f"expected 'k>l: ...' literal, got {text!r}")
    k, l = int(m.group(1)), int(m.group(2))
    blocks = []
    labels = {}
    for raw in _parse_blocks(m.group(3)):
        blk = []
        for entry in raw:
            vm = _VERTEX_RE.match(entry)
            if not vm:
                raise DiagramError(f"bad vertex token {entry!r} in {text!r}")
            v = Vertex(TOP if vm.group(2) else BOTTOM, int(vm.group(1)))
            blk.append(v)
            if vm.group(3):
                labels[v] = int(vm.group(3))
        blocks.append(blk)
    return k, l, blocks, labels


def parse_partition(text: str) -> Partition:
    k, l, blocks, labels = _parse_literal(text)
    if labels:
        raise DiagramError(f"labels in uncoloured literal {text!r}")
    return make_partition(k, l, blocks)


def parse_colored(text: str) -> ColoredPartition:
    k, l, blocks, labels = _parse_literal(text)
    base = make_partition(k, l, blocks)
    z = [labels.get(v, 1) for v in _vertex_order_kl(k, l)]
    return ColoredPartition(base, z)
