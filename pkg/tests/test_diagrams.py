import itertools

import pytest

from octacat import diagrams as dg
from octacat.diagrams import (
    ColoredPartition,
    DuplicateVertex,
    MissingVertex,
    OutOfRangeVertex,
    SizeMismatch,
    bottom,
    top,
)

PAPER_EXAMPLE = "3>4: {1,3,1'},{2,2',3',4'}"


def sizes_up_to(total):
    for k in range(total + 1):
        for l in range(total + 1 - k):
            yield k, l


# -- construction and validation ------------------------------------------------


def test_make_partition_paper_example():
    p = dg.make_partition(3, 4, [[bottom(1), bottom(3), top(1)], [bottom(2), top(2), top(3), top(4)]])
    assert p.size == (3, 4)
    assert dg.format_partition(p) == PAPER_EXAMPLE


def test_make_partition_empty():
    p = dg.make_partition(0, 0, [])
    assert p.size == (0, 0) and p.blocks == ()
    assert dg.format_partition(p) == "0>0:"


def test_make_partition_validation_errors():
    with pytest.raises(MissingVertex) as exc:
        dg.make_partition(2, 0, [[bottom(1)]])
    assert exc.value.vertex == bottom(2)
    with pytest.raises(DuplicateVertex):
        dg.make_partition(1, 1, [[bottom(1)], [bottom(1), top(1)]])
    with pytest.raises(OutOfRangeVertex):
        dg.make_partition(1, 0, [[bottom(1), top(1)]])


def test_equality_is_canonical():
    a = dg.make_partition(1, 1, [[top(1), bottom(1)]])
    b = dg.make_partition(1, 1, [[bottom(1), top(1)]])
    assert a == b and hash(a) == hash(b)


# -- tensor / involution ---------------------------------------------------------


def test_tensor_identities():
    id1 = dg.identity_partition(1)
    assert id1.tensor(id1) == dg.identity_partition(2)


def test_tensor_cap_cup():
    t = dg.cap().tensor(dg.cup())
    assert t == dg.parse_partition("2>2: {1,2},{1',2'}")


def test_tensor_size_additivity():
    p = dg.parse_partition(PAPER_EXAMPLE)
    q = dg.cup()
    assert p.tensor(q).size == (3, 6)


def test_involution_cap():
    assert dg.cap().involution() == dg.cup()


def test_involution_is_involutive_and_relabels():
    p = dg.parse_partition(PAPER_EXAMPLE)
    assert p.involution().involution() == p
    assert dg.format_partition(p.involution()) == "4>3: {1,1',3'},{2,3,4,2'}"


def test_involution_involutive_everywhere():
    for k, l in sizes_up_to(4):
        for p in dg.enumerate_diagrams("all", k, l):
            q = p.involution()
            assert q.size == (l, k)
            assert q.involution() == p


# -- stacking ---------------------------------------------------------------------


def test_stack_cap_over_cup_is_one_loop():
    res = dg.stack(dg.cap(), dg.cup())
    assert res.composite == dg.make_partition(0, 0, [])
    assert res.loops == 1


def test_stack_identity_law():
    for k, l in sizes_up_to(4):
        for p in dg.enumerate_diagrams("all", k, l):
            assert dg.stack(dg.identity_partition(l), p) == (p, 0)
            assert dg.stack(p, dg.identity_partition(k)) == (p, 0)


def test_stack_fourlegs_idempotent():
    fl = dg.fourlegs()
    assert dg.stack(fl, fl) == (fl, 0)


def test_stack_size_mismatch():
    with pytest.raises(SizeMismatch):
        dg.stack(dg.cap(), dg.cap())


def test_stack_associativity_with_loop_bookkeeping():
    for k, l, m, n in itertools.product(range(3), repeat=4):
        for p in dg.enumerate_diagrams("all", k, l):
            for q in dg.enumerate_diagrams("all", l, m):
                qp = dg.stack(q, p)
                for r in dg.enumerate_diagrams("all", m, n):
                    rq = dg.stack(r, q)
                    left = dg.stack(r, qp.composite)
                    right = dg.stack(rq.composite, p)
                    assert left.composite == right.composite
                    assert left.loops + qp.loops == right.loops + rq.loops


# -- evenness ---------------------------------------------------------------------


def test_is_even_examples():
    assert dg.identity_partition(1).is_even()
    assert not dg.parse_partition("2>1: {1,2,1'}").is_even()
    assert not dg.parse_partition(PAPER_EXAMPLE).is_even()


def test_even_closed_under_operations():
    for k, l in sizes_up_to(5):
        for p in dg.enumerate_diagrams("even", k, l):
            assert p.involution().is_even()
            assert p.tensor(dg.cap()).is_even()
    for k, l, m in itertools.product(range(3), repeat=3):
        for p in dg.enumerate_diagrams("even", k, l):
            for q in dg.enumerate_diagrams("even", l, m):
                assert dg.stack(q, p).composite.is_even()


# -- permutation diagrams -----------------------------------------------------------


def test_perm_partition_identity():
    assert dg.perm_partition((1, 2, 3)) == dg.identity_partition(3)


def test_perm_partition_transposition():
    assert dg.perm_partition((2, 1)) == dg.parse_partition("2>2: {1,2'},{2,1'}")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_perm_partition_monoid_homomorphism(n):
    for s in itertools.permutations(range(1, n + 1)):
        ps = dg.perm_partition(s)
        for r in itertools.permutations(range(1, n + 1)):
            res = dg.stack(ps, dg.perm_partition(r))
            assert res.loops == 0
            sr = tuple(s[r[i] - 1] for i in range(n))
            assert res.composite == dg.perm_partition(sr)


# -- normal forms -----------------------------------------------------------------


def test_normal_form_noncrossing_is_trivial():
    p = dg.cap().tensor(dg.identity_partition(1))
    nf = dg.normal_form(p)
    assert nf.sigma == (1,)
    assert nf.rho == (1, 2, 3)


def test_normal_form_transposition():
    p = dg.perm_partition((2, 1))
    nf = dg.normal_form(p)
    assert dg.noncrossing_middle(p, nf.block_order) == dg.identity_partition(2)
    assert sorted(nf.sigma) == [1, 2] and sorted(nf.rho) == [1, 2]
    assert (nf.sigma, nf.rho) != ((1, 2), (1, 2))
    assert dg.reassemble(p, nf) == p


def test_normal_form_reassembly_exhaustive():
    for k, l in sizes_up_to(5):
        for p in dg.enumerate_diagrams("all", k, l):
            assert dg.reassemble(p, dg.normal_form(p)) == p


# -- colouring ---------------------------------------------------------------------


def test_colored_canon_all_plus_unchanged():
    p = dg.parse_partition(PAPER_EXAMPLE)
    c = dg.colored_canon(p, (1,) * 7)
    assert c.labels == (1,) * 7


def test_colored_canon_singleton_flip():
    c = dg.colored_canon(dg.make_partition(0, 1, [[top(1)]]), (-1,))
    assert c.labels == (1,)


def test_colored_canon_class_representative():
    p = dg.identity_partition(1)
    assert dg.colored_canon(p, (-1, 1)) == dg.colored_canon(p, (1, -1))


def test_colored_canon_idempotent_and_orbit_constant():
    for k, l in sizes_up_to(4):
        for p in dg.enumerate_diagrams("all", k, l):
            for z in itertools.product((1, -1), repeat=k + l):
                c = dg.colored_canon(p, z)
                assert dg.colored_canon(c.base, c.labels) == c
                # flipping any block keeps the class
                for blk in p.blocks:
                    z2 = list(z)
                    for v in blk:
                        i = v.index - 1 if v.row == dg.BOTTOM else k + v.index - 1
                        z2[i] = -z2[i]
                    assert dg.colored_canon(p, z2) == c


def test_colored_involution_tensor():
    c = dg.parse_colored("1>2: {1,1':-1},{2':-1}")
    assert c.involution().involution() == c
    t = c.tensor(c)
    assert t.size == (2, 4)
    assert t.involution().involution() == t


# -- coloured stacking ----------------------------------------------------------------


def test_colored_stack_uncoloured_case_matches_plain_stack():
    for k, l, m in itertools.product(range(3), repeat=3):
        for p in dg.enumerate_diagrams("all", k, l):
            for q in dg.enumerate_diagrams("all", l, m):
                plain = dg.stack(q, p)
                col = dg.colored_stack(dg.all_plus(q), dg.all_plus(p))
                assert col is not None
                assert col.loops == plain.loops
                assert col.composite == dg.all_plus(plain.composite)


def test_colored_stack_merge_after_tokens_compatible():
    merge = dg.parse_colored("2>1: {1,2,1'}")
    for g in (1, -1):
        for h in (1, -1):
            strands = dg.parse_colored(
                "2>2: {1,1'%s},{2,2'%s}" % (":-1" if g == -1 else "", ":-1" if h == -1 else "")
            )
            res = dg.colored_stack(merge, strands)
            assert res is not None and res.loops == 0
            want = dg.colored_canon(dg.parse_partition("2>1: {1,2,1'}"), (g, h, 1))
            assert res.composite == want


def test_colored_stack_incompatible_split():
    split_pm = dg.parse_colored("1>2: {1,1',2':-1}")
    merge = dg.parse_colored("2>1: {1,2,1'}")
    assert dg.colored_stack(merge, split_pm) is None


def test_colored_stack_against_bruteforce_oracle():
    for k, l, m in itertools.product(range(3), repeat=3):
        for p in dg.enumerate_diagrams("colored_classes", k, l):
            for q in dg.enumerate_diagrams("colored_classes", l, m):
                fast = dg.colored_stack(q, p)
                slow = dg.colored_stack_bruteforce(q, p)
                assert (fast is None) == (slow is None)
                if fast is not None:
                    assert fast == slow


# -- enumeration -------------------------------------------------------------------


def test_enumerate_counts():
    assert len(dg.enumerate_diagrams("all", 2, 2)) == 15
    assert dg.bell_number(4) == 15
    evens = dg.enumerate_diagrams("even", 2, 2)
    assert len(evens) == 4
    expected = {
        dg.parse_partition("2>2: {1,2},{1',2'}"),
        dg.parse_partition("2>2: {1,1'},{2,2'}"),
        dg.parse_partition("2>2: {1,2'},{2,1'}"),
        dg.parse_partition("2>2: {1,2,1',2'}"),
    }
    assert set(evens) == expected
    assert len(dg.enumerate_diagrams("colored_classes", 1, 1)) == 3


def test_enumerate_no_duplicates():
    for k, l in sizes_up_to(5):
        allp = dg.enumerate_diagrams("all", k, l)
        assert len(set(allp)) == len(allp) == dg.bell_number(k + l)
        classes = dg.enumerate_diagrams("colored_classes", k, l)
        assert len(set(classes)) == len(classes)
        formula = sum(2 ** (k + l - p.n_blocks()) for p in allp)
        assert len(classes) == formula


# -- text grammar --------------------------------------------------------------------


def test_grammar_round_trip_uncoloured():
    for k, l in sizes_up_to(4):
        for p in dg.enumerate_diagrams("all", k, l):
            assert dg.parse_partition(dg.format_partition(p)) == p


def test_grammar_round_trip_coloured():
    for k, l in sizes_up_to(4):
        for c in dg.enumerate_diagrams("colored_classes", k, l):
            assert dg.parse_colored(dg.format_colored(c)) == c


def test_grammar_examples():
    c = dg.parse_colored("2>0: {1:-1,2}")
    assert c.base == dg.cap()
    # canonical representative puts +1 on the minimal vertex
    assert c.labels == (1, -1)
    with pytest.raises(dg.DiagramError):
        dg.parse_partition("2>0 {1,2}")
