import itertools
import random
from fractions import Fraction

import pytest

from octacat import diagrams as dg
from octacat.linear_category import KaroubiObject, Morphism, PAR_Z2_2T, REP_H0, karoubi_id
from octacat.matrix_rep import (
    GroupElement,
    MatrixQ,
    RepSpec,
    SpecializationMismatch,
    T_colored,
    T_even,
    T_uncolored,
    TooLarge,
    all_group_elements,
    equivariance_check,
    functor_G,
    functor_H,
    g_matrix_datum,
    group_average_projector,
    group_generators,
    h_matrix_datum,
    hom_dim,
    kron_power,
    rho,
    rho_power,
    split_idempotent,
)
from octacat.poly import PolyQ
from octacat.presentations import eval_in_target, parse_word, verify_datum, verify_relations


# -- MatrixQ ------------------------------------------------------------------------


def test_matrix_basics():
    a = MatrixQ(2, 2, {(0, 0): 1, (0, 1): Fraction(1, 2)})
    b = MatrixQ(2, 2, {(1, 0): 2})
    assert (a @ b) == MatrixQ(2, 2, {(0, 0): 1})
    assert (a + b).transpose() == MatrixQ(2, 2, {(0, 0): 1, (1, 0): Fraction(1, 2), (0, 1): 2})
    assert a.kron(MatrixQ.identity(2)).rows == 4
    assert MatrixQ.identity(3).rank() == 3
    assert a.trace() == 1


def test_matrix_json_round_trip():
    m = MatrixQ(2, 3, {(0, 2): Fraction(-1, 3), (1, 0): 5})
    assert MatrixQ.from_json_dict(m.to_json_dict()) == m


# -- group ----------------------------------------------------------------------------


def test_group_order():
    assert len(list(all_group_elements(2))) == 8
    assert len(list(all_group_elements(3))) == 48


def test_group_product_rule():
    a = GroupElement((1, -1), (2, 1))
    b = GroupElement((-1, 1), (1, 2))
    ab = a * b
    assert ab.perm == (2, 1)
    # signs: (a * (b o sigma^{-1}))_i = a_i * b_{sigma^{-1}(i)}
    assert ab.signs == (1 * -1, -1 * 1)
    assert (a * a.inverse()) == GroupElement.identity(2)


@pytest.mark.parametrize("kind", ["reflection", "permutation"])
def test_rho_is_a_homomorphism_exhaustive_n2(kind):
    spec = RepSpec(kind, 2)
    els = list(all_group_elements(2))
    for g in els:
        for h in els:
            assert rho(g * h, spec) == rho(g, spec) @ rho(h, spec)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("kind", ["reflection", "permutation"])
def test_rho_homomorphism_on_generators(n, kind):
    spec = RepSpec(kind, n)
    gens = group_generators(n)
    for g in gens:
        for h in gens:
            assert rho(g, spec) @ rho(h, spec) == rho(g * h, spec)
        assert rho(g, spec) @ rho(g.inverse(), spec) == MatrixQ.identity(spec.dim)


# -- interpolation matrices ---------------------------------------------------------------


def test_T_even_identity():
    assert T_even(dg.identity_partition(1), 3) == MatrixQ.identity(3)


def test_T_even_cap():
    assert T_even(dg.cap(), 2) == MatrixQ(1, 4, {(0, 0): 1, (0, 3): 1})


def test_T_uncolored_allows_odd_blocks():
    p = dg.parse_partition("2>1: {1,2,1'}")
    m = T_uncolored(p, 2)
    assert m == MatrixQ(2, 4, {(0, 0): 1, (1, 3): 1})
    with pytest.raises(ValueError):
        T_even(p, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_T_even_composition_rule(n):
    for k, l, m in itertools.product(range(3), repeat=3):
        for p in dg.enumerate_diagrams("even", k, l):
            tp = T_even(p, n)
            for q in dg.enumerate_diagrams("even", l, m):
                res = dg.stack(q, p)
                assert T_even(q, n) @ tp == T_even(res.composite, n).scale(
                    Fraction(n) ** res.loops
                )


def test_T_colored_identity_and_token():
    assert T_colored(dg.all_plus(dg.identity_partition(1)), 2) == MatrixQ.identity(4)
    swap = T_colored(dg.parse_colored("1>1: {1,1':-1}"), 1)
    assert swap == MatrixQ(2, 2, {(0, 1): 1, (1, 0): 1})


def test_T_colored_class_invariance():
    base = dg.identity_partition(1)
    a = T_colored(dg.ColoredPartition(base, (1, -1)), 2)
    b = T_colored(dg.ColoredPartition(base, (-1, 1)), 2)
    assert a == b


def test_T_colored_composition_rule_with_zero():
    n = 2
    for k, l, m in itertools.product(range(3), repeat=3):
        for p in dg.enumerate_diagrams("colored_classes", k, l):
            tp = T_colored(p, n)
            for q in dg.enumerate_diagrams("colored_classes", l, m):
                res = dg.colored_stack(q, p)
                prod = T_colored(q, n) @ tp
                if res is None:
                    assert prod == MatrixQ.zero((2 * n) ** m, (2 * n) ** k)
                else:
                    assert prod == T_colored(res.composite, n).scale(
                        Fraction(2 * n) ** res.loops
                    )


# -- equivariance -----------------------------------------------------------------------


def test_equivariance_of_T_matrices():
    rep = equivariance_check(T_even(dg.cap(), 2), 2, 0, RepSpec("reflection", 2))
    assert all(item["pass"] for item in rep)
    rep = equivariance_check(
        T_colored(dg.parse_colored("2>1: {1,2,1'}"), 2), 2, 1, RepSpec("permutation", 2)
    )
    assert all(item["pass"] for item in rep)


def test_equivariance_negative_control():
    bad = MatrixQ(2, 2, {(0, 0): 1})
    rep = equivariance_check(bad, 1, 1, RepSpec("permutation", 1))
    assert any(not item["pass"] for item in rep)


# -- hom dimensions -------------------------------------------------------------------------


def test_hom_dim_examples():
    assert hom_dim(RepSpec("reflection", 2), 1, 1) == 1
    assert hom_dim(RepSpec("reflection", 3), 1, 2) == 0
    assert hom_dim(RepSpec("permutation", 3), 1, 1) == 3


def test_hom_dim_matches_projector_rank():
    for spec in (RepSpec("reflection", 2), RepSpec("reflection", 3), RepSpec("permutation", 2)):
        for k, l in [(1, 1), (2, 0), (0, 2), (2, 1), (1, 2)]:
            if spec.dim ** (k + l) <= 400:
                proj = group_average_projector(spec, k, l)
                assert proj @ proj == proj
                assert proj.rank() == hom_dim(spec, k, l)


def test_hom_dim_guard():
    with pytest.raises(TooLarge):
        hom_dim(RepSpec("reflection", 5), 1, 1)


def test_hom_dim_diagram_count_in_iso_regime():
    # k + l <= n: diagram bases give the exact dimension
    for n in (3, 4):
        for k, l in [(1, 1), (0, 2), (2, 1)]:
            if k + l <= n:
                assert hom_dim(RepSpec("reflection", n), k, l) == len(
                    dg.enumerate_diagrams("even", k, l)
                )
    assert hom_dim(RepSpec("permutation", 3), 1, 1) == len(
        dg.enumerate_diagrams("colored_classes", 1, 1)
    )


# -- functors -------------------------------------------------------------------------------


def test_functor_G_identity():
    for k in range(3):
        f = Morphism.identity(REP_H0.specialized(2), k)
        assert functor_G(f, 2) == MatrixQ.identity(2**k)


def test_functor_requires_specialization():
    with pytest.raises(SpecializationMismatch):
        functor_G(Morphism.from_diagram(REP_H0, dg.cap()), 2)
    with pytest.raises(SpecializationMismatch):
        functor_H(Morphism.identity(PAR_Z2_2T, 1), 2)


def test_functor_G_random_functoriality():
    rng = random.Random(1)
    n = 2
    cat = REP_H0.specialized(n)

    def rand(k, l):
        basis = cat.basis(k, l)
        terms = {}
        for d in rng.sample(basis, min(len(basis), 2)):
            terms[d] = PolyQ.const(rng.randrange(-3, 4))
        return Morphism(cat, k, l, terms)

    for _ in range(50):
        k, l, m = rng.randrange(4), rng.randrange(4), rng.randrange(4)
        f, g = rand(k, l), rand(l, m)
        assert functor_G(g.compose(f), n) == functor_G(g, n) @ functor_G(f, n)


def test_split_idempotent_properties():
    cat = PAR_Z2_2T.specialized(2)
    sp = Morphism.identity(cat, 1)
    sm = Morphism.from_diagram(cat, dg.parse_colored("1>1: {1,1':-1}"))
    e1 = (sp - sm).scale(Fraction(1, 2))
    E = functor_H(e1, 2)
    B, R = split_idempotent(E)
    assert B @ R == E
    assert R @ B == MatrixQ.identity(B.cols)
    assert B.cols == 2  # the image interpolates the 2-dimensional reflection space


def test_H_of_e_prime_object_matches_reflection_action():
    # the split image of the antisymmetrizer carries exactly the small action
    for n in (2, 3):
        cat = PAR_Z2_2T.specialized(n)
        sp = Morphism.identity(cat, 1)
        sm = Morphism.from_diagram(cat, dg.parse_colored("1>1: {1,1':-1}"))
        e1 = (sp - sm).scale(Fraction(1, 2))
        B, R = split_idempotent(functor_H(e1, n))
        for g in group_generators(n):
            big = rho(g, RepSpec("permutation", n))
            small = rho(g, RepSpec("reflection", n))
            assert R @ big @ B == small


def test_functor_on_karoubi_morphism():
    n = 2
    cat = REP_H0.specialized(n)
    fl = Morphism.from_diagram(cat, dg.fourlegs())
    ob = KaroubiObject(cat, [(2, fl)])
    ident = karoubi_id(ob)
    m = functor_G(ident, n)
    assert m == MatrixQ.identity(2)


# -- matrix data for the presentations --------------------------------------------------------


def test_h_matrix_datum_passes_axioms_and_relations():
    datum = h_matrix_datum(2)
    assert all(item["pass"] for item in verify_datum(datum))
    report = verify_relations("parz2", lambda w: eval_in_target(w, datum))
    assert all(item["pass"] for item in report)


def test_g_matrix_datum_passes_axioms_and_relations():
    datum = g_matrix_datum(2)
    assert all(item["pass"] for item in verify_datum(datum))
    report = verify_relations("part", lambda w: eval_in_target(w, datum))
    assert all(item["pass"] for item in report)


def test_matrix_datum_generators_match_interpolation_matrices():
    n = 2
    hd = h_matrix_datum(n)
    assert hd.gen_value("merge") == T_colored(dg.parse_colored("2>1: {1,2,1'}"), n)
    assert hd.gen_value("token", -1) == T_colored(dg.parse_colored("1>1: {1,1':-1}"), n)
    gd = g_matrix_datum(n)
    assert gd.gen_value("fourlegs") == T_even(dg.fourlegs(), n)
    assert gd.gen_value("cap") == T_even(dg.cap(), n)


def test_h_datum_example_word():
    # merge o (token -1 tensor id) o split annihilates: mixed-sign bubble
    datum = h_matrix_datum(2)
    w = parse_word("(compose merge (tensor (token -1) id) split)")
    assert eval_in_target(w, datum) == MatrixQ.zero(4, 4)
