import itertools
import random
from fractions import Fraction

import pytest

from octacat import diagrams as dg
from octacat.linear_category import (
    Category,
    CategoryMismatch,
    CompressionViolation,
    KaroubiMorphism,
    KaroubiObject,
    Morphism,
    NotEndomorphism,
    NotIdempotent,
    PAR_Z2,
    PAR_Z2_2T,
    REP_H0,
    dim,
    karoubi_compose,
    karoubi_dim,
    karoubi_id,
    karoubi_tensor,
    rank_of_morphisms,
)
from octacat.poly import ONE, PolyQ, T


def mor(cat, text):
    if cat.kind == "even":
        return Morphism.from_diagram(cat, dg.parse_partition(text))
    return Morphism.from_diagram(cat, dg.parse_colored(text))


def e_prime_2t():
    sp = Morphism.identity(PAR_Z2_2T, 1)
    sm = mor(PAR_Z2_2T, "1>1: {1,1':-1}")
    return (sp - sm).scale(Fraction(1, 2))


# -- composition --------------------------------------------------------------


def test_cap_cup_composition_even():
    r = mor(REP_H0, "2>0: {1,2}").compose(mor(REP_H0, "0>2: {1',2'}"))
    assert r == Morphism.from_diagram(REP_H0, dg.make_partition(0, 0, []), T)


def test_cap_cup_composition_doubled_weight():
    r = mor(PAR_Z2_2T, "2>0: {1,2}").compose(mor(PAR_Z2_2T, "0>2: {1',2'}"))
    assert r == Morphism.from_diagram(PAR_Z2_2T, dg.all_plus(dg.make_partition(0, 0, [])), 2 * T)


def test_identity_law_on_random_morphisms():
    rng = random.Random(7)
    for cat in (REP_H0, PAR_Z2):
        for _ in range(50):
            k, l = rng.randrange(4), rng.randrange(4)
            basis = cat.basis(k, l)
            terms = {}
            for d in rng.sample(basis, min(len(basis), 3)):
                terms[d] = PolyQ.const(rng.randrange(-5, 6)) + T * rng.randrange(-2, 3)
            f = Morphism(cat, k, l, terms)
            assert Morphism.identity(cat, l).compose(f) == f
            assert f.compose(Morphism.identity(cat, k)) == f


def test_compose_rejects_category_mix():
    with pytest.raises(CategoryMismatch):
        mor(REP_H0, "1>1: {1,1'}").compose(
            Morphism.identity(PAR_Z2, 1)  # type: ignore[arg-type]
        )


def test_incompatible_colored_pairs_compose_to_zero():
    split_pm = mor(PAR_Z2, "1>2: {1,1',2':-1}")
    merge = mor(PAR_Z2, "2>1: {1,2,1'}")
    assert merge.compose(split_pm).is_zero()


# -- tensor ---------------------------------------------------------------------


def test_tensor_unit_object():
    f = mor(REP_H0, "2>2: {1,2,1',2'}")
    assert f.tensor(Morphism.identity(REP_H0, 0)) == f
    assert Morphism.identity(REP_H0, 0).tensor(f) == f


def test_tensor_interchange_small():
    cat = REP_H0
    for a, b in itertools.product(range(2), repeat=2):
        for f1 in [Morphism.from_diagram(cat, d) for d in cat.basis(a, b)]:
            for g1 in [Morphism.from_diagram(cat, d) for d in cat.basis(b, a)]:
                for f2 in [Morphism.from_diagram(cat, d) for d in cat.basis(1, 1)]:
                    for g2 in [Morphism.from_diagram(cat, d) for d in cat.basis(1, 1)]:
                        lhs = g1.compose(f1).tensor(g2.compose(f2))
                        rhs = g1.tensor(g2).compose(f1.tensor(f2))
                        assert lhs == rhs


def test_tensor_basis_example():
    r = mor(REP_H0, "2>0: {1,2}").tensor(mor(REP_H0, "2>0: {1,2}"))
    assert r == mor(REP_H0, "4>0: {1,2},{3,4}")


# -- trace / dimension ------------------------------------------------------------


def test_dimensions():
    assert dim(REP_H0, 1) == T
    assert dim(PAR_Z2_2T, 1) == 2 * T
    assert dim(PAR_Z2, 1) == T


def test_trace_of_e_prime_is_t():
    assert e_prime_2t().trace() == T


def test_trace_requires_endomorphism():
    with pytest.raises(NotEndomorphism):
        mor(REP_H0, "2>0: {1,2}").trace()


def test_snake_equations():
    for cat in (REP_H0, PAR_Z2, PAR_Z2_2T):
        one = Morphism.identity(cat, 1)
        capm = Morphism.from_diagram(cat, cat.diagram_from_partition(dg.cap()))
        cupm = Morphism.from_diagram(cat, cat.diagram_from_partition(dg.cup()))
        assert one.tensor(capm).compose(cupm.tensor(one)) == one
        assert capm.tensor(one).compose(one.tensor(cupm)) == one


def test_sphericity_small():
    for cat in (REP_H0, PAR_Z2):
        for k in (1, 2, 3):
            for d in cat.basis(k, k):
                m = Morphism.from_diagram(cat, d)
                assert m._closure("left") == m._closure("right")


# -- specialisation -----------------------------------------------------------------


def test_specialize():
    f = mor(REP_H0, "2>0: {1,2}").compose(mor(REP_H0, "0>2: {1',2'}"))
    g = f.specialize(3)
    assert g.category.loop_weight == PolyQ.const(3)
    (coeff,) = g.terms.values()
    assert coeff == PolyQ.const(3)


# -- Karoubi envelope -----------------------------------------------------------------


def test_karoubi_identity_is_the_idempotent():
    e1 = e_prime_2t()
    ob = KaroubiObject(PAR_Z2_2T, [(1, e1)])
    assert karoubi_id(ob).entries[0][0] == e1


def test_karoubi_rejects_non_idempotent():
    bad = mor(PAR_Z2_2T, "1>1: {1,1':-1}").scale(2)
    with pytest.raises(NotIdempotent):
        KaroubiObject(PAR_Z2_2T, [(1, bad)])


def test_karoubi_rejects_uncompressed_entries():
    e1 = e_prime_2t()
    ob = KaroubiObject(PAR_Z2_2T, [(1, e1)])
    full = KaroubiObject(PAR_Z2_2T, [(1, Morphism.identity(PAR_Z2_2T, 1))])
    with pytest.raises(CompressionViolation):
        KaroubiMorphism(ob, full, [[Morphism.identity(PAR_Z2_2T, 1)]])


def test_karoubi_fourlegs_idempotent_and_compose():
    fl = Morphism.from_diagram(REP_H0, dg.fourlegs())
    assert fl.compose(fl) == fl
    ob = KaroubiObject(REP_H0, [(2, fl)])
    ident = karoubi_id(ob)
    assert karoubi_compose(ident, ident) == ident
    two = karoubi_tensor(ob, ob)
    assert karoubi_compose(karoubi_id(two), karoubi_id(two)) == karoubi_id(two)


def test_karoubi_dim_of_e_prime_object():
    ob = KaroubiObject(PAR_Z2_2T, [(1, e_prime_2t())])
    assert karoubi_dim(ob) == T


def test_karoubi_direct_sum_dim_adds():
    e1 = e_prime_2t()
    e2 = Morphism.identity(PAR_Z2_2T, 1) - e1
    ob = KaroubiObject(PAR_Z2_2T, [(1, e1), (1, e2)])
    assert karoubi_dim(ob) == 2 * T


# -- hom-space dimensions (basis counts against orbit oracles) -------------------------


def test_hom_basis_dimensions():
    for total in range(5):
        for k in range(total + 1):
            l = total - k
            assert len(REP_H0.basis(k, l)) == sum(
                1 for p in dg.enumerate_diagrams("all", k, l) if p.is_even()
            )
            classes = set()
            for p in dg.enumerate_diagrams("all", k, l):
                for z in itertools.product((1, -1), repeat=total):
                    classes.add(dg.ColoredPartition(p, z))
            assert len(PAR_Z2.basis(k, l)) == len(classes)


# -- serialisation -----------------------------------------------------------------------


def test_json_round_trip_bit_exact():
    e1 = e_prime_2t()
    m = e1.scale(T) + Morphism.identity(PAR_Z2_2T, 1).scale(Fraction(-2, 3))
    payload = m.to_json()
    again = Morphism.from_json(payload)
    assert again == m
    assert again.to_json() == payload


def test_json_round_trip_even():
    f = mor(REP_H0, "2>2: {1,2,1',2'}").scale(T * T - 1) + Morphism.identity(REP_H0, 2)
    assert Morphism.from_json(f.to_json()) == f


def test_text_format():
    r = mor(REP_H0, "2>0: {1,2}").compose(mor(REP_H0, "0>2: {1',2'}"))
    assert r.to_text() == "t * (0>0:)"
    assert Morphism.zero(REP_H0, 1, 1).to_text() == "0"


# -- rank helper ----------------------------------------------------------------------------


def test_rank_of_morphisms_constant():
    e1 = e_prime_2t()
    e2 = Morphism.identity(PAR_Z2_2T, 1) - e1
    assert rank_of_morphisms([e1, e2, Morphism.identity(PAR_Z2_2T, 1)]) == 2
    assert rank_of_morphisms([]) == 0


def test_rank_of_morphisms_polynomial():
    e1 = e_prime_2t()
    sm = mor(PAR_Z2_2T, "1>1: {1,1':-1}")
    fam = [e1.scale(T), e1.scale(T * T + 1), sm.scale(T - 2)]
    assert rank_of_morphisms(fam, seed=5) == 2


def test_rank_symbolic_fallback_agrees():
    from octacat._gauss import rank_rows_poly

    rows = [
        {0: T, 1: T * T},
        {0: 2 * T, 1: 2 * T * T},
        {1: T + 1},
    ]
    assert rank_rows_poly(rows) == 2
