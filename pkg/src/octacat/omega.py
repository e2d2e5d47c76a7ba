"""The equivalence between the even-diagram and coloured-diagram categories.

The strand antisymmetrizer e' = (plain strand - signed strand)/2 is an
idempotent in the coloured category at doubled loop weight; compressing by
tensor powers of e' and rescaling each even diagram by a 2-power depending
on its block sizes defines a faithful, full, strict monoidal functor from
the even category into the Karoubi envelope of the coloured one.  This
module builds that functor, its canonical extension to Karoubi objects, and
the verification batteries: full faithfulness ranks, the direct-sum
witnesses that make the functor essentially surjective, and the exact
matrix square comparing both interpolation routes at integer parameters.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from . import diagrams as dg
from .linear_category import (
    Category,
    KaroubiMorphism,
    KaroubiObject,
    Morphism,
    PAR_Z2_2T,
    REP_H0,
    karoubi_dim,
    rank_of_morphisms,
)
from .matrix_rep import MatrixQ, T_even, functor_H, kron_power
from .poly import ONE, PolyQ

__all__ = [
    "e_prime",
    "e_dblprime",
    "scaling_exponent",
    "omega0_raw",
    "omega0",
    "omega_object",
    "omega_morphism",
    "omega",
    "compress",
    "verify_full_faithful",
    "ess_surj_witness",
    "verify_square",
]


def _signed_strand(category: Category) -> Morphism:
    d = dg.ColoredPartition(dg.identity_partition(1), (1, -1))
    return Morphism.from_diagram(category, d)


@functools.lru_cache(maxsize=None)
def e_prime(category: Category = PAR_Z2_2T) -> Morphism:
    """The antisymmetrizer (strand - signed strand)/2; idempotent of trace t."""
    sp = Morphism.identity(category, 1)
    return (sp - _signed_strand(category)).scale(Fraction(1, 2))


@functools.lru_cache(maxsize=None)
def e_dblprime(category: Category = PAR_Z2_2T) -> Morphism:
    """The complementary idempotent (strand + signed strand)/2."""
    sp = Morphism.identity(category, 1)
    return (sp + _signed_strand(category)).scale(Fraction(1, 2))


@functools.lru_cache(maxsize=None)
def _e_prime_power(category: Category, k: int) -> Morphism:
    out = Morphism.identity(category, 0)
    e1 = e_prime(category)
    for _ in range(k):
        out = out.tensor(e1)
    return out


def _target_category(source: Category) -> Category:
    """Doubled loop weight: the even category at t maps into colour weight 2t."""
    if source.kind != "even":
        raise ValueError("the equivalence starts from the even category")
    return Category("colored", 2 * source.loop_weight)


def scaling_exponent(p: dg.Partition) -> int:
    """The 2-power exponent of a basis diagram: (sum of block sizes - 2 s)/2.

    Nonnegative for every even diagram since every block has size >= 2.
    """
    total = p.k + p.l
    return (total - 2 * p.n_blocks()) // 2


def compress(g: Morphism, target: Category | None = None) -> Morphism:
    """(e')^{tensor l} o g o (e')^{tensor k} for a coloured morphism g."""
    cat = target or g.category
    return _e_prime_power(cat, g.l).compose(g).compose(_e_prime_power(cat, g.k))


def omega0_raw(f: Morphism) -> Morphism:
    """The compressed coloured morphism underlying the functor, term by term.

    Each basis diagram is reinterpreted as an all-plus coloured diagram,
    compressed by antisymmetrizer powers on both sides and scaled by its own
    2-power; the result is the Karoubi-hom representative.
    """
    target = _target_category(f.category)
    el = _e_prime_power(target, f.l)
    ek = _e_prime_power(target, f.k)
    out = Morphism.zero(target, f.k, f.l)
    for d, c in f.terms.items():
        lifted = Morphism.from_diagram(
            target, dg.all_plus(d), c * PolyQ.const(2 ** scaling_exponent(d))
        )
        out = out + el.compose(lifted).compose(ek)
    return out


def omega0_object(category_even: Category, k: int) -> KaroubiObject:
    target = _target_category(category_even)
    return KaroubiObject(target, [(k, _e_prime_power(target, k))], check=False)


def omega0(f: Morphism) -> KaroubiMorphism:
    """The functor on a plain even morphism, packaged as a Karoubi morphism."""
    src = omega0_object(f.category, f.k)
    tgt = omega0_object(f.category, f.l)
    return KaroubiMorphism(src, tgt, [[omega0_raw(f)]], check=False)


def omega_object(ob: KaroubiObject) -> KaroubiObject:
    """Canonical object map: ([k], f) goes to ([k], compressed f)."""
    target = _target_category(ob.category)
    return KaroubiObject(target, [(k, omega0_raw(e)) for k, e in ob.summands])


def omega_morphism(m: KaroubiMorphism) -> KaroubiMorphism:
    return KaroubiMorphism(
        omega_object(m.source),
        omega_object(m.target),
        [[omega0_raw(g) for g in row] for row in m.entries],
        check=False,
    )


def omega(x):
    """The equivalence, on plain morphisms, Karoubi objects or Karoubi morphisms."""
    if isinstance(x, Morphism):
        return omega0(x)
    if isinstance(x, KaroubiObject):
        return omega_object(x)
    if isinstance(x, KaroubiMorphism):
        return omega_morphism(x)
    raise TypeError(f"cannot apply the equivalence to {type(x).__name__}")


# ---------------------------------------------------------------------------
# Verification batteries
# ---------------------------------------------------------------------------


def verify_full_faithful(k: int, l: int, seed: int = 0) -> dict:
    """Rank evidence for full faithfulness in one hom space.

    Faithfulness: the images of the even basis diagrams stay linearly
    independent.  Fullness: compressing the whole coloured basis spans no
    more, i.e. all three ranks equal the even basis size.
    """
    evens = dg.enumerate_diagrams("even", k, l)
    images = [omega0_raw(Morphism.from_diagram(REP_H0, p)) for p in evens]
    colored = dg.enumerate_diagrams("colored_classes", k, l)
    compressed = [
        compress(Morphism.from_diagram(PAR_Z2_2T, c)) for c in colored
    ]
    expected = len(evens)
    r_images = rank_of_morphisms(images, seed=seed)
    r_compressed = rank_of_morphisms(compressed, seed=seed)
    r_union = rank_of_morphisms(images + compressed, seed=seed)
    ok = r_images == expected and r_compressed == expected and r_union == expected
    return {
        "check": "omega/full_faithful",
        "params": {"k": k, "l": l},
        "pass": bool(ok),
        "even_basis": expected,
        "rank_images": r_images,
        "rank_compressed": r_compressed,
        "rank_union": r_union,
    }


def ess_surj_witness() -> list[dict]:
    """The explicit direct-sum witnesses behind essential surjectivity.

    With eps the compressed fourlegs idempotent, alpha = 2 eps o split o e''
    and beta = e'' o merge o eps satisfy beta o alpha = e'' and
    alpha o beta = eps exactly; together with e' + e'' = id this exhibits
    the single-strand object as the image of a direct sum.
    """
    cat = PAR_Z2_2T
    e1 = e_prime(cat)
    e2 = e_dblprime(cat)
    merge = Morphism.from_diagram(
        cat, dg.all_plus(dg.make_partition(2, 1, [(dg.bottom(1), dg.bottom(2), dg.top(1))]))
    )
    split = merge.involution()
    fl = Morphism.from_diagram(cat, dg.all_plus(dg.fourlegs()))
    eps = e1.tensor(e1).compose(fl).compose(e1.tensor(e1)).scale(2)

    alpha = eps.compose(split.scale(2)).compose(e2)
    beta = e2.compose(merge).compose(eps)

    report = [
        {
            "check": "omega/ess_surj/eps_idempotent",
            "params": {},
            "pass": eps.compose(eps) == eps,
        },
        {
            "check": "omega/ess_surj/beta_alpha",
            "params": {},
            "pass": beta.compose(alpha) == e2,
        },
        {
            "check": "omega/ess_surj/alpha_beta",
            "params": {},
            "pass": alpha.compose(beta) == eps,
        },
        {
            "check": "omega/ess_surj/idempotents_sum_to_id",
            "params": {},
            "pass": e1 + e2 == Morphism.identity(cat, 1),
        },
    ]
    # the witnesses are honest Karoubi morphisms between the two summands
    ob_e2 = KaroubiObject(cat, [(1, e2)])
    ob_eps = KaroubiObject(cat, [(2, eps)])
    try:
        KaroubiMorphism(ob_e2, ob_eps, [[alpha]])
        KaroubiMorphism(ob_eps, ob_e2, [[beta]])
        compressed_ok = True
    except ValueError:
        compressed_ok = False
    report.append(
        {"check": "omega/ess_surj/witnesses_compressed", "params": {}, "pass": compressed_ok}
    )
    report.append(
        {
            "check": "omega/ess_surj/dim_eprime_object",
            "params": {},
            "pass": karoubi_dim(KaroubiObject(cat, [(1, e1)], check=False)) == PolyQ.t(),
        }
    )
    return report


def _iota_matrix(n: int) -> MatrixQ:
    """Column i holds e^i_+ - e^i_-: the reflection space inside the big space."""
    data = {}
    for i in range(n):
        data[(2 * i, i)] = Fraction(1)
        data[(2 * i + 1, i)] = Fraction(-1)
    return MatrixQ(2 * n, n, data)


def _pi_matrix(n: int) -> MatrixQ:
    """Retraction onto the reflection space: halves with alternating signs."""
    data = {}
    for i in range(n):
        data[(i, 2 * i)] = Fraction(1, 2)
        data[(i, 2 * i + 1)] = Fraction(-1, 2)
    return MatrixQ(n, 2 * n, data)


def section_matrix(n: int, k: int) -> MatrixQ:
    """Section of the k-th antisymmetrizer power onto the small tensor power.

    The plain product of the strandwise inclusions is a valid splitting only
    up to a power of 2 per pair of strands: the raw sandwich produces
    2^((k-l)/2) times the even-route matrix.  Normalising the section by
    2^(-floor(k/2)) (and the retraction inversely) is the unique rational
    rescaling that is trivial on the unit object and makes the two routes
    agree strictly.
    """
    return kron_power(_iota_matrix(n), k).scale(Fraction(1, 2 ** (k // 2)))


def retraction_matrix(n: int, k: int) -> MatrixQ:
    return kron_power(_pi_matrix(n), k).scale(Fraction(2 ** (k // 2)))


def verify_square(n: int, kmax: int) -> list[dict]:
    """Exact matrix equality of the two interpolation routes at parameter n.

    For every even basis diagram f of size (k, l) with k, l <= kmax the
    compressed coloured image of f is evaluated on the big space and
    sandwiched by the fixed splitting of the antisymmetrizer powers; the
    result must equal the even-route matrix of f on the small space.  The
    validity of the splitting itself (retraction o section = id and
    section o retraction = the image of the antisymmetrizer power) is
    reported alongside.
    """
    even_cat = REP_H0.specialized(n)
    colored_cat = PAR_Z2_2T.specialized(n)
    report = []
    for k in range(kmax + 1):
        s = section_matrix(n, k)
        r = retraction_matrix(n, k)
        ok_ident = r @ s == MatrixQ.identity(n**k)
        ok_image = s @ r == functor_H(_e_prime_power(colored_cat, k), n)
        report.append(
            {
                "check": "omega/square/splitting",
                "params": {"n": n, "k": k},
                "pass": bool(ok_ident and ok_image),
            }
        )
    for k in range(kmax + 1):
        for l in range(kmax + 1):
            for p in dg.enumerate_diagrams("even", k, l):
                raw = omega0_raw(Morphism.from_diagram(even_cat, p))
                lhs = retraction_matrix(n, l) @ functor_H(raw, n) @ section_matrix(n, k)
                rhs = T_even(p, n)
                report.append(
                    {
                        "check": "omega/square",
                        "params": {"n": n, "diagram": dg.format_partition(p)},
                        "pass": lhs == rhs,
                    }
                )
    return report
