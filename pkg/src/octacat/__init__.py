"""octacat: exact diagram calculus for the hyperoctahedral interpolation categories.

Layers, bottom to top: ``poly`` (exact polynomial scalars), ``diagrams``
(partition combinatorics), ``linear_category`` (the even and coloured
diagram categories with their Karoubi envelopes), ``presentations``
(generators, relations, canonical words, universal-property targets),
``matrix_rep`` (signed-permutation matrix models and interpolation
functors), ``omega`` (the equivalence between the two categories), and
``verify`` (named machine-checkable suites).
"""

from .diagrams import (
    ColoredPartition,
    Partition,
    colored_canon,
    colored_stack,
    enumerate_diagrams,
    make_partition,
    normal_form,
    parse_colored,
    parse_partition,
    perm_partition,
    stack,
)
from .linear_category import (
    Category,
    KaroubiMorphism,
    KaroubiObject,
    Morphism,
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
from .matrix_rep import (
    GroupElement,
    MatrixQ,
    RepSpec,
    T_colored,
    T_even,
    functor_G,
    functor_H,
    hom_dim,
    rho,
)
from .omega import e_dblprime, e_prime, omega, omega0, omega0_raw, verify_square
from .poly import PolyQ, T
from .presentations import (
    canonical_word,
    canonical_word_colored,
    eval_gtilde,
    eval_htilde,
    parse_word,
    relation_suite,
    verify_relations,
)
from .verify import run_suite

__version__ = "0.1.0"
