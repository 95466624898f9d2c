"""Finite quandles, coset quandles, Adconj groups and knot-diagram colorings."""

from .adconj import (
    adconj_abelianization,
    adconj_act,
    adconj_inn_image,
    adconj_presentation,
    stabilizer_probe,
)
from .coset import (
    CosetQuandle,
    build_coset_quandle,
    check_transitivity,
    group_action,
    stabilizer_of,
    theorem1_selfcheck,
)
from .diagram import (
    Diagram,
    QuandlePresentation,
    parse_gauss,
    welded_equivalence_probe,
    wirtinger_group,
    wirtinger_quandle,
)
from .fpgroup import (
    AbelianInvariants,
    CosetTable,
    GroupPresentation,
    abelianization,
    coset_table_to_permutation_rep,
    free_reduce,
    todd_coxeter,
)
from .group import (
    FiniteGroup,
    Subgroup,
    alternating_group,
    center_of_subgroup,
    centralizer,
    conjugacy_class,
    conjugate,
    cyclic_group,
    dihedral_group,
    direct_product,
    quaternion_group,
    right_cosets,
    subgroup_generated,
    symmetric_group,
    validate_group,
)
from .invariants import count_colorings, count_group_reps, crosscheck_conjugation
from .perms import PermutationGroup
from .quandle import (
    FiniteQuandle,
    ValidationReport,
    are_isomorphic,
    enumerate_homs,
    enumerate_quandles,
    find_isomorphism,
    inner_group,
    make_conjugation,
    make_dihedral,
    make_trivial,
    orbits,
    validate_quandle,
)

__version__ = "0.1.0"
