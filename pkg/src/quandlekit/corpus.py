"""Fixed collections of groups, quandles and diagrams used by the test and
acceptance harnesses."""

from __future__ import annotations

from .diagram import parse_gauss
from .group import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    quaternion_group,
    symmetric_group,
)
from .quandle import make_conjugation, make_dihedral, make_trivial

TREFOIL = "flavor=classical; U1+ O2+ U3+ O1+ U2+ O3+"
TREFOIL_KINK = "flavor=classical; U1+ O2+ U3+ O1+ O4+ U4+ U2+ O3+"
TREFOIL_R2 = "flavor=classical; U1+ O2+ O5+ O6- U3+ O1+ U2+ U5+ U6- O3+"
FIGURE_EIGHT = "flavor=classical; U1+ O2+ U3- O4- U2+ O1+ U4- O3-"
VIRTUAL_TREFOIL = "flavor=virtual; O1+ U2+ O2+ U1+"
UNKNOT = "flavor=classical;"
KINK = "flavor=classical; O1- U1-"
LONG_TREFOIL = "arc; flavor=classical; U1+ O2+ U3+ O1+ U2+ O3+"
WELDED_ARC = "arc; flavor=welded; O1+ U2- O3+ U1+ O2- U3+"

DIAGRAMS = {
    "trefoil": TREFOIL,
    "figure_eight": FIGURE_EIGHT,
    "virtual_trefoil": VIRTUAL_TREFOIL,
    "unknot": UNKNOT,
    "long_trefoil": LONG_TREFOIL,
}

MOVE_PAIRS = [
    ("trefoil", TREFOIL, "trefoil_kink", TREFOIL_KINK),
    ("trefoil", TREFOIL, "trefoil_r2", TREFOIL_R2),
    ("unknot", UNKNOT, "kink", KINK),
]


def diagrams():
    return {name: parse_gauss(text) for name, text in DIAGRAMS.items()}


def groups():
    """Named groups of order at most 24, in a fixed order."""
    return [
        ("Z1", cyclic_group(1)),
        ("Z2", cyclic_group(2)),
        ("Z3", cyclic_group(3)),
        ("Z4", cyclic_group(4)),
        ("Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))),
        ("Z5", cyclic_group(5)),
        ("S3", symmetric_group(3)),
        ("Z6", cyclic_group(6)),
        ("D4", dihedral_group(4)),
        ("Q8", quaternion_group()),
        ("Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4))),
        ("D5", dihedral_group(5)),
        ("A4", alternating_group(4)),
        ("D6", dihedral_group(6)),
        ("Z2xS3", direct_product(cyclic_group(2), symmetric_group(3))),
        ("S4", symmetric_group(4)),
    ]


def transposition(G):
    return G.element_of_perm((1, 0) + tuple(range(2, len(G.perms[0]))))


def three_cycle(G):
    return G.element_of_perm((1, 2, 0) + tuple(range(3, len(G.perms[0]))))


def quandles():
    """Named quandles: standard families plus conjugation quandles."""
    S3, S4, A4 = symmetric_group(3), symmetric_group(4), alternating_group(4)
    out = [(f"trivial{n}", make_trivial(n)) for n in (1, 2, 3)]
    out += [(f"dihedral{n}", make_dihedral(n)) for n in (3, 4, 5, 6)]
    out += [
        ("S3_transpositions", make_conjugation(S3, transposition(S3))),
        ("S3_3cycles", make_conjugation(S3, three_cycle(S3))),
        ("S4_transpositions", make_conjugation(S4, transposition(S4))),
        ("A4_3cycles", make_conjugation(A4, three_cycle(A4))),
    ]
    return out
