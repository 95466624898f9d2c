"""The group Adconj(Q): one generator per quandle element, with each
quandle relation ``a^b = c`` imposed as the conjugation ``b^-1 a b = c``.

Adconj(Q) acts on Q on the right, a generator ``b`` acting as the column
permutation ``a -> a^b``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coset import CosetQuandle, group_action
from .errors import CapExceeded
from .fpgroup import (
    AbelianInvariants,
    GroupPresentation,
    abelianization,
    free_reduce,
    invert_word,
    todd_coxeter,
)
from .group import Subgroup, subgroup_generated
from .perms import PermutationGroup
from .quandle import FiniteQuandle, inner_group, orbits


@dataclass(frozen=True)
class AdconjPresentation:
    presentation: GroupPresentation
    quandle: FiniteQuandle
    # relators before dropping the freely trivial ones (one per pair a, b)
    candidate_count: int


def adconj_presentation(Q: FiniteQuandle) -> AdconjPresentation:
    """Relators ``b^-1 a b (a^b)^-1`` for all pairs ``(a, b)`` in row-major
    order.  Pairs with ``a^b = a`` give commutators, which are kept; only
    relators that reduce to the empty word (``a = b``) are dropped."""
    n = Q.order
    rels = []
    for a in range(n):
        for b in range(n):
            c = Q.table[a][b]
            w = free_reduce((-(b + 1), a + 1, b + 1, -(c + 1)))
            if w:
                rels.append(w)
    names = [f"q{i}" for i in range(n)]
    return AdconjPresentation(GroupPresentation(names, rels), Q, n * n)


def adconj_act(Q: FiniteQuandle, q: int, word) -> int:
    """``q`` acted on by ``word``, letters applied left to right."""
    for x in word:
        q = Q.op_signed(q, abs(x) - 1, 1 if x > 0 else -1)
    return q


def word_permutation(Q: FiniteQuandle, word) -> tuple:
    return tuple(adconj_act(Q, q, word) for q in range(Q.order))


def adconj_inn_image(Q: FiniteQuandle) -> PermutationGroup:
    """Image of Adconj(Q) in Sym(Q); generator ``b`` maps to column ``b``."""
    return PermutationGroup(Q.order, [word_permutation(Q, (b + 1,)) for b in range(Q.order)])


def adconj_abelianization(Q: FiniteQuandle) -> AbelianInvariants:
    return abelianization(adconj_presentation(Q).presentation)


def schreier_generators(Q: FiniteQuandle, point: int) -> list:
    """Words generating the stabilizer of ``point`` in Adconj(Q).

    Built from a breadth-first spanning tree of the orbit of ``point``; the
    words are reduced and deduplicated, empty ones dropped.
    """
    transversal = {point: ()}
    queue = [point]
    k = 0
    while k < len(queue):
        x = queue[k]
        k += 1
        for b in range(Q.order):
            y = Q.table[x][b]
            if y not in transversal:
                transversal[y] = transversal[x] + (b + 1,)
                queue.append(y)
    gens = []
    seen = set()
    for x in queue:
        for b in range(Q.order):
            y = Q.table[x][b]
            w = free_reduce(transversal[x] + (b + 1,) + invert_word(transversal[y]))
            if w and w not in seen:
                seen.add(w)
                gens.append(w)
    return gens


def stabilizer_probe(CQ: CosetQuandle, max_cosets: int = 5000) -> dict:
    """Stabilizer of the base element (coset ``P``) under the Adconj action.

    The image of Adconj in Sym(Q) is the action image of the normal closure
    ``N`` of ``m`` (column ``Ph`` acts as ``h^-1 m h``), so the stabilizer of
    the base in that image must be the action image of ``N`` meet ``P``.
    That equality is asserted.  In addition, a bounded coset enumeration of
    Adconj(Q) over the Schreier generators of the stabilizer is attempted;
    when it completes its index should be the orbit size of the base.
    """
    Q = CQ.quandle
    G, P, m = CQ.group, CQ.subgroup, CQ.meridian
    image = adconj_inn_image(Q)
    stab = image.stabilizer(CQ.base)

    normal_closure = subgroup_generated(G, [G.conj(m, h) for h in range(G.order)])
    meet = Subgroup(G, [x for x in normal_closure.elements if x in P])
    meet_image = frozenset(group_action(CQ, x) for x in meet.elements)

    base_fixed_by_own_column = Q.table[CQ.base][CQ.base] == CQ.base
    orbit = image.orbit(CQ.base)

    tc_index = None
    tc_status = "skipped"
    try:
        pres = adconj_presentation(Q).presentation
        table = todd_coxeter(pres, schreier_generators(Q, CQ.base), max_cosets=max_cosets)
        tc_index = table.index
        tc_status = "completed"
    except CapExceeded:
        tc_status = "cap_exceeded"

    passed = (
        stab == meet_image
        and base_fixed_by_own_column
        and image == inner_group(Q)
        and (tc_index is None or tc_index == len(orbit))
    )
    return {
        "passed": passed,
        "image_order": image.order(),
        "stabilizer_order": len(stab),
        "normal_closure_meet_P_order": meet.order,
        "normal_closure_meet_P_image_order": len(meet_image),
        "stabilizer_matches": stab == meet_image,
        "base_orbit_size": len(orbit),
        "orbit_count": len(orbits(Q)),
        "tc_status": tc_status,
        "tc_index": tc_index,
    }
