"""Coset quandles ``(P\\G, m)``: right cosets of ``P`` with
``Pg ^ Ph = P g h^-1 m h``, together with the right ``G``-action on cosets.

Coset 0 is ``P`` itself and plays the role of the distinguished element
sent to the meridian.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import CentralityViolation, MalformedInput
from .group import (
    FiniteGroup,
    Subgroup,
    center_of_subgroup,
    conjugate_subgroup,
    right_cosets,
)
from .perms import PermutationGroup, compose, identity
from .quandle import FiniteQuandle, inner_group, validate_quandle


@dataclass
class CosetQuandle:
    quandle: FiniteQuandle
    group: FiniteGroup
    subgroup: Subgroup
    meridian: int
    representatives: tuple
    coset_of: tuple
    # filled in only for forced builds with a non-central meridian
    diagnostics: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.representatives)

    @property
    def base(self) -> int:
        return 0

    def sidecar(self) -> dict:
        G = self.group
        cosets = []
        for i, r in enumerate(self.representatives):
            members = [g for g, c in enumerate(self.coset_of) if c == i]
            cosets.append({
                "index": i,
                "representative": r,
                "label": G.label(r),
                "elements": members,
            })
        return {
            "group_order": G.order,
            "subgroup": list(self.subgroup.elements),
            "meridian": self.meridian,
            "cosets": cosets,
        }

    def sidecar_json(self) -> str:
        return json.dumps(self.sidecar(), sort_keys=True)


def _table(G, coset_of, reps, m):
    n = len(reps)
    table = [[0] * n for _ in range(n)]
    for i, g in enumerate(reps):
        for j, h in enumerate(reps):
            table[i][j] = coset_of[G.mul(g, G.conj(m, h))]
    return table


def representative_independence_failures(G: FiniteGroup, P: Subgroup, m: int, coset_of) -> list:
    """Triples ``(a, g, h)`` with ``a`` in P where replacing ``h`` by ``a h``
    (or ``g`` by ``a g``) changes the coset of ``g h^-1 m h``."""
    bad = []
    for g in range(G.order):
        for h in range(G.order):
            ref = coset_of[G.mul(g, G.conj(m, h))]
            for a in P.elements:
                ah = G.mul(a, h)
                ag = G.mul(a, g)
                if coset_of[G.mul(g, G.conj(m, ah))] != ref or coset_of[G.mul(ag, G.conj(m, h))] != ref:
                    bad.append((a, g, h))
                    break
            if len(bad) >= 16:
                return bad
    return bad


def build_coset_quandle(G: FiniteGroup, P: Subgroup, m: int, force: bool = False) -> CosetQuandle:
    """Build ``(P\\G, m)``.

    ``m`` must lie in the center of ``P``; otherwise CentralityViolation is
    raised, unless ``force`` is set, in which case the table is built from
    coset representatives and the failed checks are recorded in
    ``diagnostics``.
    """
    if P.parent is not G:
        raise MalformedInput("subgroup belongs to a different group")
    if not 0 <= m < G.order:
        raise MalformedInput(f"meridian {m} out of range")
    central = m in center_of_subgroup(G, P)
    if not central and not force:
        if m not in P:
            raise CentralityViolation(f"meridian {G.label(m)} is not in P")
        raise CentralityViolation(f"meridian {G.label(m)} does not commute with all of P")

    dec = right_cosets(G, P)
    table = _table(G, dec.coset_of, dec.representatives, m)
    failures = representative_independence_failures(G, P, m, dec.coset_of)
    diagnostics = {}
    if central:
        if failures:
            raise AssertionError(f"well-definedness failed with central meridian: {failures[:3]}")
        q = FiniteQuandle(table)
    else:
        report = validate_quandle(table)
        diagnostics = {
            "central": False,
            "meridian_in_subgroup": m in P,
            "well_defined": not failures,
            "representative_failures": [list(t) for t in failures],
            "validation": report.to_dict(),
        }
        q = FiniteQuandle(table, check=False)
    labels = [G.label(r) for r in dec.representatives]
    q = FiniteQuandle(q.table, labels=labels, check=False)
    return CosetQuandle(q, G, P, m, dec.representatives, dec.coset_of, diagnostics)


def group_action(CQ: CosetQuandle, g: int) -> tuple:
    """Permutation ``Ph -> Phg`` of coset indices."""
    G = CQ.group
    return tuple(CQ.coset_of[G.mul(r, g)] for r in CQ.representatives)


def action_image(CQ: CosetQuandle) -> PermutationGroup:
    G = CQ.group
    return PermutationGroup(CQ.order, [group_action(CQ, g) for g in range(G.order)])


def check_transitivity(CQ: CosetQuandle) -> bool:
    reached = {CQ.base}
    frontier = [CQ.base]
    perms = [group_action(CQ, g) for g in range(CQ.group.order)]
    while frontier:
        x = frontier.pop()
        for p in perms:
            if p[x] not in reached:
                reached.add(p[x])
                frontier.append(p[x])
    return len(reached) == CQ.order


def stabilizer_of(CQ: CosetQuandle, index: int) -> Subgroup:
    """``{h : Pg h = Pg}`` for the coset ``Pg`` with the given index."""
    if not 0 <= index < CQ.order:
        raise MalformedInput(f"coset index {index} out of range")
    G = CQ.group
    g = CQ.representatives[index]
    return Subgroup(G, [h for h in range(G.order) if CQ.coset_of[G.mul(g, h)] == index])


def theorem1_selfcheck(CQ: CosetQuandle) -> dict:
    """Exhaustive checks of the coset/action structure behind the
    isomorphism between the knot quandle and the coset quandle.

    * operation form: ``(Pg)^(Ph)`` is ``Pg`` acted on by ``h^-1 m h``, for
      every pair of group elements (not only representatives);
    * coset criterion: ``Pg = Ph`` iff ``h g^-1`` lies in ``P``;
    * the action is a homomorphism and is transitive;
    * the stabilizer of ``Pg`` is ``g^-1 P g``, with ``P`` itself at the base;
    * each column permutation equals the action of ``h^-1 m h``.
    """
    G, P, m = CQ.group, CQ.subgroup, CQ.meridian
    T = CQ.quandle.table
    cof = CQ.coset_of
    failures = []
    acts = [group_action(CQ, g) for g in range(G.order)]

    for g in range(G.order):
        for h in range(G.order):
            lhs = T[cof[g]][cof[h]]
            rhs = acts[G.conj(m, h)][cof[g]]
            if lhs != rhs:
                failures.append(("operation_form", g, h))
                break

    for g in range(G.order):
        for h in range(G.order):
            same = cof[g] == cof[h]
            if same != (G.mul(h, G.inv(g)) in P):
                failures.append(("coset_criterion", g, h))

    for g in range(G.order):
        for h in range(G.order):
            if compose(acts[g], acts[h]) != acts[G.mul(g, h)]:
                failures.append(("action_homomorphism", g, h))
    if acts[G.identity] != identity(CQ.order):
        failures.append(("action_identity",))

    transitive = check_transitivity(CQ)
    if not transitive:
        failures.append(("transitivity",))

    if stabilizer_of(CQ, CQ.base).elements != P.elements:
        failures.append(("base_stabilizer",))
    for g in range(G.order):
        stab = set(stabilizer_of(CQ, cof[g]).elements)
        if stab != conjugate_subgroup(G, P, g):
            failures.append(("stabilizer", g))

    for j, h in enumerate(CQ.representatives):
        if CQ.quandle.column(j) != acts[G.conj(m, h)]:
            failures.append(("column_action", j))

    inn = inner_group(CQ.quandle)
    if not inn.is_subgroup_of(PermutationGroup(CQ.order, acts)):
        failures.append(("inner_in_action_image",))

    return {
        "passed": not failures,
        "order": CQ.order,
        "transitive": transitive,
        "failures": [list(f) for f in failures],
    }
