"""Finite groups as full multiplication tables, with the subgroup, coset and
conjugation machinery needed to build coset quandles."""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import MalformedInput, MalformedTable
from .perms import compose, identity as perm_identity, is_permutation
from .quandle import ASSOCIATIVITY, IDENTITY, INVERSE, ValidationReport


def _as_mult_array(mult) -> np.ndarray:
    try:
        rows = [list(r) for r in mult]
    except TypeError as exc:
        raise MalformedTable("multiplication table must be a list of rows") from exc
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise MalformedTable("multiplication table is not square")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise MalformedTable(f"non-integer entry {x!r}")
    arr = np.array(rows, dtype=np.int64).reshape(n, n)
    if arr.min() < 0 or arr.max() >= n:
        raise MalformedTable(f"entries must lie in [0, {n})")
    return arr


def validate_group(mult) -> ValidationReport:
    M = _as_mult_array(mult)
    n = M.shape[0]
    idx = np.arange(n)
    violations = []

    # (ab)c vs a(bc)
    lhs = M[M[:, :, None], idx[None, None, :]]
    rhs = M[idx[:, None, None], M[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        violations.append((ASSOCIATIVITY, tuple(int(x) for x in bad[0])))

    ids = [e for e in range(n) if (M[e, :] == idx).all() and (M[:, e] == idx).all()]
    if not ids:
        violations.append((IDENTITY, ()))
    else:
        e = ids[0]
        for a in range(n):
            if not ((M[a, :] == e) & (M[:, a] == e)).any():
                violations.append((INVERSE, (a,)))
                break
    return ValidationReport(valid=not violations, violations=violations)


class FiniteGroup:
    """Group on ``0..n-1`` with ``mult[a][b] = a*b``."""

    def __init__(self, mult, labels=None, perms=None, check=True):
        M = _as_mult_array(mult)
        n = M.shape[0]
        if n > config.MAX_GROUP_ORDER:
            raise MalformedInput(f"group order {n} exceeds {config.MAX_GROUP_ORDER}")
        if check:
            report = validate_group(M)
            if not report.valid:
                raise MalformedTable(str(report))
        self.mult = tuple(tuple(int(x) for x in row) for row in M)
        self.order = n
        idx = list(range(n))
        self.identity = next(e for e in range(n) if list(self.mult[e]) == idx)
        inv = [0] * n
        for a in range(n):
            inv[a] = self.mult[a].index(self.identity)
        self.inverse = tuple(inv)
        self.labels = tuple(labels) if labels is not None else None
        self.perms = tuple(perms) if perms is not None else None

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def mul(self, *elems) -> int:
        acc = self.identity
        for g in elems:
            acc = self.mult[acc][g]
        return acc

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def conj(self, g: int, h: int) -> int:
        """``h^-1 g h``."""
        return self.mult[self.mult[self.inverse[h]][g]][h]

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels is not None else str(g)

    def element_of_perm(self, perm) -> int:
        if self.perms is None:
            raise MalformedInput("group was not built from permutations")
        return self.perms.index(tuple(perm))

    def is_abelian(self) -> bool:
        M = self.mult
        return all(M[a][b] == M[b][a] for a in range(self.order) for b in range(a))

    def to_dict(self) -> dict:
        return {"order": self.order, "mult": [list(r) for r in self.mult]}

    @classmethod
    def from_permutations(cls, degree: int, generators) -> "FiniteGroup":
        """Close permutation generators into a table.

        Elements are numbered in breadth-first order from the identity, so the
        identity is element 0.  Products compose left to right.
        """
        gens = [tuple(int(x) for x in g) for g in generators]
        for g in gens:
            if not is_permutation(g, degree):
                raise MalformedInput(f"not a permutation of degree {degree}: {g}")
        e = perm_identity(degree)
        elems = [e]
        index = {e: 0}
        queue = deque([e])
        while queue:
            p = queue.popleft()
            for g in gens:
                q = compose(p, g)
                if q not in index:
                    if len(elems) >= config.MAX_GROUP_ORDER:
                        raise MalformedInput(
                            f"group order exceeds {config.MAX_GROUP_ORDER}"
                        )
                    index[q] = len(elems)
                    elems.append(q)
                    queue.append(q)
        mult = [[index[compose(p, q)] for q in elems] for p in elems]
        labels = [_cycle_string(p) for p in elems]
        return cls(mult, labels=labels, perms=elems, check=False)

    @classmethod
    def from_dict(cls, data) -> "FiniteGroup":
        if not isinstance(data, dict):
            raise MalformedTable("group JSON must be an object")
        if "mult" in data:
            g = cls(data["mult"], labels=data.get("labels"))
            if "order" in data and data["order"] != g.order:
                raise MalformedTable("'order' does not match table size")
            return g
        if "perm_gens" in data:
            if "degree" not in data:
                raise MalformedTable("permutation form needs 'degree'")
            return cls.from_permutations(int(data["degree"]), data["perm_gens"])
        raise MalformedTable("group JSON needs 'mult' or 'perm_gens'")

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _cycle_string(p) -> str:
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        parts.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(parts) or "()"


# -- standard groups --------------------------------------------------------


def _cycle_perm(degree, *cycles):
    p = list(range(degree))
    for cyc in cycles:
        for k, x in enumerate(cyc):
            p[x] = cyc[(k + 1) % len(cyc)]
    return tuple(p)


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)])


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup.from_permutations(1, [])
    gens = [_cycle_perm(n, (0, 1))]
    if n > 2:
        gens.append(_cycle_perm(n, tuple(range(n))))
    return FiniteGroup.from_permutations(n, gens)


def alternating_group(n: int) -> FiniteGroup:
    gens = [_cycle_perm(n, (0, 1, k)) for k in range(2, n)]
    return FiniteGroup.from_permutations(n, gens)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    rot = _cycle_perm(n, tuple(range(n)))
    ref = tuple((-i) % n for i in range(n))
    return FiniteGroup.from_permutations(n, [rot, ref])


def quaternion_group() -> FiniteGroup:
    # regular representation of Q8 on {1,i,j,k,-1,-i,-j,-k}
    i = _cycle_perm(8, (0, 1, 4, 5), (2, 7, 6, 3))
    j = _cycle_perm(8, (0, 2, 4, 6), (1, 3, 5, 7))
    return FiniteGroup.from_permutations(8, [i, j])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    n, m = G.order, H.order
    mult = [
        [G.mult[a // m][b // m] * m + H.mult[a % m][b % m] for b in range(n * m)]
        for a in range(n * m)
    ]
    return FiniteGroup(mult, check=False)


# -- subgroups --------------------------------------------------------------


class Subgroup:
    """Sorted element set of a subgroup of ``parent``."""

    def __init__(self, parent: FiniteGroup, elements):
        self.parent = parent
        self.elements = tuple(sorted(elements))
        self._set = frozenset(self.elements)

    def __repr__(self):
        return f"Subgroup(order={self.order})"

    def __contains__(self, g):
        return g in self._set

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash(self.elements)


def make_subgroup(G: FiniteGroup, elements) -> Subgroup:
    """Wrap an element set, checking closure."""
    elems = set(int(x) for x in elements)
    if G.identity not in elems:
        raise MalformedInput("subgroup must contain the identity")
    for a in elems:
        if G.inverse[a] not in elems:
            raise MalformedInput(f"subgroup not closed under inverse at {a}")
        for b in elems:
            if G.mult[a][b] not in elems:
                raise MalformedInput(f"subgroup not closed under product at {(a, b)}")
    return Subgroup(G, tuple(sorted(elems)))


def subgroup_generated(G: FiniteGroup, gens) -> Subgroup:
    gens = [int(g) for g in gens]
    for g in gens:
        if not 0 <= g < G.order:
            raise MalformedInput(f"element {g} out of range")
    found = {G.identity}
    queue = deque([G.identity])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = G.mult[a][g]
            if b not in found:
                found.add(b)
                queue.append(b)
    return Subgroup(G, tuple(sorted(found)))


def center_of_subgroup(G: FiniteGroup, P: Subgroup) -> Subgroup:
    M = G.mult
    z = [a for a in P.elements if all(M[a][p] == M[p][a] for p in P.elements)]
    return Subgroup(G, tuple(z))


def centralizer(G: FiniteGroup, m: int) -> Subgroup:
    M = G.mult
    return Subgroup(G, tuple(h for h in range(G.order) if M[h][m] == M[m][h]))


def all_subgroups(G: FiniteGroup) -> list:
    """Every subgroup, as joins of cyclic subgroups; sorted by (order, elements)."""
    cyclic = {subgroup_generated(G, [g]).elements for g in range(G.order)}
    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        new = []
        for H in frontier:
            for C in cyclic:
                if set(C) <= set(H):
                    continue
                J = subgroup_generated(G, set(H) | set(C)).elements
                if J not in found:
                    found.add(J)
                    new.append(J)
        frontier = new
    return [Subgroup(G, e) for e in sorted(found, key=lambda e: (len(e), e))]


@dataclass(frozen=True)
class CosetDecomposition:
    representatives: tuple
    coset_of: tuple

    @property
    def count(self) -> int:
        return len(self.representatives)

    def members(self, i: int) -> list:
        return [g for g, c in enumerate(self.coset_of) if c == i]


def right_cosets(G: FiniteGroup, P: Subgroup) -> CosetDecomposition:
    """Right cosets ``Pg``.

    Coset 0 is ``P`` itself with representative the identity; the rest are
    ordered by their least element, which is also their representative.
    """
    coset_of = [-1] * G.order
    reps = []

    def fill(g):
        i = len(reps)
        reps.append(g)
        for p in P.elements:
            coset_of[G.mult[p][g]] = i

    fill(G.identity)
    for g in range(G.order):
        if coset_of[g] < 0:
            fill(g)
    return CosetDecomposition(tuple(reps), tuple(coset_of))


def conjugate(G: FiniteGroup, g: int, h: int) -> int:
    """``h^-1 g h``."""
    return G.conj(g, h)


def conjugacy_class(G: FiniteGroup, m: int) -> frozenset:
    return frozenset(G.conj(m, h) for h in range(G.order))


def conjugate_subgroup(G: FiniteGroup, P: Subgroup, g: int) -> frozenset:
    """``g^-1 P g`` as an element set."""
    return frozenset(G.conj(p, g) for p in P.elements)


def element_orders(G: FiniteGroup) -> list:
    out = []
    for g in range(G.order):
        k, x = 1, g
        while x != G.identity:
            x = G.mult[x][g]
            k += 1
        out.append(k)
    return out


def is_subgroup_closed(G: FiniteGroup, elements) -> bool:
    s = set(elements)
    return G.identity in s and all(
        G.mult[a][b] in s for a, b in itertools.product(s, repeat=2)
    )
