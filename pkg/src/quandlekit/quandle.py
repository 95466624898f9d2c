"""Finite quandles stored as dense operation tables.

``table[a][b]`` holds ``a^b``.  The axioms checked are

* idempotence: ``a^a = a``;
* left invertibility: every column map ``a -> a^b`` is a bijection;
* right self-distributivity: ``(a^b)^c = (a^c)^(b^c)``.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import config
from .errors import MalformedTable, OrderCapExceeded, SearchBudgetExceeded
from .perms import PermutationGroup, cycle_type, invert

IDEMPOTENCE = "idempotence"
LEFT_INVERTIBILITY = "left_invertibility"
SELF_DISTRIBUTIVITY = "self_distributivity"
ASSOCIATIVITY = "associativity"
IDENTITY = "identity"
INVERSE = "inverse"


@dataclass
class ValidationReport:
    valid: bool
    violations: list = field(default_factory=list)

    def to_dict(self):
        return {
            "valid": self.valid,
            "violations": [{"axiom": ax, "witness": list(w)} for ax, w in self.violations],
        }

    def __str__(self):
        if self.valid:
            return "valid"
        parts = [f"{ax} violated at {tuple(w)}" for ax, w in self.violations]
        return "invalid: " + "; ".join(parts)


def _as_square_array(table) -> np.ndarray:
    if isinstance(table, FiniteQuandle):
        return table.array
    try:
        rows = [list(r) for r in table]
    except TypeError as exc:
        raise MalformedTable("table must be a list of rows") from exc
    n = len(rows)
    if n == 0:
        raise MalformedTable("empty table")
    if any(len(r) != n for r in rows):
        raise MalformedTable("table is not square")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise MalformedTable(f"non-integer entry {x!r}")
    arr = np.array(rows, dtype=np.int64).reshape(n, n)
    if arr.min() < 0 or arr.max() >= n:
        raise MalformedTable(f"entries must lie in [0, {n})")
    return arr


def validate_quandle(table) -> ValidationReport:
    """Check the three quandle axioms exhaustively.

    Each violated axiom is reported once, with the lexicographically least
    witness.  Raises MalformedTable for non-square or out-of-range input.
    """
    T = _as_square_array(table)
    n = T.shape[0]
    idx = np.arange(n)
    violations = []

    bad = np.nonzero(T[idx, idx] != idx)[0]
    if bad.size:
        violations.append((IDEMPOTENCE, (int(bad[0]),)))

    for b in range(n):
        col = T[:, b]
        if len(np.unique(col)) != n:
            # two rows a1 < a2 with a1^b == a2^b
            first = {}
            for a in range(n):
                v = int(col[a])
                if v in first:
                    violations.append((LEFT_INVERTIBILITY, (b, first[v], a)))
                    break
                first[v] = a
            break

    # lhs[a,b,c] = (a^b)^c, rhs[a,b,c] = (a^c)^(b^c)
    lhs = T[T[:, :, None], idx[None, None, :]]
    rhs = T[T[:, None, :], T[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        violations.append((SELF_DISTRIBUTIVITY, tuple(int(x) for x in bad[0])))

    return ValidationReport(valid=not violations, violations=violations)


class FiniteQuandle:
    """Immutable quandle on ``0..n-1``.  Labels are for display only."""

    def __init__(self, table, labels=None, check=True):
        arr = _as_square_array(table)
        if check:
            report = validate_quandle(arr)
            if not report.valid:
                raise MalformedTable(str(report))
        self.table = tuple(tuple(int(x) for x in row) for row in arr)
        self.order = len(self.table)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != self.order:
                raise MalformedTable("label count does not match order")
        self.labels = labels
        self._array = arr
        self._array.setflags(write=False)
        self._inverse = None

    def __repr__(self):
        return f"FiniteQuandle(order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteQuandle) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    @property
    def array(self) -> np.ndarray:
        return self._array

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def column(self, b: int) -> tuple:
        """The permutation ``a -> a^b``."""
        return tuple(row[b] for row in self.table)

    def columns(self) -> list:
        return [self.column(b) for b in range(self.order)]

    @property
    def inverse_table(self) -> tuple:
        """``inverse_table[a][b]`` is the unique ``x`` with ``x^b = a``."""
        if self._inverse is None:
            cols = [invert(self.column(b)) for b in range(self.order)]
            self._inverse = tuple(
                tuple(cols[b][a] for b in range(self.order)) for a in range(self.order)
            )
        return self._inverse

    def op_signed(self, a: int, b: int, eps: int) -> int:
        return self.table[a][b] if eps > 0 else self.inverse_table[a][b]

    def relabel(self, perm) -> "FiniteQuandle":
        """Image under the bijection ``x -> perm[x]``."""
        n = self.order
        inv = invert(tuple(perm))
        table = [[perm[self.table[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
        return FiniteQuandle(table, check=False)

    def to_dict(self) -> dict:
        d = {"order": self.order, "table": [list(r) for r in self.table]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_dict(cls, data, check=True) -> "FiniteQuandle":
        if not isinstance(data, dict) or "table" not in data:
            raise MalformedTable("quandle JSON needs a 'table' field")
        q = cls(data["table"], labels=data.get("labels"), check=check)
        if "order" in data and data["order"] != q.order:
            raise MalformedTable("'order' does not match table size")
        return q

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -- standard constructions ------------------------------------------------


def make_trivial(n: int) -> FiniteQuandle:
    if n < 1:
        raise ValueError("n must be positive")
    return FiniteQuandle([[a] * n for a in range(n)])


def make_dihedral(n: int) -> FiniteQuandle:
    """``a^b = 2b - a (mod n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return FiniteQuandle([[(2 * b - a) % n for b in range(n)] for a in range(n)])


def make_conjugation(G, class_rep: int) -> FiniteQuandle:
    """Conjugacy class of ``class_rep`` with ``x^y = y^-1 x y``.

    Elements are ordered by their index in ``G``; labels record those indices.
    """
    from .group import conjugacy_class

    elems = sorted(conjugacy_class(G, class_rep))
    pos = {g: i for i, g in enumerate(elems)}
    table = [[pos[G.conj(x, y)] for y in elems] for x in elems]
    return FiniteQuandle(table, labels=[G.label(g) for g in elems])


# -- inner group and orbits -------------------------------------------------


def inner_group(Q: FiniteQuandle) -> PermutationGroup:
    """Group generated by the column permutations ``a -> a^b``."""
    return PermutationGroup(Q.order, Q.columns())


def orbits(Q: FiniteQuandle) -> list:
    return inner_group(Q).orbits()


def is_connected(Q: FiniteQuandle) -> bool:
    return len(orbits(Q)) == 1


# -- homomorphism search ----------------------------------------------------


class _HomSearch:
    """Backtracking over element images with forced-value propagation.

    Branches on the least unassigned source element, trying target values in
    increasing order, so solutions arrive in lexicographic order.
    """

    def __init__(self, source, target, budget, injective=False, candidates=None):
        self.S = source.table
        self.T = target.table
        self.n = source.order
        self.m = target.order
        self.budget = budget
        self.injective = injective
        self.candidates = candidates
        self.nodes = 0

    def _propagate(self, f, used, start):
        S, T = self.S, self.T
        queue = list(start)
        assigned = [x for x in range(self.n) if f[x] >= 0 and x not in queue]
        trail = []
        while queue:
            x = queue.pop()
            assigned.append(x)
            for y in assigned:
                for a, b in ((x, y), (y, x)):
                    c = S[a][b]
                    want = T[f[a]][f[b]]
                    if f[c] < 0:
                        if self.injective and used[want]:
                            return False, trail
                        if self.candidates is not None and want not in self.candidates[c]:
                            return False, trail
                        f[c] = want
                        if self.injective:
                            used[want] = True
                        trail.append(c)
                        queue.append(c)
                    elif f[c] != want:
                        return False, trail
        return True, trail

    def _undo(self, f, used, trail):
        for c in trail:
            if self.injective:
                used[f[c]] = False
            f[c] = -1

    def run(self, f, used, out, first_only=False):
        try:
            x = f.index(-1)
        except ValueError:
            out.append(tuple(f))
            return True
        values = self.candidates[x] if self.candidates is not None else range(self.m)
        for v in values:
            if self.injective and used[v]:
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(f"hom search exceeded {self.budget} nodes")
            f[x] = v
            if self.injective:
                used[v] = True
            ok, trail = self._propagate(f, used, [x])
            if ok and self.run(f, used, out, first_only) and first_only:
                return True
            self._undo(f, used, trail)
            if self.injective:
                used[v] = False
            f[x] = -1
        return False

    def run_root(self, v, first_only=False):
        """Subtree with source element 0 sent to ``v``."""
        f = [-1] * self.n
        used = [False] * self.m
        out = []
        if self.injective:
            used[v] = True
        f[0] = v
        self.nodes += 1
        ok, _ = self._propagate(f, used, [0])
        if ok:
            self.run(f, used, out, first_only)
        return out


def _split_run(make_search, roots, n_threads, first_only=False):
    def task(v):
        s = make_search()
        return s.run_root(v, first_only), s.nodes

    if n_threads > 1 and len(roots) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            parts = list(pool.map(task, roots))
    else:
        parts = []
        for v in roots:
            parts.append(task(v))
            if first_only and parts[-1][0]:
                break
    return parts


def enumerate_homs(source: FiniteQuandle, target: FiniteQuandle, budget=None, threads=None) -> list:
    """All maps ``f`` with ``f(a^b) = f(a)^f(b)``, as tuples, sorted."""
    budget = config.budget(budget)
    n_threads = config.threads(threads)
    parts = _split_run(
        lambda: _HomSearch(source, target, budget),
        list(range(target.order)),
        n_threads,
    )
    total = sum(nodes for _, nodes in parts)
    if total > budget:
        raise SearchBudgetExceeded(f"hom search exceeded {budget} nodes")
    homs = [h for part, _ in parts for h in part]
    return sorted(homs)


def is_homomorphism(f, source: FiniteQuandle, target: FiniteQuandle) -> bool:
    S, T = source.table, target.table
    n = source.order
    return all(f[S[a][b]] == T[f[a]][f[b]] for a in range(n) for b in range(n))


def _element_signatures(Q: FiniteQuandle) -> list:
    orb = orbits(Q)
    size = {}
    for o in orb:
        for x in o:
            size[x] = len(o)
    rows = [tuple(sorted(Q.table[a])) for a in range(Q.order)]
    return [
        (cycle_type(Q.column(a)), size[a], len(set(rows[a])))
        for a in range(Q.order)
    ]


def find_isomorphism(Q1: FiniteQuandle, Q2: FiniteQuandle, budget=None):
    """A bijective homomorphism ``Q1 -> Q2`` as a tuple, or None."""
    if Q1.order != Q2.order:
        return None
    sig1 = _element_signatures(Q1)
    sig2 = _element_signatures(Q2)
    if sorted(sig1) != sorted(sig2):
        return None
    if sorted(len(o) for o in orbits(Q1)) != sorted(len(o) for o in orbits(Q2)):
        return None
    candidates = [[y for y in range(Q2.order) if sig2[y] == sig1[x]] for x in range(Q1.order)]
    search = _HomSearch(Q1, Q2, config.budget(budget), injective=True, candidates=candidates)
    f = [-1] * Q1.order
    out = []
    search.run(f, [False] * Q2.order, out, first_only=True)
    return out[0] if out else None


def are_isomorphic(Q1: FiniteQuandle, Q2: FiniteQuandle, budget=None) -> bool:
    return find_isomorphism(Q1, Q2, budget) is not None


# -- enumeration of small quandles -----------------------------------------


def canonical_form(Q: FiniteQuandle) -> tuple:
    """Lexicographically least flattened table over all relabelings."""
    n = Q.order
    T = Q.table
    best = None
    for perm in itertools.permutations(range(n)):
        inv = invert(perm)
        flat = tuple(perm[T[inv[a]][inv[b]]] for a in range(n) for b in range(n))
        if best is None or flat < best:
            best = flat
    return best


def _from_flat(flat, n) -> FiniteQuandle:
    return FiniteQuandle([list(flat[a * n:(a + 1) * n]) for a in range(n)])


def _column_search(n, first_column):
    """Labeled quandles with column 0 fixed, found column by column.

    A table is a quandle iff each column ``s_b`` fixes ``b`` and
    ``s_c(s_b(a)) = s_{s_c(b)}(s_c(a))`` for all ``a, b, c``.
    """
    choices = [
        [p for p in itertools.permutations(range(n)) if p[b] == b] for b in range(n)
    ]
    cols = [None] * n
    found = []

    def consistent(k):
        # every constraint whose columns lie in 0..k and that mentions column k
        for c in range(k + 1):
            sc = cols[c]
            for b in range(k + 1):
                if c != k and b != k and sc[b] != k:
                    continue
                d = sc[b]
                if d > k:
                    continue
                sb, sd = cols[b], cols[d]
                for a in range(n):
                    if sc[sb[a]] != sd[sc[a]]:
                        return False
        return True

    def step(k):
        if k == n:
            found.append(tuple(cols))
            return
        for p in choices[k]:
            cols[k] = p
            if consistent(k):
                step(k + 1)
        cols[k] = None

    cols[0] = first_column
    if consistent(0):
        step(1)
    return found


def enumerate_quandles(n: int, order_cap=None, threads=None) -> list:
    """All quandles of order ``n`` up to isomorphism, in canonical form.

    The list is sorted by canonical flattened table.
    """
    cap = config.order_cap(order_cap)
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")
    n_threads = config.threads(threads)
    firsts = [p for p in itertools.permutations(range(n)) if p[0] == 0]

    def task(p):
        forms = set()
        for cols in _column_search(n, p):
            table = [[cols[b][a] for b in range(n)] for a in range(n)]
            forms.add(canonical_form(FiniteQuandle(table, check=False)))
        return forms

    if n_threads > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            parts = list(pool.map(task, firsts))
    else:
        parts = [task(p) for p in firsts]
    forms = set().union(*parts)
    return [_from_flat(flat, n) for flat in sorted(forms)]
