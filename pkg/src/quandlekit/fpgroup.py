"""Finitely presented groups.

A word is a tuple of nonzero integers: ``k`` stands for generator ``k-1`` and
``-k`` for its inverse.  So with generators ``x, y`` the word ``x y^-1 x``
is ``(1, -2, 1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import config
from .errors import CapExceeded, MalformedInput
from .perms import PermutationGroup


def free_reduce(word) -> tuple:
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(word) -> tuple:
    return tuple(-x for x in reversed(word))


def exponent_sums(word, ngens: int) -> list:
    row = [0] * ngens
    for x in word:
        row[abs(x) - 1] += 1 if x > 0 else -1
    return row


@dataclass(frozen=True)
class GroupPresentation:
    names: tuple
    relators: tuple

    def __init__(self, names, relators=()):
        names = tuple(str(s) for s in names)
        if len(set(names)) != len(names):
            raise MalformedInput("duplicate generator names")
        rels = []
        for r in relators:
            r = tuple(int(x) for x in r)
            for x in r:
                if x == 0 or abs(x) > len(names):
                    raise MalformedInput(f"letter {x} out of range in relator {r}")
            rels.append(free_reduce(r))
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.names)

    @classmethod
    def with_count(cls, n: int, relators=()) -> "GroupPresentation":
        return cls([f"x{i}" for i in range(n)], relators)

    def word_str(self, word) -> str:
        if not word:
            return "1"
        parts = []
        for x in word:
            name = self.names[abs(x) - 1]
            parts.append(name if x > 0 else name + "^-1")
        return " ".join(parts)

    def parse_word(self, tokens) -> tuple:
        index = {name: i + 1 for i, name in enumerate(self.names)}
        word = []
        for tok in tokens:
            tok = str(tok).strip()
            if tok.endswith("^-1"):
                name, sign = tok[:-3], -1
            else:
                name, sign = tok, 1
            if name not in index:
                raise MalformedInput(f"unknown generator {name!r}")
            word.append(sign * index[name])
        return tuple(word)

    def token_list(self, word) -> list:
        return [self.names[abs(x) - 1] + ("" if x > 0 else "^-1") for x in word]

    def to_dict(self) -> dict:
        return {
            "generators": list(self.names),
            "relators": [self.token_list(r) for r in self.relators],
        }

    @classmethod
    def from_dict(cls, data) -> "GroupPresentation":
        if not isinstance(data, dict) or "generators" not in data:
            raise MalformedInput("presentation JSON needs 'generators'")
        shell = cls(data["generators"])
        rels = [shell.parse_word(r) for r in data.get("relators", [])]
        return cls(data["generators"], rels)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -- abelianization ---------------------------------------------------------


@dataclass(frozen=True)
class AbelianInvariants:
    rank: int
    torsion: tuple

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"


def smith_diagonal(matrix) -> list:
    """Nonzero diagonal of the Smith normal form of an integer matrix.

    Entries are positive and each divides the next.
    """
    A = [list(map(int, row)) for row in matrix]
    if not A or not A[0]:
        return []
    nr, nc = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(nr, nc):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]

        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(
                    (i for i in range(t + 1, nr) for j in range(t + 1, nc) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad])]
                continue
            # move the smallest remaining entry of row/column t into the pivot
            cands = [(abs(A[i][t]), i, t) for i in range(t, nr) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, nc) if A[t][j]]
            _, i, j = min(cands)
            if i != t:
                A[t], A[i] = A[i], A[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def relation_matrix(P: GroupPresentation) -> list:
    return [exponent_sums(r, P.ngens) for r in P.relators]


def abelianization(P: GroupPresentation) -> AbelianInvariants:
    diag = smith_diagonal(relation_matrix(P)) if P.relators else []
    return AbelianInvariants(P.ngens - len(diag), tuple(d for d in diag if d > 1))


# -- coset enumeration ------------------------------------------------------


@dataclass(frozen=True)
class CosetTable:
    """Complete coset table.  ``action[c][2k]`` is coset ``c`` times
    generator ``k``, ``action[c][2k+1]`` coset ``c`` times its inverse.
    Coset 0 is the subgroup itself."""

    ngens: int
    action: tuple
    subgens: tuple

    @property
    def index(self) -> int:
        return len(self.action)

    def generator_perm(self, k: int) -> tuple:
        return tuple(row[2 * k] for row in self.action)

    def apply(self, coset: int, word) -> int:
        for x in word:
            col = 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1
            coset = self.action[coset][col]
        return coset


def _col(x: int) -> int:
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


class _Enumerator:
    """HLT enumeration with immediate coincidence processing."""

    def __init__(self, ngens, cap):
        self.ncols = 2 * ngens
        self.cap = cap
        self.table = []
        self.parent = []
        self.define_new()

    def define_new(self):
        if len(self.table) >= self.cap:
            raise CapExceeded(f"coset enumeration exceeded {self.cap} cosets")
        self.table.append([-1] * self.ncols)
        self.parent.append(len(self.parent))
        return len(self.table) - 1

    def define(self, c, col):
        d = self.define_new()
        self.table[c][col] = d
        self.table[d][col ^ 1] = c
        return d

    def live(self, c):
        return self.parent[c] == c

    def rep(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def _merge(self, a, b, queue):
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        queue.append(b)

    def coincidence(self, a, b):
        queue = []
        self._merge(a, b, queue)
        k = 0
        while k < len(queue):
            e = queue[k]
            k += 1
            for col in range(self.ncols):
                f = self.table[e][col]
                if f < 0:
                    continue
                if self.table[f][col ^ 1] == e:
                    self.table[f][col ^ 1] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][col] >= 0:
                    self._merge(f1, self.table[e1][col], queue)
                elif self.table[f1][col ^ 1] >= 0:
                    self._merge(e1, self.table[f1][col ^ 1], queue)
                else:
                    self.table[e1][col] = f1
                    self.table[f1][col ^ 1] = e1

    def scan_and_fill(self, c, word):
        cols = [_col(x) for x in word]
        T = self.table
        f, b = c, c
        i, j = 0, len(cols) - 1
        while True:
            while i <= j and T[f][cols[i]] >= 0:
                f = T[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and T[b][cols[j] ^ 1] >= 0:
                b = T[b][cols[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                T[f][cols[i]] = b
                T[b][cols[i] ^ 1] = f
                return
            self.define(f, cols[i])

    def run(self, relators, subgens):
        for w in subgens:
            if w:
                self.scan_and_fill(0, w)
        c = 0
        while c < len(self.table):
            for w in relators:
                if not self.live(c):
                    break
                if w:
                    self.scan_and_fill(c, w)
            if self.live(c):
                for col in range(self.ncols):
                    if self.table[c][col] < 0:
                        self.define(c, col)
            c += 1

    def compact(self):
        """Renumber live cosets in breadth-first order from coset 0."""
        order = [0]
        seen = {0}
        k = 0
        while k < len(order):
            c = order[k]
            k += 1
            for col in range(self.ncols):
                d = self.rep(self.table[c][col])
                if d not in seen:
                    seen.add(d)
                    order.append(d)
        new = {c: i for i, c in enumerate(order)}
        return tuple(
            tuple(new[self.rep(self.table[c][col])] for col in range(self.ncols))
            for c in order
        )


def todd_coxeter(P: GroupPresentation, subgens=(), max_cosets=None) -> CosetTable:
    """Enumerate the right cosets of the subgroup generated by ``subgens``.

    Raises CapExceeded when more than ``max_cosets`` cosets get defined.
    """
    cap = config.tc_cap(max_cosets)
    if cap < 1:
        raise MalformedInput("max_cosets must be at least 1")
    subgens = tuple(free_reduce(tuple(w)) for w in subgens)
    for w in subgens:
        for x in w:
            if x == 0 or abs(x) > P.ngens:
                raise MalformedInput(f"letter {x} out of range in subgroup word {w}")
    en = _Enumerator(P.ngens, cap)
    en.run(P.relators, subgens)
    table = CosetTable(P.ngens, en.compact(), subgens)
    return table


def check_coset_table(P: GroupPresentation, t: CosetTable) -> list:
    """Failures of the defining properties of a complete coset table."""
    problems = []
    for k in range(t.ngens):
        perm = t.generator_perm(k)
        if sorted(perm) != list(range(t.index)):
            problems.append(("not_permutation", k))
        inv = tuple(row[2 * k + 1] for row in t.action)
        if any(inv[perm[c]] != c for c in range(t.index)):
            problems.append(("inverse_mismatch", k))
    for r in P.relators:
        if any(t.apply(c, r) != c for c in range(t.index)):
            problems.append(("relator", P.word_str(r)))
    for w in t.subgens:
        if t.apply(0, w) != 0:
            problems.append(("subgroup_generator", P.word_str(w)))
    return problems


def coset_table_to_permutation_rep(t: CosetTable) -> PermutationGroup:
    return PermutationGroup(t.index, [t.generator_perm(k) for k in range(t.ngens)])
