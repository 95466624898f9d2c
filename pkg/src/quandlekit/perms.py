"""Permutation groups given by generators, closed lazily by naive products.

Permutations are tuples ``p`` with ``p[i]`` the image of ``i``.  Products are
read left to right as right actions: ``compose(p, q)`` applies ``p`` first,
then ``q``.
"""

from __future__ import annotations

from collections import deque

from . import config
from .errors import CapExceeded, MalformedInput

Perm = tuple


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` then ``q``."""
    return tuple(q[x] for x in p)


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(p, degree: int) -> bool:
    return len(p) == degree and sorted(p) == list(range(degree))


def cycle_type(p: Perm) -> tuple:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths))


class PermutationGroup:
    def __init__(self, degree: int, generators, closure_cap: int | None = None):
        if degree < 1:
            raise MalformedInput("degree must be positive")
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if not is_permutation(g, degree):
                raise MalformedInput(f"not a permutation of degree {degree}: {g}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.closure_cap = closure_cap or config.DEFAULT_CLOSURE_CAP
        self._elements = None

    def __repr__(self):
        return f"PermutationGroup(degree={self.degree}, ngens={len(self.generators)})"

    @property
    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = frozenset(self._close())
        return self._elements

    def _close(self):
        e = identity(self.degree)
        found = {e}
        queue = deque([e])
        while queue:
            p = queue.popleft()
            for g in self.generators:
                q = compose(p, g)
                if q not in found:
                    found.add(q)
                    if len(found) > self.closure_cap:
                        raise CapExceeded(f"closure exceeds {self.closure_cap} elements")
                    queue.append(q)
        # finite group: closing under generators alone also yields inverses
        return found

    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def __eq__(self, other):
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return self.degree == other.degree and self.elements == other.elements

    def __hash__(self):
        return hash((self.degree, self.elements))

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def orbits(self) -> list:
        """Orbit partition, each orbit sorted, orbits ordered by least point."""
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            k = 0
            while k < len(orbit):
                x = orbit[k]
                k += 1
                for g in self.generators:
                    y = g[x]
                    if not seen[y]:
                        seen[y] = True
                        orbit.append(y)
            result.append(sorted(orbit))
        return result

    def orbit(self, point: int) -> list:
        for o in self.orbits():
            if point in o:
                return o
        raise MalformedInput(f"point {point} out of range")

    def stabilizer(self, point: int) -> frozenset:
        return frozenset(p for p in self.elements if p[point] == point)

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1
