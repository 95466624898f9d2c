"""Signed Gauss codes for classical, virtual and welded knots and long
knots (arcs), and the Wirtinger presentations read off from them.

Text format::

    [arc;] [flavor=classical|virtual|welded;] O1+ U2+ O2+ U1+

Each token is ``O`` (over) or ``U`` (under), a positive crossing id and the
crossing sign.  ``+`` is the standard positive crossing: seen along the
over-strand, the under-strand passes beneath from right to left.  Virtual
crossings are never written; any code that is not planar is implicitly
virtual.  Closed codes are read cyclically, arc codes linearly.

Arcs of the diagram are numbered by walking the code from its first token: a
new arc starts after every under-pass, and for closed codes the stretch after
the last under-pass wraps around into arc 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import PairingError, ParseError
from .fpgroup import GroupPresentation, free_reduce

CLOSED = "closed"
ARC = "arc"
FLAVORS = ("classical", "virtual", "welded")

_TOKEN = re.compile(r"^([OU])([1-9][0-9]*)([+-])$")


@dataclass(frozen=True)
class Pass:
    crossing: int
    over: bool
    sign: int

    def token(self) -> str:
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Diagram:
    kind: str
    flavor: str
    passes: tuple

    @property
    def crossing_count(self) -> int:
        return len(self.passes) // 2

    @property
    def crossings(self) -> list:
        return sorted({p.crossing for p in self.passes})

    def signs(self) -> dict:
        return {p.crossing: p.sign for p in self.passes}

    def writhe(self) -> int:
        return sum(self.signs().values())

    def to_text(self) -> str:
        head = []
        if self.kind == ARC:
            head.append("arc;")
        head.append(f"flavor={self.flavor};")
        return " ".join(head + [p.token() for p in self.passes])

    def rotated(self, k: int) -> "Diagram":
        """Start a closed code ``k`` tokens later."""
        if self.kind != CLOSED:
            raise ValueError("only closed codes can be rotated")
        if not self.passes:
            return self
        k %= len(self.passes)
        return Diagram(self.kind, self.flavor, self.passes[k:] + self.passes[:k])

    def relabeled(self, mapping: dict) -> "Diagram":
        passes = tuple(Pass(mapping[p.crossing], p.over, p.sign) for p in self.passes)
        return Diagram(self.kind, self.flavor, passes)


def _check_pairing(passes):
    seen = {}
    for p in passes:
        seen.setdefault(p.crossing, []).append(p)
    for cid, ps in seen.items():
        if len(ps) != 2 or {q.over for q in ps} != {True, False}:
            raise PairingError(f"crossing {cid} must appear once over and once under")
        if ps[0].sign != ps[1].sign:
            raise PairingError(f"crossing {cid} has mismatched signs")


def parse_gauss(text: str) -> Diagram:
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    segments = " ".join(lines).split(";")
    headers = [s.strip() for s in segments[:-1]]
    body = segments[-1]
    kind, flavor = CLOSED, "virtual"
    for h in headers:
        if h == "arc":
            kind = ARC
        elif h == "closed":
            kind = CLOSED
        elif h.startswith("flavor="):
            flavor = h[len("flavor="):].strip()
            if flavor not in FLAVORS:
                raise ParseError(f"unknown flavor {flavor!r}")
        elif h:
            raise ParseError(f"unknown header {h!r}")
    passes = []
    for tok in body.split():
        mt = _TOKEN.match(tok)
        if mt is None:
            raise ParseError(f"bad token {tok!r}")
        passes.append(Pass(int(mt.group(2)), mt.group(1) == "O", 1 if mt.group(3) == "+" else -1))
    _check_pairing(passes)
    return Diagram(kind, flavor, tuple(passes))


def load_diagram(path) -> Diagram:
    with open(path) as fh:
        return parse_gauss(fh.read())


# -- Wirtinger presentations -----------------------------------------------


@dataclass(frozen=True)
class QuandlePresentation:
    """Relations ``(k, i, j, eps)`` read ``x_k = x_i ^ (x_j, eps)``; ``eps = -1``
    selects the inverse operation."""

    ngens: int
    relations: tuple

    def __post_init__(self):
        for rel in self.relations:
            k, i, j, eps = rel
            if not all(0 <= v < self.ngens for v in (k, i, j)) or eps not in (1, -1):
                raise ValueError(f"bad relation {rel}")

    def permuted(self, perm) -> "QuandlePresentation":
        """Rename generator ``g`` to ``perm[g]``."""
        rels = tuple((perm[k], perm[i], perm[j], e) for k, i, j, e in self.relations)
        return QuandlePresentation(self.ngens, rels)


@dataclass(frozen=True)
class PeripheralData:
    meridian: int
    longitude: tuple | None


def _arc_walk(d: Diagram):
    """Arc index at every position plus the arc count."""
    n = len(d.passes)
    unders = sum(1 for p in d.passes if not p.over)
    ngens = unders + 1 if d.kind == ARC else max(unders, 1)
    arc_at = []
    k = 0
    for p in d.passes:
        arc_at.append(k % ngens)
        if not p.over:
            k += 1
    return arc_at, ngens, n


def _crossing_data(d: Diagram):
    """Per under-pass, in code order: (crossing, incoming, outgoing, over-arc, sign)."""
    arc_at, ngens, n = _arc_walk(d)
    over_arc = {p.crossing: arc_at[i] for i, p in enumerate(d.passes) if p.over}
    out = []
    for i, p in enumerate(d.passes):
        if p.over:
            continue
        incoming = arc_at[i]
        outgoing = (incoming + 1) % ngens
        out.append((p.crossing, incoming, outgoing, over_arc[p.crossing], p.sign))
    return out, ngens


def wirtinger_quandle(d: Diagram) -> QuandlePresentation:
    """One generator per arc and one relation per crossing.

    At a positive crossing the outgoing under-arc is the incoming one acted
    on by the over-arc; at a negative crossing, by its inverse.
    """
    data, ngens = _crossing_data(d)
    rels = tuple((out, inc, over, sign) for _, inc, out, over, sign in data)
    return QuandlePresentation(ngens, rels)


def wirtinger_group(d: Diagram):
    """Group presentation and peripheral data of the diagram.

    Relation ``x_k = x_i ^ (x_j, e)`` becomes the relator
    ``x_k^-1 x_j^-e x_i x_j^e``.  The meridian is arc 0.  For closed
    diagrams the longitude is the product, along the code, of each
    under-crossing's over-arc generator raised to the crossing sign, times
    ``meridian^-writhe``.
    """
    data, ngens = _crossing_data(d)
    rels = []
    for _, i, k, j, e in data:
        rels.append((-(k + 1), -e * (j + 1), i + 1, e * (j + 1)))
    pres = GroupPresentation([f"x{a}" for a in range(ngens)], rels)
    longitude = None
    if d.kind == CLOSED:
        word = [sign * (over + 1) for _, _, _, over, sign in data]
        w = d.writhe()
        word += [-1 if w > 0 else 1] * abs(w)
        longitude = free_reduce(word)
    return pres, PeripheralData(0, longitude)


def longitude_exponent_sum(d: Diagram) -> int | None:
    _, per = wirtinger_group(d)
    if per.longitude is None:
        return None
    return sum(1 if x > 0 else -1 for x in per.longitude)


def welded_equivalence_probe(d1: Diagram, d2: Diagram, targets, budget=None, threads=None) -> dict:
    """Compare coloring counts of two diagrams over a list of target quandles.

    Equal counts everywhere are consistent with equivalence; a single
    unequal count proves the diagrams inequivalent.
    """
    from .invariants import count_colorings

    p1, p2 = wirtinger_quandle(d1), wirtinger_quandle(d2)
    rows = []
    for t in targets:
        c1 = count_colorings(p1, t, budget, threads)
        c2 = count_colorings(p2, t, budget, threads)
        rows.append({"target_order": t.order, "first": c1, "second": c2, "equal": c1 == c2})
    return {
        "all_equal": all(r["equal"] for r in rows),
        "distinguished": any(not r["equal"] for r in rows),
        "targets": rows,
    }
