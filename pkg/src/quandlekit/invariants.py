"""Exact counting invariants: quandle colorings and meridian-constrained
group representations, and the cross-check tying them together."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from . import config
from .errors import MalformedInput, SearchBudgetExceeded
from .fpgroup import GroupPresentation
from .group import FiniteGroup, centralizer, conjugacy_class
from .quandle import FiniteQuandle, make_conjugation


def _run_split(task, roots, n_threads):
    if n_threads > 1 and len(roots) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            return list(pool.map(task, roots))
    return [task(r) for r in roots]


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise SearchBudgetExceeded(f"search exceeded {self.limit} nodes")


# -- quandle colorings ------------------------------------------------------


def _coloring_subtree(p, target: FiniteQuandle, root_value, budget):
    n = p.ngens
    T = target.table
    Ti = target.inverse_table
    by_gen = [[] for _ in range(n)]
    for rel in p.relations:
        for g in set(rel[:3]):
            by_gen[g].append(rel)

    color = [-1] * n

    def propagate(start):
        trail = []
        queue = [start]
        while queue:
            g = queue.pop()
            for k, i, j, e in by_gen[g]:
                ci, cj, ck = color[i], color[j], color[k]
                if ci >= 0 and cj >= 0:
                    want = T[ci][cj] if e > 0 else Ti[ci][cj]
                    if ck < 0:
                        color[k] = want
                        trail.append(k)
                        queue.append(k)
                    elif ck != want:
                        return False, trail
                elif ck >= 0 and cj >= 0:
                    # x_i = x_k ^ (x_j, -e)
                    color[i] = Ti[ck][cj] if e > 0 else T[ck][cj]
                    trail.append(i)
                    queue.append(i)
        return True, trail

    def undo(trail):
        for g in trail:
            color[g] = -1

    def search():
        try:
            g = color.index(-1)
        except ValueError:
            return 1
        total = 0
        for v in range(target.order):
            budget.tick()
            color[g] = v
            ok, trail = propagate(g)
            if ok:
                total += search()
            undo(trail)
            color[g] = -1
        return total

    budget.tick()
    color[0] = root_value
    ok, _ = propagate(0)
    return search() if ok else 0


def count_colorings(p, target: FiniteQuandle, budget=None, threads=None) -> int:
    """Number of target colorings satisfying every relation of ``p``."""
    limit = config.budget(budget)

    def task(v):
        b = _Budget(limit)
        return _coloring_subtree(p, target, v, b), b.nodes

    parts = _run_split(task, list(range(target.order)), config.threads(threads))
    if sum(nodes for _, nodes in parts) > limit:
        raise SearchBudgetExceeded(f"coloring search exceeded {limit} nodes")
    return sum(c for c, _ in parts)


# -- group representations --------------------------------------------------


def _rep_subtree(p: GroupPresentation, G: FiniteGroup, meridian, root_value, budget):
    n = p.ngens
    M, inv, e_id = G.mult, G.inverse, G.identity
    rels = [[(abs(x) - 1, 1 if x > 0 else -1) for x in r] for r in p.relators]
    by_gen = [[] for _ in range(n)]
    for idx, r in enumerate(rels):
        for g in {g for g, _ in r}:
            by_gen[g].append(idx)

    val = [-1] * n

    def power(x, s):
        return x if s > 0 else inv[x]

    def product(letters):
        acc = e_id
        for g, s in letters:
            acc = M[acc][power(val[g], s)]
        return acc

    def propagate(start):
        trail = []
        queue = [start]
        while queue:
            g0 = queue.pop()
            for idx in by_gen[g0]:
                r = rels[idx]
                missing = {g for g, _ in r if val[g] < 0}
                if not missing:
                    if product(r) != e_id:
                        return False, trail
                    continue
                if len(missing) != 1:
                    continue
                (x,) = missing
                spots = [t for t, (g, _) in enumerate(r) if g == x]
                if len(spots) != 1:
                    continue
                t = spots[0]
                a = product(r[:t])
                b = product(r[t + 1:])
                # a x^s b = 1  =>  x^s = a^-1 b^-1
                xs = M[inv[a]][inv[b]]
                val[x] = power(xs, r[t][1])
                trail.append(x)
                queue.append(x)
        return True, trail

    order = [meridian] + [g for g in range(n) if g != meridian]

    def search():
        g = next((g for g in order if val[g] < 0), None)
        if g is None:
            return 1
        total = 0
        for v in range(G.order):
            budget.tick()
            val[g] = v
            ok, trail = propagate(g)
            if ok:
                total += search()
            for x in trail:
                val[x] = -1
            val[g] = -1
        return total

    budget.tick()
    val[meridian] = root_value
    ok, _ = propagate(meridian)
    return search() if ok else 0


def count_group_reps(p: GroupPresentation, target: FiniteGroup, meridian: int, cls, budget=None, threads=None) -> int:
    """Homomorphisms to ``target`` sending generator ``meridian`` into ``cls``."""
    if not 0 <= meridian < p.ngens:
        raise MalformedInput(f"meridian generator {meridian} out of range")
    cls = sorted(set(int(c) for c in cls))
    limit = config.budget(budget)

    def task(v):
        b = _Budget(limit)
        return _rep_subtree(p, target, meridian, v, b), b.nodes

    parts = _run_split(task, cls, config.threads(threads))
    if sum(nodes for _, nodes in parts) > limit:
        raise SearchBudgetExceeded(f"representation search exceeded {limit} nodes")
    return sum(c for c, _ in parts)


# -- cross-checks -----------------------------------------------------------


def crosscheck_conjugation(p_q, p_g, G: FiniteGroup, m: int, meridian: int = 0,
                           budget=None, threads=None, target=None, diagram=None) -> dict:
    """Colorings by the conjugacy class of ``m`` against representations with
    the meridian sent into that class.  The two counts must agree."""
    cls = conjugacy_class(G, m)
    colorings = count_colorings(p_q, make_conjugation(G, m), budget, threads)
    reps = count_group_reps(p_g, G, meridian, cls, budget, threads)
    return {
        "colorings": colorings,
        "reps": reps,
        "match": colorings == reps,
        "class_size": len(cls),
        "target": target if target is not None else f"order {G.order}, class of {G.label(m)}",
        "diagram": diagram,
    }


def coset_coloring_report(p_q, p_g, CQ, meridian: int = 0, budget=None, threads=None) -> dict:
    """Experimental: colorings by an arbitrary coset quandle ``(P\\G, m)``
    next to the meridian-constrained representation count.

    Equality is only expected when ``P`` is the centralizer of ``m``; the
    other cases are reported as observed.
    """
    G, m = CQ.group, CQ.meridian
    cls = conjugacy_class(G, m)
    colorings = count_colorings(p_q, CQ.quandle, budget, threads)
    reps = count_group_reps(p_g, G, meridian, cls, budget, threads)
    cent = centralizer(G, m)
    conj_case = cent.elements == CQ.subgroup.elements
    return {
        "colorings": colorings,
        "reps": reps,
        "centralizer_case": conj_case,
        "fiber_size": cent.order // CQ.subgroup.order,
        "match": colorings == reps,
    }
