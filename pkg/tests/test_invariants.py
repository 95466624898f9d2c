import itertools
import random

import pytest

import oracles
from quandlekit import corpus
from quandlekit.coset import build_coset_quandle
from quandlekit.diagram import parse_gauss, wirtinger_group, wirtinger_quandle
from quandlekit.errors import SearchBudgetExceeded
from quandlekit.group import (
    all_subgroups,
    center_of_subgroup,
    centralizer,
    conjugacy_class,
    cyclic_group,
    symmetric_group,
)
from quandlekit.invariants import (
    coset_coloring_report,
    count_colorings,
    count_group_reps,
    crosscheck_conjugation,
)
from quandlekit.quandle import make_conjugation, make_dihedral, make_trivial


def _pres(text):
    d = parse_gauss(text)
    return wirtinger_quandle(d), wirtinger_group(d)[0]


def test_trefoil_and_figure_eight_into_r3():
    r3 = make_dihedral(3)
    pq, _ = _pres(corpus.TREFOIL)
    assert count_colorings(pq, r3) == 9 == oracles.colorings(pq.ngens, pq.relations, r3.table)
    pq, _ = _pres(corpus.FIGURE_EIGHT)
    assert count_colorings(pq, r3) == 3 == oracles.colorings(pq.ngens, pq.relations, r3.table)


@pytest.mark.parametrize("name", list(corpus.DIAGRAMS))
@pytest.mark.parametrize("target", [make_dihedral(3), make_dihedral(4), make_dihedral(5), make_trivial(2)])
def test_colorings_match_brute_force(name, target):
    pq, _ = _pres(corpus.DIAGRAMS[name])
    assert count_colorings(pq, target) == oracles.colorings(pq.ngens, pq.relations, target.table)


@pytest.mark.parametrize("name", list(corpus.DIAGRAMS))
def test_trivial_target_gives_constant_colorings(name):
    pq, _ = _pres(corpus.DIAGRAMS[name])
    assert count_colorings(pq, make_trivial(4)) == 4


def test_group_reps_brute_force(S3, s3_transposition):
    pq, pg = _pres(corpus.TREFOIL)
    cls = conjugacy_class(S3, s3_transposition)
    assert count_group_reps(pg, S3, 0, cls) == 9
    perms_cls = {S3.perms[c] for c in cls}
    assert oracles.representations(pg.ngens, pg.relators, oracles.s3_elements(), 0, perms_cls) == 9


@pytest.mark.parametrize("name", list(corpus.DIAGRAMS))
def test_group_reps_match_brute_force_all_classes(name, S3):
    _, pg = _pres(corpus.DIAGRAMS[name])
    for m in range(S3.order):
        cls = conjugacy_class(S3, m)
        expect = oracles.representations(pg.ngens, pg.relators, oracles.s3_elements(), 0,
                                         {S3.perms[c] for c in cls})
        assert count_group_reps(pg, S3, 0, cls) == expect


def test_unknot_and_abelian_reps(S3, s3_transposition):
    _, pg = _pres(corpus.UNKNOT)
    assert count_group_reps(pg, S3, 0, conjugacy_class(S3, s3_transposition)) == 3
    _, pg = _pres(corpus.TREFOIL)
    assert count_group_reps(pg, cyclic_group(2), 0, {1}) == 1


@pytest.mark.parametrize("name", list(corpus.DIAGRAMS))
def test_crosscheck(name, S3):
    pq, pg = _pres(corpus.DIAGRAMS[name])
    for G in (S3, symmetric_group(4), cyclic_group(3)):
        for m in range(G.order):
            r = crosscheck_conjugation(pq, pg, G, m)
            assert r["match"], (name, m, r)


def test_crosscheck_unknot_is_class_size(S3):
    pq, pg = _pres(corpus.UNKNOT)
    for m in range(S3.order):
        r = crosscheck_conjugation(pq, pg, S3, m)
        assert r["colorings"] == r["reps"] == len(conjugacy_class(S3, m))


def test_coset_target_matches_conjugation_target():
    G = symmetric_group(4)
    for name in corpus.DIAGRAMS:
        pq, pg = _pres(corpus.DIAGRAMS[name])
        for m in range(G.order):
            cq = build_coset_quandle(G, centralizer(G, m), m)
            assert count_colorings(pq, cq.quandle) == count_colorings(pq, make_conjugation(G, m))
            r = coset_coloring_report(pq, pg, cq)
            assert r["centralizer_case"] and r["match"] and r["fiber_size"] == 1


def test_experimental_report_runs_for_general_subgroups(S3):
    pq, pg = _pres(corpus.TREFOIL)
    for P in all_subgroups(S3):
        for m in center_of_subgroup(S3, P):
            r = coset_coloring_report(pq, pg, build_coset_quandle(S3, P, m))
            assert r["colorings"] >= 0 and r["fiber_size"] >= 1


def test_counts_independent_of_generator_order():
    rnd = random.Random(7)
    targets = [make_dihedral(5), make_conjugation(symmetric_group(4), 1)]
    for name in corpus.DIAGRAMS:
        pq, _ = _pres(corpus.DIAGRAMS[name])
        for _ in range(3):
            perm = list(range(pq.ngens))
            rnd.shuffle(perm)
            for t in targets:
                assert count_colorings(pq.permuted(perm), t) == count_colorings(pq, t)


def test_thread_split_is_deterministic(S3):
    pq, pg = _pres(corpus.FIGURE_EIGHT)
    t = make_conjugation(symmetric_group(4), 1)
    assert count_colorings(pq, t, threads=1) == count_colorings(pq, t, threads=6)
    cls = conjugacy_class(S3, 1)
    assert count_group_reps(pg, S3, 0, cls, threads=1) == count_group_reps(pg, S3, 0, cls, threads=3)


def test_budget():
    pq, pg = _pres(corpus.FIGURE_EIGHT)
    with pytest.raises(SearchBudgetExceeded):
        count_colorings(pq, make_dihedral(7), budget=5)
    G = symmetric_group(3)
    with pytest.raises(SearchBudgetExceeded):
        count_group_reps(pg, G, 0, range(6), budget=5)
