import itertools

import pytest

from quandlekit.corpus import groups
from quandlekit.errors import MalformedInput, MalformedTable
from quandlekit.group import (
    FiniteGroup,
    all_subgroups,
    center_of_subgroup,
    centralizer,
    conjugacy_class,
    conjugate,
    cyclic_group,
    element_orders,
    is_subgroup_closed,
    right_cosets,
    subgroup_generated,
    symmetric_group,
    validate_group,
)
from quandlekit.quandle import ASSOCIATIVITY


def _assoc_oracle(mult):
    n = len(mult)
    return all(mult[mult[a][b]][c] == mult[a][mult[b][c]] for a, b, c in itertools.product(range(n), repeat=3))


def test_validate_small_groups(S3):
    assert validate_group([[0]]).valid
    assert _assoc_oracle(S3.mult)
    assert validate_group(S3.mult).valid


def test_broken_associativity_witness():
    # a Latin square with identity 0 that is not associative
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    report = validate_group(table)
    assert not _assoc_oracle(table)
    assert not report.valid
    (ax, (a, b, c)), = [v for v in report.violations if v[0] == ASSOCIATIVITY]
    assert table[table[a][b]][c] != table[a][table[b][c]]


def test_malformed_group_tables():
    with pytest.raises(MalformedTable):
        validate_group([[0, 1], [1]])
    with pytest.raises(MalformedTable):
        FiniteGroup([[0, 1], [1, 1]])


def test_corpus_groups_are_groups():
    orders = {}
    for name, G in groups():
        assert validate_group(G.mult).valid, name
        orders[name] = G.order
    assert orders["S4"] == 24 and orders["Q8"] == 8 and orders["A4"] == 12 and orders["D6"] == 12


def test_q8_is_quaternion():
    G = dict(groups())["Q8"]
    assert not G.is_abelian()
    assert sorted(element_orders(G)) == [1, 2, 4, 4, 4, 4, 4, 4]


def test_subgroup_generated(S3, s3_transposition):
    assert subgroup_generated(S3, []).elements == (S3.identity,)
    assert subgroup_generated(S3, [s3_transposition]).order == 2
    assert subgroup_generated(S3, range(6)).order == 6
    with pytest.raises(MalformedInput):
        subgroup_generated(S3, [9])


def test_center_of_subgroup(S3):
    G = cyclic_group(6)
    P = subgroup_generated(G, [2])
    assert center_of_subgroup(G, P).elements == P.elements
    whole = subgroup_generated(S3, range(6))
    assert center_of_subgroup(S3, whole).elements == (S3.identity,)
    trivial = subgroup_generated(S3, [])
    assert center_of_subgroup(S3, trivial).elements == (S3.identity,)


def test_center_is_subgroup_and_commutes():
    for name, G in groups():
        for P in all_subgroups(G):
            Z = center_of_subgroup(G, P)
            assert is_subgroup_closed(G, Z.elements)
            assert all(G.mul(z, p) == G.mul(p, z) for z in Z for p in P)


def test_right_cosets(S3, s3_transposition):
    G = S3
    P = subgroup_generated(G, [s3_transposition])
    dec = right_cosets(G, P)
    assert dec.count == 3
    assert dec.representatives[0] == G.identity
    assert right_cosets(G, subgroup_generated(G, range(6))).count == 1
    assert right_cosets(G, subgroup_generated(G, [])).count == 6


def test_coset_partition_and_criterion():
    for name, G in groups():
        for P in all_subgroups(G):
            dec = right_cosets(G, P)
            assert dec.count * P.order == G.order
            assert dec.coset_of[G.identity] == 0
            for i, r in enumerate(dec.representatives):
                assert dec.coset_of[r] == i
                assert sorted(G.mul(p, r) for p in P) == dec.members(i)
            for g, h in itertools.product(range(G.order), repeat=2):
                assert (dec.coset_of[g] == dec.coset_of[h]) == (G.mul(h, G.inv(g)) in P)


def test_conjugate(S3, s3_transposition, s3_three_cycle):
    e = S3.identity
    assert conjugate(S3, s3_transposition, e) == s3_transposition
    assert conjugate(S3, e, s3_three_cycle) == e
    # table oracle: h^-1 g h via permutations, left-to-right composition
    g = S3.perms[s3_transposition]
    h = S3.perms[s3_three_cycle]
    hinv = tuple(sorted(range(3), key=lambda i: h[i]))
    expect = tuple(h[g[hinv[x]]] for x in range(3))
    assert S3.perms[conjugate(S3, s3_transposition, s3_three_cycle)] == expect


def test_conjugate_round_trip():
    for _, G in groups():
        for g, h in itertools.product(range(G.order), repeat=2):
            assert conjugate(G, conjugate(G, g, h), G.inv(h)) == g


def test_conjugacy_classes(S3, s3_transposition):
    assert conjugacy_class(S3, S3.identity) == {S3.identity}
    assert conjugacy_class(cyclic_group(5), 2) == {2}
    assert len(conjugacy_class(S3, s3_transposition)) == 3


def test_all_subgroups_counts():
    counts = {name: len(all_subgroups(G)) for name, G in groups()}
    # S3: 6, D4: 10, Q8: 6, A4: 10, S4: 30
    assert counts["S3"] == 6 and counts["D4"] == 10 and counts["Q8"] == 6
    assert counts["A4"] == 10 and counts["S4"] == 30


def test_centralizer(S3, s3_transposition):
    assert centralizer(S3, s3_transposition).order == 2
    assert centralizer(S3, S3.identity).order == 6


def test_from_dict_forms():
    a = FiniteGroup.from_dict({"degree": 3, "perm_gens": [[1, 0, 2], [1, 2, 0]]})
    assert a.order == 6 and a.identity == 0
    b = FiniteGroup.from_dict(a.to_dict())
    assert b.mult == a.mult
    with pytest.raises(MalformedTable):
        FiniteGroup.from_dict({"perm_gens": [[0]]})


def test_order_cap():
    with pytest.raises(MalformedInput):
        symmetric_group(6)
