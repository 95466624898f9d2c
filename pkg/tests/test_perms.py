import pytest
from hypothesis import given, strategies as st

import oracles
from quandlekit.errors import CapExceeded, MalformedInput
from quandlekit.perms import PermutationGroup, compose, cycle_type, identity, invert


perm4 = st.permutations(list(range(4))).map(tuple)


@given(perm4, perm4)
def test_compose_applies_left_first(p, q):
    r = compose(p, q)
    assert all(r[x] == q[p[x]] for x in range(4))


@given(perm4)
def test_invert(p):
    assert compose(p, invert(p)) == identity(4)
    assert sum(cycle_type(p)) == 4


@given(st.lists(perm4, max_size=3))
def test_closure_matches_oracle(gens):
    G = PermutationGroup(4, gens)
    assert G.elements == oracles.perm_closure(gens, 4)
    assert G.orbits() == oracles.orbit_partition(gens, 4)


def test_rejects_non_permutation():
    with pytest.raises(MalformedInput):
        PermutationGroup(3, [(0, 0, 1)])


def test_closure_cap():
    gens = [(1, 0, 2, 3, 4, 5), (1, 2, 3, 4, 5, 0)]
    with pytest.raises(CapExceeded):
        PermutationGroup(6, gens, closure_cap=100).order()
    assert PermutationGroup(6, gens).order() == 720


def test_stabilizer_and_transitivity():
    S3 = PermutationGroup(3, [(1, 0, 2), (1, 2, 0)])
    assert S3.is_transitive()
    assert S3.stabilizer(0) == frozenset({(0, 1, 2), (0, 2, 1)})
    assert PermutationGroup(3, []).orbits() == [[0], [1], [2]]
