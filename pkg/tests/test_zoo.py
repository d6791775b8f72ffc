"""Named constructors: sizes, ranks, and identifying structure."""

from itertools import combinations

import pytest

from matroid_cd.errors import InvalidConstructionError, MalformedInputError
from matroid_cd.zoo import (
    ag,
    ag_plus_e,
    complete,
    complete_bipartite,
    f7,
    graphic,
    loop,
    make,
    n5,
    pg,
    r10,
    s8,
    tipless_spike,
    tipped_spike,
    uniform_rank1,
)

from oracles import brute_circuits


def test_loop_and_rank_one_uniforms():
    assert (loop().size, loop().rank) == (1, 0)
    u = uniform_rank1(4)
    assert (u.size, u.rank) == (4, 1)
    assert brute_circuits(u) == {
        frozenset(p) for p in combinations(range(4), 2)
    }


def test_graphic_cycle_space():
    tri = graphic([(0, 1), (1, 2), (2, 0)])
    assert (tri.size, tri.rank) == (3, 2)
    assert len(tri.circuits()) == 1
    # a self-loop edge is a matroid loop
    assert len(graphic([(0, 0), (0, 1)]).loops()) == 1


def test_complete_graphs():
    k4, k5 = complete(4), complete(5)
    assert (k4.size, k4.rank) == (6, 3)
    assert (k5.size, k5.rank) == (10, 4)
    assert sum(1 for c in k4.circuits() if len(c) == 3) == 4
    assert sum(1 for c in k5.circuits() if len(c) == 3) == 10


def test_complete_bipartite():
    k33 = complete_bipartite(3, 3)
    assert (k33.size, k33.rank) == (9, 5)
    assert min(len(c) for c in k33.circuits()) == 4


def test_r10_identity():
    m = r10()
    assert (m.size, m.rank, m.corank) == (10, 5, 5)
    assert m.is_cosimple()
    assert sorted(len(c) for c in m.circuits()) == [4] * 15 + [6] * 15


def test_spikes():
    tl = tipless_spike(4)
    assert (tl.size, tl.rank) == (8, 4)
    tp = tipped_spike(4)
    assert (tp.size, tp.rank) == (9, 4)
    assert tp.delete(["e8"]).is_isomorphic(tl)
    with pytest.raises(InvalidConstructionError):
        tipless_spike(2)


def test_s8_frozen_representation():
    m = s8()
    assert m.labels == tuple(str(i) for i in range(1, 9))
    assert (m.size, m.rank) == (8, 4)
    circuit_sets = {frozenset(m.label_set(c)) for c in m.circuits()}
    assert frozenset("147 8".split()) not in circuit_sets  # labels are single chars
    assert frozenset(["1", "4", "7", "8"]) in circuit_sets
    assert frozenset(["2", "3", "5", "6", "8"]) in circuit_sets


def test_n5_identity():
    m = n5()
    assert (m.size, m.rank) == (5, 2)
    assert sorted(len(c) for c in m.circuits()) == [2, 2, 3, 3, 3, 3]


def test_projective_and_affine_geometries():
    assert (pg(2).size, pg(2).rank) == (3, 2)
    assert (pg(3).size, pg(3).rank) == (7, 3)
    assert (pg(4).size, pg(4).rank) == (15, 4)
    assert (ag(3).size, ag(3).rank) == (4, 3)
    assert (ag(4).size, ag(4).rank) == (8, 4)
    assert f7().is_isomorphic(pg(3))
    for m in (pg(3), pg(4), ag(4)):
        assert not any(len(c) <= 2 for c in m.circuits())
    plus = ag_plus_e(4)
    assert (plus.size, plus.rank) == (9, 4)
    with pytest.raises(InvalidConstructionError):
        ag(0)


def test_make_specs():
    assert make("s8").is_isomorphic(s8())
    assert make("K:4").is_isomorphic(complete(4))
    assert make("kb:3,3").is_isomorphic(complete_bipartite(3, 3))
    assert make("spike:4:tipped").is_isomorphic(tipped_spike(4))
    assert make("spike:4").is_isomorphic(tipless_spike(4))
    assert make("u1:5").size == 5
    assert make("r10").is_isomorphic(r10())
    assert make("ag+e:4").is_isomorphic(ag_plus_e(4))
    for bad in ("", "nope", "K:x", "u0:2", "spike:4:weird", "r10:3"):
        with pytest.raises(MalformedInputError):
            make(bad)
