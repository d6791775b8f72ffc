"""Predicate verdicts against brute-force oracles and frozen facts."""

import time

import pytest

from matroid_cd import BinaryMatroid, Gf2Matrix
from matroid_cd.predicates import (
    has_skew_circuits,
    is_circuit_complementary,
    is_circuit_difference,
    is_graphic,
    is_hyperplane_complementary,
    is_regular,
    is_unbreakable,
    skew_circuit_pair,
)
from matroid_cd.zoo import (
    ag,
    complete,
    complete_bipartite,
    f7,
    graphic,
    n5,
    pg,
    r10,
    s8,
    uniform_rank1,
)

from oracles import (
    brute_circuits,
    brute_cocircuits,
    column_lists,
    gauss_rank,
    index_sets,
)


def oracle_cd(m) -> bool:
    circuits = brute_circuits(m)
    for a in circuits:
        for b in circuits:
            if a < b or a == b or not (a & b):
                continue
            if frozenset(a ^ b) not in circuits:
                return False
    return True


def oracle_skew_pair(m):
    cols = column_lists(m)
    circuits = sorted(brute_circuits(m), key=sorted)
    for i, a in enumerate(circuits):
        for b in circuits[i + 1:]:
            if a & b:
                continue
            ra = gauss_rank([cols[j] for j in a])
            rb = gauss_rank([cols[j] for j in b])
            if gauss_rank([cols[j] for j in a | b]) == ra + rb:
                return (a, b)
    return None


def oracle_cc(m) -> bool:
    circuits = brute_circuits(m)
    ground = frozenset(range(m.size))
    return all(ground - c in circuits for c in circuits)


def oracle_hc(m) -> bool:
    cocircuits = brute_cocircuits(m)
    ground = frozenset(range(m.size))
    return all(ground - c in cocircuits for c in cocircuits)


CROSS_CHECK = [
    uniform_rank1(4),
    complete(4),
    complete_bipartite(2, 3),
    graphic([(0, 1), (1, 2), (2, 0), (0, 1), (2, 3), (3, 0)]),
    n5(),
    f7(),
    ag(4),
    s8(),
    BinaryMatroid(Gf2Matrix.from_columns((1, 2, 3, 4, 5, 6, 7), 3)),
]


@pytest.mark.parametrize("idx", range(len(CROSS_CHECK)))
def test_circuit_difference_matches_oracle(idx):
    m = CROSS_CHECK[idx]
    assert bool(is_circuit_difference(m)) == oracle_cd(m)


@pytest.mark.parametrize("idx", range(len(CROSS_CHECK)))
def test_skew_pair_matches_oracle(idx):
    m = CROSS_CHECK[idx]
    got = skew_circuit_pair(m)
    want = oracle_skew_pair(m)
    assert (got is None) == (want is None)
    if got is not None:
        a, b = got
        assert not (a & b)
        cols = column_lists(m)
        ra = gauss_rank([cols[j] for j in a.indices()])
        rb = gauss_rank([cols[j] for j in b.indices()])
        union = a.indices() + b.indices()
        assert gauss_rank([cols[j] for j in union]) == ra + rb


@pytest.mark.parametrize("idx", range(len(CROSS_CHECK)))
def test_complementary_predicates_match_oracle(idx):
    m = CROSS_CHECK[idx]
    assert bool(is_circuit_complementary(m)) == oracle_cc(m)
    assert bool(is_hyperplane_complementary(m)) == oracle_hc(m)


def test_s8_frozen_facts():
    start = time.monotonic()
    m = s8()
    circuit_sets = {frozenset(m.label_set(c)) for c in m.circuits()}
    c1 = frozenset(["1", "4", "7", "8"])
    c2 = frozenset(["2", "3", "5", "6", "8"])
    assert c1 in circuit_sets and c2 in circuit_sets
    sym = c1 ^ c2
    assert sym == frozenset(["1", "2", "6"]) | frozenset(["3", "4", "5", "7"])
    assert frozenset(["1", "2", "6"]) in circuit_sets
    assert frozenset(["3", "4", "5", "7"]) in circuit_sets
    assert not is_circuit_difference(m)
    assert skew_circuit_pair(m) is None
    assert time.monotonic() - start < 1.0


def test_cd_witness_is_a_real_violation():
    m = s8()
    verdict = is_circuit_difference(m)
    assert not verdict
    a, b = verdict.witness
    masks = m.circuits().masks()
    assert a.bits in masks and b.bits in masks
    assert a.bits & b.bits
    assert (a.bits ^ b.bits) not in masks


def test_cd_known_positives():
    for m in (complete(4), complete_bipartite(3, 3), r10(), uniform_rank1(5)):
        assert is_circuit_difference(m)
        assert not has_skew_circuits(m)


def test_cd_known_negatives_with_skew():
    # the prism holds two vertex-disjoint triangles; K5 holds two
    # edge-disjoint triangles through one shared vertex
    prism = graphic(
        [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    )
    for m in (prism, complete(5)):
        assert skew_circuit_pair(m) is not None
        assert not is_circuit_difference(m)


def test_disconnected_skew_is_vacuously_circuit_difference():
    # a coloop bridge splits the matroid; the disjoint triangles are skew
    # yet no two circuits intersect, so the defining condition is empty
    m = graphic([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    assert not m.is_connected()
    assert skew_circuit_pair(m) is not None
    assert is_circuit_difference(m)


def test_circuit_complementary_positives():
    assert is_circuit_complementary(uniform_rank1(4))
    assert is_circuit_complementary(r10())
    assert not is_circuit_complementary(complete(4))


def test_hyperplane_complementary_positives():
    assert is_hyperplane_complementary(ag(3))
    assert is_hyperplane_complementary(ag(4))
    assert not is_hyperplane_complementary(pg(3))


def test_unbreakable():
    assert is_unbreakable(complete(4))
    assert is_unbreakable(s8())
    broken = graphic([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    verdict = is_unbreakable(broken)
    assert not verdict
    # the witness flat really disconnects the contraction
    assert not broken.contract(verdict.witness).is_connected()


def test_regular():
    for m in (complete(5), complete_bipartite(3, 3), r10(),
              complete_bipartite(3, 3).dual(), complete(5).dual()):
        assert is_regular(m)
    assert not is_regular(f7())
    assert not is_regular(f7().dual())
    assert not is_regular(pg(4))
    assert not is_regular(s8())


def test_graphic():
    assert is_graphic(complete(5))
    assert is_graphic(complete_bipartite(3, 3))
    assert not is_graphic(f7())
    assert not is_graphic(f7().dual())
    assert not is_graphic(complete(5).dual())
    assert not is_graphic(complete_bipartite(3, 3).dual())
    # R10 is regular but neither graphic nor cographic
    assert not is_graphic(r10())
    assert not is_graphic(r10().dual())


def test_verdict_bool_protocol():
    v = is_circuit_difference(complete(4))
    assert v and v.value is True and v.witness is None
