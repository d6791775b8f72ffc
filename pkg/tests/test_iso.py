"""Isomorphism search against a permutation-enumeration oracle.

The search may flip to the dual representation when the rank exceeds
half the element count, so the cases here deliberately straddle that
boundary, and the registry tests pin the regression where a matroid and
its dual-mate (same signature, complementary rank) must stay distinct.
"""

import pytest

from matroid_cd import BinaryMatroid, Gf2Matrix
from matroid_cd.isomorphism import IsoRegistry, dual_standard_form, preferred_side
from matroid_cd.zoo import (
    complete,
    complete_bipartite,
    f7,
    graphic,
    pg,
    r10,
    s8,
    tipped_spike,
    uniform_rank1,
)

from oracles import perm_isomorphic


def from_cols(cols, r):
    return BinaryMatroid(Gf2Matrix.from_columns(tuple(cols), r))


def shuffled(m: BinaryMatroid, order) -> BinaryMatroid:
    cols = m.rep.columns()
    return BinaryMatroid(
        Gf2Matrix.from_columns(tuple(cols[i] for i in order), len(m.rep.rows))
    )


POSITIVE_PAIRS = [
    (complete(4), shuffled(complete(4), [3, 1, 4, 0, 5, 2])),
    (f7(), shuffled(f7(), [6, 0, 5, 1, 4, 2, 3])),
    (uniform_rank1(4), shuffled(uniform_rank1(4), [2, 0, 3, 1])),
    # same matroid drawn with different coordinates
    (graphic([(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)]),
     graphic([(2, 3), (0, 2), (0, 3), (1, 3), (1, 2)])),
]

NEGATIVE_PAIRS = [
    (f7(), f7().dual()),
    (complete(4), complete_bipartite(2, 3).delete(["e5"])),
    # two glued triangles vs. a triangle with a parallel pair hung on it
    (from_cols((1, 2, 3, 4, 5), 3), from_cols((1, 2, 3, 3, 4), 3)),
]


@pytest.mark.parametrize("idx", range(len(POSITIVE_PAIRS)))
def test_positive_pairs_agree_with_oracle(idx):
    a, b = POSITIVE_PAIRS[idx]
    assert perm_isomorphic(a, b)
    mapping = a.find_isomorphism(b)
    assert mapping is not None
    # the returned bijection really maps circuits onto circuits
    to_idx = {lab: i for i, lab in enumerate(b.labels)}
    image = {
        frozenset(to_idx[mapping[lab]] for lab in a.label_set(c))
        for c in a.circuits()
    }
    want = {frozenset(b.label_set(c)) for c in b.circuits()}
    to_sets = {frozenset(to_idx[x] for x in fam) for fam in want}
    assert image == to_sets


@pytest.mark.parametrize("idx", range(len(NEGATIVE_PAIRS)))
def test_negative_pairs_agree_with_oracle(idx):
    a, b = NEGATIVE_PAIRS[idx]
    assert not perm_isomorphic(a, b)
    assert a.find_isomorphism(b) is None
    assert not a.is_isomorphic(b)


def test_self_duality_facts():
    assert complete(4).is_isomorphic(complete(4).dual())
    assert s8().is_isomorphic(s8().dual())
    assert r10().is_isomorphic(r10().dual())
    assert not f7().is_isomorphic(f7().dual())


def test_tall_representation_searched_through_dual():
    # rank above half the size: preferred_side must flip and stay correct
    base = tipped_spike(4)
    tall = base.series_extend("e8", ["a1", "a2", "a3", "a4", "a5"])
    assert 2 * tall.rank > tall.size
    r, cols = tall._std()
    pr, _ = preferred_side(r, cols)
    assert pr == tall.size - tall.rank
    order = list(range(tall.size))
    order[0], order[5] = order[5], order[0]
    assert tall.is_isomorphic(shuffled(tall, order))
    assert not tall.is_isomorphic(tall.series_extend("a1", ["b"]).delete(["e8"]))


def test_dual_standard_form_is_standard():
    r, cols = s8()._std()
    dr, dcols = dual_standard_form(r, cols)
    assert dr == len(cols) - r
    again_r, again_cols = dual_standard_form(dr, dcols)
    assert (again_r, again_cols) == (r, cols)


def test_registry_separates_dual_mates():
    # a rank-3 matroid on 5 elements flips to the rank-2 side for the
    # search, where its point data coincides with its dual's; the bucket
    # key must still split the two on the original rank
    reg = IsoRegistry()
    m1 = from_cols((1, 2, 3, 3, 7), 3)
    rep1, new1 = reg.canonical(*m1._std())
    rep2, new2 = reg.canonical(*m1.dual()._std())
    assert new1 and new2
    assert rep1 != rep2


def test_registry_dedupes_relabelings():
    reg = IsoRegistry()
    a = complete(4)
    b = shuffled(a, [5, 4, 3, 2, 1, 0])
    ra, new_a = reg.canonical(*a._std())
    rb, new_b = reg.canonical(*b._std())
    assert new_a and not new_b
    assert ra == rb
    assert len(reg.reps) == 1


def test_registry_lookup_without_insert():
    reg = IsoRegistry()
    a = pg(3)
    reg.canonical(*a._std())
    assert reg.lookup(*shuffled(a, [2, 1, 0, 3, 6, 5, 4])._std()) is not None
    assert reg.lookup(*a.dual()._std()) is None


def test_size_rank_guard():
    assert complete(4).find_isomorphism(complete(5)) is None
    assert uniform_rank1(3).find_isomorphism(uniform_rank1(4)) is None
