"""Brute-force matroid predicates with deterministic witnesses.

Every check here works straight from the definitions (circuit scans, rank
queries, flat enumeration), so the structural recognizer can be audited
against them.  Witness selection is deterministic: circuit families are
kept sorted by index tuple and pairs are scanned in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .gf2 import ElementSet, rank_of_ints
from .matroid import BinaryMatroid


@dataclass(frozen=True)
class Verdict:
    """Boolean outcome plus the witness that settles it (None if vacuous)."""

    value: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.value


def _memo(m: BinaryMatroid, key: str, compute):
    if key not in m._cache:
        m._cache[key] = compute()
    return m._cache[key]


def is_circuit_difference(m: BinaryMatroid) -> Verdict:
    """Whether every two distinct intersecting circuits differ by a circuit.

    A False verdict carries the first (in index order) intersecting pair
    whose symmetric difference is not a circuit.
    """

    def compute() -> Verdict:
        fam = m.circuits()
        masks = fam.masks()
        for c1, c2 in itertools.combinations(fam.members, 2):
            if c1.bits & c2.bits and (c1.bits ^ c2.bits) not in masks:
                return Verdict(False, (c1, c2))
        return Verdict(True)

    return _memo(m, "pred_cd", compute)


def skew_circuit_pair(m: BinaryMatroid) -> Optional[tuple[ElementSet, ElementSet]]:
    """First pair of skew circuits in index order, or None.

    Two circuits are skew when the rank of their union splits as the sum
    of their ranks; for circuits that forces disjointness, so only
    disjoint pairs are ranked.
    """

    def compute():
        fam = m.circuits()
        _, cols = m._std()
        for c1, c2 in itertools.combinations(fam.members, 2):
            if c1.bits & c2.bits:
                continue
            union_rank = rank_of_ints(cols[i] for i in c1 | c2)
            if union_rank == len(c1) + len(c2) - 2:
                return (c1, c2)
        return None

    return _memo(m, "pred_skew", compute)


def has_skew_circuits(m: BinaryMatroid) -> Verdict:
    pair = skew_circuit_pair(m)
    return Verdict(pair is not None, pair)


def is_circuit_complementary(m: BinaryMatroid) -> Verdict:
    """Whether the complement of every circuit is again a circuit."""

    def compute() -> Verdict:
        fam = m.circuits()
        masks = fam.masks()
        full = (1 << m.size) - 1
        for c in fam.members:
            if full ^ c.bits not in masks:
                return Verdict(False, c)
        return Verdict(True)

    return _memo(m, "pred_cc", compute)


def is_hyperplane_complementary(m: BinaryMatroid) -> Verdict:
    """Whether the complement of every cocircuit is again a cocircuit."""

    def compute() -> Verdict:
        fam = m.cocircuits()
        masks = fam.masks()
        full = (1 << m.size) - 1
        for c in fam.members:
            if full ^ c.bits not in masks:
                return Verdict(False, c)
        return Verdict(True)

    return _memo(m, "pred_hc", compute)


def flats(m: BinaryMatroid) -> list[ElementSet]:
    """All flats (closed sets), ordered by size then index tuple."""

    def compute() -> list[ElementSet]:
        first = m.closure(())
        seen = {first.bits}
        queue = [first]
        for f in queue:
            for e in range(m.size):
                if e in f:
                    continue
                g = m.closure(ElementSet(f.bits | 1 << e, m.size))
                if g.bits not in seen:
                    seen.add(g.bits)
                    queue.append(g)
        return sorted(queue, key=lambda s: (len(s), s.indices()))

    return _memo(m, "flats", compute)


def is_unbreakable(m: BinaryMatroid) -> Verdict:
    """Whether the contraction by every flat is connected.

    The empty flat covers connectivity of the matroid itself.  A False
    verdict carries the smallest flat with disconnected contraction.
    """

    def compute() -> Verdict:
        for f in flats(m):
            if not m.contract(f).is_connected():
                return Verdict(False, f)
        return Verdict(True)

    return _memo(m, "pred_unbreakable", compute)


def is_regular(m: BinaryMatroid) -> Verdict:
    """Whether the matroid has neither the Fano plane nor its dual as a minor."""

    def compute() -> Verdict:
        from .zoo import f7

        fano = f7()
        if m.has_minor(fano):
            return Verdict(False, "fano")
        # N is a minor of M iff N* is a minor of M*, and searching for the
        # Fano itself stays on the fast projective path.
        if m.dual().has_minor(fano):
            return Verdict(False, "fano-dual")
        return Verdict(True)

    return _memo(m, "pred_regular", compute)


def is_graphic(m: BinaryMatroid) -> Verdict:
    """Whether the matroid is the cycle matroid of some multigraph.

    Tested by exclusion: a binary matroid is graphic exactly when it has
    no minor among the Fano plane, its dual, and the bond matroids of
    K_5 and K_{3,3}.  A False verdict names the excluded minor found.
    """

    def compute() -> Verdict:
        from .zoo import complete, complete_bipartite, f7

        fano = f7()
        dual = m.dual()
        # Dual-side patterns are searched in the dual, which keeps the two
        # Fano checks on the fast projective path.
        if m.has_minor(fano):
            return Verdict(False, "fano")
        if dual.has_minor(fano):
            return Verdict(False, "fano-dual")
        if dual.has_minor(complete(5)):
            return Verdict(False, "bond-K5")
        if dual.has_minor(complete_bipartite(3, 3)):
            return Verdict(False, "bond-K33")
        return Verdict(True)

    return _memo(m, "pred_graphic", compute)
