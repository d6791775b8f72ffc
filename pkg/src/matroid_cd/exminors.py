"""Series minors, the five-element obstruction, and the excluded family.

A series minor arises by deletions and series contractions (contracting
an element of a two-element cocircuit).  Failure of the circuit-difference
property is witnessed along series minors two ways: by reaching N_5 (the
triangle with two parallel extra elements), whose presence is equivalent
to having a pair of skew circuits, and by the family of minor-minimal
non-circuit-difference matroids, which are exactly the duals of the
matroids [AG+e] \\ X described below.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import InvalidConstructionError
from .isomorphism import IsoRegistry
from .matroid import BinaryMatroid
from .predicates import is_circuit_difference

Move = tuple[str, str]


def series_contract_candidates(m: BinaryMatroid) -> list[int]:
    """Indices of elements lying in some two-element cocircuit."""
    dual_cols = m._dual_cols()
    counts = Counter(c for c in dual_cols if c)
    return [i for i, c in enumerate(dual_cols) if c and counts[c] >= 2]


def series_minor_children(m: BinaryMatroid) -> list[tuple[str, str, BinaryMatroid]]:
    """One-move series minors as (operation, element label, result)."""
    out = [("delete", m.labels[e], m.delete([e])) for e in range(m.size)]
    out.extend(
        ("contract", m.labels[e], m.contract([e]))
        for e in series_contract_candidates(m)
    )
    return out


def series_minors(
    m: BinaryMatroid, include_self: bool = True
) -> Iterator[BinaryMatroid]:
    """All series minors of ``m`` up to isomorphism, breadth-first."""
    registry = IsoRegistry()
    registry.canonical(*m._std())
    queue = deque([m])
    if include_self:
        yield m
    while queue:
        cur = queue.popleft()
        for _, _, child in series_minor_children(cur):
            _, new = registry.canonical(*child._std())
            if new:
                queue.append(child)
                yield child


@lru_cache(maxsize=1)
def _n5_pattern() -> BinaryMatroid:
    from .zoo import n5

    return n5()


_N5_REACH = IsoRegistry()


def _reaches_n5(m: BinaryMatroid) -> bool:
    if m.size < 5 or m.rank < 2 or m.corank < 3:
        return False
    cid, _ = _N5_REACH.canonical(*m._std())
    props = _N5_REACH.props[cid]
    if "n5" not in props:
        if m.size == 5:
            props["n5"] = m.is_isomorphic(_n5_pattern())
        else:
            props["n5"] = any(
                _reaches_n5(child) for _, _, child in series_minor_children(m)
            )
    return props["n5"]


def find_n5_series_minor(m: BinaryMatroid) -> Optional[list[Move]]:
    """A move script reducing ``m`` to N_5 by series minors, or None.

    Moves are (\"delete\"|\"contract\", element label) pairs applied left to
    right; an empty script means the matroid itself is N_5.  Reachability
    is memoized by isomorphism class, so repeated queries share work.
    """
    if not _reaches_n5(m):
        return None
    script: list[Move] = []
    cur = m
    while not cur.is_isomorphic(_n5_pattern()):
        for op, label, child in series_minor_children(cur):
            if _reaches_n5(child):
                script.append((op, label))
                cur = child
                break
        else:
            raise RuntimeError("reachability cache is inconsistent")
    return script


_CD_CLASSES = IsoRegistry()


def _class_is_cd(m: BinaryMatroid) -> bool:
    cid, _ = _CD_CLASSES.canonical(*m._std())
    props = _CD_CLASSES.props[cid]
    if "cd" not in props:
        props["cd"] = bool(is_circuit_difference(m))
    return props["cd"]


def is_excluded_series_minor(m: BinaryMatroid) -> bool:
    """Whether ``m`` is minor-minimal for failing circuit-difference.

    True when ``m`` is not circuit-difference but every proper series
    minor is; decided by a breadth-first scan of the series-minor classes
    with memoized circuit-difference status.
    """
    if _class_is_cd(m):
        return False
    for sub in series_minors(m, include_self=False):
        if not _class_is_cd(sub):
            return False
    return True


# -- the family [AG + e] \ X ------------------------------------------------


def _ag_points(r: int) -> list[str]:
    from .zoo import ag

    return list(ag(r).labels)


def _resolve_excluded(r: int, excluded: Iterable[str | int]) -> list[str]:
    points = _ag_points(r)
    out = []
    for x in excluded:
        if isinstance(x, int):
            if not 0 <= x < len(points):
                raise InvalidConstructionError(f"affine point index {x} out of range")
            out.append(points[x])
        else:
            if x not in points:
                raise InvalidConstructionError(
                    f"{x!r} is not an affine point label of rank {r}"
                )
            out.append(x)
    if len(set(out)) != len(out):
        raise InvalidConstructionError("excluded points repeat")
    return out


def _copy_violation(
    base: BinaryMatroid, chosen: list[str], r: int
) -> Optional[tuple[str, ...]]:
    """A subset of ``chosen`` isomorphic to the forbidden affine geometry."""
    from .zoo import ag

    target = ag(r - 2)
    size = 1 << (r - 3)
    if len(chosen) < size:
        return None
    for z in itertools.combinations(sorted(chosen), size):
        if base.restrict(list(z)).is_isomorphic(target):
            return z
    return None


def m_family(r: int, excluded: Iterable[str | int] = ()) -> BinaryMatroid:
    """Family member [AG + e] \\ X for a valid excluded point set X.

    X is a set of affine points (labels or indices) whose removal keeps
    the affine part spanning (rank r) and leaves no trace of the rank
    (r-2) affine geometry inside X itself.  Raises
    InvalidConstructionError when X breaks either condition.
    """
    from .zoo import ag, ag_plus_e

    if r < 3:
        raise InvalidConstructionError("the family starts at rank 3")
    chosen = _resolve_excluded(r, excluded)
    affine = ag(r)
    rest = [p for p in affine.labels if p not in chosen]
    if affine.restrict(rest).rank != r:
        raise InvalidConstructionError(
            "removing X drops the rank of the affine part below r"
        )
    bad = _copy_violation(affine, chosen, r)
    if bad is not None:
        raise InvalidConstructionError(
            f"excluded set contains a rank-{r - 2} affine geometry copy {bad}"
        )
    return ag_plus_e(r).delete(chosen)


def _valid_exclusions(r: int) -> list[tuple[str, ...]]:
    """All valid excluded point sets, by size then point order."""
    from .zoo import ag

    affine = ag(r)
    points = list(affine.labels)
    order = {p: i for i, p in enumerate(points)}
    out: list[tuple[str, ...]] = []
    level: list[tuple[str, ...]] = [()]
    while level:
        out.extend(level)
        grown: list[tuple[str, ...]] = []
        for xs in level:
            start = order[xs[-1]] + 1 if xs else 0
            for p in points[start:]:
                cand = xs + (p,)
                rest = [q for q in points if q not in cand]
                if affine.restrict(rest).rank != r:
                    continue
                if _copy_violation(affine, list(cand), r) is not None:
                    continue
                grown.append(cand)
        level = grown
    return out


def enumerate_m_family(r: int) -> list[BinaryMatroid]:
    """All family members of rank r, one per isomorphism class.

    Members are [AG + e] \\ X over every valid X, deduped by isomorphism
    and ordered by decreasing size then discovery order.
    """
    registry = IsoRegistry()
    members: list[BinaryMatroid] = []
    for xs in _valid_exclusions(r):
        member = m_family(r, xs)
        _, new = registry.canonical(*member._std())
        if new:
            members.append(member)
    return sorted(members, key=lambda m: -m.size)


def hyperplane_complementary_catalog(r: int) -> list[BinaryMatroid]:
    """All hyperplane-complementary matroids of rank r, up to isomorphism.

    These are exactly the AG \\ X with X as in the family construction;
    the brute-force predicate over a full census cross-checks this in the
    audit suite.
    """
    from .zoo import ag

    registry = IsoRegistry()
    members: list[BinaryMatroid] = []
    for xs in _valid_exclusions(r):
        member = ag(r).delete(xs)
        _, new = registry.canonical(*member._std())
        if new:
            members.append(member)
    return sorted(members, key=lambda m: -m.size)
