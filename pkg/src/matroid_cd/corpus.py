"""Exhaustive corpora of small binary matroids, plus seeded extensions.

The census enumerates loopless column multisets level by level: a class
representative on n elements is extended by every vector already in its
span (same rank) and by a single new unit vector (rank up); one rank-up
child per parent suffices because all rank-increasing single extensions
of a matroid are equivalent under a basis change.  Levels are deduped by
full isomorphism up to ``FULL_ISO_LIMIT`` elements and by a documented
coarser signature (rank plus circuit-size multiset) beyond, which may
overcount classes but never misses one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .gf2 import Gf2Matrix, null_space_basis
from .isomorphism import IsoRegistry
from .matroid import BinaryMatroid
from .predicates import is_graphic

FULL_ISO_LIMIT = 9


@dataclass
class Census:
    """Connected matroids up to isomorphism, by element count."""

    max_elements: int
    simple: bool
    members: list[BinaryMatroid]
    signature_deduped: bool


def _wrap(r: int, cols: tuple[int, ...]) -> BinaryMatroid:
    return BinaryMatroid(Gf2Matrix.from_columns(cols, r))


def cycle_weight_profile(r: int, cols: tuple[int, ...]) -> tuple[int, ...]:
    """Weight distribution of the cycle space, a representation invariant.

    Counts the non-empty null space supports by size; used to sharpen
    isomorphism-class bucketing before the exact search.
    """
    basis = [b.bits for b in null_space_basis(Gf2Matrix.from_columns(cols, r))]
    counts = [0] * (len(cols) + 1)
    current = 0
    for i in range(1, 1 << len(basis)):
        current ^= basis[(i & -i).bit_length() - 1]
        counts[current.bit_count()] += 1
    return tuple(counts)


def _coarse_signature(r: int, cols: tuple[int, ...]) -> tuple:
    m = _wrap(r, cols)
    sizes = tuple(sorted(len(c) for c in m.circuits()))
    return (r, sizes)


@lru_cache(maxsize=None)
def binary_census(max_elements: int, simple: bool = False) -> Census:
    """All connected binary matroids with 1..max_elements elements.

    With ``simple=True`` the enumeration is restricted to simple matroids
    (no loops, no parallel pairs); otherwise arbitrary multisets occur and
    the single loop is included as the one matroid with a loop that is
    connected.
    """
    registry = IsoRegistry(extra_invariant=cycle_weight_profile)
    members: list[BinaryMatroid] = []
    signature_deduped = max_elements > FULL_ISO_LIMIT

    if not simple and max_elements >= 1:
        members.append(BinaryMatroid(Gf2Matrix((0,), 1)))

    level: list[tuple[int, tuple[int, ...]]] = []
    if max_elements >= 1:
        level = [(1, (1,))]
        members.append(_wrap(1, (1,)))

    for n in range(2, max_elements + 1):
        raw: set[tuple[int, tuple[int, ...]]] = set()
        for r, cols in level:
            for v in range(1, 1 << r):
                if simple and v in cols:
                    continue
                raw.add((r, tuple(sorted(cols + (v,)))))
            raw.add((r + 1, tuple(sorted(cols + (1 << r,)))))
        fresh: list[tuple[int, tuple[int, ...]]] = []
        if n <= FULL_ISO_LIMIT:
            for r, cols in sorted(raw):
                _, new = registry.canonical(r, cols)
                if new:
                    fresh.append((r, cols))
        else:
            seen: set[tuple] = set()
            for r, cols in sorted(raw):
                sig = (n,) + _coarse_signature(r, cols)
                if sig not in seen:
                    seen.add(sig)
                    fresh.append((r, cols))
        level = fresh
        for r, cols in level:
            m = _wrap(r, cols)
            if m.is_connected():
                members.append(m)
    return Census(max_elements, simple, members, signature_deduped)


@lru_cache(maxsize=None)
def cosimple_census(max_elements: int) -> list[BinaryMatroid]:
    """Connected cosimple binary matroids with 2..max_elements elements.

    Duals of the simple census: a matroid is cosimple exactly when its
    dual is simple, and duality preserves connectivity, so dualizing the
    simple classes enumerates the cosimple ones exactly once each.
    """
    return [
        m.dual()
        for m in binary_census(max_elements, simple=True).members
        if m.size >= 2
    ]


@lru_cache(maxsize=None)
def graphic_census(max_elements: int) -> list[BinaryMatroid]:
    """Cycle matroids of 2-connected multigraphs with <= max_elements edges.

    Filtered from the connected census by the excluded-minor test for
    graphicness.  Single-element matroids are dropped: a lone loop or
    bridge does not come from a 2-connected graph.
    """
    return [
        m
        for m in binary_census(max_elements).members
        if m.size >= 2 and is_graphic(m)
    ]


def special_members() -> list[BinaryMatroid]:
    """The named regular matroids used alongside the graphic corpus."""
    from . import zoo

    k33 = zoo.complete_bipartite(3, 3)
    return [k33, k33.dual(), zoo.complete(5).dual(), zoo.r10()]


def seeded_extension_pairs(
    bases: list[BinaryMatroid], count: int, seed: int, max_moves: int = 4
) -> list[tuple[BinaryMatroid, BinaryMatroid]]:
    """Deterministic pseudo-random series extensions, paired with their base.

    Each instance picks a base uniformly, then applies 1..max_moves single
    series extensions at uniformly chosen non-coloop targets.  Bases with
    only coloops (the one-element free matroid) are skipped by redraw.
    """
    rng = random.Random(seed)
    out: list[tuple[BinaryMatroid, BinaryMatroid]] = []
    while len(out) < count:
        base = bases[rng.randrange(len(bases))]
        moves = rng.randint(1, max_moves)
        cur = base
        ok = True
        for t in range(moves):
            coloops = cur.coloops()
            targets = [i for i in range(cur.size) if i not in coloops]
            if not targets:
                ok = False
                break
            cur = cur.series_extend(targets[rng.randrange(len(targets))], [f"x{t}"])
        if ok:
            out.append((base, cur))
    return out


def seeded_extensions(
    bases: list[BinaryMatroid], count: int, seed: int, max_moves: int = 4
) -> list[BinaryMatroid]:
    """The extensions from seeded_extension_pairs, without their bases."""
    return [ext for _, ext in seeded_extension_pairs(bases, count, seed, max_moves)]
