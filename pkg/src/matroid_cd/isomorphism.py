"""Isomorphism testing for binary matroids via basis-image search.

A binary matroid is determined by its multiset of GF(2) columns up to a
change of basis, so two representations are isomorphic exactly when some
invertible map carries one nonzero-column multiset onto the other (zero
columns, the loops, match separately by count).  The search picks a basis
among the distinct columns of the first matroid and backtracks over images
in the second, pruning with point colors from an iterated line-structure
refinement and with multiplicity checks over the partial span.  No
canonical form is computed.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .gf2 import Gf2Matrix, null_space_basis, rref

# Global intern table so color ids are comparable across matroids.
_COLOR_IDS: dict[object, int] = {}
_COLOR_LOCK = threading.Lock()


def _intern(key: object) -> int:
    # double-checked: the bare get is atomic under the GIL, the lock makes
    # the insert unique so concurrent callers agree on one id per key
    cid = _COLOR_IDS.get(key)
    if cid is None:
        with _COLOR_LOCK:
            cid = _COLOR_IDS.get(key)
            if cid is None:
                cid = len(_COLOR_IDS)
                _COLOR_IDS[key] = cid
    return cid


def standard_form(matrix: Gf2Matrix) -> tuple[int, tuple[int, ...]]:
    """Rewrite columns in the coordinates of a pivot basis.

    Returns (rank, columns) where each column is a bit-packed vector of
    length rank; loops stay zero.  Isomorphic representations of the same
    matroid yield GL-equivalent column multisets in this form.
    """
    red, rank, _ = rref(matrix)
    cols = []
    for j in range(matrix.num_cols):
        v = 0
        for i in range(rank):
            v |= (red.rows[i] >> j & 1) << i
        cols.append(v)
    return rank, tuple(cols)


def dual_standard_form(r: int, cols: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Standard form of the dual representation, element order preserved."""
    mat = Gf2Matrix.from_columns(cols, r)
    rows = tuple(b.bits for b in null_space_basis(mat))
    return standard_form(Gf2Matrix(rows, len(cols)))


def preferred_side(r: int, cols: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """The representation (given or dual) with the smaller rank.

    The image search branches over points per basis element, so a rep
    with more basis elements than distinct points degenerates; its dual
    is equally good for isomorphism purposes and cheap to test.  The
    choice depends only on (size, rank), which isomorphism preserves.
    """
    if 2 * r > len(cols):
        return dual_standard_form(r, cols)
    return r, cols


@dataclass
class PointData:
    r: int
    cols: tuple[int, ...]
    loops: tuple[int, ...]
    mult: dict[int, int]
    where: dict[int, tuple[int, ...]]
    color: dict[int, int]
    signature: tuple


def _refine_colors(points: list[int], mult: dict[int, int]) -> dict[int, int]:
    support = set(points)
    color = {p: _intern(("seed", mult[p])) for p in points}
    for _ in range(4):
        items: dict[int, list] = {p: [] for p in points}
        for a_pos, p in enumerate(points):
            for q in points[a_pos + 1 :]:
                s = p ^ q
                if s in support:
                    # line {p, q, s}; record each member's view once
                    if p < q < s:
                        items[p].append(tuple(sorted((color[q], color[s]))))
                        items[q].append(tuple(sorted((color[p], color[s]))))
                        items[s].append(tuple(sorted((color[p], color[q]))))
        new = {
            p: _intern(("ref", color[p], tuple(sorted(items[p])))) for p in points
        }
        if len(set(new.values())) == len(set(color.values())):
            color = new
            break
        color = new
    return color


def point_data(r: int, cols: tuple[int, ...]) -> PointData:
    loops = tuple(i for i, c in enumerate(cols) if c == 0)
    mult: dict[int, int] = {}
    where: dict[int, list[int]] = {}
    for i, c in enumerate(cols):
        if c:
            mult[c] = mult.get(c, 0) + 1
            where.setdefault(c, []).append(i)
    points = sorted(mult)
    color = _refine_colors(points, mult)
    hist: dict[int, int] = {}
    for p in points:
        hist[color[p]] = hist.get(color[p], 0) + mult[p]
    signature = (len(cols), r, len(loops), tuple(sorted(hist.items())))
    return PointData(
        r, cols, loops, mult, {p: tuple(w) for p, w in where.items()}, color, signature
    )


def find_isomorphism_std(
    d1: PointData, d2: PointData
) -> list[int] | None:
    """Index bijection mapping matroid 1 onto matroid 2, or None.

    The returned list sends element i of the first matroid to element
    ``perm[i]`` of the second.
    """
    if d1.signature != d2.signature:
        return None
    r = d1.r
    points1 = sorted(d1.mult)
    if not points1:
        return list(range(len(d1.cols)))

    by_color2: dict[int, list[int]] = {}
    for p in sorted(d2.mult):
        by_color2.setdefault(d2.color[p], []).append(p)

    # Greedy basis through the rarest colors first to keep branching low.
    ordered = sorted(points1, key=lambda p: (len(by_color2[d1.color[p]]), d1.color[p], p))
    basis: list[int] = []
    lin: dict[int, int] = {}
    for p in ordered:
        v = p
        while v:
            head = v.bit_length() - 1
            if head in lin:
                v ^= lin[head]
            else:
                lin[head] = v
                basis.append(p)
                break
        if len(basis) == r:
            break
    assert len(basis) == r

    span_pairs: list[tuple[int, int]] = [(0, 0)]
    color1, color2 = d1.color, d2.color

    def extend(depth: int, heads: dict[int, int]) -> bool:
        if depth == r:
            return True
        b = basis[depth]
        for c in by_color2[color1[b]]:
            red = c
            while red:
                h = red.bit_length() - 1
                if h in heads:
                    red ^= heads[h]
                else:
                    break
            if red == 0:
                continue
            added = 0
            ok = True
            base = len(span_pairs)
            for k in range(base):
                v1, v2 = span_pairs[k]
                n1, n2 = v1 ^ b, v2 ^ c
                # equal colors imply equal multiplicities (seeded from them)
                if color1.get(n1) != color2.get(n2):
                    ok = False
                    break
                span_pairs.append((n1, n2))
                added += 1
            if ok:
                child = dict(heads)
                child[red.bit_length() - 1] = red
                if extend(depth + 1, child):
                    return True
            del span_pairs[base : base + added]
        return False

    if not extend(0, {}):
        return None

    perm = [-1] * len(d1.cols)
    vec_map = {v1: v2 for v1, v2 in span_pairs}
    used: dict[int, int] = {}
    for i, c in enumerate(d1.cols):
        if c == 0:
            continue
        target = vec_map[c]
        k = used.get(target, 0)
        perm[i] = d2.where[target][k]
        used[target] = k + 1
    for i, j in zip(d1.loops, d2.loops):
        perm[i] = j
    return perm


class IsoRegistry:
    """Dedupe store mapping representations to isomorphism-class ids.

    Buckets candidates by the color-histogram signature (optionally
    sharpened by an extra invariant callable), confirms with the full
    search, and keeps one representative plus a free-form property cache
    per class.  Safe for concurrent use.
    """

    def __init__(self, extra_invariant=None) -> None:
        self._lock = threading.Lock()
        self._extra = extra_invariant
        self._buckets: dict[tuple, list[int]] = {}
        self.reps: list[PointData] = []
        self.props: list[dict] = []

    def __len__(self) -> int:
        return len(self.reps)

    def _key(self, r: int, data: PointData) -> tuple:
        # r is the caller's rank, not the searched side's: without it a
        # matroid and its dual-mate of complementary rank would share a
        # bucket and wrongly merge
        if self._extra is None:
            return (r, data.signature)
        return (r, data.signature, self._extra(data.r, data.cols))

    def canonical(self, r: int, cols: tuple[int, ...]) -> tuple[int, bool]:
        """Return (class id, newly_added) for the given standard-form rep."""
        data = point_data(*preferred_side(r, cols))
        key = self._key(r, data)
        with self._lock:
            bucket = self._buckets.setdefault(key, [])
            for cid in bucket:
                if find_isomorphism_std(self.reps[cid], data) is not None:
                    return cid, False
            cid = len(self.reps)
            self.reps.append(data)
            self.props.append({})
            bucket.append(cid)
            return cid, True

    def lookup(self, r: int, cols: tuple[int, ...]) -> int | None:
        data = point_data(*preferred_side(r, cols))
        with self._lock:
            for cid in self._buckets.get(self._key(r, data), []):
                if find_isomorphism_std(self.reps[cid], data) is not None:
                    return cid
        return None
