"""Named matroid constructors and the text name-spec parser.

Graphic matroids come from vertex-edge incidence matrices over GF(2), so a
graph loop becomes a matroid loop.  Point labels of projective and affine
geometries are their coordinate strings (coordinate 0 first); graphic
families label edges e0, e1, ... in input order; s8 labels its elements
1..8 matching its defining matrix.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import InvalidConstructionError, MalformedInputError
from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid


def loop() -> BinaryMatroid:
    """U_{0,1}: a single loop."""
    return BinaryMatroid(Gf2Matrix((0,), 1), ["e0"])


def uniform_rank1(m: int) -> BinaryMatroid:
    """U_{1,m}: m parallel non-loop elements."""
    if m < 1:
        raise InvalidConstructionError("uniform_rank1 needs m >= 1")
    return BinaryMatroid(Gf2Matrix(((1 << m) - 1,), m))


def graphic(edges: Sequence[tuple[int, int]], num_vertices: int | None = None,
            labels: Sequence[str] | None = None) -> BinaryMatroid:
    """Cycle matroid of a multigraph, one incidence column per edge."""
    if num_vertices is None:
        num_vertices = max((max(u, v) for u, v in edges), default=-1) + 1
    cols = []
    for u, v in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise InvalidConstructionError("edge endpoint out of range")
        cols.append(0 if u == v else 1 << u | 1 << v)
    return BinaryMatroid(Gf2Matrix.from_columns(cols, num_vertices), labels)


def cographic(edges: Sequence[tuple[int, int]], num_vertices: int | None = None,
              labels: Sequence[str] | None = None) -> BinaryMatroid:
    """Bond matroid of a multigraph: the dual of its cycle matroid."""
    return graphic(edges, num_vertices, labels).dual()


def complete(n: int) -> BinaryMatroid:
    """Cycle matroid of the complete graph on n vertices."""
    if n < 1:
        raise InvalidConstructionError("complete needs n >= 1")
    return graphic(list(itertools.combinations(range(n), 2)), n)


def complete_bipartite(a: int, b: int) -> BinaryMatroid:
    """Cycle matroid of the complete bipartite graph K_{a,b}."""
    if a < 1 or b < 1:
        raise InvalidConstructionError("complete_bipartite needs a, b >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return graphic(edges, a + b)


def r10() -> BinaryMatroid:
    """The ten-element regular matroid [I_5 | B], B circulant from 1 1 0 0 1."""
    first = (1, 1, 0, 0, 1)
    rows = []
    for i in range(5):
        rows.append([1 if j == i else 0 for j in range(5)]
                    + [first[(j - i) % 5] for j in range(5)])
    return BinaryMatroid(Gf2Matrix.from_rows(rows))


def tipless_spike(r: int) -> BinaryMatroid:
    """Rank-r binary spike [I_r | J_r - I_r] on 2r elements."""
    if r < 3:
        raise InvalidConstructionError("spikes need rank >= 3")
    ones = (1 << r) - 1
    rows = tuple(1 << i | (ones ^ 1 << i) << r for i in range(r))
    return BinaryMatroid(Gf2Matrix(rows, 2 * r))


def tipped_spike(r: int) -> BinaryMatroid:
    """Tipless rank-r spike plus the all-ones tip column."""
    base = tipless_spike(r)
    rows = tuple(row | 1 << 2 * r for row in base.rep.rows)
    return BinaryMatroid(Gf2Matrix(rows, 2 * r + 1))


def s8() -> BinaryMatroid:
    """The eight-element rank-4 matroid with elements labelled 1..8."""
    rows = [
        [1, 0, 0, 0, 1, 1, 1, 0],
        [0, 1, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 0, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 0, 0, 1],
    ]
    return BinaryMatroid(Gf2Matrix.from_rows(rows), [str(i) for i in range(1, 9)])


def n5() -> BinaryMatroid:
    """Rank-2 triangle with two extra parallel elements (a d | b e | c)."""
    cols = {"a": 0b01, "b": 0b10, "c": 0b11, "d": 0b01, "e": 0b10}
    labels = ["a", "b", "c", "d", "e"]
    return BinaryMatroid(Gf2Matrix.from_columns([cols[x] for x in labels], 2), labels)


def _coord_label(col: int, r: int) -> str:
    return "".join(str(col >> i & 1) for i in range(r))


def pg(r: int) -> BinaryMatroid:
    """Rank-r binary projective geometry: all nonzero vectors as points."""
    if r < 1:
        raise InvalidConstructionError("pg needs rank >= 1")
    cols = list(range(1, 1 << r))
    labels = [_coord_label(c, r) for c in cols]
    return BinaryMatroid(Gf2Matrix.from_columns(cols, r), labels)


def f7() -> BinaryMatroid:
    """The Fano plane PG(2,2)."""
    return pg(3)


def ag(r: int) -> BinaryMatroid:
    """Rank-r binary affine geometry: pg(r) minus the last-coordinate hyperplane."""
    if r < 1:
        raise InvalidConstructionError("ag needs rank >= 1")
    top = 1 << (r - 1)
    cols = [x | top for x in range(1 << (r - 1))]
    labels = [_coord_label(c, r) for c in cols]
    return BinaryMatroid(Gf2Matrix.from_columns(cols, r), labels)


def ag_plus_e(r: int) -> BinaryMatroid:
    """Affine geometry of rank r plus one point of the removed hyperplane.

    The extra point is the lexicographically least (by coordinate string)
    nonzero point with last coordinate zero; any other choice gives an
    isomorphic matroid.
    """
    if r < 2:
        raise InvalidConstructionError("ag_plus_e needs rank >= 2")
    base = ag(r)
    extra = 1 << (r - 2)
    cols = list(base.rep.columns()) + [extra]
    labels = list(base.labels) + [_coord_label(extra, r)]
    return BinaryMatroid(Gf2Matrix.from_columns(cols, r), labels)


def make(spec: str) -> BinaryMatroid:
    """Build a named matroid from a text spec such as ``spike:4:tipped``.

    Accepted forms: ``u0:1``, ``u1:M``, ``K:N``, ``Kb:A,B``, ``r10``,
    ``spike:R:tipped|tipless``, ``s8``, ``n5``, ``f7``, ``ag:R``,
    ``ag+e:R``, ``pg:R``.  The head token is case-insensitive.
    """
    text = spec.strip()
    head, _, rest = text.partition(":")
    head = head.lower()
    try:
        if head == "u0":
            if rest != "1":
                raise InvalidConstructionError("only u0:1 exists")
            return loop()
        if head == "u1":
            return uniform_rank1(int(rest))
        if head == "k":
            return complete(int(rest))
        if head == "kb":
            a, b = (int(x) for x in rest.split(","))
            return complete_bipartite(a, b)
        if head == "r10" and not rest:
            return r10()
        if head == "spike":
            parts = rest.split(":")
            if len(parts) == 1:
                parts.append("tipless")
            r, kind = parts
            if kind == "tipped":
                return tipped_spike(int(r))
            if kind == "tipless":
                return tipless_spike(int(r))
            raise InvalidConstructionError("spike kind must be tipped or tipless")
        if head == "s8" and not rest:
            return s8()
        if head == "n5" and not rest:
            return n5()
        if head == "f7" and not rest:
            return f7()
        if head == "ag":
            return ag(int(rest))
        if head == "ag+e":
            return ag_plus_e(int(rest))
        if head == "pg":
            return pg(int(rest))
    except (ValueError, InvalidConstructionError) as exc:
        raise MalformedInputError(f"bad name spec {spec!r}: {exc}") from None
    raise MalformedInputError(f"unknown name spec {spec!r}")
