"""Linear algebra over GF(2) on bit-packed integers.

Vectors are plain Python ints: bit i is coordinate i, addition is ``^``.
A matrix stores its rows as such ints (bit j of row i is entry (i, j)),
which keeps elimination, span walks and rank queries allocation-free.
Element subsets of a ground set of size n are wrapped in ``ElementSet``,
an immutable value type over the universe {0, ..., n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

Gf2Vector = int
"""Bit-packed GF(2) vector; bit i holds coordinate i, xor is vector sum."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(indices: Iterable[int]) -> int:
    """Pack an iterable of bit positions into a mask."""
    out = 0
    for i in indices:
        out |= 1 << i
    return out


@dataclass(frozen=True)
class ElementSet:
    """Immutable subset of the ground set {0, ..., universe - 1}.

    Set algebra (``&``, ``|``, ``^``, ``-``) requires both operands to share
    the same universe; results stay inside it.
    """

    bits: int
    universe: int

    def __post_init__(self) -> None:
        if self.universe < 0:
            raise ValueError("universe must be non-negative")
        if self.bits < 0 or self.bits >> self.universe:
            raise ValueError("bits outside universe")

    @staticmethod
    def from_indices(indices: Iterable[int], universe: int) -> "ElementSet":
        return ElementSet(bits_of(indices), universe)

    @staticmethod
    def empty(universe: int) -> "ElementSet":
        return ElementSet(0, universe)

    @staticmethod
    def full(universe: int) -> "ElementSet":
        return ElementSet((1 << universe) - 1, universe)

    def _check(self, other: "ElementSet") -> None:
        if self.universe != other.universe:
            raise ValueError("universe mismatch")

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.universe and bool(self.bits >> index & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.bits & other.bits, self.universe)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.bits | other.bits, self.universe)

    def __xor__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.bits ^ other.bits, self.universe)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.bits & ~other.bits, self.universe)

    def __le__(self, other: "ElementSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> "ElementSet":
        return ElementSet((1 << self.universe) - 1 ^ self.bits, self.universe)

    def isdisjoint(self, other: "ElementSet") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __repr__(self) -> str:
        return "{" + ",".join(str(i) for i in self) + "}"


@dataclass(frozen=True)
class Gf2Matrix:
    """GF(2) matrix with rows packed as ints (bit j of a row is column j)."""

    rows: tuple[int, ...]
    num_cols: int

    def __post_init__(self) -> None:
        if self.num_cols < 0:
            raise ValueError("num_cols must be non-negative")
        for row in self.rows:
            if row < 0 or row >> self.num_cols:
                raise ValueError("row has bits outside num_cols")

    @staticmethod
    def from_rows(entries: Iterable[Iterable[int]], num_cols: int | None = None) -> "Gf2Matrix":
        """Build from nested 0/1 entries; ``num_cols`` is needed only for 0 rows."""
        packed = []
        width = num_cols
        for row in entries:
            cells = [int(x) & 1 for x in row]
            if width is None:
                width = len(cells)
            elif len(cells) != width:
                raise ValueError("ragged rows")
            packed.append(bits_of(i for i, x in enumerate(cells) if x))
        if width is None:
            raise ValueError("num_cols required for a matrix with no rows")
        return Gf2Matrix(tuple(packed), width)

    @staticmethod
    def from_columns(cols: Iterable[int], num_rows: int) -> "Gf2Matrix":
        """Build from bit-packed columns (bit i of a column is row i)."""
        cols = list(cols)
        rows = [0] * num_rows
        for j, col in enumerate(cols):
            if col < 0 or col >> num_rows:
                raise ValueError("column has bits outside num_rows")
            for i in iter_bits(col):
                rows[i] |= 1 << j
        return Gf2Matrix(tuple(rows), len(cols))

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def column(self, j: int) -> Gf2Vector:
        if not 0 <= j < self.num_cols:
            raise IndexError("column index out of range")
        out = 0
        for i, row in enumerate(self.rows):
            out |= (row >> j & 1) << i
        return out

    def columns(self) -> tuple[Gf2Vector, ...]:
        return tuple(self.column(j) for j in range(self.num_cols))

    def to_lists(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.num_cols)] for row in self.rows]

    def __repr__(self) -> str:
        body = ",".join(
            "".join(str(row >> j & 1) for j in range(self.num_cols)) for row in self.rows
        )
        return f"Gf2Matrix[{self.num_rows}x{self.num_cols}:{body}]"


class RrefResult(NamedTuple):
    matrix: Gf2Matrix
    rank: int
    pivots: tuple[int, ...]


def rref(m: Gf2Matrix) -> RrefResult:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns:
        ``RrefResult(matrix, rank, pivots)`` where ``matrix`` has its pivot
        rows first (one per pivot column, ascending), zero rows last, and
        every pivot column has a single 1.
    """
    rows = list(m.rows)
    pivots = []
    pivot_row = 0
    for j in range(m.num_cols):
        target = 1 << j
        src = next((i for i in range(pivot_row, len(rows)) if rows[i] & target), None)
        if src is None:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        for i in range(len(rows)):
            if i != pivot_row and rows[i] & target:
                rows[i] ^= rows[pivot_row]
        pivots.append(j)
        pivot_row += 1
    return RrefResult(Gf2Matrix(tuple(rows), m.num_cols), pivot_row, tuple(pivots))


def null_space_basis(m: Gf2Matrix) -> list[ElementSet]:
    """Support basis of the right null space, one vector per free column.

    The basis vector for free column q has a 1 at q and at every pivot
    column whose reduced row carries q; returned in ascending q order.
    """
    reduced, rank, pivots = rref(m)
    free = [j for j in range(m.num_cols) if j not in set(pivots)]
    basis = []
    for q in free:
        support = 1 << q
        for i, p in enumerate(pivots):
            if reduced.rows[i] >> q & 1:
                support |= 1 << p
        basis.append(ElementSet(support, m.num_cols))
    return basis


def rank_of_ints(vectors: Iterable[int]) -> int:
    """Rank of a family of bit-packed GF(2) vectors."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            head = v.bit_length() - 1
            if head in basis:
                v ^= basis[head]
            else:
                basis[head] = v
                break
    return len(basis)


def rank_of_columns(m: Gf2Matrix, s: ElementSet | Iterable[int]) -> int:
    """Rank of the column submatrix selected by ``s``.

    Args:
        m: the matrix.
        s: an ``ElementSet`` over the columns, or any iterable of column
            indices.
    """
    if isinstance(s, ElementSet):
        if s.universe != m.num_cols:
            raise ValueError("ElementSet universe must match num_cols")
        indices: Iterable[int] = s
    else:
        indices = s
    return rank_of_ints(m.column(j) for j in indices)
