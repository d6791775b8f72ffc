"""Binary matroids given by GF(2) representation matrices.

A ``BinaryMatroid`` is a labelled multiset of GF(2) columns.  Circuits are
the minimal non-empty supports of the null space, cocircuits the minimal
supports of the row space, and both are found by walking the full space
from a basis and filtering to minimal supports.  The walk is capped, so
pathological inputs fail fast instead of hanging.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, NotConnectedError
from .gf2 import ElementSet, Gf2Matrix, bits_of, iter_bits, rank_of_ints, rref
from .isomorphism import (
    PointData,
    find_isomorphism_std,
    point_data,
    preferred_side,
    standard_form,
)

ENUMERATION_CAP = 28

ElementRef = int | str


class CircuitFamily:
    """Immutable family of circuits (or cocircuits), sorted by index tuple."""

    def __init__(self, members: Iterable[ElementSet]):
        self.members: tuple[ElementSet, ...] = tuple(
            sorted(members, key=lambda s: s.indices())
        )
        self._masks = frozenset(s.bits for s in self.members)

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: ElementSet) -> bool:
        return s.bits in self._masks

    def __getitem__(self, i: int) -> ElementSet:
        return self.members[i]

    def masks(self) -> frozenset[int]:
        return self._masks

    def __repr__(self) -> str:
        return f"CircuitFamily({list(self.members)!r})"


@dataclass(frozen=True)
class SeriesClassPartition:
    """Partition of the ground set into coparallel (series) classes."""

    classes: tuple[ElementSet, ...]

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, index: int) -> ElementSet:
        for c in self.classes:
            if index in c:
                return c
        raise KeyError(index)


class BinaryMatroid:
    """A binary matroid on labelled elements, via a representation matrix.

    Columns index the ground set; the matrix need not have full row rank.
    Instances are immutable and cache derived data (rank, circuits, dual
    form) on first use.
    """

    def __init__(self, matrix: Gf2Matrix, labels: Sequence[str] | None = None):
        self.rep = matrix
        n = matrix.num_cols
        if labels is None:
            labels = tuple(f"e{i}" for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("label count must match column count")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._cache: dict = {}

    # -- basics ---------------------------------------------------------

    @property
    def size(self) -> int:
        return self.rep.num_cols

    def __len__(self) -> int:
        return self.size

    @property
    def rank(self) -> int:
        std = self._std()
        return std[0]

    @property
    def corank(self) -> int:
        return self.size - self.rank

    def _std(self) -> tuple[int, tuple[int, ...]]:
        if "std" not in self._cache:
            self._cache["std"] = standard_form(self.rep)
        return self._cache["std"]

    def _points(self) -> PointData:
        if "points" not in self._cache:
            self._cache["points"] = point_data(*self._std())
        return self._cache["points"]

    def index(self, ref: ElementRef) -> int:
        """Resolve an element given by index or label."""
        if isinstance(ref, str):
            try:
                return self._index[ref]
            except KeyError:
                raise KeyError(f"no element labelled {ref!r}") from None
        if not 0 <= ref < self.size:
            raise IndexError(f"element index {ref} out of range")
        return ref

    def subset(self, refs: Iterable[ElementRef] | ElementSet) -> ElementSet:
        if isinstance(refs, ElementSet):
            if refs.universe != self.size:
                raise ValueError("ElementSet universe mismatch")
            return refs
        return ElementSet(bits_of(self.index(x) for x in refs), self.size)

    def label_set(self, s: ElementSet) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in s)

    def ground_set(self) -> ElementSet:
        return ElementSet.full(self.size)

    def __repr__(self) -> str:
        return f"BinaryMatroid(n={self.size}, r={self.rank})"

    # -- rank function --------------------------------------------------

    def rank_of(self, refs: Iterable[ElementRef] | ElementSet) -> int:
        s = self.subset(refs)
        _, cols = self._std()
        return rank_of_ints(cols[i] for i in s)

    def closure(self, refs: Iterable[ElementRef] | ElementSet) -> ElementSet:
        s = self.subset(refs)
        _, cols = self._std()
        basis: dict[int, int] = {}
        for i in s:
            v = cols[i]
            while v:
                head = v.bit_length() - 1
                if head in basis:
                    v ^= basis[head]
                else:
                    basis[head] = v
                    break
        out = s.bits
        for j in range(self.size):
            v = cols[j]
            while v:
                head = v.bit_length() - 1
                if head not in basis:
                    break
                v ^= basis[head]
            if v == 0:
                out |= 1 << j
        return ElementSet(out, self.size)

    def loops(self) -> ElementSet:
        _, cols = self._std()
        return ElementSet(bits_of(i for i, c in enumerate(cols) if c == 0), self.size)

    def coloops(self) -> ElementSet:
        dual_cols = self._dual_cols()
        return ElementSet(
            bits_of(i for i, c in enumerate(dual_cols) if c == 0), self.size
        )

    # -- circuit spaces -------------------------------------------------

    def _space_minimal_supports(self, basis_masks: list[int], what: str) -> list[int]:
        k = len(basis_masks)
        if k > ENUMERATION_CAP:
            raise CapExceededError(
                f"{what} enumeration needs a walk over 2^{k} vectors"
                f" (cap is 2^{ENUMERATION_CAP})",
                dimension=k,
                cap=ENUMERATION_CAP,
            )
        supports = []
        current = 0
        for i in range(1, 1 << k):
            current ^= basis_masks[(i & -i).bit_length() - 1]
            supports.append(current)
        supports.sort(key=int.bit_count)
        minimal: list[int] = []
        for s in supports:
            if not any(c & s == c for c in minimal):
                minimal.append(s)
        return minimal

    def circuits(self) -> CircuitFamily:
        """All circuits, i.e. minimal non-empty supports of the null space."""
        if "circuits" not in self._cache:
            basis = [b.bits for b in _null_basis_std(*self._std())]
            masks = self._space_minimal_supports(basis, "circuit")
            self._cache["circuits"] = CircuitFamily(
                ElementSet(m, self.size) for m in masks
            )
        return self._cache["circuits"]

    def cocircuits(self) -> CircuitFamily:
        """All cocircuits, i.e. minimal non-empty supports of the row space."""
        if "cocircuits" not in self._cache:
            basis = [row for row in rref(self.rep).matrix.rows if row]
            masks = self._space_minimal_supports(basis, "cocircuit")
            self._cache["cocircuits"] = CircuitFamily(
                ElementSet(m, self.size) for m in masks
            )
        return self._cache["cocircuits"]

    # -- duality --------------------------------------------------------

    def _dual_cols(self) -> tuple[int, ...]:
        if "dual_cols" not in self._cache:
            self._cache["dual_cols"] = _dual_standard(*self._std())
        return self._cache["dual_cols"]

    def dual(self) -> "BinaryMatroid":
        """The dual matroid on the same labelled ground set."""
        if "dual" not in self._cache:
            cols = self._dual_cols()
            m = Gf2Matrix.from_columns(cols, self.corank)
            self._cache["dual"] = BinaryMatroid(m, self.labels)
        return self._cache["dual"]

    # -- minors ---------------------------------------------------------

    def minor(
        self,
        delete: Iterable[ElementRef] | ElementSet = (),
        contract: Iterable[ElementRef] | ElementSet = (),
    ) -> "BinaryMatroid":
        """Delete and contract element sets (a contracted loop is deleted)."""
        dset = self.subset(delete)
        cset = self.subset(contract)
        if dset.bits & cset.bits:
            raise ValueError("delete and contract sets overlap")
        rows: list[int | None] = list(self.rep.rows)
        for e in cset:
            hit = [i for i, row in enumerate(rows) if row is not None and row >> e & 1]
            if hit:
                prow = rows[hit[0]]
                for i in hit[1:]:
                    rows[i] ^= prow
                rows[hit[0]] = None
        rows = [row for row in rows if row is not None]
        keep = [j for j in range(self.size) if j not in dset and j not in cset]
        new_rows = [bits_of(t for t, j in enumerate(keep) if row >> j & 1) for row in rows]
        return BinaryMatroid(
            Gf2Matrix(tuple(new_rows), len(keep)), [self.labels[j] for j in keep]
        )

    def restrict(self, keep: Iterable[ElementRef] | ElementSet) -> "BinaryMatroid":
        return self.minor(delete=self.subset(keep).complement())

    def contract(self, refs: Iterable[ElementRef] | ElementSet) -> "BinaryMatroid":
        return self.minor(contract=refs)

    def delete(self, refs: Iterable[ElementRef] | ElementSet) -> "BinaryMatroid":
        return self.minor(delete=refs)

    # -- connectivity ---------------------------------------------------

    def components(self) -> tuple[ElementSet, ...]:
        """Connected components, each as an ElementSet, ordered by minimum."""
        if "components" not in self._cache:
            parent = list(range(self.size))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for mask in self.circuits().masks():
                it = iter_bits(mask)
                first = find(next(it))
                for b in it:
                    parent[find(b)] = first
            groups: dict[int, int] = {}
            for j in range(self.size):
                root = find(j)
                groups[root] = groups.get(root, 0) | 1 << j
            comps = sorted(groups.values(), key=lambda m: (m & -m).bit_length())
            self._cache["components"] = tuple(
                ElementSet(m, self.size) for m in comps
            )
        return self._cache["components"]

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- series structure -----------------------------------------------

    def series_classes(self) -> SeriesClassPartition:
        """Coparallel classes of a connected matroid.

        Two distinct elements share a class exactly when together they form
        a cocircuit.  Raises NotConnectedError on disconnected input.
        """
        if not self.is_connected():
            raise NotConnectedError("series classes need a connected matroid")
        if self.size <= 1:
            return SeriesClassPartition(
                tuple(ElementSet(1, 1) for _ in range(self.size))
            )
        groups: dict[int, int] = {}
        for j, c in enumerate(self._dual_cols()):
            groups[c] = groups.get(c, 0) | 1 << j
        classes = sorted(groups.values(), key=lambda m: (m & -m).bit_length())
        return SeriesClassPartition(tuple(ElementSet(m, self.size) for m in classes))

    def cosimplify(self) -> tuple["BinaryMatroid", dict[str, tuple[str, ...]]]:
        """Contract each series class to its lowest-index element.

        Returns the cosimplification and a witness mapping each surviving
        label to the labels of its whole class.
        """
        part = self.series_classes()
        contract_bits = 0
        witness = {}
        for cls in part:
            keeper = min(cls)
            witness[self.labels[keeper]] = self.label_set(cls)
            contract_bits |= cls.bits & ~(1 << keeper)
        reduced = self.minor(contract=ElementSet(contract_bits, self.size))
        return reduced, witness

    def is_cosimple(self) -> bool:
        """No coloops-free 2-cocircuits: every series class is a singleton."""
        dual_cols = self._dual_cols()
        seen: set[int] = set()
        for c in dual_cols:
            if c == 0:
                continue
            if c in seen:
                return False
            seen.add(c)
        return True

    def series_extend(
        self, element: ElementRef, new_labels: Sequence[str]
    ) -> "BinaryMatroid":
        """Put new elements in series with ``element``, one row each.

        Every new element ends in the target's series class; contracting
        the new elements gives back this matroid.  The target must not be
        a coloop (no two-element cocircuit can contain one).
        """
        f = self.index(element)
        if f in self.coloops():
            raise ValueError(
                f"cannot series-extend at coloop {self.labels[f]!r}"
            )
        labels = list(self.labels)
        for lab in new_labels:
            if lab in labels:
                raise ValueError(f"duplicate label {lab!r}")
            labels.append(str(lab))
        rows = list(self.rep.rows)
        ncols = self.size
        for t in range(len(new_labels)):
            rows.append(1 << f | 1 << ncols + t)
        return BinaryMatroid(Gf2Matrix(tuple(rows), ncols + len(new_labels)), labels)

    # -- isomorphism ----------------------------------------------------

    def _iso_points(self) -> PointData:
        # tall representations are searched through their duals; duality
        # keeps the element order, so index bijections carry over as-is
        if "iso_points" not in self._cache:
            self._cache["iso_points"] = point_data(*preferred_side(*self._std()))
        return self._cache["iso_points"]

    def find_isomorphism(self, other: "BinaryMatroid") -> dict[str, str] | None:
        """Label bijection onto ``other`` preserving the matroid, or None."""
        if (self.size, self.rank) != (other.size, other.rank):
            return None
        perm = find_isomorphism_std(self._iso_points(), other._iso_points())
        if perm is None:
            return None
        return {self.labels[i]: other.labels[perm[i]] for i in range(self.size)}

    def is_isomorphic(self, other: "BinaryMatroid") -> bool:
        return self.find_isomorphism(other) is not None

    # -- minors of a given shape ----------------------------------------

    def has_minor(self, pattern: "BinaryMatroid") -> bool:
        """Whether some minor of this matroid is isomorphic to ``pattern``.

        Searches contractions by independent sets of the exact rank gap,
        then keeps subsets of the right size, pruning duplicates and rank
        mismatches before the isomorphism test.
        """
        gap = self.rank - pattern.rank
        if gap < 0 or pattern.size > self.size or pattern.corank > self.corank:
            return False
        target = pattern._points()
        _, cols = self._std()
        k = pattern.rank
        if len(target.mult) == pattern.size == (1 << k) - 1:
            # The pattern is all of PG(k-1,2), which sits inside a rank-k
            # contraction exactly when that contraction has 2^k - 1 distinct
            # nonzero columns; no isomorphism search needed.
            for cset in itertools.combinations(range(self.size), gap):
                if rank_of_ints(cols[j] for j in cset) != gap:
                    continue
                distinct = set(self.minor(contract=cset)._std()[1])
                distinct.discard(0)
                if len(distinct) == pattern.size:
                    return True
            return False
        seen_contraction: set[tuple[int, ...]] = set()
        for cset in itertools.combinations(range(self.size), gap):
            if rank_of_ints(cols[j] for j in cset) != gap:
                continue
            r2, cols2 = self.minor(contract=cset)._std()
            key = tuple(sorted(cols2))
            if key in seen_contraction:
                continue
            seen_contraction.add(key)
            if _search_restriction(r2, cols2, target):
                return True
        return False


def _search_restriction(r: int, cols: tuple[int, ...], target: PointData) -> bool:
    n = len(cols)
    want = len(target.cols)
    if want > n:
        return False
    seen: set[tuple[int, ...]] = set()
    for keep in itertools.combinations(range(n), want):
        chosen = tuple(sorted(cols[j] for j in keep))
        if chosen in seen:
            continue
        seen.add(chosen)
        if rank_of_ints(chosen) != target.r:
            continue
        sub_r, sub_cols = _recoordinate(chosen)
        if find_isomorphism_std(point_data(sub_r, sub_cols), target) is not None:
            return True
    return False


def _recoordinate(cols: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Standard form of a bare column family (rows = ambient coordinates)."""
    cols = tuple(cols)
    height = max((c.bit_length() for c in cols), default=0)
    return standard_form(Gf2Matrix.from_columns(cols, height))


def _null_basis_std(r: int, cols: tuple[int, ...]) -> list[ElementSet]:
    from .gf2 import null_space_basis

    return null_space_basis(Gf2Matrix.from_columns(cols, r))


def _dual_standard(r: int, cols: tuple[int, ...]) -> tuple[int, ...]:
    """Columns of the dual representation, aligned with the element order."""
    n = len(cols)
    m = Gf2Matrix.from_columns(cols, r)
    red, rank, pivots = rref(m)
    free = [j for j in range(n) if j not in set(pivots)]
    dual_cols = [0] * n
    for t, q in enumerate(free):
        dual_cols[q] = 1 << t
    for i, p in enumerate(pivots):
        v = 0
        for t, q in enumerate(free):
            v |= (red.rows[i] >> q & 1) << t
        dual_cols[p] = v
    return tuple(dual_cols)
