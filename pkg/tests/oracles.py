"""Slow, independent reference implementations used to freeze test values.

Nothing here imports from matroid_cd's numeric core beyond the public
matroid type it receives; ranks come from list-based Gaussian elimination
and circuits from raw subset enumeration, so agreement with the package
is meaningful evidence rather than the same code run twice.
"""

from __future__ import annotations

from itertools import combinations, permutations


def gauss_rank(rows: list[list[int]]) -> int:
    """Rank over GF(2) of a 0/1 matrix given as row lists."""
    work = [list(row) for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                work[i] = [a ^ b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def column_lists(matroid) -> list[list[int]]:
    """Columns of a matroid's representation as 0/1 lists, low bit first."""
    rep = matroid.rep
    nrows = len(rep.rows)
    return [
        [(rep.rows[i] >> j) & 1 for i in range(nrows)]
        for j in range(rep.num_cols)
    ]


def subset_rank(cols: list[list[int]], subset: tuple[int, ...]) -> int:
    return gauss_rank([cols[j] for j in subset])


def brute_circuits(matroid) -> set[frozenset[int]]:
    """Circuits as index sets: minimal dependent subsets, by enumeration."""
    cols = column_lists(matroid)
    n = len(cols)
    dependent = []
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if subset_rank(cols, subset) < size:
                dependent.append(frozenset(subset))
    circuits = set()
    for d in dependent:
        if not any(other < d for other in dependent if other != d):
            circuits.add(d)
    return circuits


def brute_cocircuits(matroid) -> set[frozenset[int]]:
    """Cocircuits as index sets: complements of hyperplanes, by closure scan.

    A cocircuit is a minimal set meeting every basis; equivalently the
    complement of a maximal subset whose rank is rank(M) - 1.
    """
    cols = column_lists(matroid)
    n = len(cols)
    full_rank = gauss_rank(cols)
    hyperplanes = []
    ground = frozenset(range(n))
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            fs = frozenset(subset)
            if subset_rank(cols, subset) != full_rank - 1:
                continue
            # flats only: no outside element may keep the rank down
            if any(
                subset_rank(cols, subset + (e,)) == full_rank - 1
                for e in ground - fs
            ):
                continue
            hyperplanes.append(fs)
    return {ground - h for h in hyperplanes}


def perm_isomorphic(m1, m2) -> bool:
    """Element-permutation isomorphism test via circuit families.

    Exponential; intended for matroids with at most 8 elements.
    """
    if m1.size != m2.size:
        return False
    c1 = brute_circuits(m1)
    c2 = brute_circuits(m2)
    if len(c1) != len(c2):
        return False
    if sorted(len(c) for c in c1) != sorted(len(c) for c in c2):
        return False
    n = m1.size
    for perm in permutations(range(n)):
        if {frozenset(perm[i] for i in c) for c in c1} == c2:
            return True
    return False


def index_sets(matroid, families) -> set[frozenset[int]]:
    """Label-set families converted into index sets for oracle comparison."""
    pos = {lab: i for i, lab in enumerate(matroid.labels)}
    return {frozenset(pos[lab] for lab in fam) for fam in families}
