"""Audit harness re-checking the library's guarantees over generated corpora.

Each audit pairs one stated fact (a numbered result the predicates encode,
or a module invariant) with an exhaustive or seeded corpus and reports how
many instances it checked and which ones failed.  Failures carry a
serialized witness matroid so they can be re-verified standalone.

Audits call the predicate layer through its module object on purpose: the
test suite corrupts a predicate via monkeypatching to prove the harness
actually notices wrong answers.
"""

from __future__ import annotations

import itertools
import os
import threading
import time
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from random import Random

from . import predicates
from .corpus import (
    binary_census,
    cosimple_census,
    graphic_census,
    seeded_extension_pairs,
    special_members,
)
from .errors import CapExceededError
from .exminors import (
    enumerate_m_family,
    find_n5_series_minor,
    hyperplane_complementary_catalog,
    is_excluded_series_minor,
    series_contract_candidates,
    series_minor_children,
)
from .gf2 import ElementSet, Gf2Matrix, null_space_basis, rank_of_ints, rref
from .io import parse_text, serialize_matrix
from .isomorphism import IsoRegistry
from .matroid import BinaryMatroid
from .recognizer import no_skew_structural, recognize_regular_cd
from .zoo import (
    ag,
    complete,
    complete_bipartite,
    graphic,
    loop,
    n5,
    pg,
    r10,
    s8,
    tipped_spike,
    uniform_rank1,
)

DEFAULT_MAX_ELEMENTS = 9
MAX_ELEMENTS_CAP = 14
COSIMPLE_BOUND = 10
EXTENSION_COUNT = 100


@dataclass
class AuditFailure:
    """One failing instance with a standalone re-parseable witness."""

    description: str
    matroid: str

    def to_dict(self) -> dict:
        return {"description": self.description, "matroid": self.matroid}


@dataclass
class AuditResult:
    lemma: str
    corpus: str
    checked: int
    failures: list[AuditFailure]
    seconds: float
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "corpus": self.corpus,
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
            "seconds": round(self.seconds, 3),
            "passed": self.passed,
            "note": self.note,
        }


def _fail(m: BinaryMatroid, description: str) -> AuditFailure:
    return AuditFailure(description, serialize_matrix(m))


def _derive_seed(seed: int, tag: str) -> int:
    # stable across runs and interpreters, unlike hash()
    return zlib.crc32(f"{seed}:{tag}".encode()) & 0x7FFFFFFF


class Corpora:
    """Lazily built instance collections shared by the audits."""

    def __init__(self, max_elements: int, seed: int):
        self.max_elements = max_elements
        self.seed = seed
        self._cache: dict = {}
        self._lock = threading.Lock()

    def _get(self, key, build):
        if key not in self._cache:
            with self._lock:
                if key not in self._cache:
                    self._cache[key] = build()
        return self._cache[key]

    @property
    def binary(self) -> list[BinaryMatroid]:
        return binary_census(self.max_elements).members

    @property
    def binary_note(self) -> str:
        if binary_census(self.max_elements).signature_deduped:
            return " (signature-deduped beyond 9 elements)"
        return ""

    @property
    def graphic(self) -> list[BinaryMatroid]:
        return graphic_census(self.max_elements)

    @property
    def cosimple(self) -> list[BinaryMatroid]:
        return cosimple_census(COSIMPLE_BOUND)

    @property
    def specials(self) -> list[BinaryMatroid]:
        return self._get("specials", special_members)

    @property
    def cd_members(self) -> list[BinaryMatroid]:
        return self._get(
            "cd",
            lambda: [m for m in self.binary if predicates.is_circuit_difference(m)],
        )

    @property
    def regular_members(self) -> list[BinaryMatroid]:
        return self._get(
            "regular", lambda: [m for m in self.binary if predicates.is_regular(m)]
        )

    @property
    def cc_members(self) -> list[BinaryMatroid]:
        return self._get(
            "cc",
            lambda: [m for m in self.binary if predicates.is_circuit_complementary(m)],
        )

    def extensions(self, bases, count, tag, max_moves=4):
        key = ("ext", tag, count, max_moves)
        return self._get(
            key,
            lambda: seeded_extension_pairs(
                list(bases), count, _derive_seed(self.seed, tag), max_moves
            ),
        )

    def rng(self, tag: str) -> Random:
        return Random(_derive_seed(self.seed, tag))


# -- audit bodies -------------------------------------------------------
# each returns (corpus description, instances checked, failures)


def _bit_indices(bits: int):
    while bits:
        yield (bits & -bits).bit_length() - 1
        bits &= bits - 1


def _audit_gf2_rank(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    for m in c.binary:
        red, rank, pivots = rref(m.rep)
        if rank > min(len(m.rep.rows), m.rep.num_cols):
            failures.append(_fail(m, "rank exceeds matrix dimensions"))
        again, rank2, _ = rref(red)
        if again.rows != red.rows or rank2 != rank:
            failures.append(_fail(m, "reduced row echelon form is not idempotent"))
        if list(pivots) != sorted(set(pivots)):
            failures.append(_fail(m, "pivot columns not strictly increasing"))
        checked += 1
        if m.size > 8:
            continue
        # subset rank table, small enough to check submodularity in full
        _, cols = m._std()
        n = m.size
        table = [0] * (1 << n)
        for s in range(1, 1 << n):
            table[s] = rank_of_ints(cols[i] for i in _bit_indices(s))
            prev = s & (s - 1)
            if table[s] < table[prev] or table[s] > table[prev] + 1:
                failures.append(_fail(m, "rank not monotone by unit steps"))
                break
        bad_pair = None
        for a in range(1 << n):
            ra = table[a]
            for b in range(a, 1 << n):
                if ra + table[b] < table[a | b] + table[a & b]:
                    bad_pair = (a, b)
                    break
            if bad_pair:
                break
        if bad_pair:
            failures.append(
                _fail(m, "submodularity fails for subsets %#x, %#x" % bad_pair)
            )
        checked += (1 << n) * ((1 << n) + 1) // 2
    return (
        "connected binary corpus (subset pairs exhaustive for at most 8 elements)",
        checked,
        failures,
    )


def _audit_gf2_span(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    for m in c.binary:
        basis = [b.bits for b in null_space_basis(m.rep)]
        if len(basis) != m.corank:
            failures.append(_fail(m, "null space dimension is not n - rank"))
            continue
        _, cols = m._std()
        current = 0
        # Gray-code walk over the whole cycle space
        for i in range(1, 1 << len(basis)):
            current ^= basis[(i & -i).bit_length() - 1]
            acc = 0
            for e in _bit_indices(current):
                acc ^= cols[e]
            checked += 1
            if acc:
                failures.append(
                    _fail(m, f"columns of span vector {current:#x} do not cancel")
                )
                break
    return "every cycle-space vector of the connected binary corpus", checked, failures


def _audit_matroid_circuits(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    rng = c.rng("matroid.circuits")
    for m in c.binary:
        masks = sorted(m.circuits().masks())
        _, cols = m._std()
        for cmask in masks:
            labels = list(m.label_set(ElementSet(cmask, m.size)))
            acc = 0
            for e in _bit_indices(cmask):
                acc ^= cols[e]
            if cmask == 0 or acc:
                failures.append(_fail(m, f"circuit {labels} does not sum to zero"))
            size = cmask.bit_count()
            if rank_of_ints(cols[i] for i in _bit_indices(cmask)) != size - 1:
                failures.append(_fail(m, f"circuit {labels} is not rank |C|-1"))
            for e in _bit_indices(cmask):
                sub = cmask & ~(1 << e)
                if rank_of_ints(cols[i] for i in _bit_indices(sub)) != size - 1:
                    failures.append(
                        _fail(m, f"circuit {labels} has a dependent proper subset")
                    )
                    break
            checked += 1
        # sorted ints: a strict subset is numerically smaller, so one
        # direction covers the antichain check
        for i, a in enumerate(masks):
            for b in masks[i + 1 :]:
                if a & b == a:
                    failures.append(_fail(m, "circuit family is not an antichain"))
        pairs = list(itertools.combinations(masks, 2))
        if len(pairs) > 300:
            pairs = [pairs[rng.randrange(len(pairs))] for _ in range(300)]
        for a, b in pairs:
            rest = a ^ b
            while rest:
                for cmask in masks:
                    if cmask and cmask & rest == cmask:
                        rest ^= cmask
                        break
                else:
                    failures.append(
                        _fail(
                            m,
                            "symmetric difference of circuits is not a disjoint union of circuits",
                        )
                    )
                    break
            checked += 1
    return (
        "circuit families of the connected binary corpus "
        "(elimination sampled at 300 pairs per matroid)",
        checked,
        failures,
    )


def _audit_matroid_duality(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    for m in itertools.chain(c.binary, c.cosimple):
        dual = m.dual()
        if dual.circuits().masks() != m.cocircuits().masks():
            failures.append(_fail(m, "circuits of the dual differ from cocircuits"))
        if dual.dual().circuits().masks() != m.circuits().masks():
            failures.append(_fail(m, "double dual changes the circuit family"))
        odd = False
        for cmask in m.circuits().masks():
            for dmask in m.cocircuits().masks():
                if (cmask & dmask).bit_count() % 2:
                    odd = True
                    break
            if odd:
                break
        if odd:
            failures.append(_fail(m, "odd intersection between a circuit and a cocircuit"))
        checked += 1
    return "binary corpus plus the 10-element cosimple corpus", checked, failures


def _direct_sum(a: BinaryMatroid, b: BinaryMatroid) -> BinaryMatroid:
    rows = [r for r in a.rep.rows] + [r << a.size for r in b.rep.rows]
    labels = [f"a.{x}" for x in a.labels] + [f"b.{x}" for x in b.labels]
    return BinaryMatroid(Gf2Matrix(tuple(rows), a.size + b.size), labels)


def _audit_matroid_components(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    rng = c.rng("matroid.components")
    small = [m for m in c.binary if m.size <= 6]
    sums = [
        _direct_sum(small[rng.randrange(len(small))], small[rng.randrange(len(small))])
        for _ in range(20)
    ]
    for m in itertools.chain(c.binary, sums):
        comps = m.components()
        covered = 0
        for comp in comps:
            if covered & comp.bits:
                failures.append(_fail(m, "components overlap"))
            covered |= comp.bits
        if covered != (1 << m.size) - 1:
            failures.append(_fail(m, "components do not cover the ground set"))
        if m.is_connected() != (len(comps) <= 1):
            failures.append(_fail(m, "is_connected disagrees with the component count"))
        share: dict[tuple[int, int], bool] = {}
        for cmask in m.circuits().masks():
            for i in _bit_indices(cmask):
                for j in _bit_indices(cmask):
                    share[(i, j)] = True
        comp_of = {}
        for k, comp in enumerate(comps):
            for i in comp.indices():
                comp_of[i] = k
        for i in range(m.size):
            for j in range(i + 1, m.size):
                together = comp_of[i] == comp_of[j]
                joined = _circuit_path(share, m.size, i, j)
                if together != joined:
                    failures.append(_fail(m, f"component relation wrong for pair ({i},{j})"))
        checked += 1
    return "connected binary corpus plus 20 seeded direct sums", checked, failures


def _circuit_path(share: dict, n: int, a: int, b: int) -> bool:
    seen = {a}
    queue = [a]
    while queue:
        x = queue.pop()
        if x == b:
            return True
        for y in range(n):
            if y not in seen and share.get((x, y), False):
                seen.add(y)
                queue.append(y)
    return False


def _audit_matroid_series(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    rng = c.rng("matroid.series")
    for m in c.binary:
        part = m.series_classes()
        cocircuit_masks = m.cocircuits().masks()
        covered = 0
        for cls in part:
            if covered & cls.bits:
                failures.append(_fail(m, "series classes overlap"))
            covered |= cls.bits
        if covered != (1 << m.size) - 1:
            failures.append(_fail(m, "series classes do not cover the ground set"))
        cls_of = {}
        for k, cls in enumerate(part):
            for i in cls.indices():
                cls_of[i] = k
        for i in range(m.size):
            for j in range(i + 1, m.size):
                pair_is_cocircuit = (1 << i | 1 << j) in cocircuit_masks
                if (cls_of[i] == cls_of[j]) != pair_is_cocircuit:
                    failures.append(_fail(m, f"series relation wrong for pair ({i},{j})"))
        reduced, witness = m.cosimplify()
        if not reduced.is_cosimple():
            failures.append(_fail(m, "cosimplification is not cosimple"))
        if sorted(x for v in witness.values() for x in v) != sorted(m.labels):
            failures.append(_fail(m, "cosimplify witness does not cover the labels"))
        targets = [i for i in range(m.size) if i not in m.coloops()]
        if targets:
            t = targets[rng.randrange(len(targets))]
            ext = m.series_extend(t, ["aux0", "aux1"])
            back = ext.contract(["aux0", "aux1"])
            if back.labels != m.labels or back._std() != m._std():
                failures.append(
                    _fail(m, "contracting a series extension does not round-trip")
                )
            if not ext.cosimplify()[0].is_isomorphic(reduced):
                failures.append(
                    _fail(m, "cosimplification changes after a series extension")
                )
        checked += 1
    return "connected binary corpus with seeded extension round-trips", checked, failures


def _audit_1_1(c: Corpora):
    failures: list[AuditFailure] = []
    ext_pairs = c.extensions(c.specials, 200, "thm-1.1")
    candidates = (
        list(c.regular_members)
        + list(c.graphic)
        + list(c.specials)
        + [ext for _, ext in ext_pairs]
    )
    instances = [m for m in candidates if predicates.is_regular(m)]
    for m in instances:
        cd = bool(predicates.is_circuit_difference(m))
        skew_free = predicates.skew_circuit_pair(m) is None
        rec = recognize_regular_cd(m).is_circuit_difference
        if not (cd == skew_free == rec):
            failures.append(
                _fail(
                    m,
                    "three-way disagreement: circuit-difference=%s skew-free=%s recognizer=%s"
                    % (cd, skew_free, rec),
                )
            )
    return (
        "regular corpus members, the graphic corpus, the special list, "
        "and 200 seeded series extensions of the specials",
        len(instances),
        failures,
    )


def _audit_1_2(c: Corpora):
    failures: list[AuditFailure] = []
    for m in c.binary:
        if predicates.skew_circuit_pair(m) is not None and predicates.is_circuit_difference(m):
            failures.append(_fail(m, "skew circuits inside a circuit-difference matroid"))
    return "connected binary corpus" + c.binary_note, len(c.binary), failures


def _audit_1_2_identity(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    for m in c.binary:
        pair = predicates.skew_circuit_pair(m)
        if pair is None:
            continue
        c1, c2 = pair
        for d in m.circuits():
            if not (d.bits & c1.bits) or not (d.bits & c2.bits):
                continue
            lhs = d.bits & ~(c1.bits | c2.bits)
            rhs = (c1.bits ^ d.bits) & (c2.bits ^ d.bits)
            checked += 1
            if lhs != rhs:
                failures.append(
                    _fail(m, "difference identity fails for a circuit meeting a skew pair")
                )
                break
    return "circuits meeting the first skew pair, over the binary corpus", checked, failures


def _audit_1_3(c: Corpora):
    failures: list[AuditFailure] = []
    for m in c.regular_members:
        structural = bool(no_skew_structural(m))
        brute = predicates.skew_circuit_pair(m) is None
        if structural != brute:
            failures.append(
                _fail(m, f"structural no-skew test says {structural}, brute force says {brute}")
            )
    return "connected regular corpus members", len(c.regular_members), failures


def _audit_2_2(c: Corpora):
    bases = [m for m in c.binary if predicates.skew_circuit_pair(m) is not None]
    pairs = c.extensions(bases, EXTENSION_COUNT, "lem-2.2")
    failures = [
        _fail(ext, "series extension of a skew-pair matroid lost its skew pair")
        for _, ext in pairs
        if predicates.skew_circuit_pair(ext) is None
    ]
    return "seeded series extensions of corpus members with a skew pair", len(pairs), failures


def _audit_2_3(c: Corpora):
    pairs = c.extensions(c.cd_members, EXTENSION_COUNT, "lem-2.3", max_moves=1)
    failures = [
        _fail(ext, "single series extension broke the circuit-difference property")
        for _, ext in pairs
        if not predicates.is_circuit_difference(ext)
    ]
    return (
        "single-element seeded series extensions of circuit-difference corpus members",
        len(pairs),
        failures,
    )


def _audit_2_4(c: Corpora):
    failures: list[AuditFailure] = []
    pairs = c.extensions(c.binary, EXTENSION_COUNT, "lem-2.4")
    instances = list(c.binary) + [ext for _, ext in pairs]
    for m in instances:
        if predicates.is_circuit_complementary(m) and not predicates.is_circuit_difference(m):
            failures.append(_fail(m, "circuit-complementary but not circuit-difference"))
    return "connected binary corpus plus seeded series extensions", len(instances), failures


def _audit_2_5(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    for m in c.cc_members:
        for e in series_contract_candidates(m):
            if not predicates.is_circuit_complementary(m.contract([e])):
                failures.append(
                    _fail(m, f"series contraction at index {e} broke circuit-complementarity")
                )
            checked += 1
    pairs = c.extensions(c.cc_members, EXTENSION_COUNT, "lem-2.5")
    for _, ext in pairs:
        if not predicates.is_circuit_complementary(ext):
            failures.append(_fail(ext, "series extension broke circuit-complementarity"))
        checked += 1
    return (
        "series contractions and seeded extensions of circuit-complementary corpus members",
        checked,
        failures,
    )


def _audit_2_8(c: Corpora):
    failures: list[AuditFailure] = []
    u14 = uniform_rank1(4)
    big = r10()
    found = {"U_{1,4}": False, "R_10": False}
    for m in c.cosimple:
        if not predicates.is_circuit_complementary(m):
            continue
        if not predicates.is_regular(m):
            continue
        if m.is_isomorphic(u14):
            found["U_{1,4}"] = True
        elif m.is_isomorphic(big):
            found["R_10"] = True
        else:
            failures.append(
                _fail(m, "cosimple regular circuit-complementary but neither U_{1,4} nor R_10")
            )
    for name, seen in found.items():
        if not seen:
            failures.append(_fail(u14 if name == "U_{1,4}" else big, f"{name} never arose"))
    return "connected cosimple corpus up to 10 elements", len(c.cosimple), failures


def _audit_2_9(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    for base, name, arithmetic in (
        (uniform_rank1(4), "U_{1,4}", lambda k: (k + 1, 3)),
        (r10(), "R_10", lambda k: (k + 5, 5)),
    ):
        pairs = c.extensions([base], EXTENSION_COUNT, f"lem-2.9:{name}")
        for _, ext in pairs:
            k = ext.size - base.size
            if (ext.rank, ext.corank) != arithmetic(k):
                failures.append(
                    _fail(ext, f"k={k} series extension of {name} has wrong (rank, corank)")
                )
            checked += 1
    return "100 seeded series extensions each of U_{1,4} and R_10", checked, failures


def _audit_4_1(c: Corpora):
    failures: list[AuditFailure] = []
    registry = IsoRegistry()

    def class_is_cd(mat: BinaryMatroid) -> bool:
        cid, _ = registry.canonical(*mat._std())
        props = registry.props[cid]
        if "cd" not in props:
            props["cd"] = bool(predicates.is_circuit_difference(mat))
        return props["cd"]

    checked = 0
    for root in c.cd_members:
        cid, _ = registry.canonical(*root._std())
        if registry.props[cid].get("expanded"):
            continue
        registry.props[cid]["expanded"] = True
        queue = [root]
        while queue:
            cur = queue.pop()
            for _, _, child in series_minor_children(cur):
                ccid, _ = registry.canonical(*child._std())
                props = registry.props[ccid]
                if not class_is_cd(child):
                    failures.append(
                        _fail(child, "series minor of a circuit-difference matroid is not one")
                    )
                checked += 1
                if not props.get("expanded"):
                    props["expanded"] = True
                    queue.append(child)
    return "every series minor of every circuit-difference corpus member", checked, failures


def _audit_4_2(c: Corpora):
    failures: list[AuditFailure] = []
    pattern = n5()
    for m in c.binary:
        script = find_n5_series_minor(m)
        has_skew = predicates.skew_circuit_pair(m) is not None
        if (script is not None) != has_skew:
            failures.append(
                _fail(
                    m,
                    "series-minor witness %s but skew pair %s"
                    % (
                        "found" if script is not None else "missing",
                        "present" if has_skew else "absent",
                    ),
                )
            )
            continue
        if script is None:
            continue
        cur = m
        for op, label in script:
            if op == "contract":
                if cur.index(label) not in series_contract_candidates(cur):
                    failures.append(
                        _fail(m, f"witness script contracts {label} outside any 2-cocircuit")
                    )
                    break
                cur = cur.contract([label])
            else:
                cur = cur.delete([label])
        else:
            if not cur.is_isomorphic(pattern):
                failures.append(_fail(m, "replayed witness script does not end at N_5"))
    return "connected binary corpus with witness replay", len(c.binary), failures


def _simple_rank_r_classes(r: int) -> list[BinaryMatroid]:
    """All simple rank-r binary matroids up to isomorphism, by brute force.

    Every such matroid embeds in the rank-r projective geometry and, after
    a change of basis, contains the standard basis vectors, so scanning
    subsets of the remaining points covers every class.
    """
    points = [1 << i for i in range(r)]
    others = [v for v in range(1, 1 << r) if v.bit_count() > 1]
    registry = IsoRegistry()
    out: list[BinaryMatroid] = []
    for k in range(len(others) + 1):
        for extra in itertools.combinations(others, k):
            cols = tuple(sorted(points + list(extra)))
            mat = BinaryMatroid(Gf2Matrix.from_columns(cols, r))
            _, new = registry.canonical(*mat._std())
            if new:
                out.append(mat)
    return out


def _audit_4_4(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    expected_sizes = {3: 1, 4: 2}
    for r in (3, 4):
        catalog = list(hyperplane_complementary_catalog(r))
        if len(catalog) != expected_sizes[r]:
            failures.append(
                _fail(
                    ag(r),
                    f"catalog at rank {r} has {len(catalog)} classes, expected {expected_sizes[r]}",
                )
            )
        for m in catalog:
            if not predicates.is_hyperplane_complementary(m):
                failures.append(_fail(m, "catalog member is not hyperplane-complementary"))
        brute = []
        for m in _simple_rank_r_classes(r):
            checked += 1
            if predicates.is_hyperplane_complementary(m):
                brute.append(m)
        for m in brute:
            if not any(m.is_isomorphic(x) for x in catalog):
                failures.append(_fail(m, f"brute-force rank-{r} class missing from the catalog"))
        for m in catalog:
            if not any(m.is_isomorphic(x) for x in brute):
                failures.append(_fail(m, f"catalog rank-{r} class not found by brute force"))
    return "all simple binary matroids of ranks 3 and 4", checked, failures


def _audit_4_6(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    expected = {3: [n5().dual()], 4: [tipped_spike(4), s8()]}
    family_duals: list[BinaryMatroid] = []
    for r, want in expected.items():
        classes = list(enumerate_m_family(r))
        checked += len(classes)
        if len(classes) != len(want):
            failures.append(
                _fail(want[0], f"rank-{r} family has {len(classes)} classes, expected {len(want)}")
            )
        for w in want:
            if not any(w.is_isomorphic(x) for x in classes):
                failures.append(_fail(w, f"expected rank-{r} family member missing"))
        for x in classes:
            family_duals.append(x.dual())
            if not is_excluded_series_minor(x.dual()):
                failures.append(_fail(x.dual(), "family dual fails the excluded-series-minor test"))
    registry = IsoRegistry()

    def child_is_cd(mat: BinaryMatroid) -> bool:
        cid, _ = registry.canonical(*mat._std())
        props = registry.props[cid]
        if "cd" not in props:
            props["cd"] = bool(predicates.is_circuit_difference(mat))
        return props["cd"]

    for m in c.binary:
        if predicates.is_circuit_difference(m):
            continue
        checked += 1
        # series-minor closure (audited separately) reduces minimality to
        # the one-move children
        minimal = all(child_is_cd(child) for _, _, child in series_minor_children(m))
        in_family = any(m.is_isomorphic(d) for d in family_duals)
        if minimal != in_family:
            failures.append(
                _fail(
                    m,
                    "minimal non-circuit-difference but outside the family"
                    if minimal
                    else "family dual has a non-circuit-difference proper series minor",
                )
            )
    return "family enumeration at ranks 3-4 plus minimality over the binary corpus", checked, failures


_BASE_BUILDERS = {
    "U01": loop,
    "MK33": lambda: complete_bipartite(3, 3),
    "R10": r10,
}


def _base_from_name(name: str) -> BinaryMatroid:
    if name in _BASE_BUILDERS:
        return _BASE_BUILDERS[name]()
    if name.startswith("U1m(") and name.endswith(")"):
        return uniform_rank1(int(name[4:-1]))
    if name.startswith("M*(K") and name.endswith(")"):
        return complete(int(name[4:-1])).dual()
    raise ValueError(f"unknown base name {name!r}")


def _audit_recognizer_witness(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    for m in c.regular_members:
        report = recognize_regular_cd(m)
        for comp in report.components:
            if not comp.is_circuit_difference:
                continue
            sub = m.restrict(list(comp.elements))
            reduced, _ = sub.cosimplify()
            if comp.base is None or not reduced.is_isomorphic(_base_from_name(comp.base)):
                failures.append(_fail(m, f"component cosimplification is not {comp.base}"))
            classes = comp.series_classes or {}
            labels = sorted(x for v in classes.values() for x in v)
            if labels != sorted(comp.elements):
                failures.append(_fail(m, "series-class witness does not cover the component"))
            checked += 1
    return "positive components of recognized regular corpus members", checked, failures


def _audit_zoo(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    for r in (2, 3, 4):
        p, a = pg(r), ag(r)
        if p.size != (1 << r) - 1 or a.size != 1 << (r - 1):
            failures.append(_fail(p, f"projective/affine sizes wrong at rank {r}"))
        for m in (p, a):
            _, cols = m._std()
            if len(set(cols)) != m.size or 0 in cols:
                failures.append(_fail(m, "geometry constructor is not simple"))
            checked += 1
    k4 = complete(4)
    if not k4.dual().is_isomorphic(k4):
        failures.append(_fail(k4, "the complete graph on 4 vertices should be self-dual"))
    checked += 1
    doubled_triangle = graphic([(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])
    k23 = complete_bipartite(2, 3)
    if not k23.dual().is_isomorphic(doubled_triangle):
        failures.append(_fail(k23, "planar dual of K_{2,3} should be the doubled triangle"))
    checked += 1
    for n in (3, 5):
        u = uniform_rank1(n)
        if len(u.circuits()) != n * (n - 1) // 2 or len(u.dual().circuits()) != 1:
            failures.append(_fail(u, "rank-one uniform circuit counts wrong"))
        checked += 1
    return "named geometry and graph constructors", checked, failures


def _audit_zoo_r10(c: Corpora):
    failures: list[AuditFailure] = []
    m = r10()
    k33 = complete_bipartite(3, 3)
    checked = 0
    if (m.size, m.rank) != (10, 5):
        failures.append(_fail(m, "R_10 dimensions wrong"))
    if not m.is_cosimple() or not m.is_connected():
        failures.append(_fail(m, "R_10 should be connected and cosimple"))
    if not predicates.is_circuit_complementary(m):
        failures.append(_fail(m, "R_10 should be circuit-complementary"))
    if not predicates.is_regular(m):
        failures.append(_fail(m, "R_10 should be regular"))
    checked += 4
    for e in range(10):
        if not m.delete([e]).is_isomorphic(k33):
            failures.append(_fail(m, f"R_10 minus element {e} is not the cycle matroid of K_3,3"))
        checked += 1
    return "the fixed R_10 representation", checked, failures


def _audit_io_roundtrip(c: Corpora):
    failures: list[AuditFailure] = []
    checked = 0
    for m in c.binary:
        back = parse_text(serialize_matrix(m))
        if back.labels != m.labels or back._std() != m._std():
            failures.append(_fail(m, "serialize/parse round trip changed the matroid"))
        checked += 1
    return "matrix serialization of the connected binary corpus", checked, failures


# registry: id -> (summary, body)
AUDITS: dict[str, tuple[str, object]] = {
    "1.1": ("circuit-difference iff no skew pair iff recognized (regular corpus)", _audit_1_1),
    "1.2": ("a skew pair forbids the circuit-difference property", _audit_1_2),
    "1.2-identity": ("set identity behind the skew-pair argument", _audit_1_2_identity),
    "1.3": ("structural no-skew test agrees with brute force", _audit_1_3),
    "2.2": ("series extensions keep skew pairs", _audit_2_2),
    "2.3": ("series extensions keep the circuit-difference property", _audit_2_3),
    "2.4": ("circuit-complementary implies circuit-difference", _audit_2_4),
    "2.5": ("circuit-complementarity survives series moves", _audit_2_5),
    "2.8": ("cosimple regular circuit-complementary means U_{1,4} or R_10", _audit_2_8),
    "2.9": ("rank arithmetic of series extensions of U_{1,4} and R_10", _audit_2_9),
    "4.1": ("series minors of circuit-difference matroids stay circuit-difference", _audit_4_1),
    "4.2": ("N_5 series minor iff skew pair", _audit_4_2),
    "4.4": ("hyperplane-complementary catalog matches brute force", _audit_4_4),
    "4.6": ("excluded series minors are exactly the family duals", _audit_4_6),
    "gf2.rank": ("rank function sanity: echelon form, monotonicity, submodularity", _audit_gf2_rank),
    "gf2.span": ("cycle-space vectors cancel columnwise", _audit_gf2_span),
    "matroid.circuits": ("circuit family axioms", _audit_matroid_circuits),
    "matroid.duality": ("dual circuits, double dual, orthogonality", _audit_matroid_duality),
    "matroid.components": ("component partition matches circuit reachability", _audit_matroid_components),
    "matroid.series": ("series classes, cosimplification, extension round trips", _audit_matroid_series),
    "recognizer.witness": ("recognition witnesses re-verify", _audit_recognizer_witness),
    "zoo.constructors": ("named constructor invariants", _audit_zoo),
    "zoo.r10": ("R_10 self-certification", _audit_zoo_r10),
    "io.roundtrip": ("serialize/parse round trip", _audit_io_roundtrip),
}


def _worker_count() -> int:
    raw = os.environ.get("MATROID_CD_THREADS", "").strip()
    if raw.isdigit() and int(raw) > 0:
        return int(raw)
    return max(os.cpu_count() or 1, 1)


def select_audits(lemma: str | None) -> list[str]:
    if lemma is None:
        return list(AUDITS)
    chosen = [
        name
        for name in AUDITS
        if name == lemma or name.startswith(lemma + "-") or name.startswith(lemma + ".")
    ]
    if not chosen:
        known = ", ".join(AUDITS)
        raise ValueError(f"unknown audit id {lemma!r}; known ids: {known}")
    return chosen


def run_audits(
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    seed: int = 0,
    lemma: str | None = None,
) -> list[AuditResult]:
    """Run the selected audits and return results in registry order."""
    if max_elements < 1 or max_elements > MAX_ELEMENTS_CAP:
        raise CapExceededError(
            f"max_elements must be between 1 and {MAX_ELEMENTS_CAP}",
            dimension=max_elements,
            cap=MAX_ELEMENTS_CAP,
        )
    names = select_audits(lemma)
    corpora = Corpora(max_elements, seed)
    # the census dominates the wall time and is shared; build it before
    # fanning out so the workers start from a warm cache
    if any(name not in ("2.9", "4.4", "zoo.constructors", "zoo.r10") for name in names):
        corpora.binary

    def run_one(name: str) -> AuditResult:
        start = time.perf_counter()
        note = ""
        try:
            corpus_desc, checked, failures = AUDITS[name][1](corpora)
        except CapExceededError as exc:
            corpus_desc, checked, failures = "(capped)", 0, []
            note = f"cap exceeded: {exc}"
        seconds = time.perf_counter() - start
        return AuditResult(name, corpus_desc, checked, list(failures), seconds, note)

    with ThreadPoolExecutor(max_workers=min(_worker_count(), len(names))) as pool:
        results = list(pool.map(run_one, names))
    order = {name: i for i, name in enumerate(AUDITS)}
    results.sort(key=lambda res: order[res.lemma])
    return results
