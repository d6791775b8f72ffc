"""Audit harness: selection, determinism, caps, and the self-test."""

import pytest

from matroid_cd import audit as audit_mod
from matroid_cd.audit import (
    AUDITS,
    AuditResult,
    MAX_ELEMENTS_CAP,
    run_audits,
    select_audits,
)
from matroid_cd.errors import CapExceededError
from matroid_cd.io import parse_text


def test_select_all():
    assert select_audits(None) == list(AUDITS)


def test_select_exact_and_prefixes():
    assert select_audits("2.4") == ["2.4"]
    assert select_audits("1.2") == ["1.2", "1.2-identity"]
    assert select_audits("gf2") == ["gf2.rank", "gf2.span"]
    assert select_audits("matroid") == [
        "matroid.circuits",
        "matroid.duality",
        "matroid.components",
        "matroid.series",
    ]
    assert select_audits("zoo.r10") == ["zoo.r10"]


def test_select_unknown_raises_with_known_ids():
    with pytest.raises(ValueError) as err:
        select_audits("7.7")
    assert "known ids" in str(err.value)
    with pytest.raises(ValueError):
        select_audits("1.2-ident")  # prefixes stop at separator boundaries
    # a bare group digit selects the whole group
    assert select_audits("2") == ["2.2", "2.3", "2.4", "2.5", "2.8", "2.9"]


def test_run_audits_cap():
    with pytest.raises(CapExceededError):
        run_audits(0)
    with pytest.raises(CapExceededError):
        run_audits(MAX_ELEMENTS_CAP + 1)


def strip_seconds(results):
    return [
        {**r.to_dict(), "seconds": None}
        for r in results
    ]


def test_deterministic_for_fixed_seed():
    first = run_audits(5, seed=11, lemma="2.2")
    second = run_audits(5, seed=11, lemma="2.2")
    assert strip_seconds(first) == strip_seconds(second)
    assert all(r.passed for r in first)


def test_seed_changes_extensions_but_not_verdicts():
    a = run_audits(5, seed=1, lemma="2.3")
    b = run_audits(5, seed=2, lemma="2.3")
    assert all(r.passed for r in a + b)
    assert a[0].checked == b[0].checked


def test_results_come_back_in_registry_order():
    results = run_audits(4, lemma="zoo")
    assert [r.lemma for r in results] == ["zoo.constructors", "zoo.r10"]


def test_result_dict_shape():
    (res,) = run_audits(4, lemma="io.roundtrip")
    d = res.to_dict()
    assert set(d) == {
        "lemma", "corpus", "checked", "failures", "seconds", "passed", "note",
    }
    assert d["passed"] is True and d["failures"] == []
    assert isinstance(d["seconds"], float)


def test_corrupted_predicate_yields_witnesses(monkeypatch):
    from matroid_cd import predicates

    real = predicates.skew_circuit_pair

    def corrupted(m):
        pair = real(m)
        if pair is None and m.size == 4:
            circuits = list(m.circuits())
            if circuits:
                return (circuits[0], circuits[0])
        return pair

    monkeypatch.setattr(predicates, "skew_circuit_pair", corrupted)
    results = run_audits(4, lemma="1.2")
    res = next(r for r in results if r.lemma == "1.2")
    assert not res.passed
    assert res.failures
    for failure in res.failures:
        assert failure.description
        # the serialized witness re-parses standalone
        witness = parse_text(failure.matroid)
        assert witness.size == 4


def test_thread_env_is_honored(monkeypatch):
    monkeypatch.setenv("MATROID_CD_THREADS", "1")
    assert audit_mod._worker_count() == 1
    results = run_audits(4, lemma="gf2")
    assert all(r.passed for r in results)
    monkeypatch.setenv("MATROID_CD_THREADS", "junk")
    assert audit_mod._worker_count() >= 1


def test_audit_registry_summaries():
    for name, (summary, body) in AUDITS.items():
        assert summary and callable(body)
    # the numeric ids sort as the write-up orders them
    numeric = [n for n in AUDITS if n[0].isdigit()]
    assert numeric == sorted(numeric, key=lambda s: tuple(s.split(".", 1)))
