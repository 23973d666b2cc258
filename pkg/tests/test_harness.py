import numpy as np
import pytest

from finring import (
    CLAIMS,
    Corpus,
    CorpusError,
    FiniteRing,
    classify,
    default_corpus,
    load_corpus,
    run_claim,
    run_suite,
    zmod,
)
from finring.harness import DEFAULT_CORPUS_LINES, SKIPPED_CLAIMS
from finring.predicates import CLASS_NAMES


def test_default_corpus_loads_and_is_varied():
    corpus = default_corpus()
    rings = corpus.rings()
    assert len(rings) == 47
    orders = [ring.order for _, ring in rings]
    assert max(orders) <= 6561
    labels = [label for label, _ in rings]
    assert labels == list(DEFAULT_CORPUS_LINES)
    # at least one ring in and one out of every class (Dedekind
    # finiteness excepted: every finite ring is in)
    reports = [classify(ring).verdicts for _, ring in rings]
    for name in CLASS_NAMES:
        if name == "dedekind-finite":
            assert all(rep[name] for rep in reports)
            continue
        assert any(rep[name] for rep in reports), name
        assert any(not rep[name] for rep in reports), name


def test_corpus_file_roundtrip(tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text("# comment line\nZ/4\n\nTE(Z/2)  # trailing comment\n")
    corpus = load_corpus(str(path))
    assert corpus.expressions == ["Z/4", "TE(Z/2)"]
    assert [r.order for _, r in corpus.rings()] == [4, 4]


def test_corpus_load_fails_atomically(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("Z/4\nZ/1\nZ/6\n")
    corpus = load_corpus(str(path))
    with pytest.raises(CorpusError) as err:
        corpus.rings()
    assert err.value.line_no == 2
    assert "Z/1" in str(err.value)


def test_missing_corpus_file():
    with pytest.raises(CorpusError):
        load_corpus("does-not-exist.txt")


def test_unknown_claim_id():
    with pytest.raises(CorpusError):
        run_claim("C99", default_corpus())
    with pytest.raises(CorpusError):
        run_suite(default_corpus(), ["C1", "nope"])


def test_single_claim_run():
    corpus = default_corpus()
    result = run_claim("C1", corpus)
    assert result.claim_id == "C1"
    assert result.passed
    assert len(result.records) == 47


def test_suite_filter_and_determinism():
    corpus = default_corpus()
    r1 = run_suite(corpus, ["C13", "C6"], check_axioms=False)
    assert [c.claim_id for c in r1.results] == ["C6", "C13"]
    r2 = run_suite(corpus, ["C13", "C6"], check_axioms=False)
    strip = lambda rep: [(c.claim_id, c.records) for c in rep.results]
    assert strip(r1) == strip(r2)


def test_skipped_claims_reported():
    ids = {s.claim_id for s in SKIPPED_CLAIMS}
    assert ids == {"C-torsion", "C-powerseries"}
    report = run_suite(default_corpus(), ["C13"], check_axioms=False)
    assert {s.claim_id for s in report.skipped} == ids


def test_corrupted_table_fails_axioms_or_claims():
    base = zmod(6)
    mul = np.array(base.mul_table)
    mul[2, 3] = 1  # 2*3 = 1 breaks associativity/distributivity
    corrupted = FiniteRing(6, 1, "corrupted-Z/6", add_table=base.add_table, mul_table=mul)
    corpus = Corpus("with-corruption", ["Z/4"], prebuilt=[corrupted])
    report = run_suite(corpus, ["C1"])
    assert report.failed_count > 0
    bad = [rec for rec in report.axiom_records if not rec[1]]
    assert bad and bad[0][0] == "corrupted-Z/6"


def test_c14_records_the_sqrtj_reading():
    result = run_claim("C14", default_corpus())
    assert result.passed
    notes = {rec.subject: rec.note for rec in result.records}
    assert "first components in sqrtJ(R)" in notes["TE(M(2, Z/2))"]
    assert "coincide" in notes["TE(Z/4)"]


def test_c19_caps_the_large_instance():
    result = run_claim("C19", default_corpus())
    assert result.passed
    skipped = [rec for rec in result.records if "skipped" in rec.note]
    assert len(skipped) == 1 and "GR(Z/9, C2xC2)" in skipped[0].subject


def test_every_claim_id_known():
    assert sorted(CLAIMS, key=lambda c: int(c[1:])) == [f"C{i}" for i in range(1, 20)]
