import json

import pytest

from finsemiring.constructions import adjoin_biabsorber, adjoin_zero, catalog_semiring
from finsemiring.enumeration import corpus
from finsemiring.verifier import (
    Status,
    identify,
    verify_classification,
    verify_corpus_properties,
    verify_semiring,
)


def test_identify():
    for name in ("S1", "S5", "S8", "P"):
        assert identify(catalog_semiring(name)) == name
    assert identify(adjoin_zero(catalog_semiring("S3"))) is None


def test_p_report():
    rep = verify_semiring(catalog_semiring("P"))
    assert rep.get("Ex2.10").status is Status.PASS
    assert rep.get("Thm2.9").status is Status.NOT_APPLICABLE
    # all hypotheses hold for P, but a*b = 0 keeps rho from being a congruence
    claim = rep.get("Lemma2.7")
    assert claim.status is Status.FAIL and claim.witness["failed"] == "rho is a congruence"
    assert rep.get("Lemma2.7.repaired").status is Status.NOT_APPLICABLE
    assert "ideal-simple" in rep.get("Cor-unique-coatom").note
    assert rep.overall is Status.FAIL


def test_s4_report():
    rep = verify_semiring(catalog_semiring("S4"))
    assert rep.get("Lemma2.4").status is Status.PASS
    assert rep.get("Thm2.9").status is Status.PASS
    assert rep.overall is Status.PASS


def test_adjoined_zero_report():
    rep = verify_semiring(adjoin_zero(catalog_semiring("S3")))
    for cid in ("Lemma2.7", "Remark3.5", "Prop-rho-quotient"):
        assert rep.get(cid).status is Status.PASS, cid
    # {z, w} is an ideal, so the ideal-simple hypothesis of the coatom claim fails
    assert rep.get("Cor-unique-coatom").status is Status.NOT_APPLICABLE
    rep = verify_semiring(adjoin_biabsorber(catalog_semiring("S2")))
    for cid in ("Lemma-bi-absorbing", "Lemma2.6", "Remark3.4.0", "Remark1.iii"):
        assert rep.get(cid).status is Status.PASS, cid


def test_s2_and_the_greatest_element_claim():
    rep = verify_semiring(catalog_semiring("S2"))
    assert rep.get("Prop-non-bi-absorbing").status is Status.FAIL
    assert rep.get("Prop-non-bi-absorbing.repaired").status is Status.NOT_APPLICABLE
    assert rep.get("Thm3.3").status is Status.PASS


def test_classified_semirings():
    for name in ("S1", "S3", "S4", "S5", "S6", "S7", "S8"):
        rep = verify_semiring(catalog_semiring(name))
        assert rep.overall is Status.PASS, name
        assert rep.get("Thm3.3").status is Status.PASS


def test_skipped_entries():
    rep = verify_semiring(catalog_semiring("S1"))
    skipped = {r.claim_id for r in rep.results if r.status is Status.SKIPPED}
    assert {"Conj-finite", "Conj-divisible", "Remark-semigroup.1", "Remark-Jacobson", "Remark-parasemifield"} <= skipped


def test_report_invariants_over_small_corpus():
    for s in corpus(3):
        rep = verify_semiring(s)
        ids = [r.claim_id for r in rep.results]
        assert ids == sorted(ids)
        for r in rep.results:
            if r.status is Status.FAIL:
                assert r.witness is not None
            if r.status is Status.NOT_APPLICABLE:
                assert r.note.startswith("hypothesis not met")
        assert rep.overall is (Status.FAIL if any(r.status is Status.FAIL for r in rep.results) else Status.PASS)


def test_text_and_json_agree():
    rep = verify_semiring(catalog_semiring("P"))
    doc = json.loads(json.dumps(rep.as_dict()))
    text = rep.text()
    for r in doc["results"]:
        tag = {"Pass": "[PASS]", "Fail": "[FAIL]", "NotApplicable": "[N/A ]", "Skipped-OutOfScope": "[SKIP]"}[r["status"]]
        assert f"{tag} {r['claim_id']}" in text
    assert doc["overall"] == "Fail"


@pytest.mark.parametrize("n, counts", [(2, {2: 6}), (3, {2: 6, 3: 2})])
def test_classification_suite(n, counts):
    rep = verify_classification(n)
    assert rep.overall is Status.PASS
    assert rep.extra["counts"] == counts


def test_classification_bounds():
    with pytest.raises(ValueError):
        verify_classification(5)
    with pytest.raises(ValueError):
        verify_classification(3, mode="other")


def test_corpus_suite_order_two():
    rep = verify_corpus_properties(2)
    assert rep.get("corpus:Remark1.v").status is Status.PASS
    assert rep.get("corpus:Remark1.v").note.startswith("pass=10 ")
    # S2 sits in the order-2 corpus
    assert rep.get("corpus:Prop-non-bi-absorbing").status is Status.FAIL
    assert rep.get("Ex3.projection").status is Status.PASS
