import pytest

from domdodom.errors import BadParams
from domdodom.verify import (
    classify_charact,
    random_small_cover_family,
    verify_beta_constants,
    verify_cover_bound,
    verify_ekr,
    verify_lemma_charact,
    verify_tau,
    verify_thm02,
)
from domdodom.constructions import design10, fano
from domdodom.covers import covering_number
from domdodom.family import is_intersecting

import random


@pytest.fixture(scope="module")
def lemma_report():
    return verify_lemma_charact()


def test_lemma_passes(lemma_report):
    assert lemma_report["passed"], lemma_report["failures"]
    assert lemma_report["beta_2"] == 2


def test_lemma_extremal_classes(lemma_report):
    extremal = [e for e in lemma_report["inventory"] if e["beta02"] == 2]
    assert sorted(e["kind"] for e in extremal) == ["design10", "fano"]
    assert all(e["covers_equal_family"] for e in extremal)
    for e in extremal:
        if e["vertices"] == 6:
            assert e["size"] == 10
    assert lemma_report["six_vertex_extremal_classes"] == 1


def test_classify():
    assert classify_charact(fano()) == "fano"
    assert classify_charact(design10()) == "design10"


@pytest.mark.parametrize("n, part, p, formula, reached", [
    (7, 1, 0, 4, False),
    (8, 1, 1, 1, True),
    (9, 1, 0, 6, True),
    (7, 2, 0, 2, True),
])
def test_thm02_reports(n, part, p, formula, reached):
    r = verify_thm02(n, 3, p, part)
    assert r["passed"]
    assert r["formula"] == formula and r["construction_value"] == formula
    assert r["threshold_reached"] is reached
    if not reached:
        assert r["status"] == "threshold not yet reached" and r["exact"] > formula


def test_thm02_small_k_tie_is_flagged():
    r = verify_thm02(8, 3, 0, 2)
    assert r["passed"] and r["threshold_reached"]
    assert len(r["extremal_classes"]) == 2 and len(r["uniqueness_exceptions"]) == 1


def test_thm02_bad_params():
    with pytest.raises(BadParams):
        verify_thm02(7, 3, 1, 2)
    with pytest.raises(BadParams):
        verify_thm02(7, 3, 0, 3)


def test_random_small_cover_family():
    rng = random.Random(1)
    for _ in range(50):
        q = rng.choice((1, 2))
        F = random_small_cover_family(rng, q, rng.randint(6, 10), rng.randint(2, 4))
        assert len(F) >= 1 and is_intersecting(F) and covering_number(F) <= q


def test_tau_report():
    r = verify_tau(30, seed=7)
    assert r["passed"] and r["checks"] > 30


def test_cover_bound_and_ekr():
    assert verify_cover_bound(6, 3)["passed"]
    r = verify_ekr(6, 3)
    assert r["passed"] and r["exact"] == 10
    r = verify_ekr(5, 3)
    assert not r["applies"] and r["passed"]


def test_beta_constants_report():
    r = verify_beta_constants()
    assert r["passed"] and (r["beta_1"], r["beta_2"]) == (1, 2)
