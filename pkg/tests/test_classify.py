"""Verdicts from (degree, mdr, tau): the bound, the rules, the edge cases."""

import pytest

from freecurve.classify import classify_curve, dpw_bound, flex_bound, trichotomy_check
from freecurve.errors import Inconsistent, NoCase


def test_dpw_bound_values():
    # (d-1)^2 - r(d-r-1)
    assert dpw_bound(3, 1) == 3
    assert dpw_bound(6, 2) == 19
    assert dpw_bound(7, 2) == 28
    assert dpw_bound(11, 5) == 75
    assert dpw_bound(8, 3) == 37
    assert dpw_bound(9, 4) == 48


def test_dpw_bound_symmetry():
    # r and d-1-r give the same bound
    for d in range(3, 12):
        for r in range(d):
            assert dpw_bound(d, r) == dpw_bound(d, d - 1 - r)


def test_free_verdicts():
    c = classify_curve(6, 2, 19)
    assert c.verdict == "free"
    assert c.exponents == [2, 3]
    c = classify_curve(11, 5, 75)
    assert c.verdict == "free"
    assert c.exponents == [5, 5]


def test_maximizing_needs_attestation():
    # same numbers, different simple-singularity attestation
    plain = classify_curve(6, 2, 19)
    sharp = classify_curve(6, 2, 19, ade=True)
    assert plain.verdict == "free"
    assert sharp.verdict == "maximizing"
    assert sharp.exponents == plain.exponents
    # 3m(m-1)+1 for d = 2m, 3m^2+1 for d = 2m+1
    assert classify_curve(7, 2, 28, ade=True).verdict == "maximizing"
    assert 19 == 3 * 3 * 2 + 1
    assert 28 == 3 * 9 + 1


def test_nearly_free_verdict():
    # one below the bound
    c = classify_curve(9, 4, 47)
    assert c.verdict == "nearly_free"
    assert c.exponents == [4, 5]
    # at r = d/2 the bound itself is the nearly free value
    c = classify_curve(4, 2, 7)
    assert c.verdict == "nearly_free"
    assert c.exponents == [2, 2]


def test_other_verdict():
    c = classify_curve(3, 2, 0)
    assert c.verdict == "other"
    assert c.exponents is None


def test_inconsistent_tau_rejected():
    with pytest.raises(Inconsistent):
        classify_curve(6, 2, 20)  # above the bound


def test_classification_serializes():
    blob = classify_curve(6, 2, 19, ade=True).to_json()
    assert blob["verdict"] == "maximizing"
    assert blob["degree"] == 6 and blob["r"] == 2 and blob["tau"] == 19
    assert blob["exponents"] == [2, 3]


def test_trichotomy_cases():
    assert trichotomy_check(7, 4, 3, 2) == "CaseB_Free"
    assert trichotomy_check(7, 4, 3, 4) == "CaseA"
    assert trichotomy_check(7, 4, 3, 3) == "CaseC"
    with pytest.raises(NoCase):
        trichotomy_check(7, 4, 3, 6)


def test_flex_bound():
    # 3d(d-2) minus 3k(k-1) per singular point of multiplicity k
    assert flex_bound(4, {}) == 24
    assert flex_bound(4, {2: 3}) == 24 - 3 * 6
    assert flex_bound(6, {2: 4, 3: 1}) == 72 - 4 * 6 - 18
