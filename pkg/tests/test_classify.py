import pytest

from freiman.borel import BorelSpec, closure, shift_psi
from freiman.classify import (
    ClassVerdict,
    classify_degree2_borel,
    classify_kborel,
    classify_main2_family,
    classify_principal_borel,
    general_family_members,
    predict_freiman,
)
from freiman.fiber import freiman_report
from freiman.monomial import all_monomials, is_k_bounded

from conftest import mono


def brute(u, k=None, n=None):
    return freiman_report(closure(BorelSpec((u,), k=k, n=n))).freiman


@pytest.mark.parametrize("text,expected", [
    ("x1^3", True), ("x1*x2*x4", True), ("x2^2*x3", True), ("x1*x3^2", True),
    ("x2*x3^2", False), ("x1^2*x3^2", True), ("x1*x2*x3*x4", False), ("x3^3", False),
])
def test_principal_examples(text, expected):
    u = mono(text)
    assert classify_principal_borel(u).freiman_predicted is expected
    assert brute(u) is expected


def test_degree2_examples():
    assert classify_degree2_borel([mono("x1*x5"), mono("x2*x3", 5)]).freiman_predicted
    assert classify_degree2_borel([mono("x1*x5"), mono("x3^2", 5)]).freiman_predicted
    v = classify_degree2_borel([mono("x1*x5"), mono("x2*x4", 5), mono("x3^2", 5)])
    assert v.family == "degree2_borel" and v.freiman_predicted is False
    with pytest.raises(ValueError):
        classify_degree2_borel([mono("x1*x4"), mono("x1*x3", 4)])


def test_remark_family_strips_x1():
    spec = BorelSpec((mono("x1^2*x5"), mono("x1*x2*x3", 5)))
    v = predict_freiman(spec)
    assert v.family == "remark_rek1" and v.freiman_predicted
    assert freiman_report(closure(spec)).freiman


def test_main2_family():
    gens = [mono("x1^2*x4"), mono("x1*x2*x3", 4), mono("x2^2*x3", 4)]
    assert classify_main2_family(gens).freiman_predicted
    assert freiman_report(closure(BorelSpec(tuple(gens)))).freiman
    assert classify_main2_family([mono("x1*x3^2"), mono("x2^2*x3")]).family == "outside_scope"


@pytest.mark.parametrize("text,expected", [
    ("x1*x2^2*x3", True), ("x1*x2*x3^2", True), ("x2^2*x3^2", True),
    ("x1*x2*x3*x4", False), ("x2*x3^2*x4", False),
])
def test_k2_degree4(text, expected):
    v = classify_kborel(mono(text), 2)
    assert v.family == "kborel_k2_d4" and v.freiman_predicted is expected
    assert brute(mono(text), 2) is expected


def test_general_families():
    assert general_family_members(5) == {1: (1, 2, 2), 2: (1, 2, 1, 1), 3: (1, 2, 0, 2)}
    assert general_family_members(6) == {1: (1, 2, 2, 1), 2: (1, 2, 2, 0, 1), 3: (1, 2, 1, 2)}
    with pytest.raises(ValueError):
        general_family_members(4)


def test_shift_invariance_of_prediction():
    for n in range(2, 6):
        for u in all_monomials(n, 5):
            if is_k_bounded(u, 2) and u.exps[0] == 2:
                a = classify_kborel(u, 2).freiman_predicted
                b = classify_kborel(shift_psi(u, 2), 2).freiman_predicted
                assert a == b


def test_one_directional_and_outside_scope():
    v = classify_kborel(mono("x1*x2*x3*x4*x5"), 3)
    assert v.family == "outside_scope" and v.freiman_predicted is None
    assert classify_kborel(mono("x1*x2*x5"), 1).family == "outside_scope"
    v = classify_kborel(mono("x1*x2^3*x5"), 3)
    assert v.freiman_predicted is True
    assert brute(mono("x1*x2^3*x5"), 3)


def test_positive_predictions_hold_when_bounding_further():
    # B(u) Freiman implies B_k(u) Freiman for every k the monomial allows
    for n in range(1, 6):
        for d in range(2, 5):
            for u in all_monomials(n, d):
                if not classify_principal_borel(u).freiman_predicted:
                    continue
                for k in range(1, d):
                    if is_k_bounded(u, k):
                        assert brute(u, k, n)


def test_verdict_validation():
    with pytest.raises(ValueError):
        ClassVerdict("outside_scope", True, "x")
    with pytest.raises(ValueError):
        ClassVerdict("principal_borel", None, "x")
    with pytest.raises(ValueError):
        ClassVerdict("nonsense", True, "x")


def test_multi_generator_kborel_outside_scope():
    spec = BorelSpec((mono("x1*x2*x4"), mono("x2^2*x3", 4)), k=2)
    assert predict_freiman(spec).family == "outside_scope"
