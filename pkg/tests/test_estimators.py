import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from freiman.borel import BorelSpec
from freiman.estimators import BorelClosure, FreimanClassifier, FreimanFeatures
from freiman.validation import check_generators, check_samples, check_spec

from conftest import mono

X = ["x1*x3^2,x2^2*x4", "x1*x4,x2*x3", "x1*x2*x3*x4"]


def test_features():
    F = FreimanFeatures().fit(X).transform(X)
    assert F.dtype == np.int64
    assert F[0].tolist() == [11, 4, 41, 3]
    assert F[1].tolist() == [6, 4, 18, 0]


def test_classifier_methods_agree():
    y_brute = FreimanClassifier().fit(X).predict(X)
    assert y_brute.tolist() == [False, True, False]
    y_closed = FreimanClassifier(method="closed_form").fit(X).predict(X)
    assert y_closed.dtype == object
    assert y_closed.tolist() == [None, True, False]
    k2 = ["x1*x2^2*x3", "x1*x2*x3*x4"]
    y_chordal = FreimanClassifier(method="chordal", k=2).fit(k2).predict(k2)
    assert y_chordal.tolist() == FreimanClassifier(k=2).fit(k2).predict(k2).tolist() == [True, False]


def test_params_and_clone():
    est = FreimanClassifier(method="chordal", k=2)
    assert est.get_params() == {"method": "chordal", "k": 2, "n": None, "unknown_value": None}
    c = clone(est)
    assert c.get_params() == est.get_params()
    with pytest.raises(ValueError):
        FreimanClassifier(method="magic").fit(X)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        FreimanFeatures().transform(X)


def test_closure_transformer():
    out = BorelClosure(k=1).fit_transform(["x2*x3*x4"])
    assert len(out[0]) == 4


def test_validation_helpers():
    assert check_generators("x1,x2") == [mono("x1", 2), mono("x2")]
    assert check_generators([(1, 0), "x2"]) == [mono("x1", 2), mono("x2")]
    spec = BorelSpec((mono("x1*x2"),))
    assert check_spec(spec) is spec
    with pytest.raises(TypeError):
        check_samples("x1*x2")
    with pytest.raises(ValueError):
        check_samples([])
    with pytest.raises(TypeError):
        check_generators([3.5])
