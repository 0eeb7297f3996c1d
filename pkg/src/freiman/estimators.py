"""scikit-learn style wrappers.

Each sample is one ideal, given by its Borel generators (a string such as
``"x1*x3^2,x2^2*x4"``, a list of monomials, or a :class:`BorelSpec`).
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .borel import closure
from .chordal import is_chordal
from .classify import predict_freiman
from .fiber import freiman_report
from .sorting import is_sortable, sorted_graph
from .validation import check_samples

__all__ = ["BorelClosure", "FreimanFeatures", "FreimanClassifier"]

METHODS = ("bruteforce", "closed_form", "chordal")


class BorelClosure(TransformerMixin, BaseEstimator):
    """Map Borel generators to the minimal generating set of the closure."""

    def __init__(self, k=None, n=None):
        self.k = k
        self.n = n

    def fit(self, X, y=None):
        check_samples(X, self.k, self.n)
        self.n_samples_fit_ = len(X)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_samples_fit_")
        return [closure(s) for s in check_samples(X, self.k, self.n)]


class FreimanFeatures(TransformerMixin, BaseEstimator):
    """Rows ``[mu, ell, mu_sq, defect]`` per ideal, as an int64 array."""

    feature_names = ("mu", "ell", "mu_sq", "defect")

    def __init__(self, k=None, n=None):
        self.k = k
        self.n = n

    def fit(self, X, y=None):
        check_samples(X, self.k, self.n)
        self.n_features_out_ = len(self.feature_names)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        rows = []
        for s in check_samples(X, self.k, self.n):
            r = freiman_report(closure(s))
            rows.append((r.mu, r.ell, r.mu_sq, r.defect))
        return np.asarray(rows, dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(self.feature_names, dtype=object)


class FreimanClassifier(ClassifierMixin, BaseEstimator):
    """Predict whether each ideal is Freiman.

    ``method`` picks the route: ``"bruteforce"`` squares the ideal,
    ``"chordal"`` tests the sorted graph (sortable ideals only), and
    ``"closed_form"`` reads the answer off the generators.  The closed form
    has no answer outside the known families; those samples get
    ``unknown_value`` (``None`` by default, giving an object array).
    """

    def __init__(self, method="bruteforce", k=None, n=None, unknown_value=None):
        self.method = method
        self.k = k
        self.n = n
        self.unknown_value = unknown_value

    def fit(self, X, y=None):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        check_samples(X, self.k, self.n)
        self.classes_ = np.array([False, True])
        return self

    def _one(self, spec):
        if self.method == "closed_form":
            v = predict_freiman(spec).freiman_predicted
            return self.unknown_value if v is None else v
        G = closure(spec)
        if self.method == "chordal":
            ok, pair = is_sortable(G)
            if not ok:
                raise ValueError(f"{spec} is not sortable; the chordal test does not apply")
            return is_chordal(sorted_graph(G).to_ugraph()).chordal
        return freiman_report(G).freiman

    def predict(self, X):
        check_is_fitted(self, "classes_")
        out = [self._one(s) for s in check_samples(X, self.k, self.n)]
        if any(v is None or not isinstance(v, (bool, np.bool_)) for v in out):
            return np.asarray(out, dtype=object)
        return np.asarray(out, dtype=bool)
