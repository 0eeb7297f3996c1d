"""Input coercion shared by the estimator wrappers."""
from __future__ import annotations

from typing import Iterable

from .borel import BorelSpec
from .monomial import GenSet, Monomial, parse_monomial, parse_monomial_list


def check_monomial(x, n: int | None = None) -> Monomial:
    if isinstance(x, Monomial):
        return x if n is None else x.with_n(n)
    if isinstance(x, str):
        return parse_monomial(x, n)
    if isinstance(x, (tuple, list)) and all(isinstance(e, int) for e in x):
        u = Monomial(tuple(x))
        return u if n is None else u.with_n(n)
    raise TypeError(f"cannot read a monomial from {x!r}")


def check_generators(x, n: int | None = None) -> list[Monomial]:
    """One sample: a string list ``"x1*x2,x3^2"``, a Monomial, or an iterable of either."""
    if isinstance(x, str):
        return parse_monomial_list(x, n)
    if isinstance(x, Monomial):
        return [check_monomial(x, n)]
    if isinstance(x, (GenSet, BorelSpec)):
        gens = list(x.borel_gens if isinstance(x, BorelSpec) else x)
    else:
        gens = [check_monomial(g) for g in x]
    if not gens:
        raise ValueError("empty generator list")
    width = n if n is not None else max(g.n for g in gens)
    return [g.with_n(width) for g in gens]


def check_spec(x, k: int | None = None, n: int | None = None) -> BorelSpec:
    """Coerce a sample into a :class:`BorelSpec`; a BorelSpec passes through untouched."""
    if isinstance(x, BorelSpec):
        return x
    return BorelSpec(tuple(check_generators(x, n)), k=k, n=n)


def check_samples(X: Iterable, k: int | None = None, n: int | None = None) -> list[BorelSpec]:
    if isinstance(X, (str, Monomial, BorelSpec)):
        raise TypeError("expected a sequence of samples, got a single sample")
    specs = [check_spec(x, k, n) for x in X]
    if not specs:
        raise ValueError("no samples")
    return specs
