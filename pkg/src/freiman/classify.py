"""Closed-form Freiman predictions for the Borel-type families with known answers.

Nothing here squares an ideal; every verdict is read off the shape of the
generators.  Families without a known criterion come back as
``outside_scope`` with no prediction.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .borel import BorelSpec, degree2_chain, minimal_borel_generators, shift_psi
from .monomial import Monomial, format_monomial, is_k_bounded

__all__ = [
    "ClassVerdict",
    "FAMILIES",
    "classify_principal_borel",
    "classify_degree2_borel",
    "classify_main2_family",
    "classify_kborel",
    "general_family_members",
    "predict_freiman",
]

FAMILIES = (
    "degree2_borel",
    "remark_rek1",
    "main2_family",
    "principal_borel",
    "kborel_k_eq_dminus1",
    "kborel_k2_d4",
    "kborel_k2_dge5",
    "outside_scope",
)


@dataclass(frozen=True)
class ClassVerdict:
    family: str
    freiman_predicted: bool | None
    matched_clause: str

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if (self.freiman_predicted is None) != (self.family == "outside_scope"):
            raise ValueError("a prediction is required exactly for in-scope families")

    def to_dict(self) -> dict:
        return asdict(self)


def _outside(reason: str) -> ClassVerdict:
    return ClassVerdict("outside_scope", None, reason)


def _principal_shape(u: Monomial) -> str | None:
    idx = u.indices()
    d = len(idx)
    if d <= 1:
        return "linear"
    if all(i <= 2 for i in idx[:-1]):
        return "x1^(d-r) x2^(r-1) x_j"
    if u.exps[0] == d - 2 and u.n >= 3 and u.exps[2] == 2:
        return "x1^(d-2) x3^2"
    return None


def classify_principal_borel(u: Monomial, n: int | None = None) -> ClassVerdict:
    """``B(u)`` is Freiman iff all but the last sorted index of ``u`` are 1 or 2,
    or ``u = x1^(d-2) x3^2``.

    The first shape covers ``x1^d``, ``x1^(d-1) x_j``, ``x1^a x2^b x_j``
    and ``x2^(d-1) x_j``.
    """
    shape = _principal_shape(u)
    if shape is None:
        return ClassVerdict("principal_borel", False, "not a Freiman principal shape")
    return ClassVerdict("principal_borel", True, shape)


def classify_degree2_borel(gens: Sequence[Monomial], n: int | None = None) -> ClassVerdict:
    """Degree-2 Borel ideals with a minimal list of ``m >= 2`` Borel generators.

    Freiman exactly for ``B(x1 x_a, x2 x_b)`` with ``2 <= b < a`` and
    ``B(x1 x_a, x3^2)`` with ``a > 3``.
    """
    gens = list(gens)
    if any(u.deg != 2 for u in gens):
        raise ValueError("degree-2 generators required")
    mins = minimal_borel_generators(gens)
    if len(mins) != len(gens):
        raise ValueError("generator list is not minimal: " + ", ".join(map(format_monomial, gens)))
    if len(gens) == 1:
        return classify_principal_borel(gens[0], n)
    chain = degree2_chain(gens)
    if len(chain) == 2:
        (i1, j1), (i2, j2) = chain
        if i1 == 1 and i2 == 2:
            return ClassVerdict("degree2_borel", True, f"B(x1*x{j1}, x2*x{j2}), 2 <= {j2} < {j1}")
        if i1 == 1 and (i2, j2) == (3, 3):
            return ClassVerdict("degree2_borel", True, f"B(x1*x{j1}, x3^2), {j1} > 3")
    return ClassVerdict("degree2_borel", False, f"degree-2 chain {chain} is not a Freiman shape")


def _main2_shape(u: Monomial) -> bool:
    # x1^(d-r) x2^(r-1) x_i with i >= 2
    idx = u.indices()
    return len(idx) >= 1 and idx[-1] >= 2 and all(i <= 2 for i in idx[:-1])


def classify_main2_family(gens: Sequence[Monomial]) -> ClassVerdict:
    """Every generator of shape ``x1^(d-r) x2^(r-1) x_i`` (``i >= 2``) gives a Freiman ideal.

    Only positive: other lists are ``outside_scope`` here.
    """
    gens = minimal_borel_generators(list(gens))
    if all(_main2_shape(u) or u.exps[0] == u.deg for u in gens):
        return ClassVerdict("main2_family", True, "all generators x1^(d-r) x2^(r-1) x_i")
    return _outside("some generator is not of shape x1^(d-r) x2^(r-1) x_i")


def _strip_x1(gens: Sequence[Monomial]) -> tuple[list[Monomial], int]:
    t = min(u.exps[0] for u in gens)
    if t == 0:
        return list(gens), 0
    return [Monomial((u.exps[0] - t,) + u.exps[1:]) for u in gens], t


def _classify_borel(gens: Sequence[Monomial], n: int) -> ClassVerdict:
    gens = minimal_borel_generators(list(gens))
    if len(gens) == 1:
        return classify_principal_borel(gens[0], n)
    # B(x1^t v_1, ..., x1^t v_m) = x1^t B(v_1, ..., v_m) has the same verdict
    reduced, t = _strip_x1(gens)
    if reduced[0].deg == 2:
        v = classify_degree2_borel(reduced, n)
        if t:
            return ClassVerdict("remark_rek1", v.freiman_predicted, f"x1^{t} * " + v.matched_clause)
        return v
    main2 = classify_main2_family(gens)
    if main2.family != "outside_scope":
        return main2
    return _outside("multi-generator Borel ideal of degree >= 3 outside the known family")


def general_family_members(d: int) -> dict[int, tuple[int, ...]]:
    """Exponent vectors (trailing zeros dropped) of the three Freiman 2-Borel
    shapes in degree ``d >= 5`` not divisible by ``x1^2``."""
    if d < 5:
        raise ValueError("the families start at degree 5")
    m = d // 2
    if d % 2 == 0:
        fam = {
            1: (1,) + (2,) * (m - 1) + (1,),
            2: (1,) + (2,) * (m - 1) + (0, 1),
            3: (1,) + (2,) * (m - 2) + (1, 2),
        }
    else:
        fam = {
            1: (1,) + (2,) * m,
            2: (1,) + (2,) * (m - 1) + (1, 1),
            3: (1,) + (2,) * (m - 1) + (0, 2),
        }
    assert all(sum(e) == d for e in fam.values())
    return fam


def _trim(exps: tuple[int, ...]) -> tuple[int, ...]:
    end = len(exps)
    while end > 1 and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


def _classify_k2(u: Monomial, shifts: int) -> ClassVerdict:
    d = u.deg
    note = f" after {shifts} x1^2-shift(s)" if shifts else ""
    if d == 3:
        v = classify_principal_borel(u)
        return ClassVerdict("kborel_k_eq_dminus1", v.freiman_predicted, "B_(d-1)(u) ~ B(u): " + v.matched_clause + note)
    if d == 4:
        e = _trim(u.exps)
        if e in ((1, 1, 2), (0, 2, 2)):
            return ClassVerdict("kborel_k2_d4", True, f"u = {format_monomial(u)}{note}")
        if e[:2] == (1, 2) and sum(e[2:]) == 1:
            return ClassVerdict("kborel_k2_d4", True, f"u = x1*x2^2*x_i, i >= 3{note}")
        return ClassVerdict("kborel_k2_d4", False, f"degree-4 shape outside the three Freiman ones{note}")
    fam = general_family_members(d)
    e = _trim(u.exps)
    for label, shape in fam.items():
        if e == shape:
            return ClassVerdict("kborel_k2_dge5", True, f"degree-{d} family ({label}){note}")
    return ClassVerdict("kborel_k2_dge5", False, f"not one of the three degree-{d} families{note}")


def classify_kborel(u: Monomial, k: int, n: int | None = None) -> ClassVerdict:
    """Prediction for the principal k-Borel ideal ``B_k(u)``.

    Covered: ``k >= d`` (plain Borel), ``k = d - 1``, and ``k = 2`` after
    stripping exact ``x1^2`` factors.  ``k = 1`` is left to brute force; any
    other ``k`` only gets a positive prediction when ``B(u)`` itself is Freiman.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not is_k_bounded(u, k):
        raise ValueError(f"{format_monomial(u)} is not {k}-bounded")
    d = u.deg
    if k >= d:
        return classify_principal_borel(u, n)
    if k == d - 1:
        v = classify_principal_borel(u, n)
        return ClassVerdict("kborel_k_eq_dminus1", v.freiman_predicted, "B_(d-1)(u) ~ B(u): " + v.matched_clause)
    if k == 2:
        shifts = 0
        while u.deg > 2 and u.exps[0] == 2 and u.n > 1:
            u = shift_psi(u, 2)
            shifts += 1
        if u.deg <= 2:
            v = classify_principal_borel(u)
            return ClassVerdict("principal_borel", v.freiman_predicted,
                                f"{v.matched_clause} after {shifts} x1^2-shift(s)")
        return _classify_k2(u, shifts)
    if k == 1:
        return _outside("no closed form for squarefree (k = 1) closures")
    if classify_principal_borel(u, n).freiman_predicted:
        return ClassVerdict("principal_borel", True, "B(u) Freiman implies B_k(u) Freiman (one-directional)")
    return _outside(f"no criterion for k = {k}, d = {d}")


def predict_freiman(spec: BorelSpec, n: int | None = None) -> ClassVerdict:
    """Route a Borel or k-Borel spec to the most specific predicate."""
    n = spec.n if n is None else n
    gens = list(spec.borel_gens)
    if spec.k is None or spec.k >= spec.d:
        return _classify_borel(gens, n)
    if len(set(gens)) == 1:
        return classify_kborel(gens[0], spec.k, n)
    return _outside("multi-generator k-Borel ideals have no criterion")
