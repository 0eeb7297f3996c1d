"""Analytic spread, the Freiman defect and the power-growth lower bound."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb
from typing import Sequence

from .borel import is_borel_ideal
from .monomial import GenSet, m_index, power_size

__all__ = [
    "FreimanReport",
    "integer_rank",
    "analytic_spread",
    "freiman_defect",
    "freiman_report",
    "boroczky_bound",
    "PowerBound",
    "check_power_bounds",
]

BORELMAX = "borel_max_index"
RANK = "exponent_rank"
OVERRIDE = "override"


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(n):
        piv = next((r for r in range(rank, m) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, m):
            f = a[r][col]
            row = a[r]
            top = a[rank]
            for c in range(col, n):
                # exact: Sylvester's identity makes the division integral
                row[c] = (p * row[c] - f * top[c]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def analytic_spread(G: GenSet, hint_is_borel_type: bool = True) -> tuple[int, str]:
    """``ell(I)``: largest index in ``G`` when ``I`` is Borel, else the exponent rank.

    For Borel input both routes are computed and must agree.
    """
    if len(G) == 0:
        raise ValueError("analytic spread of the zero ideal")
    if G.deg == 0:
        return 0, RANK
    rank = integer_rank([g.exps for g in G])
    if hint_is_borel_type and is_borel_ideal(G):
        ell = max(m_index(g) for g in G)
        assert ell == rank, f"max-index spread {ell} disagrees with exponent rank {rank}"
        return ell, BORELMAX
    return rank, RANK


def freiman_defect(mu: int, ell: int, mu_sq: int) -> int:
    return mu_sq - ell * mu + comb(ell, 2)


@dataclass(frozen=True)
class FreimanReport:
    mu: int
    ell: int
    mu_sq: int
    defect: int
    freiman: bool
    ell_method: str

    def to_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in ("mu", "ell", "ell_method", "mu_sq", "defect", "freiman")}


def freiman_report(G: GenSet, ell_override: int | None = None) -> FreimanReport:
    """Brute-force Freiman test: squares the ideal and compares counts.

    An ``ell_override`` is taken as given and reported with method ``override``.
    """
    if len(G) == 0:
        raise ValueError("empty generating set")
    if ell_override is not None:
        if ell_override < 1:
            raise ValueError("ell_override must be positive")
        ell, method = ell_override, OVERRIDE
    else:
        ell, method = analytic_spread(G)
    mu = len(G)
    mu_sq = power_size(G, 2)
    defect = freiman_defect(mu, ell, mu_sq)
    return FreimanReport(mu, ell, mu_sq, defect, defect == 0, method)


def boroczky_bound(mu: int, ell: int, k: int) -> int:
    """Lower bound ``C(l+k-2, k-1) mu - (k-1) C(l+k-2, k)`` on ``mu(I^k)``."""
    if k < 1 or ell < 1 or mu < 1:
        raise ValueError("mu, ell and k must all be >= 1")
    return comb(ell + k - 2, k - 1) * mu - (k - 1) * comb(ell + k - 2, k)


@dataclass(frozen=True)
class PowerBound:
    k: int
    mu_k: int
    bound: int
    tight: bool


def check_power_bounds(G: GenSet, k_max: int, ell: int | None = None) -> list[PowerBound]:
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    if ell is None:
        ell, _ = analytic_spread(G)
    mu = len(G)
    out = []
    for k in range(2, k_max + 1):
        mu_k = power_size(G, k)
        bound = boroczky_bound(mu, ell, k)
        if mu_k < bound:
            raise AssertionError(f"mu(I^{k}) = {mu_k} violates the lower bound {bound}")
        out.append(PowerBound(k, mu_k, bound, mu_k == bound))
    return out
